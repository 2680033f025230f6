#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sumsetlab/rational.hpp"

namespace sumsetlab {

// splitmix64: tiny, well-mixed, and identical on every platform.  The standard
// <random> engines are portable but the distributions are not, and reports must
// be byte-stable across machines, so sampling is done by hand on this stream.
struct Rng {
    u64 state;

    explicit Rng(u64 seed) : state(seed) {}

    u64 next() {
        u64 z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // unbiased bounded draw (rejection on the top of the range)
    u64 below(u64 n) {
        if (n == 0) throw BadParams("Rng::below(0)");
        u64 threshold = (0 - n) % n;
        for (;;) {
            u64 r = next();
            if (r >= threshold) return r % n;
        }
    }

    i64 range(i64 lo, i64 hi) {  // inclusive
        if (hi < lo) throw BadParams("Rng::range: empty interval");
        return lo + static_cast<i64>(below(static_cast<u64>(hi - lo + 1)));
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // k distinct indices out of n, in increasing order (partial Fisher-Yates)
    std::vector<i64> sample_indices(i64 n, i64 k) {
        if (k > n || k < 0) throw BadParams("Rng::sample_indices: k out of range");
        std::vector<i64> pool(static_cast<size_t>(n));
        for (i64 i = 0; i < n; ++i) pool[static_cast<size_t>(i)] = i;
        for (i64 i = 0; i < k; ++i) {
            i64 j = i + static_cast<i64>(below(static_cast<u64>(n - i)));
            std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(j)]);
        }
        std::vector<i64> out(pool.begin(), pool.begin() + k);
        std::sort(out.begin(), out.end());
        return out;
    }
};

inline u64 fnv1a64(const std::string& s) {
    u64 h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Counter-mode split: the per-instance seed depends only on (global seed,
// instance id), so adding instances to a battery never perturbs existing ones.
inline u64 derive_seed(u64 global_seed, const std::string& instance_id) {
    Rng r(global_seed ^ (fnv1a64(instance_id) * 0x9E3779B97F4A7C15ULL));
    return r.next();
}

}  // namespace sumsetlab
