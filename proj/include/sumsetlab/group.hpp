#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "sumsetlab/errors.hpp"
#include "sumsetlab/rational.hpp"

namespace sumsetlab {

enum class GroupKind { lattice, cyclic, vector_space, prime_product };

inline const char* kind_name(GroupKind k) {
    switch (k) {
        case GroupKind::lattice: return "lattice";
        case GroupKind::cyclic: return "cyclic";
        case GroupKind::vector_space: return "vector";
        case GroupKind::prime_product: return "primeproduct";
    }
    return "?";
}

// Plain coordinate tuple.  Comparison is lexicographic, which for the finite
// kinds coincides with canonical-index order (indices are mixed-radix with the
// first coordinate most significant).
struct Element {
    std::vector<i64> coords;

    Element() = default;
    explicit Element(std::vector<i64> c) : coords(std::move(c)) {}

    friend auto operator<=>(const Element& a, const Element& b) {
        return std::lexicographical_compare_three_way(
            a.coords.begin(), a.coords.end(), b.coords.begin(), b.coords.end());
    }
    friend bool operator==(const Element& a, const Element& b) { return a.coords == b.coords; }
};

struct ElementHash {
    size_t operator()(const Element& e) const {
        u64 h = 0xcbf29ce484222325ULL;
        for (i64 c : e.coords) {
            h ^= static_cast<u64>(c);
            h *= 0x100000001b3ULL;
        }
        return static_cast<size_t>(h);
    }
};

// Deterministic Miller-Rabin, exact for all 64-bit inputs with this base set.
inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    u64 d = static_cast<u64>(n - 1);
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    auto mulmod = [](u64 a, u64 b, u64 m) -> u64 {
        return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
    };
    auto powmod = [&](u64 a, u64 e, u64 m) -> u64 {
        u64 out = 1;
        a %= m;
        while (e) {
            if (e & 1) out = mulmod(out, a, m);
            a = mulmod(a, a, m);
            e >>= 1;
        }
        return out;
    };
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, static_cast<u64>(n));
        if (x == 1 || x == static_cast<u64>(n - 1)) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, static_cast<u64>(n));
            if (x == static_cast<u64>(n - 1)) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

// Integer-lattice coordinates stay below 2^61 in absolute value so that any
// sum of two valid elements fits in int64 without wrapping.
inline constexpr i64 lattice_coord_cap = i64{1} << 61;

class GroupCtx {
  public:
    static GroupCtx lattice(int d) {
        if (d < 1 || d > 8) throw BadParams("lattice dimension must be in [1,8]");
        GroupCtx g;
        g.kind_ = GroupKind::lattice;
        g.arity_ = d;
        return g;
    }

    static GroupCtx cyclic(i64 n) {
        if (n < 2) throw BadParams("cyclic modulus must be >= 2");
        GroupCtx g;
        g.kind_ = GroupKind::cyclic;
        g.arity_ = 1;
        g.mod_ = {n};
        return g;
    }

    static GroupCtx vector_space(i64 p, int n) {
        if (!is_prime(p)) throw BadParams("vector space characteristic must be prime");
        if (n < 1 || n > 62) throw BadParams("vector space dimension must be in [1,62]");
        GroupCtx g;
        g.kind_ = GroupKind::vector_space;
        g.arity_ = n;
        g.mod_.assign(static_cast<size_t>(n), p);
        return g;
    }

    static GroupCtx prime_product(i64 q, std::vector<i64> primes) {
        if (!is_prime(q)) throw BadParams("prime product head q must be prime");
        if (primes.empty()) throw BadParams("prime product needs at least one factor");
        std::vector<i64> sorted = primes;
        std::sort(sorted.begin(), sorted.end());
        for (size_t i = 0; i < sorted.size(); ++i) {
            if (!is_prime(sorted[i])) throw BadParams("prime product factor is not prime");
            if (sorted[i] == q) throw BadParams("prime product factors must differ from q");
            if (i > 0 && sorted[i] == sorted[i - 1]) throw BadParams("prime product factors must be distinct");
        }
        GroupCtx g;
        g.kind_ = GroupKind::prime_product;
        g.arity_ = static_cast<int>(primes.size()) + 1;
        g.mod_.reserve(primes.size() + 1);
        g.mod_.push_back(q);
        for (i64 p : primes) g.mod_.push_back(p);
        return g;
    }

    GroupKind kind() const { return kind_; }
    int arity() const { return arity_; }
    bool finite() const { return kind_ != GroupKind::lattice; }

    i64 order() const {
        if (!finite()) throw Unsupported("infinite group has no order");
        i128 n = 1;
        for (i64 m : mod_) {
            n *= m;
            if (n > (i128{1} << 62)) throw Overflow("group order exceeds 2^62");
        }
        return static_cast<i64>(n);
    }

    // per-coordinate modulus; 0 marks a free (lattice) coordinate
    i64 modulus(int i) const { return finite() ? mod_[static_cast<size_t>(i)] : 0; }
    const std::vector<i64>& moduli() const { return mod_; }

    i64 cyclic_modulus() const {
        if (kind_ != GroupKind::cyclic) throw Unsupported("not a cyclic context");
        return mod_[0];
    }
    i64 field_prime() const {
        if (kind_ != GroupKind::vector_space) throw Unsupported("not a vector space context");
        return mod_[0];
    }
    i64 product_head() const {
        if (kind_ != GroupKind::prime_product) throw Unsupported("not a prime product context");
        return mod_[0];
    }
    std::vector<i64> product_primes() const {
        if (kind_ != GroupKind::prime_product) throw Unsupported("not a prime product context");
        return std::vector<i64>(mod_.begin() + 1, mod_.end());
    }

    Element zero() const { return Element(std::vector<i64>(static_cast<size_t>(arity_), 0)); }

    // Builds an element, reducing coordinates into [0, m) for finite kinds and
    // enforcing the lattice magnitude cap.
    Element make(std::vector<i64> coords) const {
        if (static_cast<int>(coords.size()) != arity_)
            throw ContextMismatch("element arity " + std::to_string(coords.size()) +
                                  " does not match context " + describe());
        if (finite()) {
            for (size_t i = 0; i < coords.size(); ++i) {
                i64 m = mod_[i];
                i64 v = coords[i] % m;
                if (v < 0) v += m;
                coords[i] = v;
            }
        } else {
            for (i64 c : coords) {
                if (c >= lattice_coord_cap || c <= -lattice_coord_cap)
                    throw Overflow("lattice coordinate magnitude must stay below 2^61");
            }
        }
        return Element(std::move(coords));
    }

    bool valid(const Element& e) const {
        if (static_cast<int>(e.coords.size()) != arity_) return false;
        if (finite()) {
            for (size_t i = 0; i < e.coords.size(); ++i)
                if (e.coords[i] < 0 || e.coords[i] >= mod_[i]) return false;
        } else {
            for (i64 c : e.coords)
                if (c >= lattice_coord_cap || c <= -lattice_coord_cap) return false;
        }
        return true;
    }

    void check(const Element& e) const {
        if (!valid(e)) throw ContextMismatch("element does not belong to context " + describe());
    }

    Element add(const Element& a, const Element& b) const {
        check(a);
        check(b);
        Element out;
        out.coords.resize(static_cast<size_t>(arity_));
        for (int i = 0; i < arity_; ++i) {
            size_t k = static_cast<size_t>(i);
            i64 s = a.coords[k] + b.coords[k];  // cannot wrap: coords below 2^61 or below modulus
            if (finite()) {
                if (s >= mod_[k]) s -= mod_[k];
            } else if (s >= lattice_coord_cap || s <= -lattice_coord_cap) {
                throw Overflow("lattice sum exceeds coordinate cap");
            }
            out.coords[k] = s;
        }
        return out;
    }

    Element neg(const Element& a) const {
        check(a);
        Element out;
        out.coords.resize(static_cast<size_t>(arity_));
        for (int i = 0; i < arity_; ++i) {
            size_t k = static_cast<size_t>(i);
            out.coords[k] = finite() ? (a.coords[k] == 0 ? 0 : mod_[k] - a.coords[k]) : -a.coords[k];
        }
        return out;
    }

    Element scalar_mul(i64 t, const Element& a) const {
        check(a);
        Element out;
        out.coords.resize(static_cast<size_t>(arity_));
        for (int i = 0; i < arity_; ++i) {
            size_t k = static_cast<size_t>(i);
            if (finite()) {
                i64 m = mod_[k];
                i64 tm = t % m;
                if (tm < 0) tm += m;
                out.coords[k] = static_cast<i64>((static_cast<i128>(tm) * a.coords[k]) % m);
            } else {
                i128 v = static_cast<i128>(t) * a.coords[k];
                if (v >= lattice_coord_cap || v <= -static_cast<i128>(lattice_coord_cap))
                    throw Overflow("lattice scalar multiple exceeds coordinate cap");
                out.coords[k] = static_cast<i64>(v);
            }
        }
        return out;
    }

    // Mixed-radix index, first coordinate most significant; bijection with
    // [0, order()).  Lattices have no canonical index.
    i64 canonical_index(const Element& e) const {
        if (!finite()) throw Unsupported("canonical_index needs a finite context");
        check(e);
        i64 idx = 0;
        for (int i = 0; i < arity_; ++i) {
            size_t k = static_cast<size_t>(i);
            idx = idx * mod_[k] + e.coords[k];
        }
        return idx;
    }

    Element from_index(i64 idx) const {
        if (!finite()) throw Unsupported("from_index needs a finite context");
        if (idx < 0 || idx >= order()) throw BadParams("canonical index out of range");
        Element out;
        out.coords.resize(static_cast<size_t>(arity_));
        for (int i = arity_ - 1; i >= 0; --i) {
            size_t k = static_cast<size_t>(i);
            out.coords[k] = idx % mod_[k];
            idx /= mod_[k];
        }
        return out;
    }

    std::string describe() const {
        switch (kind_) {
            case GroupKind::lattice: return "lattice(d=" + std::to_string(arity_) + ")";
            case GroupKind::cyclic: return "cyclic(" + std::to_string(mod_[0]) + ")";
            case GroupKind::vector_space:
                return "vector(p=" + std::to_string(mod_[0]) + ",n=" + std::to_string(arity_) + ")";
            case GroupKind::prime_product: {
                std::string s = "primeproduct(q=" + std::to_string(mod_[0]) + ",primes=[";
                for (size_t i = 1; i < mod_.size(); ++i) {
                    if (i > 1) s += ",";
                    s += std::to_string(mod_[i]);
                }
                return s + "])";
            }
        }
        return "?";
    }

    friend bool operator==(const GroupCtx& a, const GroupCtx& b) {
        return a.kind_ == b.kind_ && a.arity_ == b.arity_ && a.mod_ == b.mod_;
    }

  private:
    GroupKind kind_ = GroupKind::lattice;
    int arity_ = 1;
    std::vector<i64> mod_;  // empty for lattice
};

}  // namespace sumsetlab
