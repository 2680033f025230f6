#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "sumsetlab/group.hpp"

namespace sumsetlab {

// Largest finite group handled by the dense path; above this the set engine
// falls back to the sorted-vector route.
inline constexpr i64 dense_order_limit = i64{1} << 24;

struct DenseMask {
    i64 bits = 0;
    std::vector<u64> w;

    explicit DenseMask(i64 nbits = 0) { resize(nbits); }

    void resize(i64 nbits) {
        bits = nbits;
        w.assign(static_cast<size_t>((nbits + 63) / 64), 0);
    }
    void clear() { std::fill(w.begin(), w.end(), 0); }

    void set(i64 i) { w[static_cast<size_t>(i >> 6)] |= u64{1} << (i & 63); }
    bool test(i64 i) const { return (w[static_cast<size_t>(i >> 6)] >> (i & 63)) & 1; }
    void reset(i64 i) { w[static_cast<size_t>(i >> 6)] &= ~(u64{1} << (i & 63)); }

    i64 count() const {
        i64 c = 0;
        for (u64 x : w) c += std::popcount(x);
        return c;
    }

    void or_with(const DenseMask& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
    }

    bool intersects(const DenseMask& o) const {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }

    template <typename Fn>
    void for_each_set(Fn&& fn) const {
        for (size_t i = 0; i < w.size(); ++i) {
            u64 x = w[i];
            while (x) {
                int b = std::countr_zero(x);
                fn(static_cast<i64>(i * 64 + static_cast<size_t>(b)));
                x &= x - 1;
            }
        }
    }

    friend bool operator==(const DenseMask& a, const DenseMask& b) {
        return a.bits == b.bits && a.w == b.w;
    }
};

// Copies len bits from src starting at soff into dst starting at doff.
// Ranges must not alias.
inline void copy_bits(DenseMask& dst, i64 doff, const DenseMask& src, i64 soff, i64 len) {
    while (len > 0) {
        i64 dword = doff >> 6, dbit = doff & 63;
        i64 sword = soff >> 6, sbit = soff & 63;
        i64 chunk = 64 - (dbit > sbit ? dbit : sbit);
        if (chunk > len) chunk = len;
        u64 piece = src.w[static_cast<size_t>(sword)] >> sbit;
        if (chunk < 64) piece &= (u64{1} << chunk) - 1;
        dst.w[static_cast<size_t>(dword)] |= piece << dbit;
        doff += chunk;
        soff += chunk;
        len -= chunk;
    }
}

namespace detail {

// y[i] = x[i ^ c] for c in [0,64): butterfly swap networks per bit of c
inline u64 xor_permute_word(u64 x, int c) {
    static constexpr u64 m[6] = {0x5555555555555555ULL, 0x3333333333333333ULL,
                                 0x0F0F0F0F0F0F0F0FULL, 0x00FF00FF00FF00FFULL,
                                 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};
    for (int b = 0; b < 6; ++b) {
        if (c & (1 << b)) {
            int s = 1 << b;
            x = ((x & m[b]) << s) | ((x >> s) & m[b]);
        }
    }
    return x;
}

// dst |= shift of src under index map i -> i ^ a (all-radix-2 contexts)
inline void or_xor_shift(DenseMask& dst, const DenseMask& src, i64 a) {
    size_t nw = src.w.size();
    size_t hi = static_cast<size_t>(a >> 6);
    int lo = static_cast<int>(a & 63);
    if (src.bits < 64) {
        dst.w[0] |= xor_permute_word(src.w[0], static_cast<int>(a)) & ((u64{1} << src.bits) - 1);
        return;
    }
    for (size_t i = 0; i < nw; ++i) dst.w[i] |= xor_permute_word(src.w[i ^ hi], lo);
}

// dst |= cyclic rotation of the N-bit string src by t positions upward
inline void or_rotate(DenseMask& dst, const DenseMask& src, i64 n, i64 t) {
    if (t == 0) {
        dst.or_with(src);
        return;
    }
    DenseMask tmp(n);
    copy_bits(tmp, t, src, 0, n - t);
    copy_bits(tmp, 0, src, n - t, t);
    dst.or_with(tmp);
}

// rotate every aligned block of block_len bits upward by shift bits (generic
// mixed-radix coordinate step); word-parallel when block_len divides 64
inline void rotate_blocks(DenseMask& out, const DenseMask& src, i64 block_len, i64 shift) {
    i64 n = src.bits;
    out.clear();
    if (shift == 0) {
        out = src;
        return;
    }
    if (block_len <= 64 && 64 % block_len == 0) {
        // same rotation pattern inside every block of every word
        u64 lo_mask = 0, hi_mask = 0;
        for (i64 p = 0; p < 64; ++p) {
            if ((p % block_len) < shift)
                lo_mask |= u64{1} << p;
            else
                hi_mask |= u64{1} << p;
        }
        int up = static_cast<int>(shift);
        int down = static_cast<int>(block_len - shift);
        for (size_t i = 0; i < src.w.size(); ++i) {
            u64 x = src.w[i];
            out.w[i] = ((x << up) & hi_mask) | ((x >> down) & lo_mask);
        }
        return;
    }
    for (i64 base = 0; base < n; base += block_len) {
        copy_bits(out, base + shift, src, base, block_len - shift);
        copy_bits(out, base, src, base + block_len - shift, shift);
    }
}

}  // namespace detail

// dst |= { x + a : x in src }, src indexed by ctx.canonical_index.
inline void or_add_shift(DenseMask& dst, const DenseMask& src, const GroupCtx& ctx, const Element& a) {
    const std::vector<i64>& mod = ctx.moduli();
    bool all_two = true;
    for (i64 m : mod)
        if (m != 2) { all_two = false; break; }
    if (all_two) {
        detail::or_xor_shift(dst, src, ctx.canonical_index(a));
        return;
    }
    if (ctx.arity() == 1) {
        detail::or_rotate(dst, src, mod[0], a.coords[0]);
        return;
    }
    // general mixed radix: compose per-coordinate block rotations, least
    // significant coordinate first; strides are suffix products of the radices
    DenseMask cur = src;
    DenseMask tmp(src.bits);
    i64 stride = 1;
    bool touched = false;
    for (int i = ctx.arity() - 1; i >= 0; --i) {
        size_t k = static_cast<size_t>(i);
        i64 t = a.coords[k];
        if (t != 0) {
            detail::rotate_blocks(tmp, cur, mod[k] * stride, t * stride);
            std::swap(cur, tmp);
            touched = true;
        }
        stride *= mod[k];
    }
    dst.or_with(touched ? cur : src);
}

}  // namespace sumsetlab
