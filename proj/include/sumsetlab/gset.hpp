#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <unordered_set>
#include <vector>

#include "sumsetlab/bitmask.hpp"
#include "sumsetlab/group.hpp"

namespace sumsetlab {

// Finite subset of a group context.  Elements are kept sorted in canonical
// order (lexicographic on coordinates, which equals index order for the finite
// kinds) with no duplicates, so size and equality are structural.
class GSet {
  public:
    GSet() : ctx_(GroupCtx::lattice(1)) {}
    explicit GSet(GroupCtx ctx) : ctx_(std::move(ctx)) {}
    GSet(GroupCtx ctx, std::vector<Element> elems) : ctx_(std::move(ctx)), elems_(std::move(elems)) {
        for (Element& e : elems_) e = ctx_.make(std::move(e.coords));
        normalize();
    }

    static GSet of(const GroupCtx& ctx, std::initializer_list<i64> values) {
        if (ctx.arity() != 1) throw ContextMismatch("scalar literals need an arity-1 context");
        std::vector<Element> es;
        es.reserve(values.size());
        for (i64 v : values) es.push_back(ctx.make({v}));
        return GSet(ctx, std::move(es));
    }
    static GSet of(const GroupCtx& ctx, std::initializer_list<std::initializer_list<i64>> tuples) {
        std::vector<Element> es;
        es.reserve(tuples.size());
        for (const auto& t : tuples) es.push_back(ctx.make(std::vector<i64>(t)));
        return GSet(ctx, std::move(es));
    }
    static GSet from_indices(const GroupCtx& ctx, const std::vector<i64>& idx) {
        std::vector<Element> es;
        es.reserve(idx.size());
        for (i64 i : idx) es.push_back(ctx.from_index(i));
        return GSet(ctx, std::move(es));
    }

    const GroupCtx& ctx() const { return ctx_; }
    const std::vector<Element>& elems() const { return elems_; }
    i64 size() const { return static_cast<i64>(elems_.size()); }
    bool empty() const { return elems_.empty(); }

    bool contains(const Element& e) const {
        return std::binary_search(elems_.begin(), elems_.end(), e);
    }
    bool subset_of(const GSet& other) const {
        if (!(ctx_ == other.ctx_)) return false;
        return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
    }

    GSet union_with(const GSet& other) const {
        require_same_ctx(other);
        std::vector<Element> out;
        out.reserve(elems_.size() + other.elems_.size());
        std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                       std::back_inserter(out));
        return GSet::presorted(ctx_, std::move(out));
    }
    GSet minus(const GSet& other) const {
        require_same_ctx(other);
        std::vector<Element> out;
        std::set_difference(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                            std::back_inserter(out));
        return GSet::presorted(ctx_, std::move(out));
    }
    GSet intersect(const GSet& other) const {
        require_same_ctx(other);
        std::vector<Element> out;
        std::set_intersection(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                              std::back_inserter(out));
        return GSet::presorted(ctx_, std::move(out));
    }
    GSet with(const Element& e) const {
        GSet out = *this;
        Element v = ctx_.make(std::vector<i64>(e.coords));
        auto it = std::lower_bound(out.elems_.begin(), out.elems_.end(), v);
        if (it == out.elems_.end() || !(*it == v)) out.elems_.insert(it, v);
        return out;
    }

    DenseMask to_mask() const {
        DenseMask m(ctx_.order());
        for (const Element& e : elems_) m.set(ctx_.canonical_index(e));
        return m;
    }
    static GSet from_mask(const GroupCtx& ctx, const DenseMask& m) {
        std::vector<Element> es;
        es.reserve(static_cast<size_t>(m.count()));
        m.for_each_set([&](i64 i) { es.push_back(ctx.from_index(i)); });
        return GSet::presorted(ctx, std::move(es));
    }

    void require_same_ctx(const GSet& other) const {
        if (!(ctx_ == other.ctx_))
            throw ContextMismatch("set contexts differ: " + ctx_.describe() + " vs " +
                                  other.ctx_.describe());
    }

    friend bool operator==(const GSet& a, const GSet& b) {
        return a.ctx_ == b.ctx_ && a.elems_ == b.elems_;
    }

    // trusted constructor for internally produced sorted unique vectors
    static GSet presorted(GroupCtx ctx, std::vector<Element> elems) {
        GSet g(std::move(ctx));
        g.elems_ = std::move(elems);
        return g;
    }

  private:
    void normalize() {
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    }

    GroupCtx ctx_;
    std::vector<Element> elems_;
};

inline bool dense_eligible(const GroupCtx& ctx) {
    if (!ctx.finite()) return false;
    i128 n = 1;
    for (i64 m : ctx.moduli()) {
        n *= m;
        if (n > dense_order_limit) return false;
    }
    return true;
}

// Sorted-vector route: all pairwise sums, then sort+dedup.  Works in every
// context; the oracle side of the dual-route equivalence checks.
inline GSet sumset_sparse(const GSet& a, const GSet& b) {
    a.require_same_ctx(b);
    const GroupCtx& ctx = a.ctx();
    std::vector<Element> sums;
    sums.reserve(static_cast<size_t>(a.size()) * static_cast<size_t>(b.size()));
    for (const Element& x : a.elems())
        for (const Element& y : b.elems()) sums.push_back(ctx.add(x, y));
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    return GSet::presorted(ctx, std::move(sums));
}

// Dense route: OR together |smaller side| shifted copies of the other side's
// bitmask.  Requires a finite context of order <= 2^24.
inline GSet sumset_dense(const GSet& a, const GSet& b) {
    a.require_same_ctx(b);
    const GroupCtx& ctx = a.ctx();
    if (!dense_eligible(ctx)) throw Unsupported("dense sumset needs a finite context of order <= 2^24");
    if (a.empty() || b.empty()) return GSet(ctx);
    const GSet& small = a.size() <= b.size() ? a : b;
    const GSet& big = a.size() <= b.size() ? b : a;
    DenseMask base = big.to_mask();
    DenseMask acc(ctx.order());
    for (const Element& e : small.elems()) or_add_shift(acc, base, ctx, e);
    return GSet::from_mask(ctx, acc);
}

inline GSet sumset(const GSet& a, const GSet& b) {
    a.require_same_ctx(b);
    if (a.empty() || b.empty()) return GSet(a.ctx());
    if (dense_eligible(a.ctx())) {
        // the dense route wins once the pair count dwarfs the group order
        i128 pairs = static_cast<i128>(a.size()) * b.size();
        if (pairs > a.ctx().order()) return sumset_dense(a, b);
    }
    return sumset_sparse(a, b);
}

inline GSet neg_set(const GSet& a) {
    std::vector<Element> es;
    es.reserve(static_cast<size_t>(a.size()));
    for (const Element& e : a.elems()) es.push_back(a.ctx().neg(e));
    std::sort(es.begin(), es.end());
    return GSet::presorted(a.ctx(), std::move(es));
}

inline GSet difference_set(const GSet& a, const GSet& b) { return sumset(a, neg_set(b)); }

inline GSet translate(const GSet& a, const Element& t) {
    Element tt = a.ctx().make(std::vector<i64>(t.coords));
    std::vector<Element> es;
    es.reserve(static_cast<size_t>(a.size()));
    for (const Element& e : a.elems()) es.push_back(a.ctx().add(e, tt));
    std::sort(es.begin(), es.end());
    return GSet::presorted(a.ctx(), std::move(es));
}

inline GSet iterated_sumset(const GSet& a, int k) {
    if (k < 1) throw BadParams("iterated sumset needs k >= 1");
    GSet out = a;
    for (int i = 1; i < k; ++i) out = sumset(out, a);
    return out;
}

// kappa(A) = |A+A| / |A|
inline Rational doubling_kappa(const GSet& a) {
    if (a.empty()) throw EmptySet("doubling constant of the empty set");
    return Rational(sumset(a, a).size(), a.size());
}

// kappa(A,B) = |A+B| / |A|
inline Rational kappa_ab(const GSet& a, const GSet& b) {
    if (a.empty() || b.empty()) throw EmptySet("kappa of an empty set");
    return Rational(sumset(a, b).size(), a.size());
}

// Incremental union of translates; backs every greedy gain computation.  Uses
// the dense mask when the context allows it, a hash set otherwise.
class SumAccumulator {
  public:
    explicit SumAccumulator(const GroupCtx& ctx)
        : ctx_(ctx), dense_(dense_eligible(ctx)), mask_(dense_ ? ctx.order() : 0) {}

    i64 size() const { return count_; }

    bool contains(const Element& e) const {
        return dense_ ? mask_.test(ctx_.canonical_index(e)) : seen_.count(e) > 0;
    }

    void insert(const Element& e) {
        if (dense_) {
            i64 i = ctx_.canonical_index(e);
            if (!mask_.test(i)) { mask_.set(i); ++count_; }
        } else if (seen_.insert(e).second) {
            ++count_;
        }
    }

    // |(translate of base by t) minus current|
    i64 gain(const GSet& base, const Element& t) const {
        i64 g = 0;
        for (const Element& x : base.elems())
            if (!contains(ctx_.add(x, t))) ++g;
        return g;
    }

    void add_translate(const GSet& base, const Element& t) {
        for (const Element& x : base.elems()) insert(ctx_.add(x, t));
    }

  private:
    GroupCtx ctx_;
    bool dense_;
    DenseMask mask_;
    std::unordered_set<Element, ElementHash> seen_;
    i64 count_ = 0;
};

}  // namespace sumsetlab
