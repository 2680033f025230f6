#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "sumsetlab/gset.hpp"
#include "sumsetlab/hyperplane.hpp"
#include "sumsetlab/rng.hpp"

namespace sumsetlab {

enum class Side { a_side, b_side };

struct TraceStep {
    Element chosen;
    Side side = Side::b_side;
    i64 gain = 0;
};

struct SaturationOutcome {
    GSet a_sub, b_sub;
    i64 achieved_a = 0;  // |A + b_sub|
    i64 achieved_b = 0;  // |B + a_sub|
    std::vector<TraceStep> trace;
    Rational kappa;
    i64 s_budget = 0;
    i64 n = 0;
};

namespace detail {

inline void check_greedy_constant(const Rational& c) {
    if (c.num <= 0) throw BadConstant("saturation constant must be positive");
    if (Rational(1, 14) < c) throw BadConstant("saturation constant capped at 1/14");
}

// max marginal gain of translating `base` by a fresh element of `pool`;
// ties go to the smallest canonical element
inline std::optional<std::pair<Element, i64>> best_candidate(const SumAccumulator& acc,
                                                             const GSet& base, const GSet& pool,
                                                             const GSet& chosen) {
    std::optional<std::pair<Element, i64>> best;
    for (const Element& cand : pool.elems()) {
        if (chosen.contains(cand)) continue;
        i64 g = acc.gain(base, cand);
        if (!best || g > best->second) best = {cand, g};
    }
    return best;
}

}  // namespace detail

// Greedy two-sided saturation: each round augments the B-side chain with the
// element of B maximizing |(A+b) \ (A+B_chain)|, then the A-side chain
// symmetrically.  Taking the maximal gain dominates the existence argument
// behind the 2c·min(kappa^(1/3), s)·n guarantee on achieved_a + achieved_b.
inline SaturationOutcome greedy_pair_saturate(const GSet& a, const GSet& b, i64 s, Rational c) {
    a.require_same_ctx(b);
    if (a.empty() || b.empty()) throw EmptySet("greedy saturation needs nonempty inputs");
    if (a.size() != b.size()) throw SizeMismatch("greedy pair saturation needs |A| = |B|");
    if (s < 1) throw BadParams("subset budget must be >= 1");
    detail::check_greedy_constant(c);

    const GroupCtx& ctx = a.ctx();
    SaturationOutcome out;
    out.n = a.size();
    out.s_budget = s;
    out.kappa = kappa_ab(a, b);
    out.a_sub = GSet(ctx);
    out.b_sub = GSet(ctx);
    SumAccumulator acc_a(ctx);  // A + b_sub
    SumAccumulator acc_b(ctx);  // B + a_sub
    for (i64 round = 0; round < s; ++round) {
        auto pick_b = detail::best_candidate(acc_a, a, b, out.b_sub);
        if (pick_b) {
            acc_a.add_translate(a, pick_b->first);
            out.b_sub = out.b_sub.with(pick_b->first);
            out.trace.push_back({pick_b->first, Side::b_side, pick_b->second});
        }
        auto pick_a = detail::best_candidate(acc_b, b, a, out.a_sub);
        if (pick_a) {
            acc_b.add_translate(b, pick_a->first);
            out.a_sub = out.a_sub.with(pick_a->first);
            out.trace.push_back({pick_a->first, Side::a_side, pick_a->second});
        }
        if (!pick_b && !pick_a) break;  // both pools exhausted
    }
    out.achieved_a = acc_a.size();
    out.achieved_b = acc_b.size();
    return out;
}

// Single-chain specialization: grow A_(s) maximizing |A + A_(s)|.  Guarantee
// c·min(kappa^(1/3), s)·n with kappa = |A+A|/|A|.
inline SaturationOutcome greedy_self_saturate(const GSet& a, i64 s, Rational c) {
    if (a.empty()) throw EmptySet("greedy saturation needs a nonempty input");
    if (s < 1) throw BadParams("subset budget must be >= 1");
    detail::check_greedy_constant(c);

    const GroupCtx& ctx = a.ctx();
    SaturationOutcome out;
    out.n = a.size();
    out.s_budget = s;
    out.kappa = doubling_kappa(a);
    out.a_sub = GSet(ctx);
    SumAccumulator acc(ctx);
    for (i64 round = 0; round < s; ++round) {
        auto pick = detail::best_candidate(acc, a, a, out.a_sub);
        if (!pick) break;
        acc.add_translate(a, pick->first);
        out.a_sub = out.a_sub.with(pick->first);
        out.trace.push_back({pick->first, Side::a_side, pick->second});
    }
    out.b_sub = out.a_sub;
    out.achieved_a = out.achieved_b = acc.size();
    return out;
}

// Difference variant: grow A_(s) maximizing |A - A_(s)|.  Guarantee
// c·min(kappa^(1/2), s)·n with kappa = |A-A|/|A| (square root: the argument
// counts walks of length two instead of three).
inline SaturationOutcome greedy_diff_saturate(const GSet& a, i64 s, Rational c) {
    if (a.empty()) throw EmptySet("greedy saturation needs a nonempty input");
    if (s < 1) throw BadParams("subset budget must be >= 1");
    detail::check_greedy_constant(c);

    const GroupCtx& ctx = a.ctx();
    SaturationOutcome out;
    out.n = a.size();
    out.s_budget = s;
    out.kappa = Rational(difference_set(a, a).size(), a.size());
    out.a_sub = GSet(ctx);
    SumAccumulator acc(ctx);  // A - a_sub, tracked as translates of A by -a
    for (i64 round = 0; round < s; ++round) {
        std::optional<std::pair<Element, i64>> best;
        for (const Element& cand : a.elems()) {
            if (out.a_sub.contains(cand)) continue;
            i64 g = acc.gain(a, ctx.neg(cand));
            if (!best || g > best->second) best = {cand, g};
        }
        if (!best) break;
        acc.add_translate(a, ctx.neg(best->first));
        out.a_sub = out.a_sub.with(best->first);
        out.trace.push_back({best->first, Side::a_side, best->second});
    }
    out.b_sub = out.a_sub;
    out.achieved_a = out.achieved_b = acc.size();
    return out;
}

namespace detail {

inline GSet take_ranks(const GSet& g, const std::vector<i64>& ranks) {
    std::vector<Element> es;
    es.reserve(ranks.size());
    for (i64 r : ranks) es.push_back(g.elems()[static_cast<size_t>(r)]);
    return GSet(g.ctx(), std::move(es));
}

// first r and last r elements by canonical rank
inline GSet rank_ends(const GSet& g, i64 r) {
    std::vector<i64> ranks;
    i64 n = g.size();
    for (i64 i = 0; i < r && i < n; ++i) ranks.push_back(i);
    for (i64 i = n - r < 0 ? 0 : n - r; i < n; ++i) ranks.push_back(i);
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
    return take_ranks(g, ranks);
}

// every r-th element by rank, plus the last
inline GSet rank_strided(const GSet& g, i64 r) {
    std::vector<i64> ranks;
    i64 n = g.size();
    for (i64 i = 0; i < n; i += r) ranks.push_back(i);
    if (ranks.empty() || ranks.back() != n - 1) ranks.push_back(n - 1);
    return take_ranks(g, ranks);
}

inline GSet sample_subset(const GSet& g, i64 k, Rng& rng) {
    if (k >= g.size()) return g;
    return take_ranks(g, rng.sample_indices(g.size(), k));
}

}  // namespace detail

// Medium-subset saturation: baseline A',B' with |A'+B'| >= 2n-1 found by brute
// force over structured and random candidates, then an augmentation loop that
// adds any element whose translate gains at least c2*n fresh sums, then the
// best of `trials` random size-(c*sqrt(n)) top-ups.
inline SaturationOutcome medium_saturate(const GSet& a, const GSet& b, Rational c2, Rational c,
                                         int trials, u64 seed) {
    a.require_same_ctx(b);
    const GroupCtx& ctx = a.ctx();
    if (ctx.kind() != GroupKind::cyclic || !is_prime(ctx.cyclic_modulus()))
        throw ContextMismatch("medium saturation is defined over prime cyclic groups");
    if (a.empty() || b.empty()) throw EmptySet("medium saturation needs nonempty inputs");
    if (a.size() != b.size()) throw SizeMismatch("medium saturation needs |A| = |B|");
    i64 n = a.size();
    i64 p = ctx.cyclic_modulus();
    if (2 * n > p - 1) throw BadParams("medium saturation needs 2n < p");
    if (c2.num <= 0) throw BadConstant("marginal-gain constant must be positive");
    if (Rational(1, 4) < c2) throw BadConstant("marginal-gain constant capped at 1/4");
    if (c.num <= 0) throw BadConstant("top-up constant must be positive");
    if (static_cast<i128>(c.num) * c.num > static_cast<i128>(n) * c.den * c.den)
        throw BadConstant("top-up constant capped at sqrt(n)");
    if (trials < 0) throw BadParams("trials must be >= 0");

    i64 target = 2 * n - 1;
    i64 r = static_cast<i64>(std::ceil(std::sqrt(static_cast<double>(n))));
    i64 cap = std::min<i64>(3 * r, n / 2);
    if (cap < 1) throw NoBaseline("set too small for a medium baseline of size <= n/2");

    auto fits = [&](const GSet& x) { return x.size() >= 1 && x.size() <= cap; };
    std::vector<std::pair<GSet, GSet>> candidates;
    {
        GSet ea = detail::rank_ends(a, r), eb = detail::rank_ends(b, r);
        GSet sa = detail::rank_strided(a, r), sb = detail::rank_strided(b, r);
        GSet ca = ea.union_with(sa), cb = eb.union_with(sb);
        if (fits(ea) && fits(sb)) candidates.emplace_back(ea, sb);
        if (fits(sa) && fits(eb)) candidates.emplace_back(sa, eb);
        if (fits(ca) && fits(cb)) candidates.emplace_back(ca, cb);
    }
    Rng base_rng(derive_seed(seed, "medium-baseline"));
    for (int i = 0; i < 200; ++i) {
        candidates.emplace_back(detail::sample_subset(a, cap, base_rng),
                                detail::sample_subset(b, cap, base_rng));
    }
    std::optional<std::pair<GSet, GSet>> baseline;
    for (const auto& [ap, bp] : candidates) {
        if (sumset(ap, bp).size() >= target) {
            baseline = {ap, bp};
            break;
        }
    }
    if (!baseline) throw NoBaseline("no baseline pair reached 2n-1 within the search budget");

    SaturationOutcome out;
    out.n = n;
    out.kappa = kappa_ab(a, b);
    GSet a_star = baseline->first, b_star = baseline->second;
    SumAccumulator acc(ctx);
    for (const Element& x : baseline->first.elems()) acc.add_translate(baseline->second, x);

    // augmentation loop: any element with marginal gain >= c2*n, at most
    // ceil(sqrt(n)) rounds; max gain first, A side on ties
    for (i64 i = 0; i < r; ++i) {
        std::optional<std::pair<Element, i64>> best;
        Side best_side = Side::a_side;
        for (const Element& cand : a.elems()) {
            if (a_star.contains(cand)) continue;
            i64 g = acc.gain(b, cand);
            if (!best || g > best->second) { best = {cand, g}; best_side = Side::a_side; }
        }
        for (const Element& cand : b.elems()) {
            if (b_star.contains(cand)) continue;
            i64 g = acc.gain(a, cand);
            if (!best || g > best->second) { best = {cand, g}; best_side = Side::b_side; }
        }
        if (!best) break;
        if (static_cast<i128>(best->second) * c2.den < static_cast<i128>(c2.num) * n) break;
        if (best_side == Side::a_side) {
            acc.add_translate(b, best->first);
            a_star = a_star.with(best->first);
        } else {
            acc.add_translate(a, best->first);
            b_star = b_star.with(best->first);
        }
        out.trace.push_back({best->first, best_side, best->second});
    }

    i64 topup = static_cast<i64>(std::ceil(c.value() * std::sqrt(static_cast<double>(n))));
    topup = std::min(topup, n);
    i64 best_achieved = -1;
    GSet best_a = a_star, best_b = b_star;
    int rounds = trials > 0 ? trials : 1;
    for (int tr = 0; tr < rounds; ++tr) {
        GSet at = a_star, bt = b_star;
        if (trials > 0 && topup > 0) {
            Rng rng(derive_seed(seed, "medium-topup-" + std::to_string(tr)));
            at = at.union_with(detail::sample_subset(a, topup, rng));
            bt = bt.union_with(detail::sample_subset(b, topup, rng));
        }
        i64 got = sumset(at, bt).size();
        if (got > best_achieved) {
            best_achieved = got;
            best_a = at;
            best_b = bt;
        }
    }
    out.a_sub = best_a;
    out.b_sub = best_b;
    out.achieved_a = out.achieved_b = best_achieved;
    out.s_budget = std::max(best_a.size(), best_b.size());
    return out;
}

struct BruteMinResult {
    i64 s_star = 0;
    GSet witness;
};

// Smallest s <= cap admitting B_(s) with |A + B_(s)| >= target, by exhaustive
// size-ordered search.  Prunes on the optimistic bound |union| + r*|A|.
inline std::optional<BruteMinResult> brute_min_subset(const GSet& a, const GSet& b, i64 target,
                                                      i64 cap) {
    a.require_same_ctx(b);
    if (a.empty() || b.empty()) throw EmptySet("subset search needs nonempty inputs");
    if (target < 1 || cap < 1) throw BadParams("target and cap must be >= 1");
    i64 m = b.size();
    cap = std::min(cap, m);

    std::vector<i64> picked;
    std::optional<BruteMinResult> found;
    auto dfs = [&](auto&& self, i64 next, i64 remaining, const SumAccumulator& acc, i64 s) -> bool {
        if (acc.size() >= target) {
            std::vector<Element> es;
            for (i64 i : picked) es.push_back(b.elems()[static_cast<size_t>(i)]);
            found = BruteMinResult{s, GSet(a.ctx(), std::move(es))};
            return true;
        }
        if (remaining == 0) return false;
        if (acc.size() + remaining * a.size() < target) return false;
        for (i64 i = next; i <= m - remaining; ++i) {
            SumAccumulator child = acc;
            child.add_translate(a, b.elems()[static_cast<size_t>(i)]);
            picked.push_back(i);
            if (self(self, i + 1, remaining - 1, child, s)) return true;
            picked.pop_back();
        }
        return false;
    };
    for (i64 s = 1; s <= cap; ++s) {
        if (s * a.size() < target) continue;  // even disjoint translates cannot reach target
        SumAccumulator empty(a.ctx());
        if (dfs(dfs, 0, s, empty, s)) return found;
    }
    return std::nullopt;
}

// Three translates of A reaching the Cauchy-Davenport floor 2n-1.  Searches
// subsets of B of size 1, 2, 3 in canonical order and returns the first hit.
inline std::optional<GSet> find_triple(const GSet& a, const GSet& b) {
    a.require_same_ctx(b);
    const GroupCtx& ctx = a.ctx();
    bool integers = ctx.kind() == GroupKind::lattice && ctx.arity() == 1;
    bool prime_cyclic = ctx.kind() == GroupKind::cyclic && is_prime(ctx.cyclic_modulus());
    if (!integers && !prime_cyclic)
        throw ContextMismatch("triple search is defined over Z or prime cyclic groups");
    if (a.empty() || b.empty()) throw EmptySet("triple search needs nonempty inputs");
    if (a.size() != b.size()) throw SizeMismatch("triple search needs |A| = |B|");
    auto res = brute_min_subset(a, b, 2 * a.size() - 1, 3);
    if (!res) return std::nullopt;
    return res->witness;
}

struct CoverOutcome {
    GSet s_prime, t_prime;
    Rational tau;
    bool covered = false;
};

// Two-phase saturating cover of S+T.  Phase 1 greedily collects S* from
// elements whose translate gains strictly more than tau fresh sums, so
// |S*| <= |S+T|/tau.  Phase 2 covers the residual (S+T) \ (S*+T) by greedy
// set cover over translates s+T and S+t; every residual sum is reachable, so
// the loop always terminates with full coverage.
inline CoverOutcome saturating_cover(const GSet& s, const GSet& t,
                                     std::optional<Rational> tau_opt = std::nullopt) {
    s.require_same_ctx(t);
    if (s.empty() || t.empty()) throw EmptySet("saturating cover needs nonempty inputs");
    GSet st = sumset(s, t);
    Rational tau = tau_opt.value_or(
        Rational(static_cast<i64>(std::ceil(std::sqrt(static_cast<double>(st.size())))), 1));
    if (tau.num <= 0) throw BadParams("cover threshold must be positive");

    const GroupCtx& ctx = s.ctx();
    GSet s_star(ctx);
    SumAccumulator acc(ctx);
    for (;;) {
        std::optional<std::pair<Element, i64>> best;
        for (const Element& cand : s.elems()) {
            if (s_star.contains(cand)) continue;
            i64 g = acc.gain(t, cand);
            if (!best || g > best->second) best = {cand, g};
        }
        if (!best) break;
        if (static_cast<i128>(best->second) * tau.den <= static_cast<i128>(tau.num)) break;
        acc.add_translate(t, best->first);
        s_star = s_star.with(best->first);
    }

    std::unordered_set<Element, ElementHash> residual;
    for (const Element& z : st.elems())
        if (!acc.contains(z)) residual.insert(z);

    GSet s_extra(ctx), t_extra(ctx);
    while (!residual.empty()) {
        std::optional<Element> best;
        Side best_side = Side::a_side;
        i64 best_cover = 0;
        for (const Element& cand : s.elems()) {
            if (s_star.contains(cand) || s_extra.contains(cand)) continue;
            i64 cov = 0;
            for (const Element& y : t.elems())
                if (residual.count(ctx.add(cand, y))) ++cov;
            if (!best || cov > best_cover) { best = cand; best_cover = cov; best_side = Side::a_side; }
        }
        for (const Element& cand : t.elems()) {
            if (t_extra.contains(cand)) continue;
            i64 cov = 0;
            for (const Element& x : s.elems())
                if (residual.count(ctx.add(x, cand))) ++cov;
            // T side wins ties: matches the documented tie-break
            if (!best || cov >= best_cover) {
                if (!best || cov > best_cover || best_side == Side::a_side) {
                    best = cand;
                    best_cover = cov;
                    best_side = Side::b_side;
                }
            }
        }
        if (!best || best_cover == 0) break;  // unreachable residue: give up, covered stays false
        if (best_side == Side::a_side) {
            for (const Element& y : t.elems()) residual.erase(ctx.add(*best, y));
            s_extra = s_extra.with(*best);
        } else {
            for (const Element& x : s.elems()) residual.erase(ctx.add(x, *best));
            t_extra = t_extra.with(*best);
        }
    }

    CoverOutcome out;
    out.s_prime = s_star.union_with(s_extra);
    out.t_prime = t_extra;
    out.tau = tau;
    GSet reached = sumset(out.s_prime, t);
    if (!out.t_prime.empty()) reached = reached.union_with(sumset(s, out.t_prime));
    out.covered = reached == st;
    return out;
}

namespace detail {

// first want points of A lying in pairwise distinct translates of the witness
// subspace; empty result key means "fewer classes than asked"
inline std::vector<Element> pick_distinct_translates(const GSet& a, const SubspaceCover& h,
                                                     i64 want) {
    std::vector<Element> picks;
    std::map<std::array<i128, 3>, bool> seen_line;
    std::map<i128, bool> seen_plane;
    for (const Element& x : a.elems()) {
        bool fresh = false;
        if (h.k == 1) {
            fresh = seen_line.emplace(line_translate_key(x, *h.dir), true).second;
        } else {
            fresh = seen_plane.emplace(plane_translate_key(x, *h.normal), true).second;
        }
        if (fresh) {
            picks.push_back(x);
            if (static_cast<i64>(picks.size()) == want) break;
        }
    }
    return picks;
}

inline GSet full_dim_recurse(const GSet& a, i64 t, int k) {
    if (k == 0) {
        if (a.size() < t + 1)
            throw Infeasible("only " + std::to_string(a.size()) +
                             " distinct points; covered by t=" + std::to_string(t) + " singletons");
        std::vector<Element> pts(a.elems().begin(), a.elems().begin() + static_cast<size_t>(t + 1));
        return GSet(a.ctx(), std::move(pts));
    }
    if (t > 500) throw BadParams("translate budget too large for the 500-point cap");
    GSet x = full_dim_recurse(a, t * t, k - 1);
    CoverCheckResult chk = hyperplane_cover_check(x, t, k);
    if (!chk.covered) return x;
    // at most one covering subspace exists once x resists t^2 translates one
    // dimension down; spreading t+1 points of A across its translates kills it
    std::vector<Element> picks = detail::pick_distinct_translates(a, *chk.witness, t + 1);
    if (static_cast<i64>(picks.size()) < t + 1) {
        std::string dir = chk.witness->k == 1 ? "direction" : "normal";
        throw Infeasible("input itself is covered by " + std::to_string(picks.size()) +
                         " translates of the witness subspace (" + dir + " found in cover check)");
    }
    GSet out = x;
    for (const Element& e : picks) out = out.with(e);
    return out;
}

}  // namespace detail

// Subset of A that no k-dimensional subspace covers within t parallel
// translates, built by the doubling recursion (budget t^2 one dimension down,
// then t+1 points spread across the unique covering subspace if one remains).
// Falls back to A itself when the recursion starves but A already qualifies.
inline GSet select_full_dim_subset(const GSet& a, i64 t, int k, int d) {
    const GroupCtx& ctx = a.ctx();
    if (ctx.kind() != GroupKind::lattice)
        throw ContextMismatch("full-dimension selection is defined on integer lattices");
    if (ctx.arity() != d) throw BadParams("declared dimension does not match the context");
    if (d > 3) throw DimensionTooLarge("full-dimension selection supports d <= 3");
    if (k < 0 || k >= d) throw BadParams("subspace dimension must satisfy 0 <= k < d");
    if (a.size() > 500) throw BadParams("full-dimension selection capped at 500 points");
    if (t < 0) throw BadParams("translate budget must be >= 0");
    try {
        return detail::full_dim_recurse(a, t, k);
    } catch (const Infeasible&) {
        if (!hyperplane_cover_check(a, t, k).covered) return a;
        throw;
    }
}

}  // namespace sumsetlab
