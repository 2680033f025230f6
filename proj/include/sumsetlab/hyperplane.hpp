#pragma once

#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "sumsetlab/gset.hpp"

namespace sumsetlab {

namespace detail {

inline Element primitive(Element v) {
    i64 g = 0;
    for (i64 c : v.coords) g = std::gcd(g, c < 0 ? -c : c);
    if (g > 1)
        for (i64& c : v.coords) c /= g;
    for (i64 c : v.coords) {
        if (c > 0) break;
        if (c < 0) {
            for (i64& x : v.coords) x = -x;
            break;
        }
    }
    return v;
}

inline bool is_zero(const Element& v) {
    for (i64 c : v.coords)
        if (c != 0) return false;
    return true;
}

inline std::array<i128, 3> cross3(const Element& a, const Element& b) {
    return {static_cast<i128>(a.coords[1]) * b.coords[2] - static_cast<i128>(a.coords[2]) * b.coords[1],
            static_cast<i128>(a.coords[2]) * b.coords[0] - static_cast<i128>(a.coords[0]) * b.coords[2],
            static_cast<i128>(a.coords[0]) * b.coords[1] - static_cast<i128>(a.coords[1]) * b.coords[0]};
}

inline Element cross3_element(const Element& a, const Element& b) {
    auto cr = cross3(a, b);
    std::vector<i64> v(3);
    for (int i = 0; i < 3; ++i) {
        if (cr[static_cast<size_t>(i)] > INT64_MAX || cr[static_cast<size_t>(i)] < INT64_MIN)
            throw Overflow("cross product exceeds int64");
        v[static_cast<size_t>(i)] = static_cast<i64>(cr[static_cast<size_t>(i)]);
    }
    return Element(std::move(v));
}

}  // namespace detail

// Key identifying the translate of span(dir) containing x: a maximal set of
// cross products, so two points share a key iff their difference is parallel
// to dir.  d=2 uses one scalar, d=3 the full cross product.
inline std::array<i128, 3> line_translate_key(const Element& x, const Element& dir) {
    if (x.coords.size() == 2)
        return {static_cast<i128>(x.coords[0]) * dir.coords[1] -
                    static_cast<i128>(x.coords[1]) * dir.coords[0],
                0, 0};
    return detail::cross3(x, dir);
}

inline i128 plane_translate_key(const Element& x, const Element& normal) {
    i128 s = 0;
    for (size_t i = 0; i < x.coords.size(); ++i)
        s += static_cast<i128>(x.coords[i]) * normal.coords[i];
    return s;
}

// Covering witness: the subspace (direction for lines, normal for planes) plus
// one representative point per translate actually used.
struct SubspaceCover {
    int k = 0;
    std::optional<Element> dir;
    std::optional<Element> normal;
    i64 classes = 0;
    std::vector<Element> reps;
};

struct CoverCheckResult {
    bool covered = false;
    std::optional<SubspaceCover> witness;
};

namespace detail {

inline SubspaceCover classify_line(const GSet& a, const Element& dir) {
    std::map<std::array<i128, 3>, Element> classes;
    for (const Element& x : a.elems())
        classes.emplace(line_translate_key(x, dir), x);
    SubspaceCover c;
    c.k = 1;
    c.dir = dir;
    c.classes = static_cast<i64>(classes.size());
    for (auto& [k, rep] : classes) c.reps.push_back(rep);
    return c;
}

inline SubspaceCover classify_plane(const GSet& a, const Element& normal) {
    std::map<i128, Element> classes;
    for (const Element& x : a.elems())
        classes.emplace(plane_translate_key(x, normal), x);
    SubspaceCover c;
    c.k = 2;
    c.normal = normal;
    c.classes = static_cast<i64>(classes.size());
    for (auto& [k, rep] : classes) c.reps.push_back(rep);
    return c;
}

inline std::vector<Element> difference_directions(const GSet& a) {
    std::vector<Element> dirs;
    const auto& es = a.elems();
    for (size_t i = 0; i < es.size(); ++i) {
        for (size_t j = i + 1; j < es.size(); ++j) {
            Element d = es[j];
            for (size_t c = 0; c < d.coords.size(); ++c) d.coords[c] -= es[i].coords[c];
            if (!is_zero(d)) dirs.push_back(primitive(std::move(d)));
        }
    }
    std::sort(dirs.begin(), dirs.end());
    dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
    return dirs;
}

}  // namespace detail

// Decides whether some k-dimensional subspace covers A within t parallel
// translates.  Candidate subspaces are spanned by difference vectors of A
// (plus basis paddings for planes): with |A| > t, any covering family puts
// two points in one translate, so the subspace contains a difference; a plane
// whose in-A differences are all collinear also covers via any padded span.
// Translates that hold at most one point only arise when |A| <= t, which is
// the trivially-covered branch.
inline CoverCheckResult hyperplane_cover_check(const GSet& a, i64 t, int k) {
    const GroupCtx& ctx = a.ctx();
    if (ctx.kind() != GroupKind::lattice)
        throw ContextMismatch("subspace covers are defined on integer lattices");
    int d = ctx.arity();
    if (d > 3) throw DimensionTooLarge("subspace cover check supports d <= 3");
    if (k < 0 || k >= d) throw BadParams("subspace dimension must satisfy 0 <= k < d");
    if (a.size() > 500) throw BadParams("cover check capped at 500 points");
    if (t < 0) throw BadParams("translate budget must be >= 0");

    CoverCheckResult res;
    if (a.size() <= t) {
        // any subspace works; report the first basis direction for concreteness
        SubspaceCover c;
        if (k == 0) {
            c.k = 0;
            c.classes = a.size();
            c.reps = a.elems();
        } else {
            std::vector<i64> v(static_cast<size_t>(d), 0);
            v[0] = 1;
            Element e1(std::move(v));
            if (k == 1) {
                c = detail::classify_line(a, e1);
            } else {
                std::vector<i64> n(static_cast<size_t>(d), 0);
                n[static_cast<size_t>(d - 1)] = 1;
                c = detail::classify_plane(a, Element(std::move(n)));
            }
        }
        res.covered = true;
        res.witness = std::move(c);
        return res;
    }

    if (k == 0) {
        // covering by t points is exactly |A| <= t, already handled
        res.covered = false;
        return res;
    }

    std::vector<Element> dirs = detail::difference_directions(a);
    if (k == 1) {
        for (const Element& v : dirs) {
            SubspaceCover c = detail::classify_line(a, v);
            if (c.classes <= t) {
                res.covered = true;
                res.witness = std::move(c);
                return res;
            }
        }
        return res;
    }

    // k == 2, d == 3: normals from difference pairs, padded with basis vectors
    std::vector<Element> normals;
    for (size_t i = 0; i < dirs.size(); ++i) {
        for (size_t j = i + 1; j < dirs.size(); ++j) {
            Element n = detail::cross3_element(dirs[i], dirs[j]);
            if (!detail::is_zero(n)) normals.push_back(detail::primitive(std::move(n)));
        }
    }
    for (const Element& v : dirs) {
        for (int b = 0; b < 3; ++b) {
            std::vector<i64> e(3, 0);
            e[static_cast<size_t>(b)] = 1;
            Element n = detail::cross3_element(v, Element(std::move(e)));
            if (!detail::is_zero(n)) normals.push_back(detail::primitive(std::move(n)));
        }
    }
    std::sort(normals.begin(), normals.end());
    normals.erase(std::unique(normals.begin(), normals.end()), normals.end());
    for (const Element& n : normals) {
        SubspaceCover c = detail::classify_plane(a, n);
        if (c.classes <= t) {
            res.covered = true;
            res.witness = std::move(c);
            return res;
        }
    }
    return res;
}

}  // namespace sumsetlab
