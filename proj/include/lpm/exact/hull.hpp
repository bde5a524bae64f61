#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "../errors.hpp"
#include "linalg.hpp"

namespace lpm::exact {

using Bitset = boost::dynamic_bitset<>;

// One facet of a polytope: the inequality normal . x <= offset together
// with the set of input points lying on it.
struct Facet {
    IntRow normal;
    Int offset;
    Bitset tight; // indexed over the input points
};

namespace detail {

inline void gcd_reduce(IntRow& v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    if (g > 1)
        for (Int& x : v) x /= g;
}

inline Int dot(const IntRow& a, const IntRow& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Determinant by fraction-free elimination; divisions stay exact.
inline Int determinant(IntMatrix m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    Int denom = 1;
    for (std::size_t c = 0; c + 1 < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m[pivot][c] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            sign = -sign;
        }
        for (std::size_t r = c + 1; r < n; ++r) {
            for (std::size_t k = c + 1; k < n; ++k)
                m[r][k] = (m[r][k] * m[c][c] - m[r][c] * m[c][k]) / denom;
            m[r][c] = 0;
        }
        denom = m[c][c];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

} // namespace detail

// Facets of the convex hull of full-dimensional integer points, computed by
// the double description method on the cone of valid inequalities. Points
// must affinely span their coordinate space.
inline std::vector<Facet> exact_hull(const IntMatrix& points) {
    std::size_t count = points.size();
    if (count == 0) throw domain_error("hull of an empty point set");
    std::size_t d = points[0].size();
    if (affine_rank(points) != static_cast<int>(d))
        throw domain_error("hull input must affinely span its space");

    // rows of the constraint matrix: (-p, 1) . (a, b) >= 0 for each point
    IntMatrix rows(count, IntRow(d + 1));
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t k = 0; k < d; ++k) rows[i][k] = -points[i][k];
        rows[i][d] = 1;
    }

    // initial simplicial cone from d+1 independent rows
    std::vector<std::size_t> base;
    {
        RatMatrix probe;
        for (std::size_t i = 0; i < count && base.size() < d + 1; ++i) {
            probe.push_back(RatRow(rows[i].begin(), rows[i].end()));
            if (rational_rank(probe) == probe.size())
                base.push_back(i);
            else
                probe.pop_back();
        }
        if (base.size() != d + 1)
            throw domain_error("constraint matrix is rank deficient");
    }

    struct Ray {
        IntRow v;
        Bitset zero; // processed constraints this ray is tight on
    };

    // rays = columns of the adjugate of the base matrix, oriented so that
    // base_matrix * ray = |det| * e_j
    std::vector<Ray> rays;
    {
        IntMatrix a0(d + 1, IntRow(d + 1));
        for (std::size_t i = 0; i <= d; ++i) a0[i] = rows[base[i]];
        // adjugate column j: solve a0 * x = det * e_j via Cramer expansion
        // (delete row j, expand cofactors); assembled from minors
        IntMatrix adj(d + 1, IntRow(d + 1));
        for (std::size_t rr = 0; rr <= d; ++rr)
            for (std::size_t cc = 0; cc <= d; ++cc) {
                IntMatrix minor;
                for (std::size_t i = 0; i <= d; ++i) {
                    if (i == rr) continue;
                    IntRow row;
                    for (std::size_t k = 0; k <= d; ++k)
                        if (k != cc) row.push_back(a0[i][k]);
                    minor.push_back(std::move(row));
                }
                Int m = detail::determinant(std::move(minor));
                adj[cc][rr] = ((rr + cc) % 2 == 0) ? m : -m; // transpose of cofactors
            }
        Int det = 0;
        for (std::size_t k = 0; k <= d; ++k) det += a0[0][k] * adj[k][0];
        if (det == 0) throw domain_error("initial cone is degenerate");
        for (std::size_t j = 0; j <= d; ++j) {
            Ray r;
            r.v.resize(d + 1);
            for (std::size_t i = 0; i <= d; ++i) r.v[i] = det > 0 ? adj[i][j] : -adj[i][j];
            detail::gcd_reduce(r.v);
            r.zero.resize(count);
            rays.push_back(std::move(r));
        }
        for (std::size_t j = 0; j <= d; ++j)
            for (std::size_t i = 0; i <= d; ++i)
                if (i != j) rays[j].zero.set(base[i]);
    }

    std::vector<bool> processed(count, false);
    for (std::size_t i : base) processed[i] = true;

    for (std::size_t ci = 0; ci < count; ++ci) {
        if (processed[ci]) continue;
        std::vector<Int> value(rays.size());
        bool any_negative = false;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            value[r] = detail::dot(rows[ci], rays[r].v);
            if (value[r] < 0) any_negative = true;
        }
        if (!any_negative) {
            for (std::size_t r = 0; r < rays.size(); ++r)
                if (value[r] == 0) rays[r].zero.set(ci);
            processed[ci] = true;
            continue;
        }
        std::vector<Ray> next;
        for (std::size_t r = 0; r < rays.size(); ++r)
            if (value[r] >= 0) {
                Ray kept = rays[r];
                if (value[r] == 0) kept.zero.set(ci);
                next.push_back(std::move(kept));
            }
        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (value[p] <= 0) continue;
            for (std::size_t q = 0; q < rays.size(); ++q) {
                if (value[q] >= 0) continue;
                // combinatorial adjacency: no third ray is tight on all
                // constraints both of these are tight on
                Bitset common = rays[p].zero & rays[q].zero;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size(); ++r) {
                    if (r == p || r == q) continue;
                    if ((common & ~rays[r].zero).none()) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;
                Ray fresh;
                fresh.v.resize(d + 1);
                for (std::size_t k = 0; k <= d; ++k)
                    fresh.v[k] = value[p] * rays[q].v[k] - value[q] * rays[p].v[k];
                detail::gcd_reduce(fresh.v);
                fresh.zero = common;
                fresh.zero.set(ci);
                next.push_back(std::move(fresh));
            }
        }
        rays = std::move(next);
        processed[ci] = true;
    }

    std::vector<Facet> facets;
    for (const Ray& r : rays) {
        Facet f;
        f.normal.assign(r.v.begin(), r.v.begin() + static_cast<std::ptrdiff_t>(d));
        f.offset = r.v[d];
        bool zero_normal = true;
        for (const Int& x : f.normal)
            if (x != 0) zero_normal = false;
        if (zero_normal) continue;
        f.tight.resize(count);
        for (std::size_t i = 0; i < count; ++i)
            if (detail::dot(f.normal, points[i]) == f.offset) f.tight.set(i);
        if (f.tight.count() < d) throw domain_error("facet is tight on too few points");
        facets.push_back(std::move(f));
    }
    std::sort(facets.begin(), facets.end(),
              [](const Facet& a, const Facet& b) { return a.tight < b.tight; });
    return facets;
}

} // namespace lpm::exact
