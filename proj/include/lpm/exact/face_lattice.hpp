#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <queue>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "../errors.hpp"
#include "hull.hpp"
#include "linalg.hpp"

namespace lpm::exact {

inline constexpr std::size_t default_max_lattice_vertices = 5000;
inline constexpr std::size_t default_max_lattice_faces = 200000;

// The graded lattice of nonempty faces of a polytope, each face recorded as
// its vertex set. The full polytope is included; the empty face is implicit.
struct FaceLattice {
    int dim = 0;
    std::size_t vertex_count = 0;
    std::vector<Bitset> faces; // sorted by (rank, vertex set)
    std::vector<int> ranks;    // parallel to faces; top entry equals dim

    // Face counts by dimension 0..dim, the full face included as the last.
    std::vector<long long> f_vector() const {
        std::vector<long long> f(static_cast<std::size_t>(dim) + 1, 0);
        for (int r : ranks) ++f[static_cast<std::size_t>(r)];
        return f;
    }

    // Cover pairs (higher, lower) by index; graded, so rank gap one plus
    // containment is exactly the covering relation.
    std::vector<std::pair<int, int>> covers() const {
        std::vector<std::pair<int, int>> out;
        for (std::size_t hi = 0; hi < faces.size(); ++hi)
            for (std::size_t lo = 0; lo < faces.size(); ++lo)
                if (ranks[hi] == ranks[lo] + 1 && faces[lo].is_subset_of(faces[hi]))
                    out.emplace_back(static_cast<int>(hi), static_cast<int>(lo));
        return out;
    }

    // Chain counts of proper faces by dimension set, indexed by bitmask over
    // dimensions 0..dim-1.
    std::vector<long long> flag_vector() const {
        int levels = dim;
        std::vector<std::vector<std::size_t>> by_rank(static_cast<std::size_t>(levels));
        for (std::size_t i = 0; i < faces.size(); ++i)
            if (ranks[i] < dim) by_rank[static_cast<std::size_t>(ranks[i])].push_back(i);
        std::vector<long long> flags(std::size_t{1} << levels, 0);
        flags[0] = 1;
        for (std::uint32_t mask = 1; mask < (1u << levels); ++mask) {
            std::vector<int> dims;
            for (int r = 0; r < levels; ++r)
                if (mask & (1u << r)) dims.push_back(r);
            std::vector<long long> cur(by_rank[static_cast<std::size_t>(dims[0])].size(), 1);
            for (std::size_t step = 1; step < dims.size(); ++step) {
                const auto& lower = by_rank[static_cast<std::size_t>(dims[step - 1])];
                const auto& upper = by_rank[static_cast<std::size_t>(dims[step])];
                std::vector<long long> next(upper.size(), 0);
                for (std::size_t u = 0; u < upper.size(); ++u)
                    for (std::size_t l = 0; l < lower.size(); ++l)
                        if (faces[lower[l]].is_subset_of(faces[upper[u]]))
                            next[u] += cur[l];
                cur = std::move(next);
            }
            long long total = 0;
            for (long long c : cur) total += c;
            flags[mask] = total;
        }
        return flags;
    }

    // Every interval of rank two, with the empty face and the full face
    // taken into account, must contain exactly four elements.
    bool eulerian() const {
        std::vector<std::vector<std::size_t>> by_rank(static_cast<std::size_t>(dim) + 1);
        for (std::size_t i = 0; i < faces.size(); ++i)
            by_rank[static_cast<std::size_t>(ranks[i])].push_back(i);
        auto middles = [&](int mid_rank, const Bitset* lo, const Bitset* hi) {
            std::size_t count = 0;
            for (std::size_t m : by_rank[static_cast<std::size_t>(mid_rank)]) {
                if (lo && !lo->is_subset_of(faces[m])) continue;
                if (hi && !faces[m].is_subset_of(*hi)) continue;
                ++count;
            }
            return count;
        };
        // empty-to-rank-1 intervals (vertices in an edge)
        if (dim >= 1)
            for (std::size_t z : by_rank[1])
                if (middles(0, nullptr, &faces[z]) != 2) return false;
        // proper intervals
        for (int r = 0; r + 2 <= dim; ++r)
            for (std::size_t x : by_rank[static_cast<std::size_t>(r)])
                for (std::size_t z : by_rank[static_cast<std::size_t>(r + 2)]) {
                    if (!faces[x].is_subset_of(faces[z])) continue;
                    if (middles(r + 1, &faces[x], &faces[z]) != 2) return false;
                }
        // empty-to-dim-1 when the whole polytope is a segment-like interval
        if (dim == 1 && middles(0, nullptr, nullptr) != 2) return false;
        return true;
    }
};

// True when every one-dimensional face has exactly two vertices that differ
// in exactly two coordinates, one up and one down. Coordinates are taken
// from the caller's point matrix, which may be the unprojected one.
inline bool check_edge_directions(const FaceLattice& lattice, const IntMatrix& points) {
    for (std::size_t i = 0; i < lattice.faces.size(); ++i) {
        if (lattice.ranks[i] != 1) continue;
        if (lattice.faces[i].count() != 2) return false;
        std::size_t a = lattice.faces[i].find_first();
        std::size_t b = lattice.faces[i].find_next(a);
        int up = 0, down = 0;
        for (std::size_t k = 0; k < points[a].size(); ++k) {
            Int diff = points[a][k] - points[b][k];
            if (diff == 1)
                ++up;
            else if (diff == -1)
                ++down;
            else if (diff != 0)
                return false;
        }
        if (up != 1 || down != 1) return false;
    }
    return true;
}

// Builds the lattice from vertex coordinates and facet vertex sets by
// closing downward under intersections; ranks come from exact affine spans.
inline FaceLattice face_lattice_from_facets(const IntMatrix& points,
                                            const std::vector<Facet>& facets,
                                            std::size_t max_faces = default_max_lattice_faces) {
    FaceLattice lat;
    lat.vertex_count = points.size();
    lat.dim = affine_rank(points);

    std::map<Bitset, int> seen;
    std::vector<Bitset> order;
    Bitset full(points.size());
    full.set();
    seen.emplace(full, 0);
    order.push_back(full);
    std::queue<Bitset> work;
    work.push(full);
    while (!work.empty()) {
        Bitset x = std::move(work.front());
        work.pop();
        for (const Facet& f : facets) {
            Bitset y = x & f.tight;
            if (y.none() || y == x) continue;
            if (seen.emplace(y, 0).second) {
                if (order.size() >= max_faces)
                    throw resource_error("face lattice exceeds the face cap");
                order.push_back(y);
                work.push(y);
            }
        }
    }

    std::vector<std::pair<int, Bitset>> ranked;
    ranked.reserve(order.size());
    for (const Bitset& face : order) {
        IntMatrix sub;
        for (std::size_t i = 0; i < points.size(); ++i)
            if (face.test(i)) sub.push_back(points[i]);
        ranked.emplace_back(affine_rank(sub), face);
    }
    std::sort(ranked.begin(), ranked.end());
    for (auto& [rank, face] : ranked) {
        lat.ranks.push_back(rank);
        lat.faces.push_back(std::move(face));
    }
    return lat;
}

// Full pipeline from arbitrary-dimension integer points: project to a
// spanning coordinate subset, take the hull, close under intersections.
inline FaceLattice face_lattice_of_points(const IntMatrix& points,
                                          std::size_t max_vertices = default_max_lattice_vertices,
                                          std::size_t max_faces = default_max_lattice_faces) {
    if (points.size() > max_vertices)
        throw resource_error("vertex count exceeds the lattice cap");
    if (points.empty()) throw domain_error("face lattice of an empty point set");
    IntMatrix projected;
    std::vector<std::size_t> cols = spanning_columns(points);
    for (const IntRow& p : points) {
        IntRow row;
        for (std::size_t c : cols) row.push_back(p[c]);
        projected.push_back(std::move(row));
    }
    if (cols.empty()) {
        // single point (affine dimension zero): the lattice is just the point
        FaceLattice lat;
        lat.dim = 0;
        lat.vertex_count = points.size();
        Bitset full(points.size());
        full.set();
        lat.faces.push_back(full);
        lat.ranks.push_back(0);
        return lat;
    }
    return face_lattice_from_facets(projected, exact_hull(projected), max_faces);
}

// Face lattice of a product of two simplexes with i and j vertices: faces
// are pairs of nonempty vertex subsets, of dimension |A| + |B| - 2.
inline FaceLattice simplex_product_lattice(int i, int j) {
    if (i < 1 || j < 1) throw domain_error("simplex factors need at least one vertex");
    if (i + j > 22) throw resource_error("simplex product exceeds the enumeration cap");
    FaceLattice lat;
    lat.dim = i + j - 2;
    lat.vertex_count = static_cast<std::size_t>(i) * static_cast<std::size_t>(j);
    std::vector<std::pair<int, Bitset>> ranked;
    for (std::uint32_t a = 1; a < (1u << i); ++a)
        for (std::uint32_t b = 1; b < (1u << j); ++b) {
            Bitset face(lat.vertex_count);
            for (int x = 0; x < i; ++x)
                for (int y = 0; y < j; ++y)
                    if ((a >> x & 1u) && (b >> y & 1u))
                        face.set(static_cast<std::size_t>(x) * static_cast<std::size_t>(j) +
                                 static_cast<std::size_t>(y));
            ranked.emplace_back(__builtin_popcount(a) + __builtin_popcount(b) - 2,
                                std::move(face));
        }
    std::sort(ranked.begin(), ranked.end());
    for (auto& [rank, face] : ranked) {
        lat.ranks.push_back(rank);
        lat.faces.push_back(std::move(face));
    }
    return lat;
}

// Face lattice of a single simplex with k vertices.
inline FaceLattice simplex_lattice(int k) {
    if (k < 1) throw domain_error("simplex needs at least one vertex");
    if (k > 22) throw resource_error("simplex exceeds the enumeration cap");
    FaceLattice lat;
    lat.dim = k - 1;
    lat.vertex_count = static_cast<std::size_t>(k);
    std::vector<std::pair<int, Bitset>> ranked;
    for (std::uint32_t a = 1; a < (1u << k); ++a) {
        Bitset face(lat.vertex_count);
        for (int x = 0; x < k; ++x)
            if (a >> x & 1u) face.set(static_cast<std::size_t>(x));
        ranked.emplace_back(__builtin_popcount(a) - 1, std::move(face));
    }
    std::sort(ranked.begin(), ranked.end());
    for (auto& [rank, face] : ranked) {
        lat.ranks.push_back(rank);
        lat.faces.push_back(std::move(face));
    }
    return lat;
}

} // namespace lpm::exact
