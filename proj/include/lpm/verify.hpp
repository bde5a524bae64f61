#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "exact/cd_index.hpp"
#include "exact/face_lattice.hpp"
#include "facet_ops.hpp"
#include "matroid.hpp"
#include "tilings.hpp"

namespace lpm {

// Basis incidence vectors as rows of an integer matrix, in basis order.
inline exact::IntMatrix vertex_matrix(const LatticeMatroid& m) {
    exact::IntMatrix points;
    for (BasisMask b : m.bases) {
        exact::IntRow row(static_cast<std::size_t>(m.n));
        for (int i = 0; i < m.n; ++i) row[static_cast<std::size_t>(i)] = (b >> i) & 1u;
        points.push_back(std::move(row));
    }
    return points;
}

inline exact::FaceLattice oracle_lattice(const LatticeMatroid& m) {
    return exact::face_lattice_of_points(vertex_matrix(m));
}

// All connected skew regions with the given total step count, deduplicated
// by the bounding word pair, lower path never above the upper.
inline std::vector<SkewRegion> connected_regions_with_steps(int steps) {
    std::vector<SkewRegion> out;
    if (steps < 1) return out;
    std::vector<std::string> words;
    std::function<void(std::string&)> gen = [&](std::string& w) {
        if (static_cast<int>(w.size()) == steps) {
            words.push_back(w);
            return;
        }
        w.push_back('E');
        gen(w);
        w.back() = 'N';
        gen(w);
        w.pop_back();
    };
    std::string w;
    gen(w);
    for (const std::string& lower : words)
        for (const std::string& upper : words) {
            LatticePath p(lower), q(upper);
            if (p.endpoint() != q.endpoint()) continue;
            bool above = true;
            for (int t = 0; t <= steps && above; ++t)
                if (q.norths(t) < p.norths(t)) above = false;
            if (!above) continue;
            SkewRegion region = make_region(p, q);
            if (region.connected()) out.push_back(std::move(region));
        }
    return out;
}

inline std::vector<SkewRegion> connected_regions_up_to(int max_steps) {
    std::vector<SkewRegion> out;
    for (int n = 1; n <= max_steps; ++n)
        for (SkewRegion& r : connected_regions_with_steps(n)) out.push_back(std::move(r));
    return out;
}

// All border strips with the given step count (a subfamily of the above).
inline std::vector<SkewRegion> border_strips_with_steps(int steps) {
    std::vector<SkewRegion> out;
    for (SkewRegion& r : connected_regions_with_steps(steps))
        if (is_border_strip(r)) out.push_back(std::move(r));
    return out;
}

struct CheckOptions {
    bool with_oracle = true;    // exact hull and face lattice cross-checks
    bool with_poset_iso = false; // full poset isomorphism against the oracle
    bool with_eulerian = false;  // rank-2 interval counts and cd rewrite
};

namespace detail {

inline std::string region_tag(const SkewRegion& region) {
    return region.lower.word() + "/" + region.upper.word();
}

// Vertex sets of a combinatorial face as a sorted list of basis masks.
inline std::vector<BasisMask> sorted_face_vertices(const SkewRegion& region,
                                                   const TiledBand& bottom) {
    std::vector<BasisMask> v = face_vertices(region, bottom);
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace detail

// Runs every applicable invariant on one connected region and reports all
// violations as human-readable strings; empty means the region passed.
inline std::vector<std::string> check_region(const SkewRegion& region,
                                             const CheckOptions& opt = {}) {
    std::vector<std::string> bad;
    const std::string tag = detail::region_tag(region);
    auto fail = [&](const std::string& what) { bad.push_back(tag + ": " + what); };

    LatticeMatroid by_paths = bases_by_paths(region);
    LatticeMatroid by_transversals = bases_by_transversals(region);
    if (by_paths.bases != by_transversals.bases)
        fail("path and transversal basis enumerations disagree");

    int n = region.steps();
    int dim = polytope_dimension(region);
    int components = static_cast<int>(connected_components(by_paths).size());
    if (dim != n - components) fail("dimension formula disagrees with component count");

    std::vector<FacetOperation> ops;
    bool strip = is_border_strip(region);
    ops = facet_operations(region);
    if (strip) {
        SegmentDecomposition dec = segment_decomposition(region);
        if (static_cast<int>(ops.size()) != n + dec.d())
            fail("facet operation count differs from steps plus corner count");
    }

    std::vector<TiledBand> bottoms = enumerate_bottoms_all(region);
    std::vector<long long> bottoms_by_blocks(static_cast<std::size_t>(dim) + 1, 0);
    for (const TiledBand& b : bottoms) {
        if (b.block_count() > dim) {
            fail("bottom with more blocks than the polytope dimension");
            continue;
        }
        ++bottoms_by_blocks[static_cast<std::size_t>(b.block_count())];
    }

    long long edges_area = edge_count_by_area(region);
    long long edges_bottoms = dim >= 1 ? bottoms_by_blocks[1] : 0;
    if (edges_area != edges_bottoms)
        fail("edge count by area differs from one-block bottom count");

    if (region.lower.word() == std::string(static_cast<std::size_t>(region.east()), 'E') +
                                   std::string(static_cast<std::size_t>(region.north()), 'N')) {
        for (const LatticePath& l : all_paths(region))
            if (!(l_prime(region.lower, l) == region.lower)) {
                fail("straightened companion differs from the lower path");
                break;
            }
    }

    if (!opt.with_oracle) return bad;

    exact::FaceLattice lattice = oracle_lattice(by_paths);
    exact::IntMatrix points = vertex_matrix(by_paths);
    std::vector<long long> f = lattice.f_vector();

    if (lattice.dim != dim) fail("affine dimension differs from the formula");
    if (f[0] != static_cast<long long>(by_paths.bases.size()))
        fail("vertex count differs from basis count");
    if (dim >= 1 && f[static_cast<std::size_t>(dim) - 1] != static_cast<long long>(ops.size()))
        fail("facet operation count differs from oracle facet count");
    {
        long long euler = 0;
        for (int i = 0; i < dim; ++i)
            euler += (i % 2 == 0) ? f[static_cast<std::size_t>(i)] : -f[static_cast<std::size_t>(i)];
        long long expected = 1 - (dim % 2 == 0 ? 1 : -1);
        if (dim >= 1 && euler != expected) fail("Euler relation violated");
    }
    if (!exact::check_edge_directions(lattice, points))
        fail("an edge is not a difference of two incidence vectors");

    if (static_cast<int>(bottoms_by_blocks.size()) != dim + 1)
        fail("bottom block counts exceed the dimension range");
    for (int i = 0; i <= dim; ++i)
        if (bottoms_by_blocks[static_cast<std::size_t>(i)] != f[static_cast<std::size_t>(i)]) {
            std::ostringstream os;
            os << "bottoms with " << i << " blocks count " << bottoms_by_blocks[static_cast<std::size_t>(i)]
               << " but the oracle has " << f[static_cast<std::size_t>(i)] << " faces";
            fail(os.str());
            break;
        }

    if (strip) {
        for (int t = 0; t <= n - 1; ++t) {
            long long subsets = static_cast<long long>(enumerate_face_subsets(region, t).size());
            long long expect = f[static_cast<std::size_t>(n - 1 - t)];
            if (subsets != expect) {
                std::ostringstream os;
                os << "strip subsets at t=" << t << " count " << subsets << " but the oracle has "
                   << expect;
                fail(os.str());
                break;
            }
        }
    }

    if (dim >= 1 && edges_area != f[1]) fail("edge count by area differs from the oracle");

    if (opt.with_eulerian) {
        if (!lattice.eulerian()) fail("a rank-2 interval does not have four elements");
        try {
            exact::cd_index(lattice);
        } catch (const domain_error&) {
            fail("cd rewrite left a nonzero remainder");
        }
    }

    if (opt.with_poset_iso) {
        FacePoset poset = face_poset(region);
        std::map<std::vector<BasisMask>, int> mine;
        for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
            auto key = detail::sorted_face_vertices(region, poset.nodes[i].bottom);
            if (!mine.emplace(key, poset.nodes[i].rank).second)
                fail("two poset nodes share a vertex set");
        }
        std::map<std::vector<BasisMask>, int> oracle;
        for (std::size_t i = 0; i < lattice.faces.size(); ++i) {
            std::vector<BasisMask> key;
            for (std::size_t v = lattice.faces[i].find_first(); v != exact::Bitset::npos;
                 v = lattice.faces[i].find_next(v))
                key.push_back(by_paths.bases[v]);
            std::sort(key.begin(), key.end());
            oracle.emplace(std::move(key), lattice.ranks[i]);
        }
        if (mine != oracle) fail("poset faces differ from oracle faces");
        // covering edges as unordered pairs of vertex sets
        std::set<std::pair<std::vector<BasisMask>, std::vector<BasisMask>>> my_edges, or_edges;
        for (const auto& [hi, lo] : poset.covers)
            my_edges.emplace(
                detail::sorted_face_vertices(region, poset.nodes[static_cast<std::size_t>(hi)].bottom),
                detail::sorted_face_vertices(region, poset.nodes[static_cast<std::size_t>(lo)].bottom));
        for (const auto& [hi, lo] : lattice.covers()) {
            auto key = [&](int idx) {
                std::vector<BasisMask> k;
                for (std::size_t v = lattice.faces[static_cast<std::size_t>(idx)].find_first();
                     v != exact::Bitset::npos;
                     v = lattice.faces[static_cast<std::size_t>(idx)].find_next(v))
                    k.push_back(by_paths.bases[v]);
                std::sort(k.begin(), k.end());
                return k;
            };
            or_edges.emplace(key(hi), key(lo));
        }
        if (my_edges != or_edges) fail("poset covering edges differ from oracle covers");
    }
    return bad;
}

struct VerifyReport {
    long long regions = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Exhaustive suite over all connected regions up to the step bound; oracle
// checks are capped independently so large bounds stay affordable.
inline VerifyReport verify_connected_regions(int max_steps, int oracle_steps = 8,
                                             int poset_steps = 6, int eulerian_steps = 6) {
    VerifyReport report;
    for (const SkewRegion& region : connected_regions_up_to(max_steps)) {
        CheckOptions opt;
        opt.with_oracle = region.steps() <= oracle_steps;
        opt.with_poset_iso = region.steps() <= poset_steps;
        opt.with_eulerian = region.steps() <= eulerian_steps;
        ++report.regions;
        for (std::string& f : check_region(region, opt))
            report.failures.push_back(std::move(f));
    }
    return report;
}

} // namespace lpm
