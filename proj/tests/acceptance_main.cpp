// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Wall-clock budgets are pinned next to each criterion that carries one.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "lpm/facet_ops.hpp"
#include "lpm/json_io.hpp"
#include "lpm/matroid.hpp"
#include "lpm/rank2.hpp"
#include "lpm/tilings.hpp"
#include "lpm/verify.hpp"

using namespace lpm;

namespace {

struct OracleEntry {
    exact::FaceLattice lattice;
    exact::IntMatrix points;
};

// Lattices built while checking the counting criteria, kept for the
// edge-direction sweep afterwards.
std::map<std::string, OracleEntry> oracle_cache;

std::string region_key(const SkewRegion& region) {
    return region.lower.word() + "|" + region.upper.word();
}

const OracleEntry& oracle_of(const SkewRegion& region) {
    std::string key = region_key(region);
    auto it = oracle_cache.find(key);
    if (it != oracle_cache.end()) return it->second;
    LatticeMatroid m = bases_by_paths(region);
    OracleEntry entry{oracle_lattice(m), vertex_matrix(m)};
    return oracle_cache.emplace(key, std::move(entry)).first->second;
}

std::vector<BasisMask> sorted_masks(std::initializer_list<std::initializer_list<int>> sets) {
    std::vector<BasisMask> out;
    for (auto s : sets) out.push_back(list_to_mask(s));
    std::sort(out.begin(), out.end(), basis_lex_less);
    return out;
}

// All nested path pairs with the given step count, disconnected ones included.
std::vector<SkewRegion> all_regions_with_steps(int steps) {
    std::vector<std::string> words;
    std::function<void(std::string&)> gen = [&](std::string& w) {
        if (static_cast<int>(w.size()) == steps) {
            words.push_back(w);
            return;
        }
        for (char c : {'E', 'N'}) {
            w.push_back(c);
            gen(w);
            w.pop_back();
        }
    };
    std::string w;
    gen(w);

    std::vector<SkewRegion> out;
    for (const std::string& lo : words)
        for (const std::string& hi : words) {
            LatticePath p(lo), q(hi);
            if (p.endpoint() != q.endpoint()) continue;
            bool nested = true;
            for (int t = 1; t < steps && nested; ++t)
                if (p.norths(t) > q.norths(t)) nested = false;
            if (nested) out.push_back(SkewRegion{p, q});
        }
    return out;
}

std::string cd_to_string(const exact::CdPolynomial& poly) {
    return cd_polynomial_json(poly).dump();
}

bool check1(std::string& detail) {
    SkewRegion region = make_region(LatticePath("EENNN"), LatticePath("NNENE"));
    LatticeMatroid m = bases_by_paths(region);
    if (m.bases != sorted_masks({{1, 2, 4},
                                 {1, 2, 5},
                                 {1, 3, 4},
                                 {1, 3, 5},
                                 {1, 4, 5},
                                 {2, 3, 4},
                                 {2, 3, 5},
                                 {2, 4, 5},
                                 {3, 4, 5}})) {
        detail = "base list of the running example is wrong";
        return false;
    }
    if (delete_element(m, 2).bases != sorted_masks({{1, 3, 4}, {1, 3, 5}, {1, 4, 5}, {3, 4, 5}})) {
        detail = "bases after deleting element 2 are wrong";
        return false;
    }
    if (contract_element(m, 4).bases !=
        sorted_masks({{1, 2, 4}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 4, 5}, {3, 4, 5}})) {
        detail = "bases after contracting element 4 are wrong";
        return false;
    }
    OutsideCorner corner{1, 2, OutsideCorner::Side::upper};
    if (direct_sum_at(m, corner).bases !=
        sorted_masks({{1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}, {2, 3, 4}, {2, 3, 5}})) {
        detail = "bases of the direct sum at (1,2) are wrong";
        return false;
    }
    return true;
}

bool check2(std::string& detail) {
    long long strips = 0;
    for (int n = 2; n <= 9; ++n)
        for (const SkewRegion& region : border_strips_with_steps(n)) {
            ++strips;
            auto ops = facet_operations(region);
            int d = segment_decomposition(region).d();
            if (static_cast<int>(ops.size()) != n + d) {
                detail = region_key(region) + ": operation count is not steps plus corners";
                return false;
            }
            const OracleEntry& oracle = oracle_of(region);
            auto f = oracle.lattice.f_vector();
            long long facets = oracle.lattice.dim >= 1
                                   ? f[static_cast<std::size_t>(oracle.lattice.dim) - 1]
                                   : 0;
            if (facets != static_cast<long long>(ops.size())) {
                detail = region_key(region) + ": oracle facet count disagrees";
                return false;
            }
        }
    detail = std::to_string(strips) + " strips";
    return true;
}

bool check3(std::string& detail) {
    long long checked = 0;
    for (int n = 2; n <= 8; ++n)
        for (const SkewRegion& region : border_strips_with_steps(n)) {
            auto f = oracle_of(region).lattice.f_vector();
            for (int t = 0; t <= n - 1; ++t) {
                ++checked;
                long long subsets =
                    static_cast<long long>(enumerate_face_subsets(region, t).size());
                if (subsets != f[static_cast<std::size_t>(n - 1 - t)]) {
                    std::ostringstream os;
                    os << region_key(region) << ": t=" << t << " counts " << subsets
                       << " subsets but the oracle has " << f[static_cast<std::size_t>(n - 1 - t)]
                       << " faces";
                    detail = os.str();
                    return false;
                }
            }
        }
    detail = std::to_string(checked) + " levels";
    return true;
}

bool check4(std::string& detail) {
    LatticePath r("EENNENEEENENNNN");
    SkewRegion region = make_region(r, strip_above(r).upper);
    SegmentDecomposition dec = segment_decomposition(region);
    if (dec.d() != 7) {
        detail = "strip does not decompose into eight segments";
        return false;
    }
    std::vector<FacetOperation> first = {FacetOperation::con(3), FacetOperation::con(4), dec.ds[1],
                                         FacetOperation::del(5)};
    std::vector<FacetOperation> second = {dec.ds[0], FacetOperation::con(3),
                                          FacetOperation::con(4)};
    std::vector<FacetOperation> third = {dec.ds[0], FacetOperation::con(3), FacetOperation::con(4),
                                         FacetOperation::del(5)};
    if (check_conditions(first, dec)) {
        detail = "a segment together with its right direct sum was accepted";
        return false;
    }
    if (check_conditions(second, dec)) {
        detail = "an odd anchored chain was accepted";
        return false;
    }
    if (!check_conditions(third, dec)) {
        detail = "an even anchored chain was rejected";
        return false;
    }
    return true;
}

bool check5(std::string& detail) {
    std::vector<SkewRegion> regions = connected_regions_up_to(8);
    regions.push_back(make_region(LatticePath(expand_word("E^3N^3EN^2")),
                                  LatticePath(expand_word("N^3ENE^2NE"))));
    for (const SkewRegion& region : regions) {
        int dim = polytope_dimension(region);
        std::vector<long long> by_blocks(static_cast<std::size_t>(dim) + 1, 0);
        for (const TiledBand& b : enumerate_bottoms_all(region)) {
            if (b.block_count() > dim) {
                detail = region_key(region) + ": a bottom exceeds the dimension";
                return false;
            }
            ++by_blocks[static_cast<std::size_t>(b.block_count())];
        }
        auto f = oracle_of(region).lattice.f_vector();
        if (static_cast<int>(f.size()) != dim + 1) {
            detail = region_key(region) + ": oracle dimension disagrees";
            return false;
        }
        for (int i = 0; i <= dim; ++i)
            if (by_blocks[static_cast<std::size_t>(i)] != f[static_cast<std::size_t>(i)]) {
                std::ostringstream os;
                os << region_key(region) << ": " << by_blocks[static_cast<std::size_t>(i)]
                   << " bottoms with " << i << " blocks but " << f[static_cast<std::size_t>(i)]
                   << " faces";
                detail = os.str();
                return false;
            }
    }
    detail = std::to_string(regions.size()) + " regions";
    return true;
}

bool check6(std::string& detail) {
    for (const SkewRegion& region : connected_regions_up_to(8)) {
        int dim = polytope_dimension(region);
        long long area = edge_count_by_area(region);
        // a point has no edges and admits no one-block tiling at all
        long long blocks =
            dim >= 1 ? static_cast<long long>(enumerate_bottoms(region, 1).size()) : 0;
        auto f = oracle_of(region).lattice.f_vector();
        long long oracle = dim >= 1 ? f[1] : 0;
        if (area != oracle || area != blocks) {
            std::ostringstream os;
            os << region_key(region) << ": area " << area << ", bottoms " << blocks
               << ", oracle " << oracle;
            detail = os.str();
            return false;
        }
    }
    return true;
}

bool check7(std::string& detail) {
    long long regions = 0;
    for (const SkewRegion& region : connected_regions_up_to(8)) {
        std::string staircase = std::string(static_cast<std::size_t>(region.east()), 'E') +
                                std::string(static_cast<std::size_t>(region.north()), 'N');
        if (region.lower.word() != staircase) continue;
        ++regions;
        long long below = 0;
        for (const LatticePath& l : all_paths(region)) {
            if (!(l_prime(region.lower, l) == region.lower)) {
                detail = region_key(region) + ": a straightened companion is not the lower path";
                return false;
            }
            below += area_between(region.lower, l);
        }
        int dim = polytope_dimension(region);
        auto f = oracle_of(region).lattice.f_vector();
        long long oracle = dim >= 1 ? f[1] : 0;
        if (below != oracle || below != edge_count_by_area(region)) {
            detail = region_key(region) + ": the area-below sum disagrees";
            return false;
        }
    }
    detail = std::to_string(regions) + " staircase regions";
    return true;
}

bool check8(std::string& detail) {
    long long regions = 0;
    for (int n = 1; n <= 9; ++n)
        for (const SkewRegion& region : all_regions_with_steps(n)) {
            ++regions;
            int formula = polytope_dimension(region);
            if (formula != n - region.k() + 1) {
                detail = region_key(region) + ": dimension formula is inconsistent";
                return false;
            }
            LatticeMatroid m = bases_by_paths(region);
            int affine = exact::affine_rank(vertex_matrix(m));
            int components = static_cast<int>(connected_components(m).size());
            if (formula != affine || formula != n - components) {
                std::ostringstream os;
                os << region_key(region) << ": formula " << formula << ", affine " << affine
                   << ", components " << components;
                detail = os.str();
                return false;
            }
        }
    detail = std::to_string(regions) + " regions";
    return true;
}

bool check9(std::string& detail) {
    for (const auto& [key, entry] : oracle_cache)
        if (!exact::check_edge_directions(entry.lattice, entry.points)) {
            detail = key + ": an edge is not an exchange direction";
            return false;
        }
    detail = std::to_string(oracle_cache.size()) + " lattices";
    return true;
}

bool check10(std::string& detail) {
    using exact::CdPolynomial;
    auto cd_of = [](const SkewRegion& region) {
        return exact::cd_index(oracle_lattice(bases_by_paths(region)));
    };
    if (cd_of(make_region(LatticePath("EN"), LatticePath("NE"))) != CdPolynomial::word("c")) {
        detail = "segment index is not c";
        return false;
    }
    if (cd_of(make_region(LatticePath("ENN"), LatticePath("NNE"))) !=
        CdPolynomial::word("cc") + CdPolynomial::word("d")) {
        detail = "triangle index is not cc + d";
        return false;
    }
    if (cd_of(make_region(LatticePath("ENEN"), LatticePath("NENE"))) !=
        CdPolynomial::word("cc") + CdPolynomial::word("d", 2)) {
        detail = "square index is not cc + 2d";
        return false;
    }
    long long lattices = 3;
    for (const auto& [key, entry] : oracle_cache) {
        ++lattices;
        try {
            exact::cd_index(entry.lattice);
        } catch (const std::exception& e) {
            detail = key + ": " + e.what();
            return false;
        }
    }
    detail = std::to_string(lattices) + " lattices rewrite to cd form";
    return true;
}

bool check11(std::string& detail) {
    long long triples = 0, bad = 0;
    std::ostringstream first;
    std::string bad_list;
    for (int a = 0; a <= 5; ++a)
        for (int b = 1; a + b <= 5; ++b)
            for (int g = 0; a + b + g <= 5; ++g) {
                ++triples;
                exact::CdPolynomial lhs = rank2_cd_lhs(a, b, g);
                exact::CdPolynomial rhs = rank2_cd_rhs(a, b, g);
                if (lhs != rhs) {
                    ++bad;
                    std::ostringstream t;
                    t << "(" << a << "," << b << "," << g << ")";
                    if (!bad_list.empty()) bad_list += " ";
                    bad_list += t.str();
                    if (bad == 1)
                        first << t.str() << " direct " << cd_to_string(lhs) << " vs closed form "
                              << cd_to_string(rhs);
                }
            }
    if (bad > 0) {
        std::ostringstream os;
        os << bad << " of " << triples << " triples disagree: " << bad_list
           << "; first mismatch " << first.str();
        detail = os.str();
        return false;
    }
    detail = std::to_string(triples) + " parameter triples";
    return true;
}

} // namespace

int main() {
    struct Criterion {
        int number;
        const char* label;
        double budget_seconds; // 0 = no pinned budget
        bool (*body)(std::string&);
    };
    const Criterion criteria[] = {
        {1, "published base and minor lists", 1.0, check1},
        {2, "strip facet counts against the oracle", 120.0, check2},
        {3, "strip subset counts against the oracle", 600.0, check3},
        {4, "subset condition verdicts on the fifteen-step strip", 0.0, check4},
        {5, "tiled bottom counts against the oracle", 1800.0, check5},
        {6, "edge counts three ways", 0.0, check6},
        {7, "staircase reduction of the edge formula", 0.0, check7},
        {8, "dimension formula, affine rank and components", 0.0, check8},
        {9, "edge directions on every cached lattice", 0.0, check9},
        {10, "cd-index pipeline and rewrite remainders", 0.0, check10},
        {11, "rank-2 cd-index identity", 300.0, check11},
    };

    bool all_pass = true;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok;
        try {
            ok = c.body(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && c.budget_seconds > 0 && seconds > c.budget_seconds) {
            ok = false;
            detail += detail.empty() ? "" : "; ";
            detail += "over the pinned budget";
        }
        std::printf("%s criterion %d: %s%s%s%s (%.2fs)\n", ok ? "PASS" : "FAIL", c.number,
                    c.label, detail.empty() ? "" : " [", detail.c_str(),
                    detail.empty() ? "" : "]", seconds);
        std::fflush(stdout);
        if (!ok) all_pass = false;
    }
    return all_pass ? 0 : 1;
}
