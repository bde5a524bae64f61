#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "skew_region.hpp"

namespace lpm {

// Bases are subsets of {1, ..., n} stored as bitmasks (bit i-1 = element i).
using BasisMask = std::uint32_t;

constexpr long long default_basis_cap = 1000000;

inline std::vector<int> mask_to_list(BasisMask mask) {
    std::vector<int> out;
    for (int e = 1; mask != 0; ++e, mask >>= 1)
        if (mask & 1u) out.push_back(e);
    return out;
}

inline BasisMask list_to_mask(const std::vector<int>& elements) {
    BasisMask m = 0;
    for (int e : elements) m |= BasisMask{1} << (e - 1);
    return m;
}

// Lexicographic order on the sorted element lists, e.g. {1,2,4} < {1,3}.
inline bool basis_lex_less(BasisMask a, BasisMask b) {
    if (a == b) return false;
    BasisMask diff = a ^ b;
    BasisMask low = diff & (~diff + 1u);
    return (a & low) != 0;
}

// A matroid given by its list of bases over ground elements 1..n. The
// presentation intervals and the defining region are kept when the matroid
// was built from a pair of bounding paths.
struct LatticeMatroid {
    int n = 0;    // ambient label range: elements are in 1..n
    int rank = 0; // common basis size
    std::vector<int> ground;          // live elements (deleted ones removed)
    std::vector<BasisMask> bases;     // sorted with basis_lex_less
    std::vector<std::pair<int, int>> presentation; // intervals [l_i, u_i], one per rank
    std::optional<SkewRegion> region; // set iff bases were derived from a region
};

// Interval system of the region: the i-th interval runs from the position of
// the i-th N step of the upper path to that of the lower path.
inline std::vector<std::pair<int, int>> presentation(const SkewRegion& region) {
    std::vector<int> lo, hi;
    for (int t = 1; t <= region.steps(); ++t) {
        if (region.upper.step(t) == 'N') lo.push_back(t);
        if (region.lower.step(t) == 'N') hi.push_back(t);
    }
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < lo.size(); ++i) out.emplace_back(lo[i], hi[i]);
    return out;
}

namespace detail {

inline long long count_paths_capped(const SkewRegion& region, long long cap) {
    // DP over prefixes; saturates just above the cap.
    int n = region.steps();
    std::vector<long long> cnt(static_cast<std::size_t>(region.north()) + 1, 0);
    cnt[0] = 1;
    for (int t = 1; t <= n; ++t) {
        std::vector<long long> next(cnt.size(), 0);
        for (int y = region.lower.norths(t); y <= region.upper.norths(t); ++y) {
            long long ways = 0;
            ways += cnt[static_cast<std::size_t>(y)]; // E step
            if (y > 0) ways += cnt[static_cast<std::size_t>(y - 1)];
            next[static_cast<std::size_t>(y)] = std::min(ways, cap + 1);
        }
        cnt.swap(next);
    }
    return cnt[static_cast<std::size_t>(region.north())];
}

} // namespace detail

// Bases as the N-step position sets of the monotone paths inside the region.
inline LatticeMatroid bases_by_paths(const SkewRegion& region, long long cap = default_basis_cap) {
    if (region.steps() > 31) throw resource_error("ground set larger than 31 is unsupported");
    if (detail::count_paths_capped(region, cap) > cap)
        throw resource_error("basis enumeration exceeds cap of " + std::to_string(cap));
    LatticeMatroid m;
    m.n = region.steps();
    m.rank = region.north();
    m.ground.resize(static_cast<std::size_t>(m.n));
    std::iota(m.ground.begin(), m.ground.end(), 1);
    for (const LatticePath& p : all_paths(region)) {
        BasisMask mask = 0;
        for (int i = 1; i <= p.length(); ++i)
            if (p.step(i) == 'N') mask |= BasisMask{1} << (i - 1);
        m.bases.push_back(mask);
    }
    std::sort(m.bases.begin(), m.bases.end(), basis_lex_less);
    m.presentation = presentation(region);
    m.region = region;
    return m;
}

// Bases as the transversals of the presentation intervals, recognized by
// augmenting-path matchings. Independent of the path walk above.
inline LatticeMatroid bases_by_transversals(const SkewRegion& region,
                                            long long cap = default_basis_cap) {
    if (region.steps() > 31) throw resource_error("ground set larger than 31 is unsupported");
    auto intervals = presentation(region);
    int n = region.steps();
    int r = region.north();

    std::vector<int> match_of_interval(intervals.size(), 0); // element matched, 0 = free
    std::vector<int> chosen;

    auto covers = [&](std::size_t i, int e) {
        return intervals[i].first <= e && e <= intervals[i].second;
    };
    // Tries to give element e an interval, displacing earlier matches.
    std::function<bool(int, std::vector<char>&)> augment = [&](int e, std::vector<char>& used) {
        for (std::size_t i = 0; i < intervals.size(); ++i) {
            if (used[i] || !covers(i, e)) continue;
            used[i] = 1;
            if (match_of_interval[i] == 0 || augment(match_of_interval[i], used)) {
                match_of_interval[i] = e;
                return true;
            }
        }
        return false;
    };

    LatticeMatroid m;
    m.n = n;
    m.rank = r;
    m.ground.resize(static_cast<std::size_t>(n));
    std::iota(m.ground.begin(), m.ground.end(), 1);

    long long produced = 0;
    std::function<void(int)> extend = [&](int from) {
        if (static_cast<int>(chosen.size()) == r) {
            if (++produced > cap)
                throw resource_error("basis enumeration exceeds cap of " + std::to_string(cap));
            m.bases.push_back(list_to_mask(chosen));
            return;
        }
        int needed = r - static_cast<int>(chosen.size());
        for (int e = from; e + needed - 1 <= n; ++e) {
            auto saved = match_of_interval;
            std::vector<char> used(intervals.size(), 0);
            if (augment(e, used)) {
                chosen.push_back(e);
                extend(e + 1);
                chosen.pop_back();
            }
            match_of_interval = saved;
        }
    };
    extend(1);
    std::sort(m.bases.begin(), m.bases.end(), basis_lex_less);
    m.presentation = intervals;
    m.region = region;
    return m;
}

namespace detail {

inline void require_element(const LatticeMatroid& m, int i) {
    if (std::find(m.ground.begin(), m.ground.end(), i) == m.ground.end())
        throw domain_error("element " + std::to_string(i) + " is not in the ground set");
}

} // namespace detail

// Bases avoiding element i. The element leaves the ground set; deleting a
// coloop would empty the basis list and is rejected.
inline LatticeMatroid delete_element(const LatticeMatroid& m, int i) {
    detail::require_element(m, i);
    LatticeMatroid out;
    out.n = m.n;
    out.rank = m.rank;
    BasisMask bit = BasisMask{1} << (i - 1);
    for (BasisMask b : m.bases)
        if (!(b & bit)) out.bases.push_back(b);
    if (out.bases.empty())
        throw domain_error("element " + std::to_string(i) + " is a coloop; deletion empties the matroid");
    for (int e : m.ground)
        if (e != i) out.ground.push_back(e);
    return out;
}

// Bases through element i. The element stays in the ground set as a coloop;
// contracting a loop would empty the basis list and is rejected.
inline LatticeMatroid contract_element(const LatticeMatroid& m, int i) {
    detail::require_element(m, i);
    LatticeMatroid out;
    out.n = m.n;
    out.rank = m.rank;
    BasisMask bit = BasisMask{1} << (i - 1);
    for (BasisMask b : m.bases)
        if (b & bit) out.bases.push_back(b);
    if (out.bases.empty())
        throw domain_error("element " + std::to_string(i) + " is a loop; contraction empties the matroid");
    out.ground = m.ground;
    return out;
}

// Bases meeting {1, ..., p+q} in exactly q elements. The corner must be an
// outside corner of the defining region.
inline LatticeMatroid direct_sum_at(const LatticeMatroid& m, const OutsideCorner& corner) {
    if (!m.region) throw domain_error("direct_sum_at requires a region-presented matroid");
    auto corners = outside_corners(*m.region);
    if (std::find(corners.begin(), corners.end(), corner) == corners.end())
        throw domain_error("(" + std::to_string(corner.x) + "," + std::to_string(corner.y) +
                           ") is not an outside corner of the region");
    LatticeMatroid out;
    out.n = m.n;
    out.rank = m.rank;
    out.ground = m.ground;
    int s = corner.sum();
    BasisMask low = (s >= 31) ? ~BasisMask{0} : ((BasisMask{1} << s) - 1);
    for (BasisMask b : m.bases)
        if (__builtin_popcount(b & low) == corner.y) out.bases.push_back(b);
    if (out.bases.empty()) throw domain_error("direct sum produced no bases");
    return out;
}

// Partition of the live ground elements into connected components: elements
// are joined whenever some single-element exchange swaps them.
inline std::vector<std::vector<int>> connected_components(const LatticeMatroid& m) {
    std::vector<int> parent(static_cast<std::size_t>(m.n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    };
    auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
    for (std::size_t i = 0; i < m.bases.size(); ++i)
        for (std::size_t j = i + 1; j < m.bases.size(); ++j) {
            BasisMask diff = m.bases[i] ^ m.bases[j];
            if (__builtin_popcount(diff) == 2) {
                auto pair = mask_to_list(diff);
                unite(pair[0], pair[1]);
            }
        }
    std::vector<std::vector<int>> comps;
    std::vector<int> root_index(static_cast<std::size_t>(m.n) + 1, -1);
    for (int e : m.ground) {
        int r = find(e);
        if (root_index[static_cast<std::size_t>(r)] < 0) {
            root_index[static_cast<std::size_t>(r)] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[static_cast<std::size_t>(root_index[static_cast<std::size_t>(r)])].push_back(e);
    }
    return comps;
}

// Dimension of the base polytope: one less than the number of steps minus the
// number of extra shared points, i.e. m + r - k + 1.
inline int polytope_dimension(const SkewRegion& region) {
    return region.steps() - region.k() + 1;
}

// Exhaustive exchange-axiom check, meant for small basis lists in tests.
inline bool satisfies_exchange(const LatticeMatroid& m) {
    for (BasisMask a : m.bases)
        for (BasisMask b : m.bases) {
            BasisMask only_a = a & ~b;
            BasisMask rest = only_a;
            while (rest) {
                BasisMask xbit = rest & (~rest + 1u);
                rest ^= xbit;
                BasisMask cand = b & ~a;
                bool ok = false;
                while (cand && !ok) {
                    BasisMask ybit = cand & (~cand + 1u);
                    cand ^= ybit;
                    BasisMask swapped = (a ^ xbit) | ybit;
                    ok = std::binary_search(m.bases.begin(), m.bases.end(), swapped, basis_lex_less);
                }
                if (!ok && only_a) return false;
            }
        }
    return true;
}

} // namespace lpm
