#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "matroid.hpp"
#include "skew_region.hpp"

namespace lpm {

// One facet of the base polytope, named by the matroid operation carving it:
// restriction to bases avoiding element i (deletion), containing element i
// (contraction), or meeting {1..p+q} in exactly q elements (direct sum at an
// outside corner (p,q)).
struct FacetOperation {
    enum class Kind { deletion, contraction, direct_sum };
    Kind kind = Kind::deletion;
    int index = 0;          // element for deletion/contraction, x+y for direct sums
    OutsideCorner corner{}; // meaningful for direct sums only

    static FacetOperation del(int i) { return {Kind::deletion, i, {}}; }
    static FacetOperation con(int i) { return {Kind::contraction, i, {}}; }
    static FacetOperation sum(const OutsideCorner& c) {
        return {Kind::direct_sum, c.sum(), c};
    }

    friend bool operator==(const FacetOperation& a, const FacetOperation& b) {
        if (a.kind != b.kind) return false;
        if (a.kind == Kind::direct_sum) return a.corner == b.corner;
        return a.index == b.index;
    }
    friend bool operator<(const FacetOperation& a, const FacetOperation& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.kind == Kind::direct_sum) return a.corner < b.corner;
        return a.index < b.index;
    }
};

// Monotone paths that leave room for one more row: lower <= path and
// path <= upper - 1 on every interior prefix. Each such path is the lower
// bound of a one-box-wide band spanning the region from corner to corner.
inline std::vector<LatticePath> spanning_strip_lowers(const SkewRegion& region) {
    std::vector<LatticePath> out;
    int n = region.steps();
    std::string w;
    std::function<void(int, int)> walk = [&](int t, int y) {
        if (t == n) {
            if (y == region.north()) out.emplace_back(w);
            return;
        }
        // interior prefixes must stay strictly below the upper path
        int hi = (t + 1 == n) ? region.upper.norths(n) : region.upper.norths(t + 1) - 1;
        if (y >= region.lower.norths(t + 1) && y <= hi) {
            w.push_back('E');
            walk(t + 1, y);
            w.pop_back();
        }
        if (y + 1 >= region.lower.norths(t + 1) && y + 1 <= hi) {
            w.push_back('N');
            walk(t + 1, y + 1);
            w.pop_back();
        }
    };
    walk(0, 0);
    return out;
}

// The border strip sitting directly on a spanning lower bound.
inline SkewRegion strip_above(const LatticePath& lower) {
    int n = lower.length();
    std::string w;
    int prev = 0;
    for (int t = 1; t <= n; ++t) {
        int h = (t == n) ? lower.north_total() : lower.norths(t) + 1;
        w.append(static_cast<std::size_t>(h - prev), 'N');
        if (static_cast<int>(w.size()) < t) w.push_back('E');
        prev = h;
    }
    return make_region(lower, LatticePath(w));
}

// Facets of the base polytope of a connected region: deletions and
// contractions witnessed by some spanning border strip, plus one direct sum
// per outside corner. Sorted deletions, then contractions, then corners.
inline std::vector<FacetOperation> facet_operations(const SkewRegion& region) {
    if (!region.connected())
        throw domain_error("facet_operations requires a connected region");
    std::vector<FacetOperation> out;
    if (region.steps() < 2) return out; // the polytope is a point
    std::set<int> dels, cons;
    for (const LatticePath& lower : spanning_strip_lowers(region)) {
        LatticePath r = strip_path(strip_above(lower));
        for (int i = 1; i <= r.length(); ++i)
            (r.step(i) == 'E' ? dels : cons).insert(i);
    }
    for (int i : dels) out.push_back(FacetOperation::del(i));
    for (int i : cons) out.push_back(FacetOperation::con(i));
    for (const OutsideCorner& c : outside_corners(region)) out.push_back(FacetOperation::sum(c));
    return out;
}

// The derived path of a border strip cut at its direct sum positions.
// Segment j holds the deletion/contraction operations of the j-th maximal
// run of equal steps; ds[j] is the direct sum sitting between runs j and j+1.
struct SegmentDecomposition {
    LatticePath derived;                            // R
    std::vector<std::vector<FacetOperation>> segments; // S_1 .. S_{d+1}
    std::vector<FacetOperation> ds;                 // d direct sums, in order
    int d() const { return static_cast<int>(ds.size()); }

    // S_i plus the direct sum on the requested side; S_1^L = S_1 and
    // S_{d+1}^R = S_{d+1} have nothing to attach.
    std::vector<FacetOperation> left_closure(int i) const {
        auto s = segments[static_cast<std::size_t>(i - 1)];
        if (i > 1) s.insert(s.begin(), ds[static_cast<std::size_t>(i - 2)]);
        return s;
    }
    std::vector<FacetOperation> right_closure(int i) const {
        auto s = segments[static_cast<std::size_t>(i - 1)];
        if (i <= d()) s.push_back(ds[static_cast<std::size_t>(i - 1)]);
        return s;
    }
};

// Cuts the derived path of a border strip into segments. The strip's outside
// corners land between consecutive runs, in order: the j-th corner closes the
// j-th run, which is checked and not assumed.
inline SegmentDecomposition segment_decomposition(const SkewRegion& region) {
    if (!is_border_strip(region))
        throw domain_error("segment_decomposition requires a border strip");
    SegmentDecomposition dec;
    dec.derived = strip_path(region);
    const LatticePath& r = dec.derived;
    auto corners = outside_corners(region);

    dec.segments.emplace_back();
    std::size_t corner_at = 0;
    for (int i = 1; i <= r.length(); ++i) {
        if (i > 1 && r.step(i) != r.step(i - 1)) {
            if (corner_at >= corners.size())
                throw domain_error("derived path has more runs than corners allow");
            if (corners[corner_at].sum() != i - 1)
                throw domain_error("corner order does not match derived path runs");
            dec.ds.push_back(FacetOperation::sum(corners[corner_at++]));
            dec.segments.emplace_back();
        }
        dec.segments.back().push_back(r.step(i) == 'E' ? FacetOperation::del(i)
                                                       : FacetOperation::con(i));
    }
    if (corner_at != corners.size())
        throw domain_error("derived path has fewer runs than corners");
    return dec;
}

namespace detail {

// Bit layout used by the subset calculus: positions 1..n of the derived path
// in one mask, direct sums 1..d in another.
struct SubsetMasks {
    std::uint32_t pos = 0;
    std::uint32_t ds = 0;
};

inline SubsetMasks subset_masks(const SegmentDecomposition& dec,
                                const std::vector<FacetOperation>& t) {
    SubsetMasks m;
    for (const FacetOperation& op : t) {
        if (op.kind == FacetOperation::Kind::direct_sum) {
            auto it = std::find(dec.ds.begin(), dec.ds.end(), op);
            if (it == dec.ds.end())
                throw domain_error("direct sum is not one of the strip's corners");
            m.ds |= 1u << (it - dec.ds.begin());
        } else {
            if (op.index < 1 || op.index > dec.derived.length())
                throw domain_error("operation index outside the derived path");
            char want = op.kind == FacetOperation::Kind::deletion ? 'E' : 'N';
            if (dec.derived.step(op.index) != want)
                throw domain_error("operation kind disagrees with the derived path letter");
            m.pos |= 1u << (op.index - 1);
        }
    }
    return m;
}

inline std::uint32_t segment_mask(const SegmentDecomposition& dec, int i) {
    std::uint32_t m = 0;
    for (const FacetOperation& op : dec.segments[static_cast<std::size_t>(i - 1)])
        m |= 1u << (op.index - 1);
    return m;
}

// Core of the subset conditions, on precomputed masks.
// seg[j] is the mask of segment j+1; trunc_last drops the final position.
inline bool masks_valid(const std::vector<std::uint32_t>& seg, std::uint32_t trunc_last,
                        int d, std::uint32_t pos, std::uint32_t ds) {
    // A segment together with its right direct sum can never be included
    // whole, and neither can the entire last segment.
    for (int j = 0; j < d; ++j)
        if ((pos & seg[static_cast<std::size_t>(j)]) == seg[static_cast<std::size_t>(j)] &&
            (ds >> j) & 1u)
            return false;
    if ((pos & seg[static_cast<std::size_t>(d)]) == seg[static_cast<std::size_t>(d)]) return false;

    // A chain of fully included segments anchored on its left direct sum
    // (or starting at the first segment) must have even length, unless it
    // runs into the truncated last segment.
    for (int i = 0; i < d; ++i) {
        std::uint32_t si = seg[static_cast<std::size_t>(i)];
        if ((pos & si) != si) continue;
        if (i > 0 && !((ds >> (i - 1)) & 1u)) continue;
        int j = i;
        while (j + 1 < d) {
            std::uint32_t next = seg[static_cast<std::size_t>(j + 1)];
            if ((pos & next) != next) break;
            ++j;
        }
        bool into_last = (j + 1 == d) && ((pos & trunc_last) == trunc_last);
        if (!into_last && (j - i + 1) % 2 != 0) return false;
    }
    return true;
}

} // namespace detail

// True when T can be a set of facet operations cutting out a nonempty face:
// no segment is included together with its right direct sum, the last
// segment is never whole, and every anchored chain of whole segments closes
// at even length unless it reaches the truncated last segment.
inline bool check_conditions(const std::vector<FacetOperation>& t,
                             const SegmentDecomposition& dec) {
    auto m = detail::subset_masks(dec, t);
    int d = dec.d();
    std::vector<std::uint32_t> seg;
    for (int i = 1; i <= d + 1; ++i) seg.push_back(detail::segment_mask(dec, i));
    std::uint32_t trunc_last = seg.back() & ~(1u << (dec.derived.length() - 1));
    return detail::masks_valid(seg, trunc_last, d, m.pos, m.ds);
}

// All t-subsets of the strip's facet operations that cut out a face; the
// count equals the number of (m+r-1-t)-dimensional faces. Enumeration walks
// the operations in facet order (positions, then direct sums) and filters
// with the mask test.
inline std::vector<std::vector<FacetOperation>> enumerate_face_subsets(const SkewRegion& region,
                                                                       int t) {
    if (!is_border_strip(region))
        throw domain_error("enumerate_face_subsets requires a border strip");
    if (t < 0 || t > region.steps() - 1)
        throw domain_error("subset size must lie between 0 and m+r-1");
    SegmentDecomposition dec = segment_decomposition(region);
    int n = dec.derived.length();
    int d = dec.d();

    std::vector<std::uint32_t> seg;
    for (int i = 1; i <= d + 1; ++i) seg.push_back(detail::segment_mask(dec, i));
    std::uint32_t trunc_last = seg.back() & ~(1u << (n - 1));

    // universe: position operations in index order, then direct sums
    std::vector<FacetOperation> universe;
    for (int i = 1; i <= n; ++i)
        universe.push_back(dec.derived.step(i) == 'E' ? FacetOperation::del(i)
                                                      : FacetOperation::con(i));
    for (const FacetOperation& s : dec.ds) universe.push_back(s);

    std::vector<std::vector<FacetOperation>> out;
    std::vector<int> chosen;
    std::function<void(int, std::uint32_t, std::uint32_t)> pick =
        [&](int slot, std::uint32_t pos, std::uint32_t ds) {
            if (static_cast<int>(chosen.size()) == t) {
                if (detail::masks_valid(seg, trunc_last, d, pos, ds)) {
                    std::vector<FacetOperation> sub;
                    for (int c : chosen) sub.push_back(universe[static_cast<std::size_t>(c)]);
                    out.push_back(std::move(sub));
                }
                return;
            }
            int remaining = t - static_cast<int>(chosen.size());
            for (int c = slot; c + remaining - 1 < n + d; ++c) {
                chosen.push_back(c);
                if (c < n)
                    pick(c + 1, pos | (1u << c), ds);
                else
                    pick(c + 1, pos, ds | (1u << (c - n)));
                chosen.pop_back();
            }
        };
    pick(0, 0, 0);
    return out;
}

// Applies one facet operation to a matroid built from a region.
inline LatticeMatroid apply_facet_operation(const LatticeMatroid& m, const FacetOperation& op) {
    switch (op.kind) {
        case FacetOperation::Kind::deletion: return delete_element(m, op.index);
        case FacetOperation::Kind::contraction: return contract_element(m, op.index);
        case FacetOperation::Kind::direct_sum: return direct_sum_at(m, op.corner);
    }
    throw domain_error("unknown facet operation");
}

// Bases on the face cut out by T: a basis survives a deletion by avoiding i,
// a contraction by containing i, and a direct sum at (p,q) by meeting the
// first p+q elements exactly q times.
inline std::vector<BasisMask> face_vertices_of_subset(const LatticeMatroid& m,
                                                      const std::vector<FacetOperation>& t) {
    std::vector<BasisMask> out;
    for (BasisMask b : m.bases) {
        bool keep = true;
        for (const FacetOperation& op : t) {
            BasisMask bit;
            switch (op.kind) {
                case FacetOperation::Kind::deletion:
                    bit = BasisMask{1} << (op.index - 1);
                    if (b & bit) keep = false;
                    break;
                case FacetOperation::Kind::contraction:
                    bit = BasisMask{1} << (op.index - 1);
                    if (!(b & bit)) keep = false;
                    break;
                case FacetOperation::Kind::direct_sum: {
                    int s = op.corner.sum();
                    BasisMask low = (BasisMask{1} << s) - 1;
                    if (__builtin_popcount(b & low) != op.corner.y) keep = false;
                    break;
                }
            }
            if (!keep) break;
        }
        if (keep) out.push_back(b);
    }
    return out;
}

} // namespace lpm
