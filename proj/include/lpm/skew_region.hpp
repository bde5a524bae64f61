#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "lattice_path.hpp"

namespace lpm {

// A unit box with lower-left corner (x, y). Boxes are labeled by the
// anti-diagonal x + y + 1, matching the step numbering of lattice paths.
struct Box {
    int x = 0;
    int y = 0;
    int diag() const { return x + y + 1; }
    friend bool operator==(const Box& a, const Box& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const Box& a, const Box& b) {
        return a.diag() != b.diag() ? a.diag() < b.diag() : a.y < b.y;
    }
};

// Convex corner of the region boundary: an N-then-E turn on the lower path or
// an E-then-N turn on the upper path.
struct OutsideCorner {
    enum class Side { lower, upper };
    int x = 0;
    int y = 0;
    Side side = Side::lower;
    int sum() const { return x + y; }
    friend bool operator==(const OutsideCorner& a, const OutsideCorner& b) {
        return a.x == b.x && a.y == b.y && a.side == b.side;
    }
    friend bool operator<(const OutsideCorner& a, const OutsideCorner& b) {
        if (a.sum() != b.sum()) return a.sum() < b.sum();
        if (a.x != b.x) return a.x < b.x;
        return a.side < b.side;
    }
};

// The set of boxes between two lattice paths with common endpoints, lower
// never above upper. The boxes on anti-diagonal t are exactly those with
// heights in [norths(lower, t), norths(upper, t) - 1].
class SkewRegion {
  public:
    LatticePath lower;
    LatticePath upper;

    int steps() const { return lower.length(); }          // m + r
    int east() const { return lower.east_total(); }       // m
    int north() const { return lower.north_total(); }     // r

    int gap(int prefix) const { return upper.norths(prefix) - lower.norths(prefix); }

    // Prefix indices where the two paths meet; always contains 0 and m+r.
    std::vector<int> intersection_prefixes() const {
        std::vector<int> out;
        for (int t = 0; t <= steps(); ++t)
            if (gap(t) == 0) out.push_back(t);
        return out;
    }

    // Number of shared points. The region is connected exactly when k == 2.
    int k() const {
        int c = 0;
        for (int t = 0; t <= steps(); ++t)
            if (gap(t) == 0) ++c;
        return c;
    }

    bool connected() const { return k() == 2; }

    bool contains_box(int x, int y) const {
        int t = x + y + 1;
        if (t < 1 || t > steps() - 1) return false;
        return lower.norths(t) <= y && y < upper.norths(t);
    }

    // All boxes, sorted by (diagonal, height).
    std::vector<Box> boxes() const {
        std::vector<Box> out;
        for (int t = 1; t <= steps() - 1; ++t)
            for (int y = lower.norths(t); y < upper.norths(t); ++y)
                out.push_back(Box{t - 1 - y, y});
        return out;
    }
};

// Validates and assembles a region. The paths must have equal length and
// endpoint (shape error) and lower must stay weakly below upper (order error).
inline SkewRegion make_region(const LatticePath& lower, const LatticePath& upper) {
    if (lower.length() != upper.length())
        throw shape_error("paths have different lengths");
    if (lower.endpoint() != upper.endpoint())
        throw shape_error("paths have different endpoints");
    for (int t = 0; t <= lower.length(); ++t)
        if (lower.norths(t) > upper.norths(t))
            throw order_error("lower path rises above upper path at prefix " + std::to_string(t));
    return SkewRegion{lower, upper};
}

// A border strip is a connected region with no 2x2 square of boxes;
// equivalently the path gap equals 1 on every interior prefix.
inline bool is_border_strip(const SkewRegion& region) {
    if (region.steps() < 2) return false;
    for (int t = 1; t <= region.steps() - 1; ++t)
        if (region.gap(t) != 1) return false;
    return true;
}

// Path derived from a border strip: interior steps copy the lower path, the
// first step repeats the second and the last repeats the second to last. The
// single-box strip yields "NN".
inline LatticePath strip_path(const SkewRegion& region) {
    if (!is_border_strip(region)) throw domain_error("strip_path requires a border strip");
    int n = region.steps();
    if (n == 2) return LatticePath("NN");
    std::string w(static_cast<std::size_t>(n), '?');
    for (int i = 2; i <= n - 1; ++i) w[static_cast<std::size_t>(i - 1)] = region.lower.step(i);
    w[0] = w[1];
    w[static_cast<std::size_t>(n - 1)] = w[static_cast<std::size_t>(n - 2)];
    return LatticePath(w);
}

// Convex boundary corners, sorted by coordinate sum then position.
inline std::vector<OutsideCorner> outside_corners(const SkewRegion& region) {
    std::vector<OutsideCorner> out;
    int n = region.steps();
    for (int i = 1; i <= n - 1; ++i) {
        if (region.lower.step(i) == 'N' && region.lower.step(i + 1) == 'E') {
            Point p = region.lower.at(i);
            out.push_back(OutsideCorner{p.x, p.y, OutsideCorner::Side::lower});
        }
        if (region.upper.step(i) == 'E' && region.upper.step(i + 1) == 'N') {
            Point p = region.upper.at(i);
            out.push_back(OutsideCorner{p.x, p.y, OutsideCorner::Side::upper});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Number of boxes between two nested paths.
inline long long area_between(const LatticePath& lower, const LatticePath& upper) {
    if (lower.length() != upper.length() || lower.endpoint() != upper.endpoint())
        throw shape_error("area_between requires equal-shape paths");
    long long area = 0;
    for (int t = 1; t <= lower.length(); ++t) {
        int d = upper.norths(t) - lower.norths(t);
        if (d < 0) throw order_error("area_between requires nested paths");
        area += d;
    }
    return area;
}

// Straightened companion of L against the base path: it agrees with L on every
// shared stretch and replaces each strictly-above excursion by easts-then-norths.
inline LatticePath l_prime(const LatticePath& base, const LatticePath& l) {
    if (base.length() != l.length() || base.endpoint() != l.endpoint())
        throw shape_error("l_prime requires equal-shape paths");
    std::string w;
    int prev = 0;
    for (int t = 1; t <= base.length(); ++t) {
        if (base.norths(t) < l.norths(t)) continue;
        if (base.norths(t) > l.norths(t)) throw order_error("l_prime requires base below the path");
        if (t == prev + 1) {
            w.push_back(l.step(t));
        } else {
            int dn = l.norths(t) - l.norths(prev);
            int de = (t - prev) - dn;
            w.append(static_cast<std::size_t>(de), 'E');
            w.append(static_cast<std::size_t>(dn), 'N');
        }
        prev = t;
    }
    return LatticePath(w);
}

// All monotone paths from (0,0) to (m,r) between the bounding paths, in
// lexicographic word order (E before N).
inline std::vector<LatticePath> all_paths(const SkewRegion& region) {
    std::vector<LatticePath> out;
    std::string w;
    int n = region.steps();
    std::function<void(int, int)> walk = [&](int t, int y) {
        if (t == n) {
            out.emplace_back(w);
            return;
        }
        if (y >= region.lower.norths(t + 1)) { // E step keeps y; lower bound must allow it
            w.push_back('E');
            walk(t + 1, y);
            w.pop_back();
        }
        if (y + 1 <= region.upper.norths(t + 1)) {
            w.push_back('N');
            walk(t + 1, y + 1);
            w.pop_back();
        }
    };
    walk(0, 0);
    return out;
}

} // namespace lpm
