#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "../errors.hpp"

namespace lpm::exact {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntRow = std::vector<Int>;
using IntMatrix = std::vector<IntRow>;
using RatRow = std::vector<Rat>;
using RatMatrix = std::vector<RatRow>;

// Rank by exact Gaussian elimination; the input is consumed by value.
inline std::size_t rational_rank(RatMatrix m) {
    std::size_t rank = 0;
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            Rat f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

inline RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.size());
    for (std::size_t r = 0; r < m.size(); ++r) {
        out[r].reserve(m[r].size());
        for (const Int& v : m[r]) out[r].emplace_back(v);
    }
    return out;
}

// Dimension of the affine span of a point set; -1 for the empty set.
inline int affine_rank(const IntMatrix& points) {
    if (points.empty()) return -1;
    IntMatrix diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        IntRow row(points[i].size());
        for (std::size_t k = 0; k < row.size(); ++k) row[k] = points[i][k] - points[0][k];
        diffs.push_back(std::move(row));
    }
    return static_cast<int>(rational_rank(to_rational(diffs)));
}

// Greedy choice of coordinate columns whose restriction keeps the affine
// span full-dimensional; projecting to them preserves the face structure.
inline std::vector<std::size_t> spanning_columns(const IntMatrix& points) {
    if (points.empty()) return {};
    std::size_t cols = points[0].size();
    int target = affine_rank(points);
    std::vector<std::size_t> chosen;
    RatMatrix sub(points.size() > 0 ? points.size() - 1 : 0);
    for (std::size_t c = 0; c < cols && static_cast<int>(chosen.size()) < target; ++c) {
        for (std::size_t i = 1; i < points.size(); ++i)
            sub[i - 1].emplace_back(points[i][c] - points[0][c]);
        if (rational_rank(sub) == chosen.size() + 1) {
            chosen.push_back(c);
        } else {
            for (auto& row : sub) row.pop_back();
        }
    }
    if (static_cast<int>(chosen.size()) != target)
        throw domain_error("failed to find a spanning coordinate subset");
    return chosen;
}

// Unique solution of A x = b over the rationals; throws when the system is
// inconsistent or underdetermined.
inline RatRow solve_unique(RatMatrix a, RatRow b) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        std::swap(b[pivot], b[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            Rat f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
            b[r] -= f * b[rank];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (b[r] != 0) throw domain_error("linear system is inconsistent");
    if (rank != cols) throw domain_error("linear system is underdetermined");
    RatRow x(cols);
    for (std::size_t i = 0; i < rank; ++i) x[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
    return x;
}

} // namespace lpm::exact
