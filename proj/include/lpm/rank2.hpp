#pragma once

#include <string>

#include "errors.hpp"
#include "exact/cd_index.hpp"
#include "matroid.hpp"
#include "verify.hpp"

namespace lpm {

// Rank-2 bounding pair: lower E^{a+b} N E^g N, upper N E^a N E^{b+g}.
inline SkewRegion rank2_region(int alpha, int beta, int gamma) {
    if (alpha < 0 || gamma < 0 || beta < 1)
        throw domain_error("rank-2 family needs alpha, gamma >= 0 and beta >= 1");
    std::string lower = std::string(static_cast<std::size_t>(alpha + beta), 'E') + "N" +
                        std::string(static_cast<std::size_t>(gamma), 'E') + "N";
    std::string upper = "N" + std::string(static_cast<std::size_t>(alpha), 'E') + "N" +
                        std::string(static_cast<std::size_t>(beta + gamma), 'E');
    return make_region(LatticePath(lower), LatticePath(upper));
}

// The i-th snake summand: a connected rank-2 region on m+2 steps.
inline SkewRegion rank2_component_region(int m, int i) {
    if (i < 1 || i > m) throw domain_error("component index out of range");
    std::string lower = std::string(static_cast<std::size_t>(i), 'E') + "N" +
                        std::string(static_cast<std::size_t>(m - i), 'E') + "N";
    std::string upper = "N" + std::string(static_cast<std::size_t>(i - 1), 'E') + "N" +
                        std::string(static_cast<std::size_t>(m - i + 1), 'E');
    return make_region(LatticePath(lower), LatticePath(upper));
}

inline exact::CdPolynomial cd_of_region(const SkewRegion& region) {
    return exact::cd_index(oracle_lattice(bases_by_paths(region)));
}

namespace detail {

inline exact::Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    exact::Int out = 1;
    for (int i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

} // namespace detail

// Right-hand side of the rank-2 cd-index identity: the snake summands,
// minus a prism correction times c, minus a binomial-weighted double sum of
// prism terms times d and a trailing simplex.
inline exact::CdPolynomial rank2_cd_rhs(int alpha, int beta, int gamma) {
    if (alpha < 0 || gamma < 0 || beta < 1)
        throw domain_error("rank-2 family needs alpha, gamma >= 0 and beta >= 1");
    int m = alpha + beta + gamma;

    exact::CdPolynomial rhs;
    for (int i = alpha + 1; i <= alpha + beta; ++i)
        rhs += cd_of_region(rank2_component_region(m, i));

    exact::CdPolynomial prism_sum;
    for (int i = alpha + 2; i <= alpha + beta; ++i)
        prism_sum += exact::cd_index(exact::simplex_product_lattice(i, m - i + 2));
    exact::CdPolynomial c = exact::CdPolynomial::word("c");
    rhs = rhs - prism_sum * c;

    exact::CdPolynomial d = exact::CdPolynomial::word("d");
    for (int i = 0; i <= alpha; ++i)
        for (int j = 0; j <= gamma; ++j) {
            if (i == 0 && j == 0) continue;
            exact::CdPolynomial inner;
            for (int k = 2; k <= beta - 2; ++k)
                inner += exact::cd_index(
                    exact::simplex_product_lattice(alpha - i + k, beta - j + gamma - k + 2));
            if (inner.empty()) continue;
            exact::Int weight = detail::binomial(alpha + 1, i) * detail::binomial(gamma + 1, j);
            exact::CdPolynomial tail =
                exact::cd_index(exact::simplex_lattice(i + j));
            rhs = rhs - (weight * (inner * d * tail));
        }
    return rhs;
}

inline exact::CdPolynomial rank2_cd_lhs(int alpha, int beta, int gamma) {
    return cd_of_region(rank2_region(alpha, beta, gamma));
}

} // namespace lpm
