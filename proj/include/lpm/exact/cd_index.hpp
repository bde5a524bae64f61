#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "../errors.hpp"
#include "face_lattice.hpp"
#include "linalg.hpp"

namespace lpm::exact {

// Polynomial in the noncommuting letters c and d with integer coefficients,
// keyed by word; c has degree one and d degree two.
struct CdPolynomial {
    std::map<std::string, Int> terms;

    CdPolynomial() = default;
    explicit CdPolynomial(std::map<std::string, Int> t) : terms(std::move(t)) {}
    static CdPolynomial word(const std::string& w, Int coefficient = 1) {
        CdPolynomial out;
        if (coefficient != 0) out.terms.emplace(w, std::move(coefficient));
        return out;
    }

    bool empty() const { return terms.empty(); }
    friend bool operator==(const CdPolynomial& a, const CdPolynomial& b) {
        return a.terms == b.terms;
    }
    friend bool operator!=(const CdPolynomial& a, const CdPolynomial& b) {
        return !(a == b);
    }

    CdPolynomial& operator+=(const CdPolynomial& o) {
        for (const auto& [w, coef] : o.terms) {
            Int& slot = terms[w];
            slot += coef;
            if (slot == 0) terms.erase(w);
        }
        return *this;
    }
    CdPolynomial& operator-=(const CdPolynomial& o) {
        for (const auto& [w, coef] : o.terms) {
            Int& slot = terms[w];
            slot -= coef;
            if (slot == 0) terms.erase(w);
        }
        return *this;
    }
    friend CdPolynomial operator+(CdPolynomial a, const CdPolynomial& b) {
        a += b;
        return a;
    }
    friend CdPolynomial operator-(CdPolynomial a, const CdPolynomial& b) {
        a -= b;
        return a;
    }
    friend CdPolynomial operator*(const CdPolynomial& a, const CdPolynomial& b) {
        CdPolynomial out;
        for (const auto& [wa, ca] : a.terms)
            for (const auto& [wb, cb] : b.terms) {
                Int& slot = out.terms[wa + wb];
                slot += ca * cb;
                if (slot == 0) out.terms.erase(wa + wb);
            }
        return out;
    }
    friend CdPolynomial operator*(const Int& s, const CdPolynomial& a) {
        CdPolynomial out;
        if (s == 0) return out;
        for (const auto& [w, coef] : a.terms) out.terms[w] = s * coef;
        return out;
    }
};

namespace detail {

// Words in c and d of the given degree, c counting one and d two.
inline std::vector<std::string> cd_words(int degree) {
    if (degree == 0) return {""};
    std::vector<std::string> out;
    for (const std::string& w : cd_words(degree - 1)) out.push_back(w + "c");
    if (degree >= 2)
        for (const std::string& w : cd_words(degree - 2)) out.push_back(w + "d");
    return out;
}

// Expansion of a cd word into ab words, each ab word encoded as a bitmask
// with b at the set positions; every expansion coefficient is one.
inline std::vector<std::uint32_t> ab_expansion(const std::string& word, int degree) {
    std::vector<std::uint32_t> masks{0};
    int pos = 0;
    for (char letter : word) {
        std::vector<std::uint32_t> next;
        if (letter == 'c') {
            for (std::uint32_t m : masks) {
                next.push_back(m);               // a
                next.push_back(m | (1u << pos)); // b
            }
            pos += 1;
        } else {
            for (std::uint32_t m : masks) {
                next.push_back(m | (1u << (pos + 1))); // ab
                next.push_back(m | (1u << pos));       // ba
            }
            pos += 2;
        }
        masks = std::move(next);
    }
    if (pos != degree) throw domain_error("cd word degree mismatch");
    return masks;
}

} // namespace detail

// The cd-index of a graded Eulerian face lattice, computed from the flag
// vector: flags to sparse h-numbers, then an exact change of basis into cd
// words. Throws when no cd expression exists (the lattice is not Eulerian)
// or when a coefficient is not an integer.
inline CdPolynomial cd_index(const FaceLattice& lattice) {
    int degree = lattice.dim;
    std::vector<long long> flags = lattice.flag_vector();
    std::size_t size = flags.size();

    // h numbers by inclusion-exclusion over subsets
    std::vector<Int> h(size);
    for (std::uint32_t s = 0; s < size; ++s) {
        Int total = 0;
        std::uint32_t t = s;
        while (true) {
            if (__builtin_popcount(s ^ t) & 1)
                total -= flags[t];
            else
                total += flags[t];
            if (t == 0) break;
            t = (t - 1) & s;
        }
        h[s] = total;
    }

    std::vector<std::string> words = detail::cd_words(degree);
    RatMatrix a(size, RatRow(words.size()));
    RatRow b(size);
    for (std::size_t w = 0; w < words.size(); ++w)
        for (std::uint32_t mask : detail::ab_expansion(words[w], degree)) a[mask][w] += 1;
    for (std::uint32_t s = 0; s < size; ++s) b[s] = Rat(h[s]);

    RatRow x = solve_unique(std::move(a), std::move(b));
    CdPolynomial out;
    for (std::size_t w = 0; w < words.size(); ++w) {
        if (x[w] == 0) continue;
        if (boost::multiprecision::denominator(x[w]) != 1)
            throw domain_error("cd coefficient is not an integer");
        out.terms[words[w]] = boost::multiprecision::numerator(x[w]);
    }
    return out;
}

} // namespace lpm::exact
