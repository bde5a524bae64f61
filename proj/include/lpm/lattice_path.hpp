#pragma once

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace lpm {

// A point of the integer grid.
struct Point {
    int x = 0;
    int y = 0;
    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    friend bool operator<(const Point& a, const Point& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
};

// Monotone lattice path from (0,0), written as a word over {E, N}.
// north_prefix[i] counts N steps among the first i letters, so the point
// reached after i steps is (i - north_prefix[i], north_prefix[i]).
class LatticePath {
  public:
    LatticePath() = default;

    explicit LatticePath(std::string word) : word_(std::move(word)) {
        north_prefix_.resize(word_.size() + 1, 0);
        for (std::size_t i = 0; i < word_.size(); ++i)
            north_prefix_[i + 1] = north_prefix_[i] + (word_[i] == 'N' ? 1 : 0);
    }

    const std::string& word() const { return word_; }
    int length() const { return static_cast<int>(word_.size()); }
    int norths(int prefix) const { return north_prefix_[static_cast<std::size_t>(prefix)]; }
    int north_total() const { return north_prefix_.back(); }
    int east_total() const { return length() - north_total(); }
    char step(int i) const { return word_[static_cast<std::size_t>(i - 1)]; } // 1-based
    Point at(int prefix) const { return {prefix - norths(prefix), norths(prefix)}; }
    Point endpoint() const { return at(length()); }

    friend bool operator==(const LatticePath& a, const LatticePath& b) { return a.word_ == b.word_; }
    friend bool operator!=(const LatticePath& a, const LatticePath& b) { return a.word_ != b.word_; }
    friend bool operator<(const LatticePath& a, const LatticePath& b) { return a.word_ < b.word_; }

  private:
    std::string word_;
    std::vector<int> north_prefix_{0};
};

// Parses a plain step word. Only 'E' and 'N' are accepted and the word must be
// nonempty; offending characters are reported with their 1-based position.
inline LatticePath parse_path(const std::string& word) {
    if (word.empty()) throw parse_error("empty path word", 1);
    for (std::size_t i = 0; i < word.size(); ++i)
        if (word[i] != 'E' && word[i] != 'N')
            throw parse_error(std::string("invalid step character '") + word[i] + "'", i + 1);
    return LatticePath(word);
}

// Expands the exponent shorthand ([EN] | [EN]^[0-9]+)+ into a plain word:
// "E^3N^2" -> "EEENN". Used only at interface boundaries; the library core
// always works with expanded words.
inline std::string expand_word(const std::string& text) {
    if (text.empty()) throw parse_error("empty path word", 1);
    std::string out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c != 'E' && c != 'N')
            throw parse_error(std::string("invalid step character '") + c + "'", i + 1);
        ++i;
        if (i < text.size() && text[i] == '^') {
            ++i;
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw parse_error("exponent digits expected after '^'", i + 1);
            long long count = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                count = count * 10 + (text[i] - '0');
                if (count > 1000000) throw parse_error("exponent too large", i + 1);
                ++i;
            }
            out.append(static_cast<std::size_t>(count), c);
        } else {
            out.push_back(c);
        }
    }
    if (out.empty()) throw parse_error("path word expands to the empty word", text.size());
    return out;
}

} // namespace lpm
