#pragma once

// Dominant integral weights of GL(n) and raw integer exponent vectors.
//
// A dominant weight is a nonincreasing integer vector (l1 >= l2 >= ... >= ln);
// these index the irreducible rational representations of GL(n) and form the
// basis labels of the virtual character groups used throughout the library.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace trivec {

/// Raw integer exponent vector (not necessarily nonincreasing).
using IntVec = std::vector<int>;

/// True when v is nonincreasing (v[0] >= v[1] >= ... >= v[n-1]).
inline bool isDominant(const IntVec& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] < v[i]) return false;
    return true;
}

/// Sum of entries.
inline long long vecDegree(const IntVec& v) {
    return std::accumulate(v.begin(), v.end(), 0LL);
}

/// Componentwise sum; throws std::invalid_argument on length mismatch.
inline IntVec vecAdd(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("vecAdd: length mismatch");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

/// Dominant integral weight of GL(rank): a nonincreasing integer vector.
///
/// Construction validates dominance, so a Weight value is dominant by
/// invariant. Comparison is lexicographic (rank first), which makes Weight
/// usable as a deterministic ordered map key.
class Weight {
public:
    Weight() = default;

    /// Throws std::invalid_argument unless v is nonincreasing.
    explicit Weight(IntVec v) : entries_(std::move(v)) {
        if (!isDominant(entries_))
            throw std::invalid_argument("Weight: entries must be nonincreasing");
    }

    /// The constant weight (c, c, ..., c) of the given rank.
    static Weight constant(int rank, int c) {
        if (rank < 0) throw std::invalid_argument("Weight::constant: negative rank");
        return Weight(IntVec(static_cast<std::size_t>(rank), c));
    }

    /// The zero weight of the given rank.
    static Weight zero(int rank) { return constant(rank, 0); }

    int rank() const { return static_cast<int>(entries_.size()); }
    const IntVec& entries() const { return entries_; }
    int operator[](std::size_t i) const { return entries_.at(i); }

    /// Sum of entries (the degree of e^lambda as a Laurent monomial).
    long long degree() const { return vecDegree(entries_); }

    /// Largest minus smallest entry; 0 iff the weight is constant.
    int spread() const {
        return entries_.empty() ? 0 : entries_.front() - entries_.back();
    }

    bool isConstant() const { return spread() == 0; }

    friend bool operator==(const Weight& a, const Weight& b) = default;
    friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
        if (auto c = a.rank() <=> b.rank(); c != 0) return c;
        return std::lexicographical_compare_three_way(
            a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end());
    }

private:
    IntVec entries_;
};

/// Degree of a weight (sum of entries).
inline long long degree(const Weight& w) { return w.degree(); }

/// Dual weight (-l_n, ..., -l_1); an involution preserving dominance.
inline Weight dual(const Weight& w) {
    IntVec v(w.entries().rbegin(), w.entries().rend());
    for (int& x : v) x = -x;
    return Weight(std::move(v));
}

/// Componentwise sum of dominant weights (always dominant).
/// Throws std::invalid_argument on rank mismatch.
inline Weight add(const Weight& a, const Weight& b) {
    return Weight(vecAdd(a.entries(), b.entries()));
}

/// Componentwise scalar multiple k*w. For k < 0 the result is dominant only
/// when w is constant; throws std::invalid_argument otherwise.
inline Weight scale(const Weight& w, int k) {
    IntVec v = w.entries();
    for (int& x : v) x *= k;
    if (!isDominant(v))
        throw std::invalid_argument("scale: negative multiple of a non-constant weight");
    return Weight(std::move(v));
}

/// Render as comma-separated entries, e.g. "3,3,2,2,1,1".
inline std::string formatWeight(const Weight& w) {
    std::string s;
    for (int i = 0; i < w.rank(); ++i) {
        if (i) s += ',';
        s += std::to_string(w[static_cast<std::size_t>(i)]);
    }
    return s;
}

namespace detail {

inline int parseIntToken(const std::string& tok, const char* what) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": bad integer '" + tok + "'");
    }
    if (pos != tok.size())
        throw std::invalid_argument(std::string(what) + ": bad integer '" + tok + "'");
    return value;
}

}  // namespace detail

/// Parse a weight from text.
///
/// Accepted forms (surrounding whitespace and one pair of parentheses are
/// ignored): a comma-separated entry list "3,3,2,2,1,1", with any entry
/// optionally carrying a repetition marker "a^m" meaning m copies of a, e.g.
/// "(2^6)", "-1^3,-2^3", "2,1^4,0". If expectedRank > 0 the parsed rank must
/// match it. Throws std::invalid_argument on malformed input, wrong rank, or
/// a non-dominant result.
inline Weight parseWeight(const std::string& text, int expectedRank = 0) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
        s = s.substr(1, s.size() - 2);
    if (s.empty()) throw std::invalid_argument("parseWeight: empty input");

    IntVec v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("parseWeight: empty entry");
        auto caret = tok.find('^');
        if (caret == std::string::npos) {
            v.push_back(detail::parseIntToken(tok, "parseWeight"));
        } else {
            int base = detail::parseIntToken(tok.substr(0, caret), "parseWeight");
            int rep = detail::parseIntToken(tok.substr(caret + 1), "parseWeight");
            if (rep <= 0) throw std::invalid_argument("parseWeight: repetition must be positive");
            v.insert(v.end(), static_cast<std::size_t>(rep), base);
        }
    }
    if (expectedRank > 0 && static_cast<int>(v.size()) != expectedRank)
        throw std::invalid_argument("parseWeight: expected rank " + std::to_string(expectedRank) +
                                    ", got " + std::to_string(v.size()));
    if (!isDominant(v))
        throw std::invalid_argument("parseWeight: entries not nonincreasing: " + text);
    return Weight(std::move(v));
}

}  // namespace trivec
