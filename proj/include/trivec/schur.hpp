#pragma once

// Symmetric Laurent polynomials and Schur calculus: monomial expansion of
// Schur polynomials via semistandard tableaux, exterior powers of honest
// characters, decomposition of symmetric polynomials into Schur polynomials
// by leading-term peeling, and the Weyl dimension formula.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "trivec/charseries.hpp"
#include "trivec/weights.hpp"

namespace trivec {

/// Laurent polynomial in `rank` variables with integer coefficients, stored
/// as exponent vector -> coefficient (lexicographically ordered).
struct LaurentSymPoly {
    int rank = 0;
    std::map<IntVec, long long> terms;

    friend bool operator==(const LaurentSymPoly& a, const LaurentSymPoly& b) = default;
};

/// Sum of all coefficients (the dimension of the underlying representation
/// for an honest character).
inline long long coefficientSum(const LaurentSymPoly& p) {
    long long s = 0;
    for (const auto& [e, c] : p.terms) s += c;
    return s;
}

/// Product of Laurent polynomials in the same variables.
inline LaurentSymPoly polyProduct(const LaurentSymPoly& a, const LaurentSymPoly& b) {
    if (a.rank != b.rank) throw std::invalid_argument("polyProduct: rank mismatch");
    LaurentSymPoly r{a.rank, {}};
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            auto [it, inserted] = r.terms.try_emplace(vecAdd(ea, eb), 0);
            it->second += ca * cb;
            if (it->second == 0) r.terms.erase(it);
        }
    return r;
}

namespace detail {

/// Enumerate semistandard tableaux of the given shape with entries in 1..n,
/// invoking emit with the content vector (occurrences of each entry) of each
/// filling. Rows weakly increase, columns strictly increase.
template <typename Emit>
void ssytEnumerate(const std::vector<int>& shape, int n, Emit&& emit) {
    const int rows = static_cast<int>(shape.size());
    std::vector<std::vector<int>> grid(shape.size());
    for (int i = 0; i < rows; ++i) grid[static_cast<std::size_t>(i)].resize(shape[i], 0);
    IntVec content(static_cast<std::size_t>(n), 0);

    auto rec = [&](auto&& self, int row, int col) -> void {
        if (row == rows) {
            emit(content);
            return;
        }
        if (col == shape[row]) {
            self(self, row + 1, 0);
            return;
        }
        int lo = 1;
        if (col > 0) lo = std::max(lo, grid[row][col - 1]);
        if (row > 0 && col < shape[row - 1]) lo = std::max(lo, grid[row - 1][col] + 1);
        for (int v = lo; v <= n; ++v) {
            grid[row][col] = v;
            ++content[static_cast<std::size_t>(v - 1)];
            self(self, row, col + 1);
            --content[static_cast<std::size_t>(v - 1)];
        }
    };
    rec(rec, 0, 0);
}

inline long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// n! / (product of multiplicities!) — the size of the permutation orbit of
/// an exponent vector.
inline long long orbitSize(const IntVec& sortedExp) {
    long long fact = 1;
    for (std::size_t i = 2; i <= sortedExp.size(); ++i) fact *= static_cast<long long>(i);
    long long dup = 1;
    std::size_t i = 0;
    while (i < sortedExp.size()) {
        std::size_t j = i;
        while (j < sortedExp.size() && sortedExp[j] == sortedExp[i]) ++j;
        for (std::size_t r = 2; r <= j - i; ++r) dup *= static_cast<long long>(r);
        i = j;
    }
    return fact / dup;
}

}  // namespace detail

/// Monomial expansion of the Schur polynomial s_lambda(x_1..x_n) for a
/// dominant weight lambda of rank n (entries may be negative: the expansion
/// is shifted by the appropriate power of x_1...x_n).
inline LaurentSymPoly schurMonomials(const Weight& lambda) {
    const int n = lambda.rank();
    LaurentSymPoly p{n, {}};
    if (n == 0) {
        p.terms[IntVec{}] = 1;
        return p;
    }
    const int m = lambda.entries().back();
    std::vector<int> shape;
    for (int x : lambda.entries())
        if (x - m > 0) shape.push_back(x - m);
    if (shape.empty()) {
        p.terms[IntVec(static_cast<std::size_t>(n), m)] = 1;
        return p;
    }
    detail::ssytEnumerate(shape, n, [&](const IntVec& content) {
        IntVec e = content;
        for (int& x : e) x += m;
        p.terms[e] += 1;
    });
    return p;
}

/// k-th exterior power of an honest character (all coefficients >= 0):
/// sum over k-element sub-multisets of the monomial multiset.
inline LaurentSymPoly exteriorPower(const LaurentSymPoly& p, int k) {
    if (k < 0) throw std::invalid_argument("exteriorPower: k must be >= 0");
    for (const auto& [e, c] : p.terms)
        if (c < 0)
            throw std::invalid_argument("exteriorPower: input has a negative coefficient");

    std::vector<std::pair<IntVec, long long>> items(p.terms.begin(), p.terms.end());
    LaurentSymPoly r{p.rank, {}};
    IntVec zero(static_cast<std::size_t>(p.rank), 0);

    auto rec = [&](auto&& self, std::size_t idx, int remaining, const IntVec& cur,
                   long long coeff) -> void {
        if (remaining == 0) {
            r.terms[cur] += coeff;
            return;
        }
        if (idx == items.size()) return;
        const auto& [e, mult] = items[idx];
        long long take = std::min<long long>(mult, remaining);
        IntVec acc = cur;
        for (long long j = 0; j <= take; ++j) {
            self(self, idx + 1, remaining - static_cast<int>(j), acc,
                 coeff * detail::binomial(mult, j));
            if (j < take) acc = vecAdd(acc, e);
        }
    };
    rec(rec, 0, k, zero, 1);
    return r;
}

/// Decompose a symmetric Laurent polynomial into Schur polynomials by
/// peeling the lexicographically largest exponent. Returns the multiset of
/// highest weights as a virtual character whose window spans the input's
/// degree range. Throws std::invalid_argument when p is not symmetric.
inline VirtualCharacter decomposeIntoSchur(const LaurentSymPoly& p) {
    const int n = p.rank;

    // Symmetry check: within each permutation orbit all coefficients agree
    // and the whole orbit is present.
    std::map<IntVec, std::pair<long long, long long>> orbits;  // rep -> (coeff, count)
    for (const auto& [e, c] : p.terms) {
        IntVec rep = e;
        std::sort(rep.begin(), rep.end(), std::greater<int>());
        auto [it, inserted] = orbits.try_emplace(rep, std::make_pair(c, 0LL));
        if (it->second.first != c)
            throw std::invalid_argument("decomposeIntoSchur: polynomial is not symmetric");
        it->second.second += 1;
    }
    for (const auto& [rep, cc] : orbits)
        if (cc.second != detail::orbitSize(rep))
            throw std::invalid_argument("decomposeIntoSchur: polynomial is not symmetric");

    long long minDeg = 0;
    long long maxDeg = 0;
    if (!p.terms.empty()) {
        minDeg = maxDeg = vecDegree(p.terms.begin()->first);
        for (const auto& [e, c] : p.terms) {
            minDeg = std::min(minDeg, vecDegree(e));
            maxDeg = std::max(maxDeg, vecDegree(e));
        }
    }
    VirtualCharacter result(n, TruncationWindow(minDeg, maxDeg));

    std::map<IntVec, long long> work = p.terms;
    long long guard = 200000;
    while (!work.empty()) {
        if (--guard < 0)
            throw std::logic_error("decomposeIntoSchur: peeling did not terminate");
        const auto& [lead, c] = *work.rbegin();
        // the lex-max exponent of a symmetric polynomial is nonincreasing
        if (!isDominant(lead))
            throw std::invalid_argument("decomposeIntoSchur: polynomial is not symmetric");
        Weight lambda(lead);
        result.addTerm(lambda, c);
        LaurentSymPoly s = schurMonomials(lambda);
        long long mult = c;
        for (const auto& [e, sc] : s.terms) {
            auto it = work.try_emplace(e, 0).first;
            it->second -= mult * sc;
            if (it->second == 0) work.erase(it);
        }
    }
    return result;
}

/// Dimension of the irreducible GL(n) representation with highest weight
/// lambda, by the Weyl dimension formula.
inline long long weylDim(const Weight& lambda) {
    const int n = lambda.rank();
    __int128 num = 1;
    __int128 den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            num *= lambda[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(j)] +
                   (j - i);
            den *= (j - i);
        }
    return static_cast<long long>(num / den);
}

/// True when none of the 11 irreducible constituents of the 7th exterior
/// power of the 20-dimensional third-wedge representation, twisted by
/// e^{(-10^6)}, occurs in the character of B4. The window must cover all 11
/// twisted weights (each of degree -39), else WindowError propagates.
inline bool b4OverlapCheck(const TruncationWindow& w) {
    LaurentSymPoly wedge3 = schurMonomials(Weight({1, 1, 1, 0, 0, 0}));
    VirtualCharacter constituents = decomposeIntoSchur(exteriorPower(wedge3, 7));
    VirtualCharacter b4 = namedCharacter(CharName::B4, w);
    const Weight twist = Weight::constant(6, kFourierTwistEntry);
    for (const auto& [lambda, mult] : constituents.terms())
        if (b4.multiplicity(add(lambda, twist)) != 0) return false;
    return true;
}

}  // namespace trivec
