#pragma once

// Cohomology of equivariant vector bundles on Grassmannians via the
// Borel-Weil-Bott algorithm, the Cauchy decomposition of symmetric powers,
// the degree scan that locates a fixed central character in the cohomology
// of the associated graded bundle, and Gaussian binomial Betti numbers with
// the local-cohomology multiplicities of the cone they control.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "trivec/weights.hpp"

namespace trivec {

/// Weight data of the homogeneous bundle S_alpha(Q) (x) S_beta(R) on
/// Gr(k, n): alpha has length n-k (quotient part), beta length k (sub part).
struct BundleWeight {
    IntVec alpha;
    IntVec beta;
};

/// Outcome of the Borel-Weil-Bott algorithm: either all cohomology vanishes,
/// or exactly one degree survives and carries the irreducible with the given
/// dominant highest weight.
struct BottResult {
    bool vanishing = true;
    int degree = -1;
    Weight weight;
};

/// Borel-Weil-Bott for S_alpha(Q) (x) S_beta(R) on Gr(k, n).
///
/// Concatenate lambda = (alpha, beta), add rho = (n-1, ..., 1, 0). A repeated
/// entry means every cohomology group vanishes; otherwise the cohomology is
/// concentrated in the degree equal to the number of inversions, and equals
/// the irreducible GL(n) representation whose highest weight is the sorted
/// vector minus rho.
inline BottResult bottCohomology(const IntVec& alpha, const IntVec& beta, int k = 3, int n = 6) {
    if (k <= 0 || k >= n) throw std::invalid_argument("bottCohomology: need 0 < k < n");
    if (static_cast<int>(alpha.size()) != n - k)
        throw std::invalid_argument("bottCohomology: alpha must have length n-k");
    if (static_cast<int>(beta.size()) != k)
        throw std::invalid_argument("bottCohomology: beta must have length k");
    if (!isDominant(alpha) || !isDominant(beta))
        throw std::invalid_argument("bottCohomology: alpha and beta must be nonincreasing");

    IntVec v(alpha);
    v.insert(v.end(), beta.begin(), beta.end());
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] += n - 1 - i;

    BottResult r;
    int inversions = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (v[i] == v[j]) return r;  // vanishing
            if (v[i] < v[j]) ++inversions;
        }
    std::sort(v.begin(), v.end(), std::greater<int>());
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] -= n - 1 - i;
    r.vanishing = false;
    r.degree = inversions;
    r.weight = Weight(std::move(v));
    return r;
}

/// Cauchy decomposition of Sym_d of the 9-dimensional bundle wedge^2(Q)(x)R
/// on Gr(3,6): one summand S_{(p1+p2, p1+p3, p2+p3)}Q (x) S_{(p1,p2,p3)}R
/// per partition (p1 >= p2 >= p3 >= 0) of d into at most three parts.
inline std::vector<BundleWeight> cauchySymDecomposition(int d) {
    if (d < 0) throw std::invalid_argument("cauchySymDecomposition: d must be >= 0");
    std::vector<BundleWeight> out;
    for (int p1 = d; p1 >= 0; --p1)
        for (int p2 = std::min(p1, d - p1); p2 >= 0; --p2) {
            int p3 = d - p1 - p2;
            if (p3 < 0 || p3 > p2) continue;
            out.push_back({{p1 + p2, p1 + p3, p2 + p3}, {p1, p2, p3}});
        }
    return out;
}

/// One nonvanishing cohomology contribution found by grEtaScan, recorded by
/// the normalized triplet (a, b, c) from the degree-matching analysis.
using GrScanTable = std::map<int, std::vector<std::array<int, 3>>>;

/// Scan the cohomology of L^{-k} (x) Sym(gr eta) on Gr(3,6) for the central
/// character (x^6). Degree matching forces the symmetric power d = 3k + 2x;
/// each partition (p1,p2,p3) with |p| <= d contributes the Bott cohomology of
/// S_{(d-2k-p3, d-2k-p2, d-2k-p1)}Q (x) S_{(p1-k, p2-k, p3-k)}R, and the hits
/// with weight (x^6) are tabulated by cohomological degree, each witnessed by
/// the triplet (p1-k-x, p2-k-x, p3-k-x).
inline GrScanTable grEtaScan(int x, int k) {
    if (x != -5 && x != -6 && x != -8)
        throw std::invalid_argument("grEtaScan: x must be one of -5, -6, -8");
    if (k < 0) throw std::invalid_argument("grEtaScan: k must be >= 0");

    GrScanTable table;
    const int d = 3 * k + 2 * x;
    if (d < 0) return table;
    const Weight target = Weight::constant(6, x);
    for (int p1 = 0; p1 <= d; ++p1)
        for (int p2 = 0; p2 <= p1; ++p2)
            for (int p3 = 0; p3 <= p2; ++p3) {
                if (p1 + p2 + p3 > d) continue;
                IntVec alpha = {d - 2 * k - p3, d - 2 * k - p2, d - 2 * k - p1};
                IntVec beta = {p1 - k, p2 - k, p3 - k};
                BottResult r = bottCohomology(alpha, beta, 3, 6);
                if (r.vanishing || r.weight != target) continue;
                table[r.degree].push_back({p1 - k - x, p2 - k - x, p3 - k - x});
            }
    for (auto& [deg, hits] : table) std::sort(hits.begin(), hits.end());
    return table;
}

/// Coefficient list of the Gaussian binomial coefficient (n choose k)_q with
/// q replaced by q^step: entry i is the coefficient of q^i, for i from 0 to
/// step*k*(n-k). These are the Betti numbers of Gr(k, n) (Schubert cell
/// counts by dimension) when step is the real codimension scale.
inline std::vector<long long> gaussianBinomial(int n, int k, int step) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("gaussianBinomial: need 0 <= k <= n");
    if (step < 1) throw std::invalid_argument("gaussianBinomial: step must be >= 1");
    // q-Pascal recurrence: [m choose j]_q = [m-1 choose j-1]_q + q^j [m-1 choose j]_q
    std::vector<std::vector<std::vector<long long>>> g(
        static_cast<std::size_t>(n + 1));
    for (int m = 0; m <= n; ++m) {
        g[m].resize(static_cast<std::size_t>(std::min(m, k) + 1));
        for (int j = 0; j <= std::min(m, k); ++j) {
            auto& cur = g[m][j];
            if (j == 0 || j == m) {
                cur = {1};
                continue;
            }
            cur = g[m - 1][j - 1];
            const auto& shifted = g[m - 1][j];
            cur.resize(std::max(cur.size(), shifted.size() + static_cast<std::size_t>(j)), 0);
            for (std::size_t i = 0; i < shifted.size(); ++i)
                cur[i + static_cast<std::size_t>(j)] += shifted[i];
        }
    }
    const auto& base = g[n][k];
    std::vector<long long> out(static_cast<std::size_t>(step) * k * (n - k) + 1, 0);
    for (std::size_t i = 0; i < base.size(); ++i) out[i * static_cast<std::size_t>(step)] = base[i];
    return out;
}

/// Local cohomology multiplicities of the simple supported at the vertex of
/// the 10-dimensional Grassmannian cone, read off the Betti numbers b of the
/// projective base: degree j carries E^(b_{20-j-1} - b_{20-j-3}) in the range
/// 11 <= j <= 17, degree 18 carries E^(b_1), degree 19 carries E^(b_0 - 1),
/// and degree 20 carries nothing. Entries for all j in 11..20 are returned.
inline std::map<int, long long> coneLocalCohomologyFromBetti(const std::vector<long long>& betti) {
    if (betti.size() < 9)
        throw std::invalid_argument("coneLocalCohomologyFromBetti: betti list too short");
    std::map<int, long long> out;
    for (int j = 11; j <= 17; ++j)
        out[j] = betti[static_cast<std::size_t>(20 - j - 1)] -
                 betti[static_cast<std::size_t>(20 - j - 3)];
    out[18] = betti[1];
    out[19] = betti[0] - 1;
    out[20] = 0;
    return out;
}

}  // namespace trivec
