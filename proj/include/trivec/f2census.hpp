#pragma once

// Brute-force census of representations of one quiver component over the
// two-element field: every relation-satisfying matrix tuple with dimension
// vector at most (2,2,2) is enumerated and grouped into isomorphism classes
// by canonicalizing under the full base-change group, and indecomposables
// are counted by subtracting everything isomorphic to a proper direct sum.
// This is the independent oracle the string-module enumeration is checked
// against. Vertices are indexed 0,1,2 (chain end - middle - other end);
// arrows are 0: 0->1, 1: 1->0, 2: 1->2, 3: 2->1; relations kill all four
// 2-cycles.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace trivec::f2census {

struct Mat {
    int rows = 0, cols = 0;
    std::array<unsigned, 2> bits{};  // bits[r] is the bitmask of row r

    bool operator==(const Mat&) const = default;
};

inline Mat zero(int rows, int cols) { return Mat{rows, cols, {0u, 0u}}; }

inline Mat identity(int d) {
    Mat m = zero(d, d);
    for (int i = 0; i < d; ++i) m.bits[i] = 1u << i;
    return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
    if (a.cols != b.rows) throw std::logic_error("f2::mul: shape mismatch");
    Mat out = zero(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k)
            if ((a.bits[i] >> k) & 1u) out.bits[i] ^= b.bits[k];
    return out;
}

inline bool isZero(const Mat& m) {
    for (int i = 0; i < m.rows; ++i)
        if (m.bits[i] != 0) return false;
    return true;
}

inline std::vector<Mat> allMats(int rows, int cols) {
    std::vector<Mat> out;
    const int total = rows * cols;
    for (unsigned code = 0; code < (1u << total); ++code) {
        Mat m = zero(rows, cols);
        for (int r = 0; r < rows; ++r)
            m.bits[r] = (code >> (r * cols)) & ((1u << cols) - 1u);
        out.push_back(m);
    }
    return out;
}

inline int rank(Mat m) {
    int r = 0;
    for (int c = 0; c < m.cols; ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows; ++i)
            if ((m.bits[i] >> c) & 1u) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(m.bits[r], m.bits[pivot]);
        for (int i = 0; i < m.rows; ++i)
            if (i != r && ((m.bits[i] >> c) & 1u)) m.bits[i] ^= m.bits[r];
        ++r;
    }
    return r;
}

inline std::vector<Mat> generalLinear(int d) {
    std::vector<Mat> out;
    for (const Mat& m : allMats(d, d))
        if (rank(m) == d) out.push_back(m);
    return out;
}

inline Mat inverse(const Mat& g) {
    for (const Mat& h : generalLinear(g.rows))
        if (mul(g, h) == identity(g.rows)) return h;
    throw std::logic_error("inverse: not invertible");
}

constexpr int arrowSrc[4] = {0, 1, 1, 2};
constexpr int arrowTgt[4] = {1, 0, 2, 1};

using Tuple = std::array<Mat, 4>;

inline std::uint64_t codeOf(const Tuple& t) {
    std::uint64_t code = 0;
    for (int a = 0; a < 4; ++a) {
        std::uint64_t slot = (t[a].bits[0] & 3u) | ((t[a].bits[1] & 3u) << 2);
        code |= slot << (4 * a);
    }
    return code;
}

struct Census {
    std::map<std::uint64_t, Tuple> classes;  // canonical code -> representative
};

using Dims = std::array<int, 3>;

inline std::uint64_t canonicalCode(const Tuple& t, const Dims& dims,
                            const std::array<std::vector<Mat>, 3>& gl,
                            const std::array<std::vector<Mat>, 3>& glInv) {
    std::uint64_t best = ~0ull;
    for (std::size_t i0 = 0; i0 < gl[0].size(); ++i0)
        for (std::size_t i1 = 0; i1 < gl[1].size(); ++i1)
            for (std::size_t i2 = 0; i2 < gl[2].size(); ++i2) {
                const std::array<const Mat*, 3> g = {&gl[0][i0], &gl[1][i1], &gl[2][i2]};
                const std::array<const Mat*, 3> gi = {&glInv[0][i0], &glInv[1][i1],
                                                      &glInv[2][i2]};
                Tuple moved;
                for (int a = 0; a < 4; ++a)
                    moved[a] = mul(mul(*g[arrowTgt[a]], t[a]), *gi[arrowSrc[a]]);
                best = std::min(best, codeOf(moved));
            }
    (void)dims;
    return best;
}

inline Census census(const Dims& dims) {
    static std::map<Dims, Census> memo;
    auto found = memo.find(dims);
    if (found != memo.end()) return found->second;

    std::array<std::vector<Mat>, 3> gl, glInv;
    for (int v = 0; v < 3; ++v) {
        gl[v] = generalLinear(dims[v]);
        for (const Mat& g : gl[v]) glInv[v].push_back(inverse(g));
    }
    std::array<std::vector<Mat>, 4> choices;
    for (int a = 0; a < 4; ++a) choices[a] = allMats(dims[arrowTgt[a]], dims[arrowSrc[a]]);

    Census result;
    Tuple t;
    for (const Mat& m0 : choices[0]) {
        t[0] = m0;
        for (const Mat& m1 : choices[1]) {
            t[1] = m1;
            if (!isZero(mul(t[1], t[0])) || !isZero(mul(t[0], t[1]))) continue;
            for (const Mat& m2 : choices[2]) {
                t[2] = m2;
                for (const Mat& m3 : choices[3]) {
                    t[3] = m3;
                    if (!isZero(mul(t[3], t[2])) || !isZero(mul(t[2], t[3]))) continue;
                    std::uint64_t c = canonicalCode(t, dims, gl, glInv);
                    result.classes.emplace(c, t);
                }
            }
        }
    }
    memo[dims] = result;
    return result;
}

inline Mat blockDiag(const Mat& a, const Mat& b) {
    Mat out = zero(a.rows + b.rows, a.cols + b.cols);
    for (int r = 0; r < a.rows; ++r) out.bits[r] = a.bits[r];
    for (int r = 0; r < b.rows; ++r) out.bits[a.rows + r] = b.bits[r] << a.cols;
    return out;
}

/// Number of isomorphism classes of indecomposable representations with the
/// given dimension vector: total classes minus those isomorphic to a direct
/// sum of two nonzero smaller representations.
inline int indecomposableCount(const Dims& dims) {
    Census all = census(dims);
    std::array<std::vector<Mat>, 3> gl, glInv;
    for (int v = 0; v < 3; ++v) {
        gl[v] = generalLinear(dims[v]);
        for (const Mat& g : gl[v]) glInv[v].push_back(inverse(g));
    }
    std::set<std::uint64_t> decomposable;
    Dims lo;
    for (lo[0] = 0; lo[0] <= dims[0]; ++lo[0])
        for (lo[1] = 0; lo[1] <= dims[1]; ++lo[1])
            for (lo[2] = 0; lo[2] <= dims[2]; ++lo[2]) {
                const Dims hi = {dims[0] - lo[0], dims[1] - lo[1], dims[2] - lo[2]};
                if (lo[0] + lo[1] + lo[2] == 0 || hi[0] + hi[1] + hi[2] == 0) continue;
                for (const auto& [c1, r1] : census(lo).classes)
                    for (const auto& [c2, r2] : census(hi).classes) {
                        Tuple sum;
                        for (int a = 0; a < 4; ++a) sum[a] = blockDiag(r1[a], r2[a]);
                        decomposable.insert(canonicalCode(sum, dims, gl, glInv));
                    }
            }
    int count = 0;
    for (const auto& [code, rep] : all.classes)
        if (!decomposable.count(code)) ++count;
    return count;
}

}  // namespace trivec::f2census
