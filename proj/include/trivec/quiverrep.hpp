#pragma once

// The quiver with relations presenting the category of equivariant D-modules
// on the space of alternating 3-forms: two three-vertex components
// (s <-> d3 <-> e and b4 <-> d2 <-> d1) with arrows in both directions and
// every 2-cycle declared zero. Provides the path basis, projective covers
// and injective envelopes, the two distinguished uniserial modules, string
// module enumeration, the Fourier and duality functors, and exact Hom/Ext
// dimensions over the rationals.

#include <boost/rational.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trivec/labels.hpp"

namespace trivec {

using Rational = boost::rational<long long>;
/// Dense matrix, row-major; shape is tracked by the owning representation.
using RatMatrix = std::vector<std::vector<Rational>>;

enum class Vertex { s, d3, e, b4, d2, d1 };
enum class Arrow { alpha0, beta0, alpha1, beta1, gamma0, delta0, gamma1, delta1 };

inline constexpr std::array<Vertex, 6> allVertices = {Vertex::s,  Vertex::d3, Vertex::e,
                                                      Vertex::b4, Vertex::d2, Vertex::d1};
inline constexpr std::array<Arrow, 8> allArrows = {
    Arrow::alpha0, Arrow::beta0,  Arrow::alpha1, Arrow::beta1,
    Arrow::gamma0, Arrow::delta0, Arrow::gamma1, Arrow::delta1};

inline std::string to_string(Vertex v) {
    constexpr const char* names[] = {"s", "d3", "e", "b4", "d2", "d1"};
    return names[static_cast<std::size_t>(v)];
}

inline std::string to_string(Arrow a) {
    constexpr const char* names[] = {"alpha0", "beta0",  "alpha1", "beta1",
                                     "gamma0", "delta0", "gamma1", "delta1"};
    return names[static_cast<std::size_t>(a)];
}

inline Vertex parseVertex(const std::string& text) {
    for (Vertex v : allVertices)
        if (to_string(v) == text) return v;
    throw std::invalid_argument("parseVertex: unknown vertex '" + text + "'");
}

inline Arrow parseArrow(const std::string& text) {
    for (Arrow a : allArrows)
        if (to_string(a) == text) return a;
    throw std::invalid_argument("parseArrow: unknown arrow '" + text + "'");
}

inline Vertex arrowSource(Arrow a) {
    constexpr std::array<Vertex, 8> src = {Vertex::s,  Vertex::d3, Vertex::d3, Vertex::e,
                                           Vertex::b4, Vertex::d2, Vertex::d2, Vertex::d1};
    return src[static_cast<std::size_t>(a)];
}

inline Vertex arrowTarget(Arrow a) {
    constexpr std::array<Vertex, 8> tgt = {Vertex::d3, Vertex::s,  Vertex::e,  Vertex::d3,
                                           Vertex::d2, Vertex::b4, Vertex::d1, Vertex::d2};
    return tgt[static_cast<std::size_t>(a)];
}

/// The arrow running opposite to `a` along the same edge (alpha_i <-> beta_i,
/// gamma_i <-> delta_i); used by the duality functor and the relations.
inline Arrow reverseArrow(Arrow a) {
    constexpr std::array<Arrow, 8> rev = {Arrow::beta0,  Arrow::alpha0, Arrow::beta1,
                                          Arrow::alpha1, Arrow::delta0, Arrow::gamma0,
                                          Arrow::delta1, Arrow::gamma1};
    return rev[static_cast<std::size_t>(a)];
}

/// Component of the quiver: 0 for {s, d3, e}, 1 for {b4, d2, d1}.
inline int componentOf(Vertex v) {
    return (v == Vertex::s || v == Vertex::d3 || v == Vertex::e) ? 0 : 1;
}

/// The simple D-module concentrated at a quiver vertex, and conversely.
inline SimpleLabel simpleAt(Vertex v) {
    constexpr std::array<SimpleLabel, 6> l = {SimpleLabel::S,  SimpleLabel::D3,
                                              SimpleLabel::E,  SimpleLabel::B4,
                                              SimpleLabel::D2, SimpleLabel::D1};
    return l[static_cast<std::size_t>(v)];
}

inline Vertex vertexOf(SimpleLabel l) {
    for (Vertex v : allVertices)
        if (simpleAt(v) == l) return v;
    throw std::invalid_argument("vertexOf: bad label");
}

/// The vertex relabeling induced by the Fourier transform: s <-> e and
/// b4 <-> d1, with d3 and d2 fixed.
inline Vertex fourierVertex(Vertex v) {
    constexpr std::array<Vertex, 6> image = {Vertex::e,  Vertex::d3, Vertex::s,
                                             Vertex::d1, Vertex::d2, Vertex::b4};
    return image[static_cast<std::size_t>(v)];
}

/// The arrow relabeling induced by the Fourier transform; it is compatible
/// with fourierVertex on sources and targets and squares to the identity.
inline Arrow fourierArrow(Arrow a) {
    constexpr std::array<Arrow, 8> image = {Arrow::beta1,  Arrow::alpha1, Arrow::beta0,
                                            Arrow::alpha0, Arrow::delta1, Arrow::gamma1,
                                            Arrow::delta0, Arrow::gamma0};
    return image[static_cast<std::size_t>(a)];
}

struct ArrowInfo {
    Arrow name;
    Vertex source;
    Vertex target;
};

/// A quiver together with its monomial relations. A relation {first, second}
/// declares the composite "second after first" to be zero.
struct QuiverPresentation {
    std::vector<Vertex> vertices;
    std::vector<ArrowInfo> arrows;
    std::vector<std::pair<Arrow, Arrow>> relations;
};

/// The fixed presentation: all eight arrows and all eight 2-cycles as
/// relations.
inline const QuiverPresentation& theQuiver() {
    static const QuiverPresentation q = [] {
        QuiverPresentation p;
        p.vertices.assign(allVertices.begin(), allVertices.end());
        for (Arrow a : allArrows) p.arrows.push_back({a, arrowSource(a), arrowTarget(a)});
        for (Arrow a : allArrows) p.relations.emplace_back(a, reverseArrow(a));
        return p;
    }();
    return q;
}

/// A path in the quiver; `arrows` lists the arrows in application order
/// (first arrow applied first), so an empty list is a trivial path.
struct Path {
    Vertex from;
    Vertex to;
    std::vector<Arrow> arrows;
    bool operator==(const Path&) const = default;
};

/// Render a path in right-to-left composition order, e.g. "alpha1*alpha0"
/// for the path that applies alpha0 first; trivial paths render as "e_s".
inline std::string formatPath(const Path& p) {
    if (p.arrows.empty()) return "e_" + to_string(p.from);
    std::string out;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
        if (!out.empty()) out += '*';
        out += to_string(*it);
    }
    return out;
}

namespace detail {

inline bool consecutivePairIsRelation(const QuiverPresentation& q, Arrow first, Arrow second) {
    for (const auto& [a, b] : q.relations)
        if (a == first && b == second) return true;
    return false;
}

inline bool pathAvoidsRelations(const QuiverPresentation& q, const std::vector<Arrow>& arrows) {
    for (std::size_t i = 0; i + 1 < arrows.size(); ++i)
        if (consecutivePairIsRelation(q, arrows[i], arrows[i + 1])) return false;
    return true;
}

}  // namespace detail

/// All paths that are nonzero modulo the relations, trivial paths included.
/// Enumeration walks forward from every vertex and discards any path that
/// contains a relation as a consecutive pair.
inline std::vector<Path> pathBasis(const QuiverPresentation& q) {
    std::vector<Path> out;
    for (Vertex v : q.vertices) out.push_back({v, v, {}});
    std::vector<Path> frontier = out;
    while (!frontier.empty()) {
        std::vector<Path> next;
        for (const Path& p : frontier)
            for (const ArrowInfo& a : q.arrows) {
                if (a.source != p.to) continue;
                Path ext{p.from, a.target, p.arrows};
                ext.arrows.push_back(a.name);
                if (!detail::pathAvoidsRelations(q, ext.arrows)) continue;
                next.push_back(ext);
            }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
        if (out.size() > 1000)
            throw std::logic_error("pathBasis: path enumeration did not terminate");
    }
    return out;
}

/// Finite-dimensional representation of the quiver: a dimension for every
/// vertex and a dims(target) x dims(source) rational matrix for every arrow.
struct QuiverRep {
    std::map<Vertex, int> dims;
    std::map<Arrow, RatMatrix> maps;

    bool operator==(const QuiverRep&) const = default;

    int dimAt(Vertex v) const {
        auto it = dims.find(v);
        return it == dims.end() ? 0 : it->second;
    }
    long long totalDim() const {
        long long t = 0;
        for (const auto& [v, d] : dims) t += d;
        return t;
    }
};

namespace detail {

inline RatMatrix zeroMatrix(int rows, int cols) {
    return RatMatrix(static_cast<std::size_t>(rows),
                     std::vector<Rational>(static_cast<std::size_t>(cols), Rational(0)));
}

inline RatMatrix matMul(const RatMatrix& a, const RatMatrix& b) {
    const std::size_t rows = a.size();
    const std::size_t inner = b.size();
    const std::size_t cols = inner == 0 ? 0 : b[0].size();
    RatMatrix out(rows, std::vector<Rational>(cols, Rational(0)));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == Rational(0)) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

inline RatMatrix transpose(const RatMatrix& m, int rows, int cols) {
    RatMatrix out(static_cast<std::size_t>(cols),
                  std::vector<Rational>(static_cast<std::size_t>(rows), Rational(0)));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
    return out;
}

inline bool isZeroMatrix(const RatMatrix& m) {
    for (const auto& row : m)
        for (const auto& x : row)
            if (x != Rational(0)) return false;
    return true;
}

/// Row-echelon rank by exact Gaussian elimination.
inline int matrixRank(RatMatrix m) {
    int rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::size_t pivotRow = 0;
    for (std::size_t col = 0; col < cols && pivotRow < rows; ++col) {
        std::size_t sel = pivotRow;
        while (sel < rows && m[sel][col] == Rational(0)) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[pivotRow]);
        for (std::size_t r = pivotRow + 1; r < rows; ++r) {
            if (m[r][col] == Rational(0)) continue;
            Rational factor = m[r][col] / m[pivotRow][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[pivotRow][c];
        }
        ++pivotRow;
        ++rank;
    }
    return rank;
}

}  // namespace detail

/// Check shapes and relations: every matrix has shape dims(target) x
/// dims(source) and every relation composes to zero.
inline void validateRep(const QuiverRep& r) {
    for (Arrow a : allArrows) {
        auto it = r.maps.find(a);
        const int rows = r.dimAt(arrowTarget(a));
        const int cols = r.dimAt(arrowSource(a));
        if (it == r.maps.end()) {
            if (rows != 0 && cols != 0)
                throw std::invalid_argument("validateRep: missing matrix for " + to_string(a));
            continue;
        }
        if (static_cast<int>(it->second.size()) != rows)
            throw std::invalid_argument("validateRep: bad row count for " + to_string(a));
        for (const auto& row : it->second)
            if (static_cast<int>(row.size()) != cols)
                throw std::invalid_argument("validateRep: bad column count for " + to_string(a));
    }
    auto matrixOf = [&](Arrow a) {
        auto it = r.maps.find(a);
        if (it != r.maps.end()) return it->second;
        return detail::zeroMatrix(r.dimAt(arrowTarget(a)), r.dimAt(arrowSource(a)));
    };
    for (const auto& [first, second] : theQuiver().relations)
        if (!detail::isZeroMatrix(detail::matMul(matrixOf(second), matrixOf(first))))
            throw std::invalid_argument("validateRep: relation " + to_string(second) + "*" +
                                        to_string(first) + " is nonzero");
}

/// Normalize a representation so that every arrow has an explicitly shaped
/// matrix and every vertex an explicit dimension.
inline QuiverRep normalizedRep(QuiverRep r) {
    for (Vertex v : allVertices)
        if (!r.dims.count(v)) r.dims[v] = 0;
    for (Arrow a : allArrows)
        if (!r.maps.count(a))
            r.maps[a] = detail::zeroMatrix(r.dimAt(arrowTarget(a)), r.dimAt(arrowSource(a)));
    validateRep(r);
    return r;
}

/// The simple representation concentrated at one vertex.
inline QuiverRep simpleRep(Vertex v) {
    QuiverRep r;
    r.dims[v] = 1;
    return normalizedRep(r);
}

/// Projective cover of the simple at v: the basis at vertex y is the set of
/// nonzero paths v -> y, and an arrow acts by appending itself when the
/// extended path is still nonzero.
inline QuiverRep projectiveCover(Vertex v) {
    const auto basis = pathBasis(theQuiver());
    std::map<Vertex, std::vector<Path>> at;
    for (const Path& p : basis)
        if (p.from == v) at[p.to].push_back(p);
    QuiverRep r;
    for (Vertex y : allVertices) r.dims[y] = static_cast<int>(at[y].size());
    for (Arrow a : allArrows) {
        const auto& colPaths = at[arrowSource(a)];
        const auto& rowPaths = at[arrowTarget(a)];
        RatMatrix m = detail::zeroMatrix(static_cast<int>(rowPaths.size()),
                                         static_cast<int>(colPaths.size()));
        for (std::size_t c = 0; c < colPaths.size(); ++c) {
            Path ext{v, arrowTarget(a), colPaths[c].arrows};
            ext.arrows.push_back(a);
            for (std::size_t rw = 0; rw < rowPaths.size(); ++rw)
                if (rowPaths[rw] == ext) m[rw][c] = Rational(1);
        }
        r.maps[a] = std::move(m);
    }
    validateRep(r);
    return r;
}

/// Injective envelope of the simple at v: the basis at vertex y is dual to
/// the set of nonzero paths y -> v, and an arrow a sends the functional of a
/// path p to the functional of the path with leading letter a removed.
inline QuiverRep injectiveEnvelope(Vertex v) {
    const auto basis = pathBasis(theQuiver());
    std::map<Vertex, std::vector<Path>> at;
    for (const Path& p : basis)
        if (p.to == v) at[p.from].push_back(p);
    QuiverRep r;
    for (Vertex y : allVertices) r.dims[y] = static_cast<int>(at[y].size());
    for (Arrow a : allArrows) {
        const auto& colPaths = at[arrowSource(a)];
        const auto& rowPaths = at[arrowTarget(a)];
        RatMatrix m = detail::zeroMatrix(static_cast<int>(rowPaths.size()),
                                         static_cast<int>(colPaths.size()));
        for (std::size_t c = 0; c < colPaths.size(); ++c) {
            const auto& arrows = colPaths[c].arrows;
            if (arrows.empty() || arrows.front() != a) continue;
            Path tail{arrowTarget(a), v, {arrows.begin() + 1, arrows.end()}};
            for (std::size_t rw = 0; rw < rowPaths.size(); ++rw)
                if (rowPaths[rw] == tail) m[rw][c] = Rational(1);
        }
        r.maps[a] = std::move(m);
    }
    validateRep(r);
    return r;
}

/// The uniserial module with composition series E, D3, S from top to socle:
/// one dimension at each of s, d3, e, with the two backward arrows acting by
/// the identity. It equals the injective envelope of the simple at s.
inline QuiverRep moduleSf() {
    QuiverRep r;
    r.dims[Vertex::s] = r.dims[Vertex::d3] = r.dims[Vertex::e] = 1;
    r.maps[Arrow::beta0] = {{Rational(1)}};
    r.maps[Arrow::beta1] = {{Rational(1)}};
    return normalizedRep(r);
}

/// The uniserial module with composition series D1, D2, B4 from top to
/// socle; it equals the injective envelope of the simple at b4.
inline QuiverRep moduleSfSqrt() {
    QuiverRep r;
    r.dims[Vertex::b4] = r.dims[Vertex::d2] = r.dims[Vertex::d1] = 1;
    r.maps[Arrow::delta0] = {{Rational(1)}};
    r.maps[Arrow::delta1] = {{Rational(1)}};
    return normalizedRep(r);
}

/// Fourier transform of a representation: relabel vertices by fourierVertex
/// and arrows by fourierArrow, keeping the matrices.
inline QuiverRep applyFourier(const QuiverRep& r) {
    QuiverRep out;
    for (const auto& [v, d] : r.dims) out.dims[fourierVertex(v)] = d;
    for (const auto& [a, m] : r.maps) out.maps[fourierArrow(a)] = m;
    return normalizedRep(out);
}

/// Holonomic duality: keep the dimensions, transpose every matrix, and move
/// it to the opposite arrow of the same edge.
inline QuiverRep applyDuality(const QuiverRep& r) {
    QuiverRep out;
    out.dims = r.dims;
    QuiverRep n = normalizedRep(r);
    for (Arrow a : allArrows) {
        Arrow b = reverseArrow(a);
        out.maps[a] = detail::transpose(n.maps.at(b), n.dimAt(arrowTarget(b)),
                                        n.dimAt(arrowSource(b)));
    }
    return normalizedRep(out);
}

/// Dimension of the space of homomorphisms a -> b: the nullity of the
/// intertwiner system M_b(arrow) phi_source = phi_target M_a(arrow).
inline int homDim(const QuiverRep& a, const QuiverRep& b) {
    QuiverRep A = normalizedRep(a), B = normalizedRep(b);
    std::map<Vertex, int> offset;
    int unknowns = 0;
    for (Vertex v : allVertices) {
        offset[v] = unknowns;
        unknowns += A.dimAt(v) * B.dimAt(v);
    }
    if (unknowns == 0) return 0;
    RatMatrix system;
    auto unknownIndex = [&](Vertex v, int row, int col, int colsAtV) {
        return offset[v] + row * colsAtV + col;
    };
    for (Arrow ar : allArrows) {
        const Vertex sv = arrowSource(ar), tv = arrowTarget(ar);
        const int as = A.dimAt(sv), at = A.dimAt(tv);
        const int bs = B.dimAt(sv), bt = B.dimAt(tv);
        const auto& ma = A.maps.at(ar);
        const auto& mb = B.maps.at(ar);
        // Equation (i,j): sum_k mb[i][k] phi_s[k][j] - sum_l phi_t[i][l] ma[l][j] = 0
        for (int i = 0; i < bt; ++i)
            for (int j = 0; j < as; ++j) {
                std::vector<Rational> eq(static_cast<std::size_t>(unknowns), Rational(0));
                for (int k = 0; k < bs; ++k)
                    eq[static_cast<std::size_t>(unknownIndex(sv, k, j, as))] += mb[i][k];
                for (int l = 0; l < at; ++l)
                    eq[static_cast<std::size_t>(unknownIndex(tv, i, l, at))] -= ma[l][j];
                system.push_back(std::move(eq));
            }
    }
    return unknowns - detail::matrixRank(std::move(system));
}

/// Dimension of Ext^1(a, b) in the category of representations bound by the
/// relations: cochains live on arrows, cocycles respect the relations, and
/// coboundaries come from vertex maps.
inline int ext1Dim(const QuiverRep& a, const QuiverRep& b) {
    QuiverRep A = normalizedRep(a), B = normalizedRep(b);
    std::map<Arrow, int> offset;
    int cochainDim = 0;
    for (Arrow ar : allArrows) {
        offset[ar] = cochainDim;
        cochainDim += A.dimAt(arrowSource(ar)) * B.dimAt(arrowTarget(ar));
    }
    int cocycleDim = cochainDim;
    if (cochainDim > 0) {
        RatMatrix constraints;
        auto unknownIndex = [&](Arrow ar, int row, int col) {
            return offset[ar] + row * A.dimAt(arrowSource(ar)) + col;
        };
        // For a relation second*first = 0 the deformed composite must stay
        // zero: M_b(second) psi_first + psi_second M_a(first) = 0.
        for (const auto& [first, second] : theQuiver().relations) {
            const int rows = B.dimAt(arrowTarget(second));
            const int cols = A.dimAt(arrowSource(first));
            const auto& mb = B.maps.at(second);
            const auto& ma = A.maps.at(first);
            const int midB = B.dimAt(arrowTarget(first));
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j) {
                    std::vector<Rational> eq(static_cast<std::size_t>(cochainDim), Rational(0));
                    for (int k = 0; k < midB; ++k)
                        eq[static_cast<std::size_t>(unknownIndex(first, k, j))] += mb[i][k];
                    for (int l = 0; l < A.dimAt(arrowSource(second)); ++l)
                        eq[static_cast<std::size_t>(unknownIndex(second, i, l))] +=
                            ma[l][j];
                    constraints.push_back(std::move(eq));
                }
        }
        cocycleDim = cochainDim - detail::matrixRank(std::move(constraints));
    }
    int hom0Domain = 0;  // dimension of the vertex cochain group
    for (Vertex v : allVertices) hom0Domain += A.dimAt(v) * B.dimAt(v);
    const int coboundaryDim = hom0Domain - homDim(A, B);
    return cocycleDim - coboundaryDim;
}

/// String modules: a walk through the quiver using arrows and formal
/// inverses, never backtracking and never composing two letters through a
/// relation. Each walk yields an indecomposable with one basis vector per
/// walk point.
inline std::vector<QuiverRep> enumerateIndecomposables(const QuiverPresentation& q) {
    // Special biserial sanity check: at most two arrows in and out of every
    // vertex, and every composable arrow pair is resolved by the relations
    // to at most one continuation per arrow.
    for (Vertex v : q.vertices) {
        int in = 0, out = 0;
        for (const ArrowInfo& a : q.arrows) {
            if (a.source == v) ++out;
            if (a.target == v) ++in;
        }
        if (in > 2 || out > 2)
            throw std::invalid_argument("enumerateIndecomposables: quiver is not special biserial");
    }
    for (const ArrowInfo& a : q.arrows) {
        int continuations = 0;
        for (const ArrowInfo& b : q.arrows)
            if (b.source == a.target && !detail::consecutivePairIsRelation(q, a.name, b.name))
                ++continuations;
        if (continuations > 1)
            throw std::invalid_argument("enumerateIndecomposables: quiver is not special biserial");
    }

    struct Letter {
        Arrow a;
        bool inverse;
        bool operator==(const Letter&) const = default;
    };
    auto letterStart = [](const Letter& l) { return l.inverse ? arrowTarget(l.a) : arrowSource(l.a); };
    auto letterEnd = [](const Letter& l) { return l.inverse ? arrowSource(l.a) : arrowTarget(l.a); };
    auto canCompose = [&](const Letter& x, const Letter& y) {
        if (letterEnd(x) != letterStart(y)) return false;
        if (x.a == y.a && x.inverse != y.inverse) return false;  // backtracking
        if (!x.inverse && !y.inverse && detail::consecutivePairIsRelation(q, x.a, y.a))
            return false;
        if (x.inverse && y.inverse && detail::consecutivePairIsRelation(q, y.a, x.a))
            return false;
        return true;
    };

    // Canonical encoding of a walk up to reversal (reversal inverts letters).
    auto encode = [](const std::vector<Letter>& w) {
        std::vector<int> code;
        for (const Letter& l : w) code.push_back(2 * static_cast<int>(l.a) + (l.inverse ? 1 : 0));
        return code;
    };
    auto reversed = [](std::vector<Letter> w) {
        std::reverse(w.begin(), w.end());
        for (Letter& l : w) l.inverse = !l.inverse;
        return w;
    };

    std::set<std::vector<int>> seen;
    std::vector<std::vector<Letter>> walks;
    std::vector<Letter> letters;
    for (const ArrowInfo& a : q.arrows) {
        letters.push_back({a.name, false});
        letters.push_back({a.name, true});
    }
    std::vector<Letter> current;
    std::function<void()> grow = [&]() {
        if (current.size() > 16)
            throw std::logic_error("enumerateIndecomposables: walk enumeration did not terminate");
        if (!current.empty()) {
            auto code = std::min(encode(current), encode(reversed(current)));
            if (seen.insert(code).second) walks.push_back(current);
        }
        for (const Letter& l : letters) {
            if (!current.empty() && !canCompose(current.back(), l)) continue;
            current.push_back(l);
            grow();
            current.pop_back();
        }
    };
    grow();

    std::vector<QuiverRep> out;
    for (Vertex v : q.vertices) out.push_back(simpleRep(v));
    for (const auto& w : walks) {
        // Walk points 0..n; point i sits at the end of letter i (point 0 at
        // the start of letter 1).
        const std::size_t n = w.size();
        std::vector<Vertex> point(n + 1);
        point[0] = letterStart(w[0]);
        for (std::size_t i = 0; i < n; ++i) point[i + 1] = letterEnd(w[i]);
        QuiverRep r;
        std::vector<int> indexAtVertex(n + 1, 0);
        for (std::size_t i = 0; i <= n; ++i)
            indexAtVertex[i] = r.dims[point[i]]++;
        for (Arrow a : allArrows)
            r.maps[a] = detail::zeroMatrix(r.dimAt(arrowTarget(a)), r.dimAt(arrowSource(a)));
        for (std::size_t i = 0; i < n; ++i) {
            const Letter& l = w[i];
            // Direct letter: point i -> point i+1; inverse: point i+1 -> point i.
            const std::size_t from = l.inverse ? i + 1 : i;
            const std::size_t to = l.inverse ? i : i + 1;
            r.maps[l.a][static_cast<std::size_t>(indexAtVertex[to])]
                       [static_cast<std::size_t>(indexAtVertex[from])] = Rational(1);
        }
        out.push_back(normalizedRep(r));
    }
    return out;
}

/// Isomorphism test via hom-dimension fingerprints against the complete
/// indecomposable list: two representations are isomorphic exactly when the
/// dimension of Hom(X, -) agrees for every indecomposable X.
inline bool isIsomorphic(const QuiverRep& a, const QuiverRep& b) {
    QuiverRep A = normalizedRep(a), B = normalizedRep(b);
    if (A.dims != B.dims) return false;
    static const std::vector<QuiverRep> indecs = enumerateIndecomposables(theQuiver());
    for (const QuiverRep& x : indecs)
        if (homDim(x, A) != homDim(x, B)) return false;
    return true;
}

}  // namespace trivec
