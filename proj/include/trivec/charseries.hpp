#pragma once

// Virtual characters with truncation windows, and exact expansion of
// geometric character series.
//
// A virtual character is a finitely supported Z-linear combination of basis
// symbols e^w over dominant weights w, known exactly on a declared truncation
// window and unknown outside it. Windows always bound the degree (sum of
// entries) on both sides and may additionally bound every entry (a "box");
// entry bounds are what make series with mixed-sign or constant factor
// degrees finitely expandable, since their degree slices are infinite.
//
// Window discipline: querying a multiplicity outside the window is an error
// (unknown is not zero); sums intersect windows; duality reflects them;
// multiplying by a single term with a constant weight shifts them exactly.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trivec/weights.hpp"

namespace trivec {

/// Raised when a computation would need values outside a declared window,
/// or when window arithmetic produces an empty region.
class WindowError : public std::runtime_error {
public:
    explicit WindowError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a series admits no finite expansion on the given window
/// (no finiteness certificate: mixed-sign degrees without entry bounds,
/// constant factors of both signs, a unit denominator factor, ...).
class ExpansionError : public std::runtime_error {
public:
    explicit ExpansionError(const std::string& what) : std::runtime_error(what) {}
};

/// Region of weight space on which a virtual character is known exactly.
///
/// Always bounds the degree: minDegree <= sum(w) <= maxDegree. Optionally
/// also bounds every entry ("box"): minEntry <= w_i <= maxEntry for all i.
class TruncationWindow {
public:
    /// Degree-only window. Throws std::invalid_argument if minDeg > maxDeg.
    TruncationWindow(long long minDeg, long long maxDeg)
        : minDegree_(minDeg), maxDegree_(maxDeg) {
        if (minDeg > maxDeg)
            throw std::invalid_argument("TruncationWindow: minDegree > maxDegree");
    }

    /// Window with both degree and entry bounds.
    static TruncationWindow box(long long minDeg, long long maxDeg, int minEntry, int maxEntry) {
        if (minEntry > maxEntry)
            throw std::invalid_argument("TruncationWindow: minEntry > maxEntry");
        TruncationWindow w(minDeg, maxDeg);
        w.minEntry_ = minEntry;
        w.maxEntry_ = maxEntry;
        return w;
    }

    /// Smallest window containing exactly the single weight w.
    static TruncationWindow around(const Weight& w) {
        if (w.rank() == 0) return TruncationWindow(0, 0);
        return box(w.degree(), w.degree(), w.entries().back(), w.entries().front());
    }

    long long minDegree() const { return minDegree_; }
    long long maxDegree() const { return maxDegree_; }
    bool hasBox() const { return minEntry_.has_value(); }
    int minEntry() const { return minEntry_.value(); }
    int maxEntry() const { return maxEntry_.value(); }

    /// Entry spread budget maxEntry - minEntry; requires a box.
    int spreadBudget() const { return maxEntry() - minEntry(); }

    bool contains(const Weight& w) const {
        long long d = w.degree();
        if (d < minDegree_ || d > maxDegree_) return false;
        if (hasBox() && w.rank() > 0) {
            if (w.entries().front() > *maxEntry_) return false;
            if (w.entries().back() < *minEntry_) return false;
        }
        return true;
    }

    /// True when every weight this window admits is also admitted by *this.
    bool covers(const TruncationWindow& other) const {
        if (other.minDegree_ < minDegree_ || other.maxDegree_ > maxDegree_) return false;
        if (!hasBox()) return true;
        if (!other.hasBox()) return false;
        return *minEntry_ <= *other.minEntry_ && *maxEntry_ >= *other.maxEntry_;
    }

    /// Exact image under multiplication by e^{(c,...,c)} (rank entries).
    TruncationWindow shiftedByConstant(int c, int rank) const {
        TruncationWindow w(minDegree_ + static_cast<long long>(c) * rank,
                           maxDegree_ + static_cast<long long>(c) * rank);
        if (hasBox()) {
            w.minEntry_ = *minEntry_ + c;
            w.maxEntry_ = *maxEntry_ + c;
        }
        return w;
    }

    /// Exact image under weight duality w -> (-w_n, ..., -w_1).
    TruncationWindow reflected() const {
        TruncationWindow w(-maxDegree_, -minDegree_);
        if (hasBox()) {
            w.minEntry_ = -*maxEntry_;
            w.maxEntry_ = -*minEntry_;
        }
        return w;
    }

    /// Intersection region. Throws WindowError when empty.
    static TruncationWindow intersect(const TruncationWindow& a, const TruncationWindow& b) {
        long long lo = std::max(a.minDegree_, b.minDegree_);
        long long hi = std::min(a.maxDegree_, b.maxDegree_);
        if (lo > hi) throw WindowError("TruncationWindow::intersect: empty degree range");
        TruncationWindow w(lo, hi);
        if (a.hasBox() || b.hasBox()) {
            int elo = std::max(a.hasBox() ? *a.minEntry_ : INT_MIN_SENTINEL,
                               b.hasBox() ? *b.minEntry_ : INT_MIN_SENTINEL);
            int ehi = std::min(a.hasBox() ? *a.maxEntry_ : INT_MAX_SENTINEL,
                               b.hasBox() ? *b.maxEntry_ : INT_MAX_SENTINEL);
            if (elo > ehi) throw WindowError("TruncationWindow::intersect: empty entry range");
            w.minEntry_ = elo;
            w.maxEntry_ = ehi;
        }
        return w;
    }

    friend bool operator==(const TruncationWindow& a, const TruncationWindow& b) = default;

private:
    static constexpr int INT_MIN_SENTINEL = -1000000000;
    static constexpr int INT_MAX_SENTINEL = 1000000000;
    long long minDegree_;
    long long maxDegree_;
    std::optional<int> minEntry_;
    std::optional<int> maxEntry_;
};

/// Finitely supported virtual character, exact on its truncation window.
class VirtualCharacter {
public:
    VirtualCharacter(int rank, TruncationWindow window)
        : rank_(rank), window_(std::move(window)) {
        if (rank < 0) throw std::invalid_argument("VirtualCharacter: negative rank");
    }

    int rank() const { return rank_; }
    const TruncationWindow& window() const { return window_; }
    const std::map<Weight, long long>& terms() const { return terms_; }

    /// Number of weights with nonzero multiplicity.
    std::size_t supportSize() const { return terms_.size(); }

    /// Set the multiplicity of w (erases on zero). The weight must have the
    /// character's rank and lie in the window.
    void set(const Weight& w, long long mult) {
        checkWeight(w);
        if (mult == 0)
            terms_.erase(w);
        else
            terms_[w] = mult;
    }

    /// Add mult to the multiplicity of w (erases on cancellation to zero).
    void addTerm(const Weight& w, long long mult) {
        if (mult == 0) return;
        checkWeight(w);
        auto [it, inserted] = terms_.try_emplace(w, 0);
        it->second += mult;
        if (it->second == 0) terms_.erase(it);
    }

    /// Multiplicity of w. Throws WindowError when w is outside the window:
    /// outside the window the value is unknown, not zero.
    long long multiplicity(const Weight& w) const {
        if (w.rank() != rank_)
            throw std::invalid_argument("multiplicity: rank mismatch");
        if (!window_.contains(w))
            throw WindowError("multiplicity: weight " + formatWeight(w) +
                              " is outside the truncation window");
        auto it = terms_.find(w);
        return it == terms_.end() ? 0 : it->second;
    }

    /// True when every multiplicity is 0 or 1.
    bool isMultiplicityFree() const {
        for (const auto& [w, m] : terms_)
            if (m != 1) return false;
        return true;
    }

    /// True when every multiplicity is >= 0.
    bool isEffective() const {
        for (const auto& [w, m] : terms_)
            if (m < 0) return false;
        return true;
    }

    friend bool operator==(const VirtualCharacter& a, const VirtualCharacter& b) = default;

private:
    void checkWeight(const Weight& w) const {
        if (w.rank() != rank_)
            throw std::invalid_argument("VirtualCharacter: weight rank mismatch");
        if (!window_.contains(w))
            throw WindowError("VirtualCharacter: weight " + formatWeight(w) +
                              " lies outside the truncation window");
    }

    int rank_;
    TruncationWindow window_;
    std::map<Weight, long long> terms_;
};

/// Restriction to the intersection with w (terms outside are dropped).
inline VirtualCharacter restrict(const VirtualCharacter& a, const TruncationWindow& w) {
    VirtualCharacter r(a.rank(), TruncationWindow::intersect(a.window(), w));
    for (const auto& [wt, m] : a.terms())
        if (r.window().contains(wt)) r.addTerm(wt, m);
    return r;
}

/// Sum on the intersection window.
inline VirtualCharacter operator+(const VirtualCharacter& a, const VirtualCharacter& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("character sum: rank mismatch");
    VirtualCharacter r = restrict(a, b.window());
    for (const auto& [wt, m] : b.terms())
        if (r.window().contains(wt)) r.addTerm(wt, m);
    return r;
}

/// Difference on the intersection window.
inline VirtualCharacter operator-(const VirtualCharacter& a, const VirtualCharacter& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("character difference: rank mismatch");
    VirtualCharacter r = restrict(a, b.window());
    for (const auto& [wt, m] : b.terms())
        if (r.window().contains(wt)) r.addTerm(wt, -m);
    return r;
}

/// Multiplication by c * e^{(u,...,u)}; the window shifts exactly.
inline VirtualCharacter shiftByConstant(const VirtualCharacter& a, int u, long long c = 1) {
    VirtualCharacter r(a.rank(), a.window().shiftedByConstant(u, a.rank()));
    Weight shift = Weight::constant(a.rank(), u);
    for (const auto& [wt, m] : a.terms()) r.addTerm(add(wt, shift), m * c);
    return r;
}

/// Formal product. Exact window when either factor is a single term with a
/// constant weight (a pure shift); otherwise the result carries the
/// Minkowski-sum window (degrees add; entry bounds add when both factors
/// have them), which is correct for every representable product term but is
/// complete only where the factors' truncations are.
inline VirtualCharacter formalProduct(const VirtualCharacter& a, const VirtualCharacter& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("formalProduct: rank mismatch");
    auto asConstantShift = [](const VirtualCharacter& x) -> std::optional<std::pair<int, long long>> {
        if (x.terms().size() != 1) return std::nullopt;
        const auto& [w, m] = *x.terms().begin();
        if (!w.isConstant() || w.rank() == 0) return std::nullopt;
        return std::make_pair(w.entries()[0], m);
    };
    if (auto s = asConstantShift(b)) return shiftByConstant(a, s->first, s->second);
    if (auto s = asConstantShift(a)) return shiftByConstant(b, s->first, s->second);

    const auto& wa = a.window();
    const auto& wb = b.window();
    TruncationWindow w =
        (wa.hasBox() && wb.hasBox())
            ? TruncationWindow::box(wa.minDegree() + wb.minDegree(), wa.maxDegree() + wb.maxDegree(),
                                    wa.minEntry() + wb.minEntry(), wa.maxEntry() + wb.maxEntry())
            : TruncationWindow(wa.minDegree() + wb.minDegree(), wa.maxDegree() + wb.maxDegree());
    VirtualCharacter r(a.rank(), w);
    for (const auto& [x, mx] : a.terms())
        for (const auto& [y, my] : b.terms()) r.addTerm(add(x, y), mx * my);
    return r;
}

/// Dual character: e^w -> e^{w*} termwise; the window reflects exactly.
inline VirtualCharacter dualSeries(const VirtualCharacter& a) {
    VirtualCharacter r(a.rank(), a.window().reflected());
    for (const auto& [wt, m] : a.terms()) r.addTerm(dual(wt), m);
    return r;
}

/// Constant twist applied by the Fourier transform in rank 6: e^{(-10^6)}.
inline constexpr int kFourierTwistEntry = -10;

/// Fourier transform on characters in rank 6: dualize, then twist by
/// e^{(-10^6)}. An involution on the window it maps to and from.
inline VirtualCharacter fourier(const VirtualCharacter& a) {
    if (a.rank() != 6)
        throw std::invalid_argument("fourier: defined for rank 6 characters");
    return shiftByConstant(dualSeries(a), kFourierTwistEntry);
}

/// True when a and b agree at every weight of w. Both characters must be
/// exact on all of w (their windows must cover it), else WindowError.
inline bool agreesOn(const VirtualCharacter& a, const VirtualCharacter& b,
                     const TruncationWindow& w) {
    if (a.rank() != b.rank()) throw std::invalid_argument("agreesOn: rank mismatch");
    if (!a.window().covers(w) || !b.window().covers(w))
        throw WindowError("agreesOn: a character is not exact on the comparison window");
    for (const auto& [wt, m] : a.terms())
        if (w.contains(wt)) {
            auto it = b.terms().find(wt);
            if ((it == b.terms().end() ? 0 : it->second) != m) return false;
        }
    for (const auto& [wt, m] : b.terms())
        if (w.contains(wt) && a.terms().find(wt) == a.terms().end()) return false;
    return true;
}

/// Quotient of a finite sum of basis terms by a product of geometric
/// factors 1/(1 - e^d), optionally times a two-sided geometric sum
/// sum_{i in Z} e^{i*s} with s a nonzero constant weight.
struct RationalCharacter {
    int rank = 6;
    std::vector<std::pair<Weight, long long>> numerator;
    std::vector<Weight> denominators;
    std::optional<Weight> bilateral;
};

namespace detail {

/// Expansion over denominators whose degrees are all nonzero of one sign:
/// the degree window alone truncates the geometric series.
inline void expandDegreeMode(const RationalCharacter& rc, const TruncationWindow& window,
                             VirtualCharacter& out) {
    int sign = 0;
    for (const Weight& d : rc.denominators) {
        long long deg = d.degree();
        if (deg == 0)
            throw ExpansionError(
                "expand: a denominator factor has degree 0; a degree window cannot "
                "truncate it (use a window with entry bounds)");
        int s = deg > 0 ? 1 : -1;
        if (sign == 0) sign = s;
        if (s != sign)
            throw ExpansionError(
                "expand: mixed-sign denominator degrees admit no finite expansion "
                "on a degree window (use a window with entry bounds)");
    }
    if (rc.bilateral)
        throw ExpansionError(
            "expand: a two-sided geometric factor needs a window with entry bounds");

    const auto& dens = rc.denominators;
    // DFS over denominator exponents; same-sign degrees make the degree
    // bound monotone, so each branch cuts off.
    auto rec = [&](auto&& self, std::size_t i, const Weight& cur, long long coeff) -> void {
        long long deg = cur.degree();
        if (sign >= 0 && deg > window.maxDegree()) return;
        if (sign < 0 && deg < window.minDegree()) return;
        if (i == dens.size()) {
            if (window.contains(cur)) out.addTerm(cur, coeff);
            return;
        }
        Weight w = cur;
        while (true) {
            self(self, i + 1, w, coeff);
            w = add(w, dens[i]);
            long long d = w.degree();
            if (sign >= 0 && d > window.maxDegree()) break;
            if (sign < 0 && d < window.minDegree()) break;
        }
    };
    for (const auto& [w0, c0] : rc.numerator) rec(rec, 0, w0, c0);
}

/// Expansion on an entry-bounded window. The spread w_1 - w_n is additive,
/// nonnegative, and zero exactly on constant weights, so the window's spread
/// budget caps every non-constant factor exponent; the leftover constant
/// part (constant factors and the optional two-sided factor) reduces to a
/// one-dimensional equation solved exactly.
inline void expandBoxMode(const RationalCharacter& rc, const TruncationWindow& window,
                          VirtualCharacter& out) {
    const int rank = rc.rank;
    if (rank <= 0)
        throw std::invalid_argument("expand: box mode needs positive rank");
    std::vector<Weight> nonConst;
    std::vector<int> constVals;  // entry value c of each constant factor (c^rank)
    for (const Weight& d : rc.denominators) {
        if (d.isConstant()) {
            int c = d.entries().empty() ? 0 : d.entries()[0];
            if (c == 0) throw ExpansionError("expand: unit denominator factor 1/(1-1)");
            constVals.push_back(c);
        } else {
            nonConst.push_back(d);
        }
    }
    int bilateralStep = 0;
    if (rc.bilateral) {
        if (!rc.bilateral->isConstant() || rc.bilateral->entries().empty() ||
            rc.bilateral->entries()[0] == 0)
            throw std::invalid_argument("expand: two-sided factor must be a nonzero constant weight");
        bilateralStep = rc.bilateral->entries()[0];
        if (!constVals.empty())
            throw ExpansionError(
                "expand: a two-sided factor together with constant factors admits no "
                "finite expansion");
    }
    for (std::size_t i = 1; i < constVals.size(); ++i)
        if ((constVals[i] > 0) != (constVals[0] > 0))
            throw ExpansionError(
                "expand: constant denominator factors of both signs admit no finite "
                "expansion");

    const int budgetMax = window.spreadBudget();

    // Count the ways to write u as sum c_j * a_j (a_j >= 0) plus optionally
    // bilateralStep * i (i in Z), adding base+(u^rank) for each solution.
    auto emitConstantPart = [&](const Weight& base, long long coeff) {
        long long degB = base.degree();
        int minB = base.entries().back();
        int maxB = base.entries().front();
        long long loE = static_cast<long long>(window.minEntry()) - minB;
        long long hiE = static_cast<long long>(window.maxEntry()) - maxB;
        // ceil/floor division for the degree constraint rank*u + degB in range
        auto ceilDiv = [](long long a, long long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); };
        auto floorDiv = [](long long a, long long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
        long long loD = ceilDiv(window.minDegree() - degB, rank);
        long long hiD = floorDiv(window.maxDegree() - degB, rank);
        long long uLo = std::max(loE, loD);
        long long uHi = std::min(hiE, hiD);
        if (uLo > uHi) return;

        auto emit = [&](long long u) {
            out.addTerm(add(base, Weight::constant(rank, static_cast<int>(u))), coeff);
        };
        auto rec = [&](auto&& self, std::size_t j, long long curU) -> void {
            if (j == constVals.size()) {
                if (bilateralStep != 0) {
                    // u = curU + bilateralStep * i for every integer i in range
                    for (long long u = uLo; u <= uHi; ++u)
                        if ((u - curU) % bilateralStep == 0) emit(u);
                } else if (curU >= uLo && curU <= uHi) {
                    emit(curU);
                }
                return;
            }
            int c = constVals[j];
            for (long long a = 0;; ++a) {
                long long next = curU + static_cast<long long>(c) * a;
                if (c > 0 && next > uHi) break;
                if (c < 0 && next < uLo) break;
                self(self, j + 1, next);
            }
        };
        rec(rec, 0, 0);
    };

    // DFS over non-constant factor exponents under the spread budget.
    auto rec = [&](auto&& self, std::size_t i, const Weight& cur, long long coeff) -> void {
        if (cur.spread() > budgetMax) return;
        if (i == nonConst.size()) {
            emitConstantPart(cur, coeff);
            return;
        }
        Weight w = cur;
        while (w.spread() <= budgetMax) {
            self(self, i + 1, w, coeff);
            w = add(w, nonConst[i]);
        }
    };
    for (const auto& [w0, c0] : rc.numerator) rec(rec, 0, w0, c0);
}

}  // namespace detail

/// Expand a rational character exactly on the window. Throws ExpansionError
/// when the window provides no finiteness certificate for the series.
inline VirtualCharacter expand(const RationalCharacter& rc, const TruncationWindow& window) {
    for (const auto& [w, c] : rc.numerator)
        if (w.rank() != rc.rank) throw std::invalid_argument("expand: numerator rank mismatch");
    for (const Weight& d : rc.denominators) {
        if (d.rank() != rc.rank) throw std::invalid_argument("expand: denominator rank mismatch");
        if (d.rank() > 0 && d.isConstant() && d.entries()[0] == 0)
            throw ExpansionError("expand: unit denominator factor 1/(1-1)");
    }
    if (rc.bilateral && rc.bilateral->rank() != rc.rank)
        throw std::invalid_argument("expand: two-sided factor rank mismatch");

    VirtualCharacter out(rc.rank, window);
    if (window.hasBox())
        detail::expandBoxMode(rc, window, out);
    else
        detail::expandDegreeMode(rc, window, out);
    return out;
}

/// Names of the character series the library knows in closed or derived form.
enum class CharName { S, E, Sf, SfSqrt, B4, D1, D2, D3 };

inline std::string to_string(CharName n) {
    switch (n) {
        case CharName::S: return "S";
        case CharName::E: return "E";
        case CharName::Sf: return "Sf";
        case CharName::SfSqrt: return "SfSqrt";
        case CharName::B4: return "B4";
        case CharName::D1: return "D1";
        case CharName::D2: return "D2";
        case CharName::D3: return "D3";
    }
    throw std::logic_error("to_string(CharName): bad value");
}

inline CharName parseCharName(const std::string& s) {
    if (s == "S") return CharName::S;
    if (s == "E") return CharName::E;
    if (s == "Sf") return CharName::Sf;
    if (s == "SfSqrt") return CharName::SfSqrt;
    if (s == "B4") return CharName::B4;
    if (s == "D1") return CharName::D1;
    if (s == "D2") return CharName::D2;
    if (s == "D3") return CharName::D3;
    throw std::invalid_argument("unknown character name: " + s);
}

namespace detail {

inline Weight w6(std::initializer_list<int> xs) { return Weight(IntVec(xs)); }

/// The five geometric factors of the coordinate-ring series [S]; the first
/// four generate a multiplicity-free cone (their exponent tuples are
/// Z-linearly independent together with the constant factor), the fifth is
/// the constant factor (2^6) for the invariant of degree 12.
inline const std::vector<Weight>& sDenominators() {
    static const std::vector<Weight> dens = {
        w6({1, 1, 1, 0, 0, 0}), w6({2, 1, 1, 1, 1, 0}), w6({2, 2, 2, 1, 1, 1}),
        w6({2, 2, 2, 2, 2, 2}), w6({3, 3, 2, 2, 1, 1})};
    return dens;
}

/// The four non-constant factors of [S] (the series of the hypersurface ring).
inline std::vector<Weight> sDenominatorsNoConstant() {
    std::vector<Weight> dens = sDenominators();
    dens.erase(dens.begin() + 3);
    return dens;
}

}  // namespace detail

/// Closed rational form of the named series, where one exists.
/// S, E, Sf, SfSqrt and B4 have closed forms; D1, D2, D3 are derived inside
/// namedCharacter and have none (std::invalid_argument here).
inline RationalCharacter rationalForm(CharName name) {
    using detail::w6;
    RationalCharacter rc;
    rc.rank = 6;
    switch (name) {
        case CharName::S:
            rc.numerator = {{Weight::zero(6), 1}};
            rc.denominators = detail::sDenominators();
            return rc;
        case CharName::E:
            rc.numerator = {{Weight::constant(6, -10), 1}};
            for (const Weight& d : detail::sDenominators()) rc.denominators.push_back(dual(d));
            return rc;
        case CharName::Sf:
            rc.numerator = {{Weight::zero(6), 1}};
            rc.denominators = detail::sDenominatorsNoConstant();
            rc.bilateral = Weight::constant(6, 2);
            return rc;
        case CharName::SfSqrt:
            rc.numerator = {{Weight::constant(6, 1), 1}};
            rc.denominators = detail::sDenominatorsNoConstant();
            rc.bilateral = Weight::constant(6, 2);
            return rc;
        case CharName::B4:
            rc.numerator = {{Weight::constant(6, -3), 1}};
            rc.denominators = {w6({0, 0, 0, -1, -1, -1}), w6({1, 1, 0, 0, -1, -1}),
                               w6({1, 1, 1, 0, 0, 0}), w6({2, 1, 1, 1, 1, 0}),
                               Weight::constant(6, 2)};
            return rc;
        default:
            throw std::invalid_argument("rationalForm: " + to_string(name) +
                                        " has no closed rational form");
    }
}

/// Character of the k-th graded piece of the filtration between the
/// hypersurface localization and the polynomial ring: a two-factor geometric
/// cone over the truncated lattice {m + n >= k}. Exact on the window; works
/// with or without entry bounds (the cone is one-signed in degree).
inline VirtualCharacter charIkTilde(int k, const TruncationWindow& window) {
    if (k < 1) throw std::invalid_argument("charIkTilde: k must be >= 1");
    using detail::w6;
    const Weight genM = w6({2, 2, 2, 1, 1, 1});  // degree 9, spread 1
    const Weight genN = w6({3, 3, 2, 2, 1, 1});  // degree 12, spread 2

    RationalCharacter rc;
    rc.rank = 6;
    rc.denominators = {w6({1, 1, 1, 0, 0, 0}), w6({2, 1, 1, 1, 1, 0})};
    const long long maxDeg = window.maxDegree();
    const int budget = window.hasBox() ? window.spreadBudget() : -1;
    for (int n = 0; 12LL * n <= maxDeg; ++n) {
        if (budget >= 0 && 2 * n > budget) break;
        for (int m = 0; 9LL * m + 12LL * n <= maxDeg; ++m) {
            if (budget >= 0 && m + 2 * n > budget) break;
            if (m + n < k) continue;
            rc.numerator.emplace_back(add(scale(genM, m), scale(genN, n)), 1);
        }
    }
    if (rc.numerator.empty()) return VirtualCharacter(6, window);
    return expand(rc, window);
}

/// The localization filtration sum [S] + sum_{k>=1} [I~_k] * e^{(-2k)^6},
/// which equals [B4] * e^{(3^6)}, expanded exactly on the window. Each
/// summand of [I~_k] has spread >= k and the shifts are spread-neutral, so
/// the k-sum truncates exactly at the window's spread budget. Requires entry
/// bounds (the summands have infinite degree slices).
inline VirtualCharacter charB4ViaFiltration(const TruncationWindow& window) {
    if (!window.hasBox())
        throw ExpansionError(
            "charB4ViaFiltration: the filtration sum has infinite degree slices; "
            "use a window with entry bounds");
    VirtualCharacter rhs = expand(rationalForm(CharName::S), window);
    const int kMax = window.spreadBudget();
    for (int k = 1; k <= kMax; ++k) {
        TruncationWindow wk = window.shiftedByConstant(2 * k, 6);
        rhs = rhs + shiftByConstant(charIkTilde(k, wk), -2 * k);
    }
    return rhs;
}

/// Expand the named character series exactly on the window.
///
/// S and E admit degree-only windows (their supports are one-signed cones);
/// Sf, SfSqrt, B4, D1, D2, D3 require entry bounds (their degree slices are
/// infinite) and throw ExpansionError otherwise. The derived names check
/// internal consistency: D1, D2, D3 must come out effective (no negative
/// multiplicities), else std::logic_error.
inline VirtualCharacter namedCharacter(CharName name, const TruncationWindow& window) {
    switch (name) {
        case CharName::S:
        case CharName::E:
        case CharName::Sf:
        case CharName::SfSqrt:
        case CharName::B4:
            return expand(rationalForm(name), window);
        case CharName::D3: {
            VirtualCharacter d3 = namedCharacter(CharName::Sf, window) -
                                  namedCharacter(CharName::S, window) -
                                  namedCharacter(CharName::E, window);
            if (!d3.isEffective())
                throw std::logic_error("namedCharacter: derived D3 has a negative multiplicity");
            return d3;
        }
        case CharName::D1: {
            // [D1] = [B4]* . e^{(-10^6)}: compute B4 on the exactly
            // transformed window, then dualize and twist back onto `window`.
            TruncationWindow b4Win = window.shiftedByConstant(-kFourierTwistEntry, 6).reflected();
            VirtualCharacter d1 = fourier(namedCharacter(CharName::B4, b4Win));
            if (!d1.isEffective())
                throw std::logic_error("namedCharacter: derived D1 has a negative multiplicity");
            return d1;
        }
        case CharName::D2: {
            VirtualCharacter d2 = namedCharacter(CharName::SfSqrt, window) -
                                  namedCharacter(CharName::B4, window) -
                                  namedCharacter(CharName::D1, window);
            if (!d2.isEffective())
                throw std::logic_error("namedCharacter: derived D2 has a negative multiplicity");
            return d2;
        }
    }
    throw std::logic_error("namedCharacter: bad name");
}

}  // namespace trivec
