// Truncation windows, virtual-character arithmetic, and exact expansion of
// the named geometric series, cross-checked against independent brute-force
// oracles.

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "trivec/charseries.hpp"

using namespace trivec;

namespace {

Weight w6(std::initializer_list<int> xs) { return Weight(IntVec(xs)); }

/// Independent oracle for the polynomial-ring series: enumerate all
/// nonnegative exponent tuples of the five generators directly.
std::map<Weight, long long> bruteS(long long maxDeg) {
    const Weight g1 = w6({1, 1, 1, 0, 0, 0});  // degree 3
    const Weight g2 = w6({2, 1, 1, 1, 1, 0});  // degree 6
    const Weight g3 = w6({2, 2, 2, 1, 1, 1});  // degree 9
    const Weight g4 = w6({2, 2, 2, 2, 2, 2});  // degree 12
    const Weight g5 = w6({3, 3, 2, 2, 1, 1});  // degree 12
    std::map<Weight, long long> out;
    for (int a = 0; 3 * a <= maxDeg; ++a)
        for (int b = 0; 3 * a + 6 * b <= maxDeg; ++b)
            for (int c = 0; 3 * a + 6 * b + 9 * c <= maxDeg; ++c)
                for (int d = 0; 3 * a + 6 * b + 9 * c + 12 * d <= maxDeg; ++d)
                    for (int e = 0; 3 * a + 6 * b + 9 * c + 12 * d + 12 * e <= maxDeg; ++e) {
                        Weight w = add(add(add(scale(g1, a), scale(g2, b)),
                                           add(scale(g3, c), scale(g4, d))),
                                       scale(g5, e));
                        out[w] += 1;
                    }
    return out;
}

/// Independent oracle for the filtration graded pieces: quadruple loop over
/// the two lattice parameters and the two geometric factor exponents.
std::map<Weight, long long> bruteIk(int k, long long maxDeg) {
    const Weight genM = w6({2, 2, 2, 1, 1, 1});
    const Weight genN = w6({3, 3, 2, 2, 1, 1});
    const Weight f1 = w6({1, 1, 1, 0, 0, 0});
    const Weight f2 = w6({2, 1, 1, 1, 1, 0});
    std::map<Weight, long long> out;
    for (int m = 0; 9 * m <= maxDeg; ++m)
        for (int n = 0; 9 * m + 12 * n <= maxDeg; ++n) {
            if (m + n < k) continue;
            for (int a = 0; 9 * m + 12 * n + 3 * a <= maxDeg; ++a)
                for (int b = 0; 9 * m + 12 * n + 3 * a + 6 * b <= maxDeg; ++b) {
                    Weight w = add(add(scale(genM, m), scale(genN, n)),
                                   add(scale(f1, a), scale(f2, b)));
                    out[w] += 1;
                }
        }
    return out;
}

VirtualCharacter singleTerm(const Weight& w, long long m = 1) {
    VirtualCharacter c(w.rank(), TruncationWindow::around(w));
    c.set(w, m);
    return c;
}

/// Random effective character supported on random dominant weights.
VirtualCharacter randomCharacter(std::mt19937& rng) {
    std::uniform_int_distribution<int> entry(-8, 8);
    std::uniform_int_distribution<int> count(1, 6);
    std::uniform_int_distribution<long long> mult(1, 3);
    VirtualCharacter c(6, TruncationWindow::box(-60, 60, -10, 10));
    int n = count(rng);
    for (int t = 0; t < n; ++t) {
        IntVec v(6);
        for (int& x : v) x = entry(rng);
        std::sort(v.begin(), v.end(), std::greater<int>());
        c.addTerm(Weight(std::move(v)), mult(rng));
    }
    return c;
}

}  // namespace

TEST_CASE("window construction and membership") {
    REQUIRE_THROWS_AS(TruncationWindow(3, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(TruncationWindow::box(0, 1, 2, 1), std::invalid_argument);

    TruncationWindow w(0, 12);
    REQUIRE(w.contains(w6({2, 2, 2, 2, 2, 2})));
    REQUIRE(!w.contains(Weight::constant(6, -1)));
    REQUIRE(!w.hasBox());

    TruncationWindow b = TruncationWindow::box(-12, 12, -2, 2);
    REQUIRE(b.contains(Weight::constant(6, 2)));
    REQUIRE(!b.contains(w6({3, 0, 0, 0, 0, 0})));  // entry 3 > maxEntry
    REQUIRE(b.spreadBudget() == 4);

    TruncationWindow a = TruncationWindow::around(w6({-6, -6, -6, -7, -7, -7}));
    REQUIRE(a.contains(w6({-6, -6, -6, -7, -7, -7})));
    REQUIRE(a.minDegree() == -39);
    REQUIRE(a.maxDegree() == -39);
    REQUIRE(a.minEntry() == -7);
    REQUIRE(a.maxEntry() == -6);
    REQUIRE(!a.contains(w6({-5, -6, -7, -7, -7, -7})));  // same degree, outside box
}

TEST_CASE("window transforms") {
    TruncationWindow b = TruncationWindow::box(-12, 6, -4, 3);
    TruncationWindow s = b.shiftedByConstant(2, 6);
    REQUIRE(s.minDegree() == 0);
    REQUIRE(s.maxDegree() == 18);
    REQUIRE(s.minEntry() == -2);
    REQUIRE(s.maxEntry() == 5);

    TruncationWindow r = b.reflected();
    REQUIRE(r.minDegree() == -6);
    REQUIRE(r.maxDegree() == 12);
    REQUIRE(r.minEntry() == -3);
    REQUIRE(r.maxEntry() == 4);

    TruncationWindow i = TruncationWindow::intersect(TruncationWindow(-5, 10),
                                                     TruncationWindow::box(0, 20, -1, 1));
    REQUIRE(i.minDegree() == 0);
    REQUIRE(i.maxDegree() == 10);
    REQUIRE(i.hasBox());
    REQUIRE(i.minEntry() == -1);

    REQUIRE_THROWS_AS(TruncationWindow::intersect(TruncationWindow(0, 1), TruncationWindow(5, 9)),
                      WindowError);
    REQUIRE_THROWS_AS(TruncationWindow::intersect(TruncationWindow::box(0, 9, 0, 1),
                                                  TruncationWindow::box(0, 9, 4, 5)),
                      WindowError);

    REQUIRE(TruncationWindow(-10, 10).covers(TruncationWindow(-5, 5)));
    REQUIRE(!TruncationWindow(-10, 10).covers(TruncationWindow(-5, 11)));
    REQUIRE(TruncationWindow(-10, 10).covers(TruncationWindow::box(-5, 5, -2, 2)));
    REQUIRE(!TruncationWindow::box(-10, 10, -3, 3).covers(TruncationWindow(-5, 5)));
    REQUIRE(TruncationWindow::box(-10, 10, -3, 3).covers(TruncationWindow::box(-5, 5, -2, 2)));
}

TEST_CASE("character term discipline") {
    VirtualCharacter c(6, TruncationWindow(0, 12));
    c.set(w6({1, 1, 1, 0, 0, 0}), 2);
    REQUIRE(c.multiplicity(w6({1, 1, 1, 0, 0, 0})) == 2);
    REQUIRE(c.multiplicity(Weight::zero(6)) == 0);  // in window, absent term
    REQUIRE_THROWS_AS(c.multiplicity(Weight::constant(6, -1)), WindowError);
    REQUIRE_THROWS_AS(c.set(Weight::constant(6, 3), 1), WindowError);  // degree 18 > 12
    REQUIRE_THROWS_AS(c.multiplicity(Weight({1, 0})), std::invalid_argument);

    c.addTerm(w6({1, 1, 1, 0, 0, 0}), -2);
    REQUIRE(c.supportSize() == 0);  // cancelled to zero and erased

    c.set(Weight::zero(6), 1);
    REQUIRE(c.isMultiplicityFree());
    REQUIRE(c.isEffective());
    c.set(Weight::zero(6), -1);
    REQUIRE(!c.isEffective());
    REQUIRE(!c.isMultiplicityFree());
}

TEST_CASE("sum and difference intersect windows") {
    VirtualCharacter a(6, TruncationWindow(0, 10));
    a.set(Weight::zero(6), 1);
    a.set(w6({2, 2, 2, 2, 1, 0}), 4);  // degree 9
    VirtualCharacter b(6, TruncationWindow(6, 20));
    b.set(w6({2, 2, 2, 2, 1, 0}), 1);
    b.set(Weight::constant(6, 3), 7);  // degree 18

    VirtualCharacter s = a + b;
    REQUIRE(s.window() == TruncationWindow(6, 10));
    REQUIRE(s.multiplicity(w6({2, 2, 2, 2, 1, 0})) == 5);
    REQUIRE(s.supportSize() == 1);  // both out-of-intersection terms dropped

    VirtualCharacter d = a - b;
    REQUIRE(d.multiplicity(w6({2, 2, 2, 2, 1, 0})) == 3);

    VirtualCharacter far(6, TruncationWindow(100, 120));
    REQUIRE_THROWS_AS(a + far, WindowError);
    REQUIRE_THROWS_AS(a + VirtualCharacter(3, TruncationWindow(0, 10)), std::invalid_argument);
}

TEST_CASE("formal products of single terms add weights") {
    VirtualCharacter p =
        formalProduct(singleTerm(w6({1, 1, 1, 0, 0, 0})), singleTerm(w6({2, 2, 2, 1, 1, 1})));
    REQUIRE(p.supportSize() == 1);
    REQUIRE(p.multiplicity(w6({3, 3, 3, 1, 1, 1})) == 1);

    // multiplying by e^{(0^6)} is the identity, window included
    VirtualCharacter m(6, TruncationWindow::box(-6, 6, -2, 2));
    m.set(w6({1, 1, 0, 0, -1, -1}), 3);
    m.set(Weight::constant(6, 1), 2);
    REQUIRE(formalProduct(m, singleTerm(Weight::zero(6))) == m);

    // constant single terms shift windows exactly (either operand order)
    VirtualCharacter twist = singleTerm(Weight::constant(6, -2), 5);
    VirtualCharacter t1 = formalProduct(m, twist);
    VirtualCharacter t2 = formalProduct(twist, m);
    REQUIRE(t1 == t2);
    REQUIRE(t1.window() == TruncationWindow::box(-18, -6, -4, 0));
    REQUIRE(t1.multiplicity(w6({-1, -1, -2, -2, -3, -3})) == 15);

    // a general product carries the Minkowski window
    VirtualCharacter g = formalProduct(m, m);
    REQUIRE(g.window() == TruncationWindow::box(-12, 12, -4, 4));
    REQUIRE(g.multiplicity(w6({2, 2, 0, 0, -2, -2})) == 9);
    REQUIRE(g.multiplicity(w6({2, 2, 1, 1, 0, 0})) == 12);  // cross terms both orders
    REQUIRE(g.multiplicity(Weight::constant(6, 2)) == 4);
}

TEST_CASE("dualSeries and fourier") {
    REQUIRE(dualSeries(singleTerm(Weight::constant(6, -7))) ==
            singleTerm(Weight::constant(6, 7)));

    VirtualCharacter f = fourier(singleTerm(Weight::constant(6, -8)));
    REQUIRE(f.multiplicity(Weight::constant(6, -2)) == 1);
    REQUIRE(f.supportSize() == 1);

    REQUIRE_THROWS_AS(fourier(VirtualCharacter(3, TruncationWindow(0, 1))),
                      std::invalid_argument);

    std::mt19937 rng(20260816u);
    for (int t = 0; t < 100; ++t) {
        VirtualCharacter c = randomCharacter(rng);
        REQUIRE(dualSeries(dualSeries(c)) == c);
        REQUIRE(fourier(fourier(c)) == c);
    }
}

TEST_CASE("polynomial-ring series expansion matches the brute-force oracle") {
    VirtualCharacter s = expand(rationalForm(CharName::S), TruncationWindow(0, 18));
    REQUIRE(s.terms() == bruteS(18));

    REQUIRE(s.multiplicity(Weight::zero(6)) == 1);
    REQUIRE(s.multiplicity(Weight::constant(6, 2)) == 1);
    REQUIRE(s.multiplicity(w6({1, 0, 0, 0, 0, 0})) == 0);

    // the five generator weights admit one integral relation
    //   2*(2,2,2,1,1,1) = 2*(1,1,1,0,0,0) + (2,2,2,2,2,2),
    // so the series is NOT multiplicity-free from degree 18 on:
    REQUIRE(s.multiplicity(w6({4, 4, 4, 2, 2, 2})) == 2);
    REQUIRE(bruteS(18).at(w6({4, 4, 4, 2, 2, 2})) == 2);
    REQUIRE(!expand(rationalForm(CharName::S), TruncationWindow(0, 36)).isMultiplicityFree());
}

TEST_CASE("hypersurface-quotient series is multiplicity-free") {
    RationalCharacter rc = rationalForm(CharName::S);
    rc.denominators.erase(rc.denominators.begin() + 3);  // drop the constant factor (2^6)
    REQUIRE(expand(rc, TruncationWindow(0, 36)).isMultiplicityFree());
}

TEST_CASE("dual-cone series mirrors the polynomial-ring series under fourier") {
    VirtualCharacter s = expand(rationalForm(CharName::S), TruncationWindow(0, 18));
    VirtualCharacter e = expand(rationalForm(CharName::E), TruncationWindow(-78, -60));
    REQUIRE(fourier(s) == e);
    REQUIRE(e.multiplicity(Weight::constant(6, -10)) == 1);
}

TEST_CASE("degree-window and box-window expansions agree where both apply") {
    VirtualCharacter sDeg = expand(rationalForm(CharName::S), TruncationWindow(0, 18));
    VirtualCharacter sBox =
        expand(rationalForm(CharName::S), TruncationWindow::box(0, 18, 0, 18));
    REQUIRE(sBox.terms() == sDeg.terms());  // entries of S-weights lie in [0, deg]

    VirtualCharacter eDeg = expand(rationalForm(CharName::E), TruncationWindow(-78, -60));
    VirtualCharacter eBox =
        expand(rationalForm(CharName::E), TruncationWindow::box(-78, -60, -30, 0));
    REQUIRE(eBox.terms() == eDeg.terms());
}

TEST_CASE("expansion finiteness certificates") {
    RationalCharacter mixed;
    mixed.rank = 6;
    mixed.numerator = {{Weight::zero(6), 1}};
    mixed.denominators = {w6({1, 1, 1, 0, 0, 0}), w6({0, 0, 0, -1, -1, -1})};
    REQUIRE_THROWS_AS(expand(mixed, TruncationWindow(-6, 6)), ExpansionError);

    // entry bounds make it finite: exponents (a,b) with a,b <= 1 fit the box
    VirtualCharacter m = expand(mixed, TruncationWindow::box(-3, 3, -1, 1));
    REQUIRE(m.supportSize() == 4);
    REQUIRE(m.multiplicity(Weight::zero(6)) == 1);
    REQUIRE(m.multiplicity(w6({1, 1, 1, 0, 0, 0})) == 1);
    REQUIRE(m.multiplicity(w6({0, 0, 0, -1, -1, -1})) == 1);
    REQUIRE(m.multiplicity(w6({1, 1, 1, -1, -1, -1})) == 1);

    RationalCharacter degZero;
    degZero.rank = 6;
    degZero.numerator = {{Weight::zero(6), 1}};
    degZero.denominators = {w6({1, 0, 0, 0, 0, -1})};
    REQUIRE_THROWS_AS(expand(degZero, TruncationWindow(0, 0)), ExpansionError);
    VirtualCharacter z = expand(degZero, TruncationWindow::box(0, 0, -2, 2));
    REQUIRE(z.supportSize() == 3);  // exponents 0, 1, 2

    RationalCharacter unit;
    unit.rank = 6;
    unit.numerator = {{Weight::zero(6), 1}};
    unit.denominators = {Weight::zero(6)};
    REQUIRE_THROWS_AS(expand(unit, TruncationWindow(0, 1)), ExpansionError);
    REQUIRE_THROWS_AS(expand(unit, TruncationWindow::box(0, 1, 0, 1)), ExpansionError);

    RationalCharacter twoConst;
    twoConst.rank = 6;
    twoConst.numerator = {{Weight::zero(6), 1}};
    twoConst.denominators = {Weight::constant(6, 1), Weight::constant(6, -1)};
    REQUIRE_THROWS_AS(expand(twoConst, TruncationWindow::box(0, 0, 0, 0)), ExpansionError);

    RationalCharacter bilateralPlusConst = rationalForm(CharName::Sf);
    bilateralPlusConst.denominators.push_back(Weight::constant(6, 2));
    REQUIRE_THROWS_AS(expand(bilateralPlusConst, TruncationWindow::box(0, 0, 0, 0)),
                      ExpansionError);

    // the two-sided factor itself requires entry bounds
    REQUIRE_THROWS_AS(expand(rationalForm(CharName::Sf), TruncationWindow(-12, 12)),
                      ExpansionError);
}

TEST_CASE("localized-ring series on a box matches a direct enumeration") {
    TruncationWindow w = TruncationWindow::box(-12, 12, -2, 2);
    VirtualCharacter sf = expand(rationalForm(CharName::Sf), w);

    // oracle: four generator exponents capped by the spread budget, plus the
    // two-sided power of (2^6) ranged over everything the box can hold
    const Weight g1 = w6({1, 1, 1, 0, 0, 0});
    const Weight g2 = w6({2, 1, 1, 1, 1, 0});
    const Weight g3 = w6({2, 2, 2, 1, 1, 1});
    const Weight g5 = w6({3, 3, 2, 2, 1, 1});
    std::map<Weight, long long> oracle;
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; 2 * b <= 4; ++b)
            for (int c = 0; c <= 4; ++c)
                for (int e = 0; 2 * e <= 4; ++e)
                    for (int i = -12; i <= 12; ++i) {
                        Weight base = add(add(scale(g1, a), scale(g2, b)),
                                          add(scale(g3, c), scale(g5, e)));
                        Weight t = add(base, Weight::constant(6, 2 * i));
                        if (w.contains(t)) oracle[t] += 1;
                    }
    REQUIRE(sf.terms() == oracle);
    REQUIRE(sf.multiplicity(Weight::constant(6, -2)) == 1);

    // not multiplicity-free: (2,2,2,0,0,0) arises from g1^2 and from
    // g3^2 * (2^6)^{-1}; only semi-invariant weights are multiplicity-one
    REQUIRE(sf.multiplicity(w6({2, 2, 2, 0, 0, 0})) == 2);
    for (int c = -2; c <= 2; ++c)
        REQUIRE(sf.multiplicity(Weight::constant(6, c)) == (c % 2 == 0 ? 1 : 0));
}

TEST_CASE("filtration graded pieces match the brute-force oracle") {
    REQUIRE_THROWS_AS(charIkTilde(0, TruncationWindow(0, 10)), std::invalid_argument);

    for (int k = 1; k <= 3; ++k) {
        VirtualCharacter ik = charIkTilde(k, TruncationWindow(0, 30));
        REQUIRE(ik.terms() == bruteIk(k, 30));
        REQUIRE(ik.isEffective());

        // lowest-degree term e^{(2k,2k,2k,k,k,k)} with multiplicity 1
        Weight lowest = Weight({2 * k, 2 * k, 2 * k, k, k, k});
        long long minDeg = ik.window().maxDegree();
        for (const auto& [wt, m] : ik.terms()) minDeg = std::min(minDeg, degree(wt));
        REQUIRE(minDeg == 9 * k);
        REQUIRE(ik.multiplicity(lowest) == 1);
    }

    VirtualCharacter i1 = charIkTilde(1, TruncationWindow::around(w6({3, 3, 2, 2, 1, 1})));
    REQUIRE(i1.multiplicity(w6({3, 3, 2, 2, 1, 1})) == 1);

    // pointwise monotone in k: the lattice condition m+n >= k only shrinks
    VirtualCharacter i2 = charIkTilde(2, TruncationWindow(0, 30));
    VirtualCharacter i1full = charIkTilde(1, TruncationWindow(0, 30));
    for (const auto& [wt, m] : i2.terms()) REQUIRE(m <= i1full.multiplicity(wt));
}

TEST_CASE("filtration sum agrees with the closed-form character") {
    // [S] + sum_k [I~_k] e^{(-2k)^6}  ==  [B4] * e^{(3^6)}
    TruncationWindow w = TruncationWindow::box(-24, 6, -6, 3);
    VirtualCharacter viaFiltration = charB4ViaFiltration(w);
    VirtualCharacter closed =
        shiftByConstant(namedCharacter(CharName::B4, w.shiftedByConstant(-3, 6)), 3);
    REQUIRE(viaFiltration == closed);

    REQUIRE(viaFiltration.multiplicity(Weight::zero(6)) == 1);
    REQUIRE(viaFiltration.multiplicity(w6({0, 0, 0, -1, -1, -1})) == 1);

    REQUIRE_THROWS_AS(charB4ViaFiltration(TruncationWindow(-12, 0)), ExpansionError);
}

TEST_CASE("named characters at their semi-invariant weights") {
    auto probe = [](CharName name, int c) {
        Weight w = Weight::constant(6, c);
        return namedCharacter(name, TruncationWindow::around(w)).multiplicity(w);
    };

    REQUIRE(probe(CharName::B4, -3) == 1);
    REQUIRE(probe(CharName::Sf, -2) == 1);
    REQUIRE(probe(CharName::E, -10) == 1);

    // each witness weight detects exactly one of the four derived simples
    REQUIRE(probe(CharName::D3, -2) == 1);
    REQUIRE(probe(CharName::D2, -2) == 0);
    REQUIRE(probe(CharName::D1, -2) == 0);
    REQUIRE(probe(CharName::E, -2) == 0);

    REQUIRE(probe(CharName::D2, -5) == 1);
    REQUIRE(probe(CharName::D3, -5) == 0);
    REQUIRE(probe(CharName::D1, -5) == 0);
    REQUIRE(probe(CharName::E, -5) == 0);

    REQUIRE(probe(CharName::D1, -7) == 1);
    REQUIRE(probe(CharName::D3, -7) == 0);
    REQUIRE(probe(CharName::D2, -7) == 0);
    REQUIRE(probe(CharName::E, -7) == 0);

    REQUIRE(probe(CharName::E, -10) == 1);
    REQUIRE(probe(CharName::D3, -10) == 0);
    REQUIRE(probe(CharName::D2, -10) == 0);
    REQUIRE(probe(CharName::D1, -10) == 0);
}

TEST_CASE("derived characters are effective and sum back to the injectives") {
    TruncationWindow w = TruncationWindow::box(-36, 12, -8, 2);
    VirtualCharacter sf = namedCharacter(CharName::Sf, w);
    VirtualCharacter s = namedCharacter(CharName::S, w);
    VirtualCharacter e = namedCharacter(CharName::E, w);
    VirtualCharacter d3 = namedCharacter(CharName::D3, w);
    REQUIRE(d3.isEffective());
    REQUIRE(s + d3 + e == sf);

    VirtualCharacter sfs = namedCharacter(CharName::SfSqrt, w);
    VirtualCharacter b4 = namedCharacter(CharName::B4, w);
    VirtualCharacter d1 = namedCharacter(CharName::D1, w);
    VirtualCharacter d2 = namedCharacter(CharName::D2, w);
    REQUIRE(d2.isEffective());
    REQUIRE(d1.isEffective());
    REQUIRE(b4 + d2 + d1 == sfs);

    REQUIRE_THROWS_AS(rationalForm(CharName::D1), std::invalid_argument);
    REQUIRE_THROWS_AS(parseCharName("Q"), std::invalid_argument);
    REQUIRE(parseCharName(to_string(CharName::SfSqrt)) == CharName::SfSqrt);
}

TEST_CASE("agreesOn demands exactness on the comparison window") {
    VirtualCharacter a(6, TruncationWindow(0, 12));
    a.set(Weight::zero(6), 1);
    VirtualCharacter b(6, TruncationWindow(0, 18));
    b.set(Weight::zero(6), 1);
    b.set(Weight::constant(6, 2), 1);  // degree 12: inside a's window too

    REQUIRE(agreesOn(a, b, TruncationWindow(0, 6)));
    REQUIRE(!agreesOn(a, b, TruncationWindow(0, 12)));
    REQUIRE_THROWS_AS(agreesOn(a, b, TruncationWindow(0, 18)), WindowError);

    VirtualCharacter r = restrict(b, TruncationWindow(6, 18));
    REQUIRE(r.window() == TruncationWindow(6, 18));
    REQUIRE(r.supportSize() == 1);
}
