// Weight basics: dominance, duality, arithmetic, ordering, parsing/formatting.

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "trivec/weights.hpp"

using namespace trivec;

namespace {

Weight w6(std::initializer_list<int> xs) { return Weight(IntVec(xs)); }

/// Random dominant weight of the given rank with entries in [-bound, bound].
Weight randomDominant(std::mt19937& rng, int rank, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    IntVec v(static_cast<std::size_t>(rank));
    for (int& x : v) x = d(rng);
    std::sort(v.begin(), v.end(), std::greater<int>());
    return Weight(std::move(v));
}

}  // namespace

TEST_CASE("construction validates dominance") {
    REQUIRE_NOTHROW(Weight({3, 3, 2, 2, 1, 1}));
    REQUIRE_NOTHROW(Weight({0, 0, 0, 0, 0, 0}));
    REQUIRE_NOTHROW(Weight(IntVec{}));
    REQUIRE_THROWS_AS(Weight({1, 2}), std::invalid_argument);
    REQUIRE_THROWS_AS(Weight({0, 0, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(Weight({-2, -1}), std::invalid_argument);
}

TEST_CASE("constant and zero weights") {
    REQUIRE(Weight::constant(6, -10) == w6({-10, -10, -10, -10, -10, -10}));
    REQUIRE(Weight::zero(6) == w6({0, 0, 0, 0, 0, 0}));
    REQUIRE(Weight::constant(6, 2).isConstant());
    REQUIRE(!w6({1, 0, 0, 0, 0, 0}).isConstant());
}

TEST_CASE("degree and spread") {
    REQUIRE(degree(w6({3, 3, 2, 2, 1, 1})) == 12);
    REQUIRE(degree(Weight::constant(6, -10)) == -60);
    REQUIRE(w6({3, 3, 2, 2, 1, 1}).spread() == 2);
    REQUIRE(Weight::constant(6, 7).spread() == 0);
}

TEST_CASE("dual reverses and negates") {
    REQUIRE(dual(w6({2, 1, 1, 1, 1, 0})) == w6({0, -1, -1, -1, -1, -2}));
    REQUIRE(dual(w6({3, 3, 2, 2, 1, 1})) == w6({-1, -1, -2, -2, -3, -3}));
    REQUIRE(dual(Weight::zero(6)) == Weight::zero(6));
}

TEST_CASE("dual is an involution negating degree (randomized)") {
    std::mt19937 rng(20260816u);
    for (int t = 0; t < 200; ++t) {
        Weight w = randomDominant(rng, 6, 15);
        REQUIRE(dual(dual(w)) == w);
        REQUIRE(degree(dual(w)) == -degree(w));
        REQUIRE(dual(w).spread() == w.spread());
    }
}

TEST_CASE("addition of dominant weights is dominant and additive in degree") {
    Weight a = w6({2, 1, 1, 1, 1, 0});
    Weight b = w6({1, 1, 1, 0, 0, 0});
    REQUIRE(add(a, b) == w6({3, 2, 2, 1, 1, 0}));
    REQUIRE(degree(add(a, b)) == degree(a) + degree(b));
    REQUIRE_THROWS_AS(add(a, Weight({1, 0})), std::invalid_argument);

    std::mt19937 rng(7u);
    for (int t = 0; t < 200; ++t) {
        Weight x = randomDominant(rng, 6, 12);
        Weight y = randomDominant(rng, 6, 12);
        Weight s = add(x, y);
        REQUIRE(isDominant(s.entries()));
        REQUIRE((s.spread() != 0 || (x.isConstant() && y.isConstant())));
        REQUIRE(degree(s) == degree(x) + degree(y));
    }
}

TEST_CASE("scale") {
    REQUIRE(scale(w6({2, 2, 2, 1, 1, 1}), 3) == w6({6, 6, 6, 3, 3, 3}));
    REQUIRE(scale(Weight::constant(6, 2), -5) == Weight::constant(6, -10));
    REQUIRE(scale(w6({1, 0, 0, 0, 0, 0}), 0) == Weight::zero(6));
    REQUIRE_THROWS_AS(scale(w6({1, 0, 0, 0, 0, 0}), -1), std::invalid_argument);
}

TEST_CASE("lexicographic ordering is total and map-stable") {
    Weight a = w6({0, 0, 0, 0, 0, 0});
    Weight b = w6({1, 0, 0, 0, 0, 0});
    Weight c = w6({1, 1, 0, 0, 0, 0});
    REQUIRE(a < b);
    REQUIRE(b < c);
    REQUIRE(!(c < a));

    std::map<Weight, int> m;
    m[c] = 3;
    m[a] = 1;
    m[b] = 2;
    int expect = 1;
    for (auto& [k, v] : m) REQUIRE(v == expect++);
}

TEST_CASE("format round-trips through parse") {
    std::mt19937 rng(99u);
    for (int t = 0; t < 200; ++t) {
        Weight w = randomDominant(rng, 6, 20);
        REQUIRE(parseWeight(formatWeight(w), 6) == w);
    }
    REQUIRE(formatWeight(w6({3, 3, 2, 2, 1, 1})) == "3,3,2,2,1,1");
}

TEST_CASE("parse accepts repetition shorthand and parentheses") {
    REQUIRE(parseWeight("(2^6)") == Weight::constant(6, 2));
    REQUIRE(parseWeight("-10^6") == Weight::constant(6, -10));
    REQUIRE(parseWeight("0^3,-1^3") == w6({0, 0, 0, -1, -1, -1}));
    REQUIRE(parseWeight("2,1^4,0", 6) == w6({2, 1, 1, 1, 1, 0}));
    REQUIRE(parseWeight(" 3,3,2,2,1,1 ") == w6({3, 3, 2, 2, 1, 1}));
    REQUIRE(parseWeight("(-1^3,-2^3)", 6) == w6({-1, -1, -1, -2, -2, -2}));
}

TEST_CASE("parse rejects malformed input") {
    REQUIRE_THROWS_AS(parseWeight(""), std::invalid_argument);
    REQUIRE_THROWS_AS(parseWeight("1,,2"), std::invalid_argument);
    REQUIRE_THROWS_AS(parseWeight("a,b"), std::invalid_argument);
    REQUIRE_THROWS_AS(parseWeight("1^0"), std::invalid_argument);
    REQUIRE_THROWS_AS(parseWeight("1^-2"), std::invalid_argument);
    REQUIRE_THROWS_AS(parseWeight("0,1"), std::invalid_argument);       // not dominant
    REQUIRE_THROWS_AS(parseWeight("1,0", 6), std::invalid_argument);    // wrong rank
    REQUIRE_THROWS_AS(parseWeight("2^3^2"), std::invalid_argument);
}

TEST_CASE("vector helpers") {
    REQUIRE(isDominant({3, 1, 1, 0}));
    REQUIRE(!isDominant({0, 1}));
    REQUIRE(vecDegree({1, -2, 3}) == 2);
    REQUIRE(vecAdd({1, 2}, {3, -1}) == IntVec{4, 1});
    REQUIRE_THROWS_AS(vecAdd({1}, {1, 2}), std::invalid_argument);
}
