#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "prefrat/rational.hpp"
#include "prefrat/rng.hpp"

using prefrat::Rational;

TEST_CASE("construction reduces and normalizes sign") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4).num() == -1);
    CHECK(Rational(2, -4).den() == 2);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), prefrat::Error);
}

TEST_CASE("parsing") {
    CHECK(Rational::parse("1/2") == Rational(1, 2));
    CHECK(Rational::parse(" 3/6 ") == Rational(1, 2));
    CHECK(Rational::parse("0") == Rational(0));
    CHECK(Rational::parse("1") == Rational(1));
    CHECK(Rational::parse("-7/3") == Rational(-7, 3));
    CHECK(Rational::parse("0.5") == Rational(1, 2));
    CHECK(Rational::parse("0.25") == Rational(1, 4));
    CHECK(Rational::parse("-1.5") == Rational(-3, 2));
    CHECK_THROWS_AS(Rational::parse(""), prefrat::ParseError);
    CHECK_THROWS_AS(Rational::parse("a/b"), prefrat::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/"), prefrat::ParseError);
    CHECK_THROWS_AS(Rational::parse("1."), prefrat::ParseError);
}

TEST_CASE("arithmetic and comparisons") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(1, 2).str() == "1/2");
    CHECK(Rational(3).str() == "3");
}

// randomized sums cross-checked with 128-bit integer arithmetic
TEST_CASE("random addition is exact") {
    prefrat::Rng rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        std::int64_t a = static_cast<std::int64_t>(rng.below(2000)) - 1000;
        std::int64_t b = 1 + static_cast<std::int64_t>(rng.below(1000));
        std::int64_t c = static_cast<std::int64_t>(rng.below(2000)) - 1000;
        std::int64_t d = 1 + static_cast<std::int64_t>(rng.below(1000));
        Rational sum = Rational(a, b) + Rational(c, d);
        __int128 lhs = static_cast<__int128>(sum.num()) * b * d;
        __int128 rhs = (static_cast<__int128>(a) * d + static_cast<__int128>(c) * b) *
                       sum.den();
        CHECK(lhs == rhs);
    }
}
