#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lne/rational.hpp"

using namespace lne;

TEST_CASE("canonical form: positive denominator, reduced, zero as 0/1") {
    Rat r(2, 4);
    CHECK(r.num() == 1);
    CHECK(r.den() == 2);

    Rat neg(3, -6);
    CHECK(neg.num() == -1);
    CHECK(neg.den() == 2);

    Rat zero(0, 17);
    CHECK(zero.num() == 0);
    CHECK(zero.den() == 1);
    CHECK(zero.is_zero());
}

TEST_CASE("arithmetic keeps canonical form") {
    Rat a(1, 6), b(1, 3);
    Rat s = a + b;
    CHECK(s == Rat(1, 2));
    CHECK(s.den() == 2);
    CHECK((a - a).is_zero());
    CHECK(a * b == Rat(1, 18));
    CHECK(a / b == Rat(1, 2));
    CHECK(-Rat(3, 4) == Rat(-3, 4));
}

TEST_CASE("zero denominator and division by zero rejected") {
    CHECK_THROWS_AS(Rat(1, 0), DegenerateInputError);
    CHECK_THROWS_AS(Rat(1) / Rat(0), DegenerateInputError);
    CHECK_THROWS_AS(Rat(0).reciprocal(), DegenerateInputError);
}

TEST_CASE("parse and print round trip") {
    CHECK(Rat::parse("3/2") == Rat(3, 2));
    CHECK(Rat::parse("-7") == Rat(-7));
    CHECK(Rat::parse("-4/6") == Rat(-2, 3));
    CHECK(Rat(22, 7).str() == "22/7");
    CHECK(Rat(-5).str() == "-5");
    CHECK_THROWS_AS(Rat::parse("abc"), UsageError);
}

TEST_CASE("ordering and sign") {
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1, 2).sign() == -1);
    CHECK(Rat(0).sign() == 0);
    CHECK(Rat(1, 1000000).sign() == 1);
    CHECK(Rat(-3, 7).abs() == Rat(3, 7));
}

TEST_CASE("big values stay exact") {
    Rat big = Rat(1);
    for (int i = 0; i < 200; ++i) big *= Rat(3, 2);
    Rat back = big;
    for (int i = 0; i < 200; ++i) back /= Rat(3, 2);
    CHECK(back == Rat(1));
}
