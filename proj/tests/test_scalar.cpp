#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algpoly/scalar.hpp"

using namespace algpoly;

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3") == Rat(3));
    CHECK(parse_rational("-2/5") == Rat(-2, 5));
    CHECK(parse_rational("4/6") == Rat(2, 3)); // canonicalized
    CHECK(rat_to_string(Rat(-7, 3)) == "-7/3");
    CHECK(rat_to_string(Rat(10, 5)) == "2");
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("doubles lift exactly") {
    CHECK(rat_from_double(0.5) == Rat(1, 2));
    CHECK(rat_from_double(0.1) == Rat(0.1)); // same dyadic value, not 1/10
    CHECK(rat_from_double(-3.0) == Rat(-3));
    CHECK(rat_from_double(0.75).get_d() == 0.75);
    CHECK_THROWS(rat_from_double(1.0 / 0.0));
}

TEST_CASE("gaussian rational field arithmetic") {
    Scalar i{Rat(0), Rat(1)};
    CHECK(i * i == Scalar(-1));
    Scalar a{Rat(1, 2), Rat(3)};
    Scalar b{Rat(-2), Rat(1, 5)};
    CHECK((a + b) - b == a);
    CHECK(a * b == b * a);
    CHECK((a / b) * b == a);
    CHECK(a * a.conj() == Scalar(a.norm_sq()));
    CHECK_THROWS_AS(a / Scalar(0), std::domain_error);
}

TEST_CASE("conjugation and norms") {
    Scalar z{Rat(3), Rat(-4)};
    CHECK(z.norm_sq() == Rat(25));
    CHECK(z.conj() == Scalar{Rat(3), Rat(4)});
    CHECK(Scalar(Rat(-5)).abs_real() == Rat(5));
    CHECK_THROWS_AS(z.abs_real(), std::domain_error);
}

TEST_CASE("scalar parsing") {
    CHECK(parse_scalar("3") == Scalar(3));
    CHECK(parse_scalar("-2/5") == Scalar(Rat(-2, 5)));
    CHECK(parse_scalar("1/2+3*i") == Scalar{Rat(1, 2), Rat(3)});
    Scalar r = parse_scalar("2-1/4*i");
    CHECK(r == Scalar{Rat(2), Rat(-1, 4)});
}

TEST_CASE("printing round-trips") {
    for (const char* s : {"0", "7", "-1/3", "22/7"}) {
        CHECK(rat_to_string(parse_rational(s)) == s);
    }
}
