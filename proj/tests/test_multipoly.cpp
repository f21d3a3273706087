#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "algpoly/multipoly.hpp"

using namespace algpoly;

namespace {

MultiPoly rand_poly(int nvars, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(1, 6), expo(0, 3), coeff(-5, 5);
    MultiPoly p(nvars);
    for (int t = nterms(rng); t > 0; --t) {
        ExpVec e(nvars);
        for (auto& x : e) x = expo(rng);
        p.add_term(e, Scalar(coeff(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("construction and degree") {
    MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
    MultiPoly p = x * x + Scalar(3) * y;
    CHECK(p.total_degree() == 2);
    CHECK(p.term_count() == 2);
    CHECK(MultiPoly(2).total_degree() == -1);
    CHECK(MultiPoly::constant(2, Scalar(0)).is_zero());
}

TEST_CASE("zero coefficients are never stored") {
    MultiPoly x = MultiPoly::variable(1, 0);
    MultiPoly p = x - x;
    CHECK(p.is_zero());
    MultiPoly q = MultiPoly::constant(1, Scalar(1));
    q.add_term({0}, Scalar(-1));
    CHECK(q.is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 40; ++t) {
        MultiPoly a = rand_poly(3, rng), b = rand_poly(3, rng), c = rand_poly(3, rng);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * (b * c) == (a * b) * c);
        CHECK(a - a == MultiPoly(3));
    }
}

TEST_CASE("evaluation, exact and numeric") {
    MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
    MultiPoly p = x * x * y - Scalar(Rat(1, 2)) * y + MultiPoly::constant(2, Scalar(7));
    std::vector<Scalar> pt{Scalar(Rat(2, 3)), Scalar(-3)};
    CHECK(p.eval(pt) == Scalar(Rat(4, 9)) * Scalar(-3) + Scalar(Rat(3, 2)) + Scalar(7));
    std::vector<std::complex<double>> ptd{{2.0 / 3, 0}, {-3, 0}};
    CHECK(std::abs(p.eval_numeric(ptd) - p.eval(pt).to_complex()) < 1e-12);
}

TEST_CASE("derivative is linear and satisfies the product rule") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 25; ++t) {
        MultiPoly a = rand_poly(2, rng), b = rand_poly(2, rng);
        for (int v = 0; v < 2; ++v) {
            CHECK((a + b).derivative(v) == a.derivative(v) + b.derivative(v));
            CHECK((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
        }
    }
}

TEST_CASE("homogenization round-trips and homogenizes") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 25; ++t) {
        MultiPoly p = rand_poly(2, rng);
        MultiPoly h = p.homogenized();
        CHECK(h.is_homogeneous());
        CHECK(h.dehomogenized() == p);
    }
    // x^2 + 1 -> x^2 + z^2
    MultiPoly p = MultiPoly::variable(1, 0) * MultiPoly::variable(1, 0) +
                  MultiPoly::constant(1, Scalar(1));
    MultiPoly expect(2);
    expect.add_term({2, 0}, Scalar(1));
    expect.add_term({0, 2}, Scalar(1));
    CHECK(p.homogenized() == expect);
}

TEST_CASE("homogeneous parts sum to the polynomial") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 20; ++t) {
        MultiPoly p = rand_poly(3, rng);
        MultiPoly sum(3);
        for (int d = 0; d <= p.total_degree(); ++d) sum = sum + p.homogeneous_part(d);
        CHECK(sum == p);
    }
}

TEST_CASE("univariate extraction") {
    MultiPoly p(3);
    p.add_term({0, 3, 0}, Scalar(2));
    p.add_term({0, 1, 0}, Scalar(-1));
    p.add_term({0, 0, 0}, Scalar(5));
    auto u = p.to_univariate(1);
    REQUIRE(u.size() == 4);
    CHECK(u[0] == Scalar(5));
    CHECK(u[1] == Scalar(-1));
    CHECK(u[3] == Scalar(2));
    p.add_term({1, 0, 0}, Scalar(1));
    CHECK_THROWS(p.to_univariate(1));
}

TEST_CASE("involves_only") {
    MultiPoly p(3);
    p.add_term({0, 2, 0}, Scalar(1));
    CHECK(p.involves_only({false, true, false}));
    CHECK_FALSE(p.involves_only({true, false, false}));
}

TEST_CASE("pretty printing") {
    MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
    MultiPoly p = x * x - Scalar(2) * y;
    std::string s = p.to_string({"x", "y"});
    CHECK(s.find("x^2") != std::string::npos);
    CHECK(s.find("y") != std::string::npos);
    CHECK(MultiPoly(2).to_string() == "0");
}
