#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "algpoly/parser.hpp"

using namespace algpoly;

namespace {

Element quat(int a, int b, int c, int d) {
    return {Scalar(a), Scalar(b), Scalar(c), Scalar(d)};
}

WordPtr rand_word(const AlgebraPtr& alg, int nvars, int depth, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, depth > 0 ? 2 : 1);
    std::uniform_int_distribution<int> var(0, nvars - 1);
    std::uniform_int_distribution<int> coord(-3, 3);
    switch (kind(rng)) {
        case 0: {
            Element e(alg->dim);
            bool nz = false;
            while (!nz) {
                for (auto& c : e) {
                    c = Scalar(coord(rng));
                    nz = nz || !c.is_zero();
                }
            }
            return Word::make_const(e);
        }
        case 1:
            return Word::make_var(var(rng));
        default:
            return Word::make_prod(rand_word(alg, nvars, depth - 1, rng),
                                   rand_word(alg, nvars, depth - 1, rng));
    }
}

PolynomialMap rand_map(const AlgebraPtr& alg, int nvars, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(1, 4), num(-5, 5), den(1, 3);
    PolynomialMap p{alg, nvars, {}};
    for (int t = nterms(rng); t > 0; --t) {
        Scalar c{Rat(num(rng), den(rng))};
        if (c.is_zero()) c = Scalar(1);
        p.terms.push_back({c, rand_word(alg, nvars, 2, rng)});
    }
    return p;
}

} // namespace

TEST_CASE("literals and basis labels") {
    auto H = make_quaternions();
    CHECK(parse_element("3", H) == quat(3, 0, 0, 0));
    CHECK(parse_element("-2/5", H) == Element{Scalar(Rat(-2, 5)), Scalar(0), Scalar(0), Scalar(0)});
    CHECK(parse_element("i", H) == quat(0, 1, 0, 0));
    CHECK(parse_element("1+i-j", H) == quat(1, 1, -1, 0));
    CHECK(parse_element("2*k", H) == quat(0, 0, 0, 2));
    CHECK(parse_element("i*j", H) == quat(0, 0, 0, 1)); // constant folding
}

TEST_CASE("variables x and x1..xn") {
    auto H = make_quaternions();
    PolynomialMap p = parse_map("x", H, 1);
    REQUIRE(p.terms.size() == 1);
    CHECK(p.terms[0].word->kind == Word::Kind::Var);
    PolynomialMap q = parse_map("x1*x2", H, 2);
    REQUIRE(q.terms.size() == 1);
    CHECK(q.terms[0].word->kind == Word::Kind::Prod);
    CHECK(q.terms[0].word->left->var == 0);
    CHECK(q.terms[0].word->right->var == 1);
    CHECK_THROWS_AS(parse_map("x3", H, 2), ParseError);
}

TEST_CASE("precedence and associativity") {
    auto H = make_quaternions();
    // * is left-associative: x*y*z = (x*y)*z
    PolynomialMap p = parse_map("x1*x2*x3", H, 3);
    REQUIRE(p.terms.size() == 1);
    const Word& w = *p.terms[0].word;
    REQUIRE(w.kind == Word::Kind::Prod);
    CHECK(w.left->kind == Word::Kind::Prod);
    CHECK(w.right->kind == Word::Kind::Var);
    CHECK(w.right->var == 2);
    // ^ binds tighter than *: i*x^2 = i*(x*x)
    PolynomialMap q = parse_map("i*x^2", H, 1);
    REQUIRE(q.terms.size() == 1);
    const Word& v = *q.terms[0].word;
    REQUIRE(v.kind == Word::Kind::Prod);
    CHECK(v.left->kind == Word::Kind::Const);
    CHECK(v.right->var_leaf_count() == 2);
    // powers are left-nested
    PolynomialMap r = parse_map("x^3", H, 1);
    CHECK(r.terms[0].word->left->kind == Word::Kind::Prod);
}

TEST_CASE("rational literal multiplication is scalar action") {
    auto H = make_quaternions();
    PolynomialMap p = parse_map("1/2*x", H, 1);
    REQUIRE(p.terms.size() == 1);
    CHECK(p.terms[0].coeff == Scalar(Rat(1, 2)));
    CHECK(p.terms[0].word->kind == Word::Kind::Var);
    // scalar times constant folds into the element
    PolynomialMap q = parse_map("2*i", H, 1);
    REQUIRE(q.terms.size() == 1);
    CHECK(q.terms[0].coeff == Scalar(1));
    CHECK(q.terms[0].word->value == quat(0, 2, 0, 0));
}

TEST_CASE("sums distribute and subtraction negates") {
    auto H = make_quaternions();
    PolynomialMap p = parse_map("(x + i)*x", H, 1);
    CHECK(p.terms.size() == 2);
    PolynomialMap q = parse_map("x - x", H, 1);
    // both terms kept structurally (no semantic cancellation at parse time)
    CHECK(q.terms.size() == 2);
}

TEST_CASE("comments and whitespace") {
    auto H = make_quaternions();
    PolynomialMap p = parse_map("x^2 # trailing comment\n + 1", H, 1);
    CHECK(p.terms.size() == 2);
}

TEST_CASE("errors carry positions") {
    auto H = make_quaternions();
    CHECK_THROWS_AS(parse_map("x +", H, 1), ParseError);
    CHECK_THROWS_AS(parse_map("(x", H, 1), ParseError);
    CHECK_THROWS_AS(parse_map("x ^ y", H, 2), ParseError);
    CHECK_THROWS_AS(parse_map("qq", H, 1), ParseError);
    try {
        parse_map("x + + x", H, 1);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position > 0);
    }
}

TEST_CASE("matrix basis labels") {
    auto A = make_matrix(2, Field::Real);
    PolynomialMap p = parse_map("E11*x + 1", A, 1);
    CHECK(p.terms.size() == 2);
    Element id = parse_element("1", A);
    CHECK(id == *A->unit);
}

TEST_CASE("print/parse round trip on random maps") {
    std::mt19937_64 rng(41);
    for (const auto& name : {"quaternions", "octonions", "matrix(2,real)"}) {
        auto alg = make_algebra(name);
        for (int t = 0; t < 170; ++t) {
            PolynomialMap raw = rand_map(alg, 2, rng);
            PolynomialMap p = parse_map(print_map(raw), alg, 2);
            PolynomialMap q = parse_map(print_map(p), alg, 2);
            REQUIRE(q.structurally_equal(p));
        }
    }
}

TEST_CASE("printed canonical form is fully parenthesized") {
    auto H = make_quaternions();
    PolynomialMap p = parse_map("x*x*x", H, 1);
    std::string s = print_map(p);
    CHECK(parse_map(s, H, 1).structurally_equal(p));
}
