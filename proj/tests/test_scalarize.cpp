#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "algpoly/fixtures.hpp"
#include "algpoly/parser.hpp"
#include "algpoly/scalarize.hpp"

using namespace algpoly;

namespace {

Element rand_element(const Algebra& a, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-5, 5);
    Element e(a.dim);
    for (auto& c : e) c = Scalar(num(rng));
    return e;
}

WordPtr rand_word(const AlgebraPtr& alg, int nvars, int depth, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, depth > 0 ? 2 : 1);
    std::uniform_int_distribution<int> var(0, nvars - 1);
    if (kind(rng) == 0) return Word::make_const(rand_element(*alg, rng));
    if (kind(rng) == 1 || depth == 0) return Word::make_var(var(rng));
    return Word::make_prod(rand_word(alg, nvars, depth - 1, rng),
                           rand_word(alg, nvars, depth - 1, rng));
}

PolynomialMap rand_map(const AlgebraPtr& alg, int nvars, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(1, 3), num(-3, 3);
    PolynomialMap p{alg, nvars, {}};
    for (int t = nterms(rng); t > 0; --t)
        p.terms.push_back({Scalar(num(rng)), rand_word(alg, nvars, 2, rng)});
    return p;
}

} // namespace

TEST_CASE("variable atlas bijection") {
    VariableAtlas atlas{4, 3};
    CHECK(atlas.nvars() == 12);
    for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 3; ++l) {
            int f = atlas.flat(k, l);
            CHECK(atlas.coord_of(f) == k);
            CHECK(atlas.arg_of(f) == l);
        }
    CHECK(atlas.var_name(atlas.flat(1, 2)) == "l_2_3");
}

TEST_CASE("commuting diagram: scalarized eval equals coordinates of algebra eval") {
    std::mt19937_64 rng(43);
    for (const auto& name : {"quaternions", "octonions", "matrix(2,real)"}) {
        auto alg = make_algebra(name);
        Subspace full = full_subspace(alg);
        for (int t = 0; t < 20; ++t) {
            PolynomialMap p = rand_map(alg, 2, rng);
            ScalarizedSystem sys = scalarize({p}, full, full);
            Element a0 = rand_element(*alg, rng), a1 = rand_element(*alg, rng);
            std::vector<Scalar> lambda;
            lambda.insert(lambda.end(), a0.begin(), a0.end());
            lambda.insert(lambda.end(), a1.begin(), a1.end());
            Element direct = evaluate(p, {a0, a1});
            std::vector<Scalar> through = eval_system(sys, lambda);
            REQUIRE(through.size() == direct.size());
            for (size_t i = 0; i < direct.size(); ++i) CHECK(through[i] == direct[i]);
        }
    }
}

TEST_CASE("image containment violation is reported with the offending map") {
    auto A = make_matrix(2, Field::Real);
    Subspace full = full_subspace(A);
    // span{E11}: E11*x maps E12 -> E12, outside span{E11}
    Subspace h = make_subspace(A, {basis_element(*A, 0), basis_element(*A, 1)});
    Subspace target = make_subspace(A, {basis_element(*A, 0)});
    PolynomialMap p = parse_map("E11*x", A, 1);
    CHECK_THROWS_AS(scalarize({p}, h, target), ImageNotContained);
    try {
        scalarize({p}, h, target);
    } catch (const ImageNotContained& e) {
        CHECK(e.map_index == 0);
        CHECK_FALSE(e.residual.is_zero());
    }
}

TEST_CASE("restriction to a subspace uses subspace coordinates") {
    auto H = make_quaternions();
    // H0 = span{1, i} is a copy of C inside the quaternions; a^2 on it
    Subspace h = make_subspace(H, {basis_element(*H, 0), basis_element(*H, 1)});
    PolynomialMap p = parse_map("x^2", H, 1);
    ScalarizedSystem sys = scalarize({p}, h, h);
    REQUIRE(sys.polys.size() == 2);
    // (l1 + l2 i)^2 = l1^2 - l2^2 + 2 l1 l2 i
    MultiPoly expect0(2), expect1(2);
    expect0.add_term({2, 0}, Scalar(1));
    expect0.add_term({0, 2}, Scalar(-1));
    expect1.add_term({1, 1}, Scalar(2));
    CHECK(sys.polys[0] == expect0);
    CHECK(sys.polys[1] == expect1);
}

TEST_CASE("linear coefficient matrix of the identity") {
    auto H = make_quaternions();
    Subspace full = full_subspace(H);
    auto M = linear_coefficient_matrix(identity_map(H), full, full);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) CHECK(M[r][c] == (r == c ? Scalar(1) : Scalar(0)));
    CHECK(exact_determinant(M) == Scalar(1));
}

TEST_CASE("linear coefficient matrix rejects nonlinear maps") {
    auto H = make_quaternions();
    Subspace full = full_subspace(H);
    CHECK_THROWS_AS(linear_coefficient_matrix(parse_map("x^2", H, 1), full, full),
                    std::invalid_argument);
}

TEST_CASE("worked-example matrix fixture") {
    auto H = make_quaternions();
    Subspace full = full_subspace(H);
    auto M = linear_coefficient_matrix(fixtures::quaternion_example_linearization(), full, full);
    CHECK(M == fixtures::expected_matrix_m());
    CHECK(exact_determinant(M) == fixtures::expected_det_m());
}

TEST_CASE("homogenize/dehomogenize round trip on the worked example") {
    auto H = make_quaternions();
    Subspace full = full_subspace(H);
    ScalarizedSystem sys =
        scalarize({parse_map(fixtures::quaternion_example_text, H, 1)}, full, full);
    ScalarizedSystem hom = homogenize(sys);
    for (const auto& p : hom.polys) CHECK(p.is_homogeneous());
    ScalarizedSystem back = dehomogenize(hom);
    CHECK(back.polys == sys.polys);
    CHECK_THROWS_AS(homogenize(hom), std::invalid_argument);
}

TEST_CASE("jacobian matches finite differences") {
    auto H = make_quaternions();
    Subspace full = full_subspace(H);
    std::mt19937_64 rng(47);
    PolynomialMap p = rand_map(H, 1, rng);
    ScalarizedSystem sys = scalarize({p}, full, full);
    auto J = jacobian(sys);
    std::uniform_real_distribution<double> uni(-1, 1);
    std::vector<std::complex<double>> x(4);
    for (auto& c : x) c = uni(rng);
    const double h = 1e-6;
    for (size_t i = 0; i < sys.polys.size(); ++i)
        for (int v = 0; v < 4; ++v) {
            auto xp = x, xm = x;
            xp[v] += h;
            xm[v] -= h;
            double fd = ((sys.polys[i].eval_numeric(xp) - sys.polys[i].eval_numeric(xm)) /
                         (2 * h)).real();
            CHECK(std::abs(fd - J[i][v].eval_numeric(x).real()) < 1e-5);
        }
}

TEST_CASE("exact determinant") {
    std::vector<std::vector<Scalar>> m = {{Scalar(2), Scalar(1)}, {Scalar(7), Scalar(4)}};
    CHECK(exact_determinant(m) == Scalar(1));
    std::vector<std::vector<Scalar>> sing = {{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}};
    CHECK(exact_determinant(sing) == Scalar(0));
    // row swap flips sign
    std::vector<std::vector<Scalar>> sw = {{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}};
    CHECK(exact_determinant(sw) == Scalar(-1));
}

TEST_CASE("semantic zero detection") {
    auto H = make_quaternions();
    Subspace full = full_subspace(H);
    PolynomialMap p = parse_map("i*x^2 - i*x^2", H, 1);
    CHECK(is_semantically_zero(p, full));
    CHECK_FALSE(is_semantically_zero(parse_map("x", H, 1), full));
}

TEST_CASE("JSON export mentions every variable") {
    auto H = make_quaternions();
    Subspace full = full_subspace(H);
    ScalarizedSystem sys = scalarize({parse_map("x^2", H, 1)}, full, full);
    std::string j = system_to_json(sys);
    CHECK(j.find("l_1_1") != std::string::npos);
    CHECK(j.find("l_4_1") != std::string::npos);
}
