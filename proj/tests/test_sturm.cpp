#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "algpoly/fixtures.hpp"
#include "algpoly/sturm.hpp"

using namespace algpoly;

namespace {

// Independent oracle: count distinct real roots of a squarefree polynomial by
// bisection with an exact sign function, bracketing on [-B, B] with B from the
// Cauchy bound, splitting until each subinterval has at most one sign change
// and scanning fine enough to separate roots of the test corpus.
int grid_sign_change_count(const UniPoly& s, const Rat& bound, int grid) {
    Rat lo = -bound, step = (bound + bound) / grid;
    int count = 0;
    Rat prev_v = uni_eval(s, lo);
    if (prev_v == 0) ++count;
    for (int i = 1; i <= grid; ++i) {
        Rat v = uni_eval(s, lo + step * i);
        if (v == 0) {
            ++count;
        } else if (prev_v != 0 && ((prev_v < 0 && v > 0) || (prev_v > 0 && v < 0))) {
            ++count;
        }
        prev_v = v;
    }
    return count;
}

int bisection_root_count(const UniPoly& p) {
    UniPoly s = uni_squarefree_part(p);
    int d = uni_degree(s);
    if (d <= 0) return 0;
    // Cauchy bound: 1 + max |a_i| / |a_d|
    Rat bound = 0;
    for (int i = 0; i < d; ++i) {
        Rat a = s[i] / s[d];
        if (a < 0) a = -a;
        if (a > bound) bound = a;
    }
    bound += 1;
    // Grid sign-change counting lower-bounds the root count; refine the grid
    // until two consecutive refinements agree (roots of the test corpus are
    // well separated relative to the final grid).
    int grid = 64 * (d + 1);
    int count = grid_sign_change_count(s, bound, grid);
    for (int refine = 0; refine < 6; ++refine) {
        int next = grid_sign_change_count(s, bound, grid * 2);
        if (next == count) break;
        count = next;
        grid *= 2;
    }
    return count;
}

UniPoly from_roots(const std::vector<int>& roots) {
    UniPoly p{Rat(1)};
    for (int r : roots) {
        UniPoly q(p.size() + 1, Rat(0));
        for (size_t i = 0; i < p.size(); ++i) {
            q[i + 1] += p[i];
            q[i] -= Rat(r) * p[i];
        }
        p = q;
    }
    return p;
}

} // namespace

TEST_CASE("basic utilities") {
    UniPoly p{Rat(-1), Rat(0), Rat(1)}; // x^2 - 1
    CHECK(uni_degree(p) == 2);
    CHECK(uni_eval(p, Rat(3)) == Rat(8));
    CHECK(uni_derivative(p) == UniPoly{Rat(0), Rat(2)});
    CHECK(uni_degree(UniPoly{}) == -1);
    CHECK(uni_degree(UniPoly{Rat(0)}) == -1);
}

TEST_CASE("gcd and squarefree part") {
    // (x-1)^2 (x+2) has squarefree part (x-1)(x+2) up to scaling
    UniPoly p = from_roots({1, 1, -2});
    UniPoly s = uni_squarefree_part(p);
    CHECK(uni_degree(s) == 2);
    CHECK(uni_eval(s, Rat(1)) == 0);
    CHECK(uni_eval(s, Rat(-2)) == 0);
    CHECK(uni_eval(s, Rat(0)) != 0);
}

TEST_CASE("known root counts") {
    CHECK(sturm_count(from_roots({1, 2, 3})) == 3);
    CHECK(sturm_count(from_roots({1, 1, 2})) == 2);  // multiple root counted once
    CHECK(sturm_count(UniPoly{Rat(1), Rat(0), Rat(1)}) == 0); // x^2 + 1
    CHECK(sturm_count(UniPoly{Rat(0), Rat(1)}) == 1);         // x
    CHECK(sturm_count(UniPoly{Rat(5)}) == 0);
}

TEST_CASE("interval counting includes the closed endpoints' roots correctly") {
    UniPoly p = from_roots({-1, 0, 2});
    CHECK(sturm_count(p, {Rat(0), Rat(3)}) == 2);  // 0 and 2
    CHECK(sturm_count(p, {Rat(-5), Rat(-1)}) == 1);
    CHECK(sturm_count(p, {std::nullopt, Rat(-1)}) == 1);
    CHECK(sturm_count(p, {Rat(1), std::nullopt}) == 1);
    CHECK(sturm_count(p, {Rat(3), Rat(10)}) == 0);
}

TEST_CASE("worked-example quartic has no real root") {
    CHECK(sturm_count(fixtures::q_quartic()) == 0);
    CHECK(bisection_root_count(fixtures::q_quartic()) == 0);
    // and the degree-8 eliminant has none either
    CHECK(sturm_count(fixtures::expected_eliminant()) == 0);
}

TEST_CASE("random polynomials agree with the bisection oracle") {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<int> deg(1, 8), coeff(-9, 9), root(-5, 5), nroots(0, 4);
    int trials = 0;
    // half: products of known integer linear factors (possibly none) times an
    // irreducible-ish tail; half: fully random coefficients
    for (int t = 0; t < 200; ++t) {
        UniPoly p;
        if (t % 2 == 0) {
            std::vector<int> rs;
            for (int i = nroots(rng); i > 0; --i) rs.push_back(root(rng));
            p = from_roots(rs);
        } else {
            int d = deg(rng);
            p.assign(d + 1, Rat(0));
            for (auto& c : p) c = Rat(coeff(rng));
            while (uni_degree(p) < 1) {
                p.back() = Rat(coeff(rng));
                if (p.back() == 0) p.back() = 1;
            }
        }
        if (uni_degree(p) < 1) continue;
        ++trials;
        CHECK(sturm_count(p) == bisection_root_count(p));
    }
    CHECK(trials > 150);
}

TEST_CASE("multipoly overload requires a real univariate slice") {
    MultiPoly p(2);
    p.add_term({2, 0}, Scalar(1));
    p.add_term({0, 0}, Scalar(1));
    CHECK(sturm_count(p, 0) == 0);
    p.add_term({0, 1}, Scalar(1));
    CHECK_THROWS(sturm_count(p, 0));
}
