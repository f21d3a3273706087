#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "algpoly/groebner.hpp"
#include "algpoly/parser.hpp"

using namespace algpoly;

namespace {

MultiPoly mono(int nvars, ExpVec e, int c) { return MultiPoly::monomial(nvars, std::move(e), Scalar(c)); }

MultiPoly rand_poly(int nvars, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(1, 4), expo(0, 2), coeff(-4, 4);
    MultiPoly p(nvars);
    for (int t = nterms(rng); t > 0; --t) {
        ExpVec e(nvars);
        for (auto& x : e) x = expo(rng);
        p.add_term(e, Scalar(coeff(rng)));
    }
    return p;
}

// S-polynomial w.r.t. the leading monomials under `gb.order`.
MultiPoly spoly(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& ord) {
    auto lead = [&](const MultiPoly& p) {
        auto it = p.terms().begin();
        auto best = it;
        for (; it != p.terms().end(); ++it)
            if (ord.compare(it->first, best->first) > 0) best = it;
        return *best;
    };
    auto [ef, cf] = lead(f);
    auto [eg, cg] = lead(g);
    ExpVec l(ef.size());
    for (size_t i = 0; i < l.size(); ++i) l[i] = std::max(ef[i], eg[i]);
    ExpVec mf(l), mg(l);
    for (size_t i = 0; i < l.size(); ++i) {
        mf[i] -= ef[i];
        mg[i] -= eg[i];
    }
    int n = f.nvars();
    return MultiPoly::monomial(n, mf, Scalar(1) / cf) * f -
           MultiPoly::monomial(n, mg, Scalar(1) / cg) * g;
}

} // namespace

TEST_CASE("monomial orders") {
    MonomialOrder lex = MonomialOrder::lex(2);
    CHECK(lex.compare({1, 0}, {0, 5}) > 0); // x > y^5 in lex
    MonomialOrder grl = MonomialOrder::grevlex(2);
    CHECK(grl.compare({1, 0}, {0, 5}) < 0); // degree wins in grevlex
    CHECK(grl.compare({2, 1}, {1, 2}) > 0);
    MonomialOrder el = MonomialOrder::elimination(3, {2});
    // eliminated variable (index 2) is largest
    CHECK(el.compare({0, 0, 1}, {5, 5, 0}) > 0);
}

TEST_CASE("textbook basis") {
    // {x^2 - y, y - 1} under lex x > y reduces to {x^2 - 1, y - 1}
    MultiPoly f = mono(2, {2, 0}, 1) + mono(2, {0, 1}, -1);
    MultiPoly g = mono(2, {0, 1}, 1) + mono(2, {0, 0}, -1);
    GroebnerBasis gb = buchberger({f, g}, MonomialOrder::lex(2));
    REQUIRE(gb.polys.size() == 2);
    MultiPoly e1 = mono(2, {2, 0}, 1) + mono(2, {0, 0}, -1);
    CHECK(std::count(gb.polys.begin(), gb.polys.end(), e1) == 1);
    CHECK(std::count(gb.polys.begin(), gb.polys.end(), g) == 1);
}

TEST_CASE("unit ideal") {
    MultiPoly f = mono(1, {1}, 1);               // x
    MultiPoly g = mono(1, {1}, 1) + mono(1, {0}, 1); // x + 1
    GroebnerBasis gb = buchberger({f, g}, MonomialOrder::lex(1));
    CHECK(gb.is_trivial_unit());
}

TEST_CASE("basis is independent of generator order") {
    std::mt19937_64 rng(59);
    for (int t = 0; t < 15; ++t) {
        std::vector<MultiPoly> gens;
        for (int i = 0; i < 3; ++i) {
            MultiPoly p = rand_poly(3, rng);
            if (!p.is_zero()) gens.push_back(p);
        }
        if (gens.empty()) continue;
        GroebnerBasis a = buchberger(gens, MonomialOrder::grevlex(3));
        std::reverse(gens.begin(), gens.end());
        GroebnerBasis b = buchberger(gens, MonomialOrder::grevlex(3));
        CHECK(a.polys == b.polys);
    }
}

TEST_CASE("every S-polynomial reduces to zero (replay)") {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 10; ++t) {
        std::vector<MultiPoly> gens;
        for (int i = 0; i < 3; ++i) {
            MultiPoly p = rand_poly(2, rng);
            if (!p.is_zero()) gens.push_back(p);
        }
        if (gens.empty()) continue;
        GroebnerBasis gb = buchberger(gens, MonomialOrder::grevlex(2));
        if (gb.is_trivial_unit()) continue;
        for (size_t i = 0; i < gb.polys.size(); ++i)
            for (size_t j = i + 1; j < gb.polys.size(); ++j)
                CHECK(normal_form(spoly(gb.polys[i], gb.polys[j], gb.order), gb).is_zero());
        // generators themselves reduce to zero
        for (const auto& g : gens) CHECK(normal_form(g, gb).is_zero());
    }
}

TEST_CASE("ideal membership by normal form") {
    MultiPoly f = mono(2, {2, 0}, 1) + mono(2, {0, 1}, -1); // x^2 - y
    MultiPoly g = mono(2, {0, 2}, 1) + mono(2, {0, 0}, -1); // y^2 - 1
    GroebnerBasis gb = buchberger({f, g}, MonomialOrder::lex(2));
    std::mt19937_64 rng(67);
    for (int t = 0; t < 10; ++t) {
        MultiPoly comb = rand_poly(2, rng) * f + rand_poly(2, rng) * g;
        CHECK(normal_form(comb, gb).is_zero());
    }
    // x is not in the ideal
    CHECK_FALSE(normal_form(mono(2, {1, 0}, 1), gb).is_zero());
}

TEST_CASE("elimination") {
    // {x^2 + y^2 - 1, x - y}: eliminate x -> y^2 - 1/2
    MultiPoly f = mono(2, {2, 0}, 1) + mono(2, {0, 2}, 1) + mono(2, {0, 0}, -1);
    MultiPoly g = mono(2, {1, 0}, 1) + mono(2, {0, 1}, -1);
    auto kept = eliminate({f, g}, {1});
    REQUIRE(kept.size() == 1);
    MultiPoly expect = mono(2, {0, 2}, 1);
    expect.add_term({0, 0}, Scalar(Rat(-1, 2)));
    CHECK(kept[0] == expect);
}

TEST_CASE("guards throw rather than truncate") {
    std::vector<MultiPoly> gens;
    for (int i = 0; i < 4; ++i) {
        MultiPoly p(2);
        p.add_term({i + 1, 0}, Scalar(1));
        p.add_term({0, i + 2}, Scalar(-1));
        gens.push_back(p);
    }
    BuchbergerLimits tiny{2, 60};
    CHECK_THROWS_AS(buchberger(gens, MonomialOrder::grevlex(2), tiny), GuardExceeded);
}

TEST_CASE("complex non-degeneracy certificate for a^2 on C as a real algebra") {
    // note a^2 on the quaternions is complex-degenerate: the complexification
    // is Mat2(C), which has nilpotents. C complexifies to C + C with no
    // nilpotents, so squaring stays non-degenerate there.
    auto C = make_complex_as_real();
    Subspace full = full_subspace(C);
    ScalarizedSystem sys = scalarize({parse_map("x^2", C, 1)}, full, full);
    Certificate c = nondegenerate_complex(sys);
    CHECK(c.kind == Certificate::Kind::Nondegenerate);
    CHECK(c.method == "groebner-zero-dim");
    CHECK(c.pure_power_leading_monomials.size() == 2);
}

TEST_CASE("degeneracy witness for left multiplication on Mat2") {
    auto A = make_matrix(2, Field::Real);
    Subspace full = full_subspace(A);
    ScalarizedSystem sys = scalarize({parse_map("E11*x", A, 1)}, full, full);
    Certificate c = nondegenerate_complex(sys);
    CHECK(c.kind == Certificate::Kind::DegenerateWitness);
    REQUIRE(c.witness_is_exact);
    // replay: the witness is a nonzero common zero
    Element w(c.witness.begin(), c.witness.end());
    CHECK_FALSE(is_zero(w));
    for (const auto& p : sys.polys) CHECK(p.eval(c.witness).is_zero());
}

TEST_CASE("real certificate via the sphere for a^2 on the quaternions") {
    auto H = make_quaternions();
    Subspace full = full_subspace(H);
    ScalarizedSystem sys = scalarize({parse_map("x^2", H, 1)}, full, full);
    Certificate c = certify_nondegenerate_real(sys);
    CHECK(c.kind == Certificate::Kind::Nondegenerate);
    CHECK(c.method == "sphere-groebner");
}

TEST_CASE("no-real-zero certification") {
    auto R = make_algebra("reals");
    Subspace full = full_subspace(R);
    ScalarizedSystem no = scalarize({parse_map("x^2 + 1", R, 1)}, full, full);
    Certificate c1 = certify_no_real_zero(no);
    CHECK(c1.kind == Certificate::Kind::NoRealZero);
    ScalarizedSystem yes = scalarize({parse_map("x^2 - 1", R, 1)}, full, full);
    Certificate c2 = certify_no_real_zero(yes);
    CHECK(c2.kind == Certificate::Kind::Inconclusive);
}

TEST_CASE("certificates serialize") {
    auto R = make_algebra("reals");
    Subspace full = full_subspace(R);
    ScalarizedSystem no = scalarize({parse_map("x^2 + 1", R, 1)}, full, full);
    std::string j = certify_no_real_zero(no).to_json();
    CHECK(j.find("no-real-zero") != std::string::npos);
}
