#include "algpoly/scalarize.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace algpoly {

std::vector<std::string> VariableAtlas::var_names() const {
    std::vector<std::string> names(nvars());
    for (int v = 0; v < nvars(); ++v) names[v] = var_name(v);
    return names;
}

ImageNotContained::ImageNotContained(int mi, int ac, MultiPoly r)
    : std::runtime_error("image of map " + std::to_string(mi + 1) +
                         " leaves span(H') in ambient coordinate " + std::to_string(ac + 1)),
      map_index(mi), ambient_coord(ac), residual(std::move(r)) {}

namespace {

using PolyVec = std::vector<MultiPoly>; // ambient coordinates with polynomial entries

PolyVec word_poly_coords(const Algebra& alg, const Word& w,
                         const std::vector<PolyVec>& args, int nvars) {
    switch (w.kind) {
        case Word::Kind::Const: {
            PolyVec r(alg.dim, MultiPoly(nvars));
            for (int k = 0; k < alg.dim; ++k)
                r[k] = MultiPoly::constant(nvars, w.value[k]);
            return r;
        }
        case Word::Kind::Var:
            if (w.var >= static_cast<int>(args.size()))
                throw std::invalid_argument("variable index exceeds argument tuple");
            return args[w.var];
        case Word::Kind::Prod: {
            PolyVec l = word_poly_coords(alg, *w.left, args, nvars);
            PolyVec r = word_poly_coords(alg, *w.right, args, nvars);
            PolyVec out(alg.dim, MultiPoly(nvars));
            for (int i = 0; i < alg.dim; ++i) {
                if (l[i].is_zero()) continue;
                for (int j = 0; j < alg.dim; ++j) {
                    if (r[j].is_zero()) continue;
                    MultiPoly prod = l[i] * r[j];
                    for (int k = 0; k < alg.dim; ++k) {
                        const Scalar& g = alg.g(i, j, k);
                        if (!g.is_zero()) out[k] = out[k] + g * prod;
                    }
                }
            }
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<PolyVec> generic_arguments(const Subspace& H, const VariableAtlas& atlas) {
    const Algebra& alg = *H.alg;
    std::vector<PolyVec> args(atlas.nargs);
    for (int l = 0; l < atlas.nargs; ++l) {
        args[l].assign(alg.dim, MultiPoly(atlas.nvars()));
        for (int k = 0; k < atlas.subspace_dim; ++k) {
            MultiPoly lam = MultiPoly::variable(atlas.nvars(), atlas.flat(k, l));
            for (int c = 0; c < alg.dim; ++c)
                if (!H.basis[k][c].is_zero())
                    args[l][c] = args[l][c] + H.basis[k][c] * lam;
        }
    }
    return args;
}

} // namespace

std::vector<MultiPoly> scalarize_ambient(const PolynomialMap& p,
                                         const std::vector<std::vector<MultiPoly>>& args,
                                         int nvars) {
    const Algebra& alg = *p.alg;
    PolyVec acc(alg.dim, MultiPoly(nvars));
    for (const auto& t : p.terms) {
        PolyVec v = word_poly_coords(alg, *t.word, args, nvars);
        for (int k = 0; k < alg.dim; ++k)
            if (!v[k].is_zero()) acc[k] = acc[k] + t.coeff * v[k];
    }
    return acc;
}

ScalarizedSystem scalarize(const std::vector<PolynomialMap>& maps, const Subspace& H,
                           const Subspace& Hprime) {
    if (maps.empty()) throw std::invalid_argument("no maps to scalarize");
    const AlgebraPtr alg = maps[0].alg;
    int n = maps[0].nvars;
    for (const auto& m : maps)
        if (m.alg != alg || m.nvars != n)
            throw std::invalid_argument("maps must share algebra and arity");
    if (H.alg != alg || Hprime.alg != alg)
        throw std::invalid_argument("subspaces must live in the maps' algebra");

    VariableAtlas atlas{H.dim(), n};
    auto args = generic_arguments(H, atlas);

    std::vector<std::vector<Scalar>> cols;
    for (const auto& b : Hprime.basis) cols.push_back(b);
    ExactSolver solver(cols, alg->dim);

    ScalarizedSystem sys;
    sys.atlas = atlas;
    sys.target_basis = Hprime.basis;
    sys.source_basis = H.basis;
    sys.nmaps = static_cast<int>(maps.size());

    const int e = Hprime.dim();
    for (size_t mi = 0; mi < maps.size(); ++mi) {
        PolyVec ambient = scalarize_ambient(maps[mi], args, atlas.nvars());
        // collect ambient coefficient vectors per monomial
        std::map<ExpVec, std::vector<Scalar>> by_mono;
        for (int c = 0; c < alg->dim; ++c)
            for (const auto& [ev, coeff] : ambient[c].terms()) {
                auto it = by_mono.find(ev);
                if (it == by_mono.end())
                    it = by_mono.emplace(ev, std::vector<Scalar>(alg->dim, Scalar{})).first;
                it->second[c] = coeff;
            }
        std::vector<MultiPoly> hs(e, MultiPoly(atlas.nvars()));
        for (const auto& [ev, vec] : by_mono) {
            auto sol = solver.solve(vec);
            if (!sol) {
                auto res = solver.residual(vec);
                int bad = 0;
                while (bad < alg->dim && res[bad].is_zero()) ++bad;
                MultiPoly rp = MultiPoly::monomial(atlas.nvars(), ev,
                                                   bad < alg->dim ? res[bad] : Scalar(1));
                throw ImageNotContained(static_cast<int>(mi), bad, rp);
            }
            for (int j = 0; j < e; ++j)
                if (!(*sol)[j].is_zero()) hs[j].add_term(ev, (*sol)[j]);
        }
        for (auto& h : hs) sys.polys.push_back(std::move(h));
    }
    return sys;
}

bool is_semantically_zero(const PolynomialMap& p, const Subspace& H) {
    if (p.terms.empty()) return true;
    VariableAtlas atlas{H.dim(), p.nvars};
    auto args = generic_arguments(H, atlas);
    auto ambient = scalarize_ambient(p, args, atlas.nvars());
    return std::all_of(ambient.begin(), ambient.end(),
                       [](const MultiPoly& q) { return q.is_zero(); });
}

ScalarizedSystem homogenize(const ScalarizedSystem& sys) {
    if (sys.has_homogenizing_var) throw std::invalid_argument("system is already homogenized");
    ScalarizedSystem out = sys;
    out.has_homogenizing_var = true;
    for (auto& p : out.polys) p = p.homogenized();
    return out;
}

ScalarizedSystem dehomogenize(const ScalarizedSystem& sys) {
    if (!sys.has_homogenizing_var) throw std::invalid_argument("system is not homogenized");
    ScalarizedSystem out = sys;
    out.has_homogenizing_var = false;
    for (auto& p : out.polys) p = p.dehomogenized();
    return out;
}

std::vector<std::vector<Scalar>> linear_coefficient_matrix(const PolynomialMap& p,
                                                           const Subspace& H,
                                                           const Subspace& Hprime) {
    if (p.nvars != 1) throw std::invalid_argument("coefficient matrix requires a single variable");
    ScalarizedSystem sys = scalarize({p}, H, Hprime);
    for (const auto& q : sys.polys) {
        if (q.total_degree() > 1 || !q.homogeneous_part(0).is_zero())
            throw std::invalid_argument("map is not homogeneous of degree 1 on H");
    }
    const int d = H.dim(), e = Hprime.dim();
    std::vector<std::vector<Scalar>> M(e, std::vector<Scalar>(d, Scalar{}));
    for (int j = 0; j < e; ++j)
        for (const auto& [ev, c] : sys.polys[j].terms())
            for (int k = 0; k < d; ++k)
                if (ev[sys.atlas.flat(k, 0)] == 1) M[j][k] = c;
    return M;
}

std::vector<std::vector<MultiPoly>> jacobian(const ScalarizedSystem& sys) {
    int nv = sys.poly_nvars();
    std::vector<std::vector<MultiPoly>> J;
    for (const auto& p : sys.polys) {
        std::vector<MultiPoly> row;
        for (int v = 0; v < nv; ++v) row.push_back(p.derivative(v));
        J.push_back(std::move(row));
    }
    return J;
}

Scalar exact_determinant(std::vector<std::vector<Scalar>> m) {
    const int n = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("determinant of a non-square matrix");
    Scalar det(1);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!m[r][c].is_zero()) { piv = r; break; }
        if (piv < 0) return Scalar(0);
        if (piv != c) { std::swap(m[piv], m[c]); det = -det; }
        det *= m[c][c];
        Scalar inv = Scalar(1) / m[c][c];
        for (int r = c + 1; r < n; ++r) {
            if (m[r][c].is_zero()) continue;
            Scalar f = m[r][c] * inv;
            for (int j = c; j < n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    return det;
}

std::vector<Scalar> eval_system(const ScalarizedSystem& sys, const std::vector<Scalar>& point) {
    std::vector<Scalar> out;
    out.reserve(sys.polys.size());
    for (const auto& p : sys.polys) out.push_back(p.eval(point));
    return out;
}

std::string system_to_json(const ScalarizedSystem& sys) {
    nlohmann::json j;
    auto names = sys.atlas.var_names();
    if (sys.has_homogenizing_var) names.push_back("z");
    j["variables"] = names;
    j["nmaps"] = sys.nmaps;
    nlohmann::json tb = nlohmann::json::array();
    for (const auto& b : sys.target_basis) {
        std::vector<std::string> row;
        for (const auto& c : b) row.push_back(c.to_string());
        tb.push_back(row);
    }
    j["target_basis"] = std::move(tb);
    nlohmann::json polys = nlohmann::json::array();
    for (const auto& p : sys.polys) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [e, c] : p.terms()) terms.push_back({e, c.to_string()});
        polys.push_back(std::move(terms));
    }
    j["polys"] = std::move(polys);
    return j.dump(2);
}

} // namespace algpoly
