#include "algpoly/solve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace algpoly {

namespace {

using C = std::complex<double>;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

// ---- compiled numeric systems ------------------------------------------------

struct NTerm {
    ExpVec e;
    C c;
};
using NPoly = std::vector<NTerm>;

struct NumSys {
    int nvars = 0;
    std::vector<NPoly> f;
    std::vector<std::vector<NPoly>> jac; // f.size() rows, nvars cols
    std::vector<int> deg;
    double coeff_scale = 1.0; // max coefficient magnitude, >= 1
};

C cpow_int(C x, int n) {
    C r(1.0);
    while (n > 0) {
        if (n & 1) r *= x;
        x *= x;
        n >>= 1;
    }
    return r;
}

NPoly compile_poly(const MultiPoly& p) {
    NPoly out;
    out.reserve(p.term_count());
    for (const auto& [e, c] : p.terms()) out.push_back({e, c.to_complex()});
    return out;
}

NumSys compile_numeric(const std::vector<MultiPoly>& polys, int nvars) {
    NumSys s;
    s.nvars = nvars;
    for (const auto& p : polys) {
        s.f.push_back(compile_poly(p));
        s.deg.push_back(p.total_degree());
        std::vector<NPoly> row;
        for (int v = 0; v < nvars; ++v) row.push_back(compile_poly(p.derivative(v)));
        s.jac.push_back(std::move(row));
        for (const auto& [e, c] : p.terms())
            s.coeff_scale = std::max(s.coeff_scale, std::abs(c.to_complex()));
    }
    return s;
}

C eval_npoly(const NPoly& p, const std::vector<C>& x) {
    C acc(0.0);
    for (const auto& t : p) {
        C m = t.c;
        for (size_t v = 0; v < t.e.size(); ++v)
            if (t.e[v] != 0) m *= cpow_int(x[v], t.e[v]);
        acc += m;
    }
    return acc;
}

std::vector<C> eval_f(const NumSys& s, const std::vector<C>& x) {
    std::vector<C> out(s.f.size());
    for (size_t i = 0; i < s.f.size(); ++i) out[i] = eval_npoly(s.f[i], x);
    return out;
}

std::vector<std::vector<C>> eval_jac(const NumSys& s, const std::vector<C>& x) {
    std::vector<std::vector<C>> out(s.f.size(), std::vector<C>(s.nvars));
    for (size_t i = 0; i < s.f.size(); ++i)
        for (int v = 0; v < s.nvars; ++v) out[i][v] = eval_npoly(s.jac[i][v], x);
    return out;
}

double inf_norm(const std::vector<C>& v) {
    double m = 0;
    for (const auto& z : v) m = std::max(m, std::abs(z));
    return m;
}

C det_and_discard(std::vector<std::vector<C>> a) {
    const int n = static_cast<int>(a.size());
    C det(1.0);
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
        if (std::abs(a[piv][c]) == 0.0) return C(0.0);
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (int r = c + 1; r < n; ++r) {
            C f = a[r][c] / a[c][c];
            for (int j = c; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return det;
}

// Gauss-Newton step direction: solves J dx = F for square systems, the normal
// equations J^H J dx = J^H F otherwise.
bool newton_direction(const std::vector<std::vector<C>>& J, const std::vector<C>& F,
                      std::vector<C>& dx) {
    const int rows = static_cast<int>(J.size());
    const int cols = rows ? static_cast<int>(J[0].size()) : 0;
    if (rows == cols) return linsolve_complex(J, F, dx);
    std::vector<std::vector<C>> A(cols, std::vector<C>(cols, C(0.0)));
    std::vector<C> b(cols, C(0.0));
    for (int i = 0; i < rows; ++i)
        for (int a = 0; a < cols; ++a) {
            b[a] += std::conj(J[i][a]) * F[i];
            for (int c = 0; c < cols; ++c) A[a][c] += std::conj(J[i][a]) * J[i][c];
        }
    return linsolve_complex(A, b, dx);
}

// Damped (Gauss-)Newton; returns true when ||F||_inf <= tol at exit.
bool newton_polish(const NumSys& s, std::vector<C>& x, double tol, int max_iters,
                   int max_halvings, bool* singular = nullptr) {
    if (singular) *singular = false;
    std::vector<C> F = eval_f(s, x);
    double fn = inf_norm(F);
    for (int it = 0; it < max_iters && fn > tol; ++it) {
        std::vector<C> dx;
        if (!newton_direction(eval_jac(s, x), F, dx)) {
            if (singular) *singular = true;
            return false;
        }
        double alpha = 1.0;
        bool improved = false;
        for (int h = 0; h <= max_halvings; ++h, alpha *= 0.5) {
            std::vector<C> xc(x);
            for (int v = 0; v < s.nvars; ++v) xc[v] -= alpha * dx[v];
            std::vector<C> Fc = eval_f(s, xc);
            double fc = inf_norm(Fc);
            if (fc < fn) {
                x = std::move(xc);
                F = std::move(Fc);
                fn = fc;
                improved = true;
                break;
            }
        }
        if (!improved) {
            if (singular) *singular = true;
            return fn <= tol;
        }
    }
    return fn <= tol;
}

// ---- total-degree homotopy -----------------------------------------------------

struct PathResult {
    std::vector<C> x;
    PathStatus status = PathStatus::Diverged;
    double residual = 0;
};

// H(x,t) = (1-t) gamma (x_i^{d_i} - 1) + t f_i(x)
struct Homotopy {
    const NumSys& s;
    C gamma;
    std::vector<C> H(const std::vector<C>& x, double t) const {
        std::vector<C> out = eval_f(s, x);
        for (size_t i = 0; i < out.size(); ++i)
            out[i] = (1 - t) * gamma * (cpow_int(x[i], s.deg[i]) - C(1.0)) + t * out[i];
        return out;
    }
    std::vector<std::vector<C>> JH(const std::vector<C>& x, double t) const {
        auto out = eval_jac(s, x);
        for (size_t i = 0; i < out.size(); ++i) {
            for (int v = 0; v < s.nvars; ++v) out[i][v] *= t;
            out[i][i] +=
                (1 - t) * gamma * C(double(s.deg[i])) * cpow_int(x[i], s.deg[i] - 1);
        }
        return out;
    }
    std::vector<C> dHdt(const std::vector<C>& x) const {
        std::vector<C> out = eval_f(s, x);
        for (size_t i = 0; i < out.size(); ++i)
            out[i] -= gamma * (cpow_int(x[i], s.deg[i]) - C(1.0));
        return out;
    }
};

PathResult track_path(const Homotopy& h, std::vector<C> x, const SolveConfig& cfg) {
    const HomotopyConfig& hc = cfg.homotopy;
    const double ctol = hc.corrector_tol * std::max(1.0, h.s.coeff_scale);
    double t = 0, dt = hc.dt_init;
    PathResult res;
    for (int step = 0; step < hc.max_steps && t < 1.0; ++step) {
        dt = std::min(dt, 1.0 - t);
        // Euler predictor along the path tangent.
        std::vector<C> tangent;
        if (!newton_direction(h.JH(x, t), h.dHdt(x), tangent)) {
            res.status = PathStatus::Diverged;
            return res;
        }
        std::vector<C> xp(x);
        for (size_t v = 0; v < xp.size(); ++v) xp[v] -= dt * tangent[v];
        // Newton corrector at t + dt.
        double tn = t + dt;
        bool ok = false;
        for (int it = 0; it < 6; ++it) {
            std::vector<C> Hv = h.H(xp, tn);
            if (inf_norm(Hv) <= ctol) {
                ok = true;
                break;
            }
            std::vector<C> dx;
            if (!newton_direction(h.JH(xp, tn), Hv, dx)) break;
            for (size_t v = 0; v < xp.size(); ++v) xp[v] -= dx[v];
        }
        // Reject steps that land far outside the predictor's trust region:
        // those are usually jumps into a neighboring path's basin.
        if (ok) {
            double moved = 0;
            for (size_t v = 0; v < xp.size(); ++v)
                moved = std::max(moved, std::abs(xp[v] - x[v]));
            double trust = 10.0 * dt * std::max(1.0, inf_norm(tangent));
            if (moved > trust) ok = false;
        }
        if (ok && inf_norm(xp) < 1e8) {
            x = std::move(xp);
            t = tn;
            dt = std::min(dt * 2.0, hc.dt_init);
        } else {
            dt *= 0.5;
            if (dt < hc.dt_min) {
                res.status = PathStatus::Diverged;
                return res;
            }
        }
    }
    if (t < 1.0) {
        res.status = PathStatus::Diverged;
        return res;
    }
    bool singular = false;
    bool conv = newton_polish(h.s, x, cfg.tol_residual * std::max(1.0, h.s.coeff_scale),
                              cfg.max_newton_iters, cfg.max_damping_halvings, &singular);
    res.x = std::move(x);
    res.residual = inf_norm(eval_f(h.s, res.x));
    if (conv)
        res.status = PathStatus::Converged;
    else if (singular && res.residual <= std::sqrt(cfg.tol_residual))
        res.status = PathStatus::SingularEndpoint;
    else
        res.status = PathStatus::Diverged;
    return res;
}

bool points_close(const std::vector<C>& a, const std::vector<C>& b, double tol) {
    for (size_t v = 0; v < a.size(); ++v)
        if (std::abs(a[v] - b[v]) > tol) return false;
    return true;
}

// Deterministic order + clustering of solution points.
std::vector<std::vector<C>> dedup_points(std::vector<std::vector<C>> pts, double tol) {
    std::sort(pts.begin(), pts.end(), [](const std::vector<C>& a, const std::vector<C>& b) {
        for (size_t v = 0; v < a.size(); ++v) {
            if (a[v].real() != b[v].real()) return a[v].real() < b[v].real();
            if (a[v].imag() != b[v].imag()) return a[v].imag() < b[v].imag();
        }
        return false;
    });
    std::vector<std::vector<C>> out;
    for (auto& p : pts) {
        bool dup = false;
        for (const auto& q : out)
            if (points_close(p, q, tol)) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(std::move(p));
    }
    return out;
}

bool near_singular_jacobian(const NumSys& s, const std::vector<C>& x) {
    if (s.f.size() != static_cast<size_t>(s.nvars)) return false;
    double scale = std::max(1.0, s.coeff_scale);
    double d = std::abs(det_and_discard(eval_jac(s, x)));
    return d < 1e-8 * std::pow(scale, s.nvars);
}

SolveReport run_homotopy(const NumSys& ns, const SolveConfig& cfg) {
    if (ns.f.size() != static_cast<size_t>(ns.nvars))
        throw std::invalid_argument("total-degree homotopy requires a square system");
    for (int d : ns.deg)
        if (d < 1) throw std::invalid_argument("homotopy requires positive-degree polynomials");

    SolveReport rep;
    rep.method = "homotopy";
    rep.bezout_count = 1;
    for (int d : ns.deg) rep.bezout_count *= d;

    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);

    // One full sweep of the Bezout start roots for a fixed gamma. Returns the
    // non-diverged endpoints and whether two distinct paths collided on the
    // same endpoint (a path jump or a genuine multiple root).
    auto sweep = [&](const C& gamma, PathStats& stats, bool& collided) {
        Homotopy h{ns, gamma};
        std::vector<std::vector<C>> endpoints;
        std::vector<int> idx(ns.nvars, 0);
        const double two_pi = 2 * M_PI;
        for (;;) {
            std::vector<C> x0(ns.nvars);
            for (int v = 0; v < ns.nvars; ++v)
                x0[v] = std::polar(1.0, two_pi * idx[v] / ns.deg[v]);
            PathResult pr = track_path(h, std::move(x0), cfg);
            ++stats.tracked;
            switch (pr.status) {
                case PathStatus::Converged:
                    ++stats.converged;
                    endpoints.push_back(std::move(pr.x));
                    break;
                case PathStatus::SingularEndpoint:
                    ++stats.singular;
                    endpoints.push_back(std::move(pr.x));
                    break;
                case PathStatus::Diverged:
                    ++stats.diverged;
                    break;
            }
            int v = 0;
            while (v < ns.nvars && ++idx[v] == ns.deg[v]) idx[v++] = 0;
            if (v == ns.nvars) break;
        }
        for (size_t i = 0; i < endpoints.size() && !collided; ++i)
            for (size_t j = 0; j < i; ++j)
                if (points_close(endpoints[i], endpoints[j], cfg.tol_dedup)) {
                    collided = true;
                    break;
                }
        return endpoints;
    };

    // Endpoint collisions cannot be told apart from multiple roots within one
    // sweep, so re-sweep with a fresh gamma and take the union of the roots
    // found; a jumped-over root is recovered by some other gamma.
    std::vector<std::vector<C>> endpoints;
    for (int attempt = 0; attempt < 3; ++attempt) {
        C gamma = std::polar(1.0, 2 * M_PI * uni(rng) + 0.3);
        bool collided = false;
        PathStats stats;
        auto eps = sweep(gamma, stats, collided);
        endpoints.insert(endpoints.end(), eps.begin(), eps.end());
        if (attempt == 0) rep.paths = stats;
        // a diverged path may be a root at infinity (harmless) or a tracking
        // failure, so it also triggers a re-sweep unless all roots are in hand
        if (!collided && stats.diverged == 0) break;
        if (static_cast<long>(dedup_points(endpoints, cfg.tol_dedup).size()) ==
            rep.bezout_count)
            break;
    }

    for (auto& p : dedup_points(std::move(endpoints), cfg.tol_dedup)) {
        FoundZero z;
        z.residual = inf_norm(eval_f(ns, p));
        z.possibly_positive_dimensional = near_singular_jacobian(ns, p);
        z.lambda = std::move(p);
        rep.zeros.push_back(std::move(z));
    }
    return rep;
}

SolveReport run_multistart(const NumSys& ns, const SolveConfig& cfg, bool complex_starts) {
    SolveReport rep;
    rep.method = "newton-multistart";
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double radii[] = {0.5, 1.0, 2.0, 4.0};
    const double tol = cfg.tol_residual * std::max(1.0, ns.coeff_scale);

    std::vector<std::vector<C>> found;
    for (int s = 0; s < cfg.n_starts; ++s) {
        double r = radii[s % 4];
        std::vector<C> x(ns.nvars);
        for (int v = 0; v < ns.nvars; ++v)
            x[v] = complex_starts ? C(r * gauss(rng), r * gauss(rng)) : C(r * gauss(rng), 0.0);
        if (newton_polish(ns, x, tol, cfg.max_newton_iters, cfg.max_damping_halvings))
            found.push_back(std::move(x));
    }
    for (auto& p : dedup_points(std::move(found), cfg.tol_dedup)) {
        FoundZero z;
        z.residual = inf_norm(eval_f(ns, p));
        z.possibly_positive_dimensional = near_singular_jacobian(ns, p);
        z.lambda = std::move(p);
        rep.zeros.push_back(std::move(z));
    }
    return rep;
}

// ---- algebra-level norm of a scalarized value -----------------------------------

// Per-map ambient coordinate polynomials: sum_j h_{ij} * (b'_j)_c.
std::vector<std::vector<MultiPoly>> ambient_coordinate_polys(const ScalarizedSystem& sys) {
    const int e = sys.polys_per_map();
    const int adim = sys.target_basis.empty() ? 0 : static_cast<int>(sys.target_basis[0].size());
    std::vector<std::vector<MultiPoly>> out(sys.nmaps);
    for (int i = 0; i < sys.nmaps; ++i) {
        out[i].assign(adim, MultiPoly(sys.poly_nvars()));
        for (int j = 0; j < e; ++j) {
            const MultiPoly& h = sys.polys[i * e + j];
            if (h.is_zero()) continue;
            for (int c = 0; c < adim; ++c)
                if (!sys.target_basis[j][c].is_zero())
                    out[i][c] = out[i][c] + sys.target_basis[j][c] * h;
        }
    }
    return out;
}

} // namespace

// ---- public helpers --------------------------------------------------------------

bool linsolve_complex(std::vector<std::vector<C>> a, std::vector<C> b, std::vector<C>& x) {
    const int n = static_cast<int>(a.size());
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
        if (std::abs(a[piv][c]) < 1e-300) return false;
        std::swap(a[piv], a[c]);
        std::swap(b[piv], b[c]);
        for (int r = c + 1; r < n; ++r) {
            C f = a[r][c] / a[c][c];
            b[r] -= f * b[c];
            for (int j = c; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    x.assign(n, C(0.0));
    for (int r = n - 1; r >= 0; --r) {
        C s = b[r];
        for (int j = r + 1; j < n; ++j) s -= a[r][j] * x[j];
        x[r] = s / a[r][r];
    }
    return true;
}

std::vector<ElementD> lambda_to_elements(const std::vector<C>& lambda, const Subspace& H,
                                         int nargs) {
    const int d = H.dim();
    const int adim = H.alg->dim;
    std::vector<ElementD> out(nargs, ElementD(adim, C(0.0)));
    for (int l = 0; l < nargs; ++l)
        for (int k = 0; k < d; ++k) {
            C lam = lambda[l * d + k];
            for (int c = 0; c < adim; ++c) out[l][c] += lam * H.basis[k][c].to_complex();
        }
    return out;
}

double algebra_residual(const std::vector<PolynomialMap>& maps,
                        const std::vector<ElementD>& point) {
    double m = 0;
    for (const auto& p : maps) m = std::max(m, norm_numeric(evaluate_numeric(p, point)));
    return m;
}

// ---- scalar-system solvers --------------------------------------------------------

SolveReport solve_complex_total_degree(const ScalarizedSystem& sys, const SolveConfig& cfg) {
    return run_homotopy(compile_numeric(sys.polys, sys.poly_nvars()), cfg);
}

SolveReport solve_real_multistart(const ScalarizedSystem& sys, const SolveConfig& cfg) {
    for (const auto& p : sys.polys)
        for (const auto& [e, c] : p.terms())
            if (!c.is_real())
                throw std::invalid_argument("real multistart requires real coefficients");
    return run_multistart(compile_numeric(sys.polys, sys.poly_nvars()), cfg, false);
}

// ---- non-degeneracy probing ---------------------------------------------------------

NondegProbe numeric_nondegeneracy_min(const ScalarizedSystem& leading_forms,
                                      const SolveConfig& cfg) {
    const int N = leading_forms.poly_nvars();
    auto ambient = ambient_coordinate_polys(leading_forms);

    // flat list of ambient coordinate polys + per-map slice boundaries
    std::vector<MultiPoly> comps;
    std::vector<int> map_end;
    for (const auto& row : ambient) {
        for (const auto& p : row) comps.push_back(p);
        map_end.push_back(static_cast<int>(comps.size()));
    }
    NumSys ns = compile_numeric(comps, N);

    auto value = [&](const std::vector<C>& x) {
        std::vector<C> v = eval_f(ns, x);
        double worst = 0;
        int begin = 0;
        for (int end : map_end) {
            double s = 0;
            for (int i = begin; i < end; ++i) s += std::norm(v[i]);
            worst = std::max(worst, std::sqrt(s));
            begin = end;
        }
        return worst;
    };
    // smooth objective used for descent: sum of |coordinates|^2
    auto objective = [&](const std::vector<C>& x) {
        std::vector<C> v = eval_f(ns, x);
        double s = 0;
        for (const auto& z : v) s += std::norm(z);
        return s;
    };
    auto gradient = [&](const std::vector<C>& x) {
        std::vector<C> v = eval_f(ns, x);
        auto J = eval_jac(ns, x);
        std::vector<double> g(N, 0.0);
        for (size_t i = 0; i < v.size(); ++i)
            for (int a = 0; a < N; ++a) g[a] += 2.0 * std::real(std::conj(v[i]) * J[i][a]);
        return g;
    };

    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int starts = std::max(4, std::min(cfg.n_starts, 64));

    NondegProbe probe;
    probe.min_value = std::numeric_limits<double>::infinity();
    for (int s = 0; s < starts; ++s) {
        std::vector<double> lam(N);
        double nrm = 0;
        do {
            nrm = 0;
            for (int v = 0; v < N; ++v) {
                lam[v] = gauss(rng);
                nrm += lam[v] * lam[v];
            }
        } while (nrm < 1e-12);
        nrm = std::sqrt(nrm);
        for (double& l : lam) l /= nrm;

        auto as_complex = [&](const std::vector<double>& l) {
            std::vector<C> x(N);
            for (int v = 0; v < N; ++v) x[v] = C(l[v], 0.0);
            return x;
        };
        double f = objective(as_complex(lam));
        for (int it = 0; it < 300; ++it) {
            std::vector<double> g = gradient(as_complex(lam));
            double gl = 0;
            for (int v = 0; v < N; ++v) gl += g[v] * lam[v];
            double gt_norm = 0;
            for (int v = 0; v < N; ++v) {
                g[v] -= gl * lam[v]; // project onto the tangent space
                gt_norm += g[v] * g[v];
            }
            if (gt_norm < 1e-26 * std::max(1.0, f)) break;
            double alpha = 0.5;
            bool improved = false;
            for (int h = 0; h < 40; ++h, alpha *= 0.5) {
                std::vector<double> cand(N);
                double cn = 0;
                for (int v = 0; v < N; ++v) {
                    cand[v] = lam[v] - alpha * g[v];
                    cn += cand[v] * cand[v];
                }
                cn = std::sqrt(cn);
                for (double& l : cand) l /= cn;
                double fc = objective(as_complex(cand));
                if (fc < f) {
                    lam = std::move(cand);
                    f = fc;
                    improved = true;
                    break;
                }
            }
            if (!improved) break;
        }
        // Near-zero minima get a Gauss-Newton polish on the sphere-augmented
        // system so genuine witnesses reach ~machine precision.
        if (value(as_complex(lam)) < 1e-4) {
            std::vector<C> x = as_complex(lam);
            for (int it = 0; it < 50; ++it) {
                std::vector<C> F = eval_f(ns, x);
                double sph = -1.0;
                for (int v = 0; v < N; ++v) sph += std::real(x[v] * x[v]);
                F.push_back(C(sph, 0.0));
                if (inf_norm(F) < 1e-14) break;
                auto J = eval_jac(ns, x);
                J.emplace_back(N);
                for (int v = 0; v < N; ++v) J.back()[v] = 2.0 * x[v];
                std::vector<C> dx;
                if (!newton_direction(J, F, dx)) break;
                for (int v = 0; v < N; ++v) x[v] -= dx[v];
            }
            bool real_pt = true;
            for (const auto& z : x)
                if (std::abs(z.imag()) > 1e-10) real_pt = false;
            if (real_pt) {
                double nrm = 0;
                for (int v = 0; v < N; ++v) nrm += x[v].real() * x[v].real();
                if (std::abs(nrm - 1.0) < 1e-8 && value(x) < value(as_complex(lam)))
                    for (int v = 0; v < N; ++v) lam[v] = x[v].real() / std::sqrt(nrm);
            }
        }
        double val = value(as_complex(lam));
        if (val < probe.min_value) {
            probe.min_value = val;
            probe.argmin = lam;
        }
    }
    probe.verdict = probe.min_value <= 1e-12 ? "degenerate-witness" : "numerically-nondegenerate";
    return probe;
}

NondegAssessment assess_nondegeneracy(const std::vector<PolynomialMap>& leading_forms,
                                      const Subspace& H, const SolveConfig& cfg) {
    NondegAssessment a;
    const AlgebraPtr alg = leading_forms.empty() ? nullptr : leading_forms[0].alg;

    // Multiplicative-norm shortcut: a single monomial with nonzero constants
    // only vanishes at 0 on a division algebra.
    if (leading_forms.size() == 1 && leading_forms[0].nvars == 1 &&
        leading_forms[0].terms.size() == 1 && alg && alg->has_composition_norm) {
        const Term& t = leading_forms[0].terms[0];
        if (monomial_norm_sq_exact(*alg, *t.word, t.coeff) > 0) {
            a.certified_real = true;
            a.certificate.kind = Certificate::Kind::Nondegenerate;
            a.certificate.method = "division-algebra";
            a.certificate.reason =
                "single-monomial leading form over an algebra with multiplicative norm";
            a.summary = a.certificate.reason;
            return a;
        }
    }

    ScalarizedSystem sys = scalarize(leading_forms, H, full_subspace(alg));

    try {
        Certificate c = nondegenerate_complex(sys);
        if (c.kind == Certificate::Kind::Nondegenerate) {
            a.certified_complex = a.certified_real = true;
            a.certificate = std::move(c);
            a.summary = "exact complex certificate (" + a.certificate.method + ")";
            return a;
        }
        if (c.kind == Certificate::Kind::DegenerateWitness && c.witness_is_exact) {
            // exact witnesses produced here are real standard-basis points
            a.degenerate = true;
            a.certificate = std::move(c);
            a.summary = "exact degeneracy witness";
            return a;
        }
        a.certificate = std::move(c);
    } catch (const GuardExceeded& g) {
        a.certificate.kind = Certificate::Kind::Inconclusive;
        a.certificate.reason = g.what();
    }

    bool all_real = true;
    for (const auto& p : sys.polys)
        for (const auto& [e, c] : p.terms())
            if (!c.is_real()) all_real = false;
    if (all_real && alg->field == Field::Real) {
        try {
            Certificate c = certify_nondegenerate_real(sys);
            if (c.kind == Certificate::Kind::Nondegenerate) {
                a.certified_real = true;
                a.certificate = std::move(c);
                a.summary = "exact real certificate (" + a.certificate.method + ")";
                return a;
            }
        } catch (const GuardExceeded&) {
            // fall through to the numeric probe
        }
    }

    a.probe = numeric_nondegeneracy_min(sys, cfg);
    if (a.probe->min_value <= 1e-8) {
        a.degenerate = true;
        a.summary = "numeric degeneracy witness on the unit sphere (min " +
                    fmt(a.probe->min_value) + "; not exactly verified)";
    } else {
        a.summary = "no exact certificate; numeric sphere minimum " + fmt(a.probe->min_value) +
                    " suggests non-degeneracy";
    }
    return a;
}

// ---- mapping degree -----------------------------------------------------------------

DegreeEstimate mapping_degree_estimate(const std::vector<PolynomialMap>& leading_forms,
                                       const Subspace& H, const SolveConfig& cfg) {
    if (leading_forms.empty()) throw std::invalid_argument("no maps");
    if (H.alg->field != Field::Real)
        throw std::invalid_argument("mapping degree is defined over the reals");
    ScalarizedSystem sys = scalarize(leading_forms, H, H);
    const int N = sys.poly_nvars();
    if (static_cast<int>(sys.polys.size()) != N)
        throw std::invalid_argument("mapping degree requires a square scalarized system");

    NondegProbe probe = numeric_nondegeneracy_min(sys, cfg);
    if (probe.min_value <= 1e-6)
        throw std::domain_error("leading form appears degenerate; mapping degree undefined");

    NumSys base = compile_numeric(sys.polys, N);
    std::mt19937_64 rng(cfg.seed + 1);
    std::normal_distribution<double> gauss(0.0, 1.0);

    DegreeEstimate est;
    for (int attempt = 0; attempt < 5; ++attempt) {
        std::vector<double> target(N);
        double nrm = 0;
        for (int v = 0; v < N; ++v) {
            target[v] = gauss(rng);
            nrm += target[v] * target[v];
        }
        nrm = std::sqrt(nrm);
        for (double& t : target) t /= nrm;

        NumSys shifted = base;
        for (int i = 0; i < N; ++i) {
            ExpVec zero(N, 0);
            bool merged = false;
            for (auto& t : shifted.f[i])
                if (t.e == zero) {
                    t.c -= target[i];
                    merged = true;
                }
            if (!merged) shifted.f[i].push_back({zero, C(-target[i], 0.0)});
        }

        SolveConfig hcfg = cfg;
        hcfg.seed = cfg.seed + 17 * (attempt + 1);
        SolveReport rep = run_homotopy(shifted, hcfg);
        if (rep.paths.singular > 0 || rep.paths.diverged == rep.paths.tracked) {
            est.confidence_notes.push_back("attempt " + std::to_string(attempt + 1) +
                                           ": singular or failed paths; retried with a new target");
            continue;
        }

        // real preimages, polished in real arithmetic
        std::vector<std::vector<C>> reals;
        bool near_critical = false;
        for (const auto& z : rep.zeros) {
            double im = 0;
            for (const auto& c : z.lambda) im = std::max(im, std::abs(c.imag()));
            if (im > cfg.real_filter_tol) continue;
            std::vector<C> x(N);
            for (int v = 0; v < N; ++v) x[v] = C(z.lambda[v].real(), 0.0);
            if (!newton_polish(shifted, x, cfg.tol_residual * std::max(1.0, shifted.coeff_scale),
                               cfg.max_newton_iters, cfg.max_damping_halvings))
                continue;
            if (near_singular_jacobian(shifted, x)) {
                near_critical = true;
                break;
            }
            reals.push_back(std::move(x));
        }
        if (near_critical) {
            est.confidence_notes.push_back("attempt " + std::to_string(attempt + 1) +
                                           ": near-critical preimage; retried with a new target");
            continue;
        }
        reals = dedup_points(std::move(reals), cfg.tol_dedup);

        est.value = 0;
        est.jacobian_signs.clear();
        for (const auto& x : reals) {
            double d = det_and_discard(eval_jac(shifted, x)).real();
            int sgn = d > 0 ? 1 : (d < 0 ? -1 : 0);
            est.jacobian_signs.push_back(sgn);
            est.value += sgn;
        }
        est.preimage_count = static_cast<int>(reals.size());
        est.regular_value_used = target;
        est.low_confidence = false;
        return est;
    }
    est.low_confidence = true;
    est.confidence_notes.push_back("all attempts hit singular paths or critical targets");
    return est;
}

// ---- orchestration --------------------------------------------------------------------

namespace {

bool is_quaternion_or_octonion(const Algebra& a) {
    return a.field == Field::Real && a.has_composition_norm && (a.dim == 4 || a.dim == 8);
}

void attach_zeros(SolveReport& rep, const std::vector<PolynomialMap>& maps, const Subspace& H,
                  int nargs) {
    for (auto& z : rep.zeros) {
        z.point = lambda_to_elements(z.lambda, H, nargs);
        z.residual = algebra_residual(maps, z.point);
    }
}

} // namespace

SolveReport find_common_zero(const std::vector<PolynomialMap>& maps, const Subspace& H,
                             const Subspace& Hprime, const SolveConfig& cfg) {
    ScalarizedSystem sys = scalarize(maps, H, Hprime);
    const Field field = H.alg->field;
    const int n = maps[0].nvars;
    const int N = sys.atlas.nvars();
    const bool square = static_cast<int>(sys.polys.size()) == N;

    // degrees and leading forms
    std::vector<int> degrees;
    std::vector<PolynomialMap> leading;
    bool any_zero_map = false;
    for (const auto& p : maps) {
        HomogeneousDecomposition dec = decompose(p);
        degrees.push_back(dec.semantic_degree);
        if (dec.is_zero_map())
            any_zero_map = true;
        else
            leading.push_back(dec.leading_form);
    }

    SolveReport rep;
    if (field == Field::Real) {
        rep = solve_real_multistart(sys, cfg);
        if (rep.zeros.empty() && square) {
            SolveReport hom = solve_complex_total_degree(sys, cfg);
            rep.paths = hom.paths;
            rep.bezout_count = hom.bezout_count;
            rep.method = "homotopy+real-filter";
            NumSys ns = compile_numeric(sys.polys, N);
            std::vector<std::vector<C>> reals;
            for (const auto& z : hom.zeros) {
                double im = 0;
                for (const auto& c : z.lambda) im = std::max(im, std::abs(c.imag()));
                if (im > cfg.real_filter_tol) continue;
                std::vector<C> x(N);
                for (int v = 0; v < N; ++v) x[v] = C(z.lambda[v].real(), 0.0);
                if (newton_polish(ns, x, cfg.tol_residual * std::max(1.0, ns.coeff_scale),
                                  cfg.max_newton_iters, cfg.max_damping_halvings))
                    reals.push_back(std::move(x));
            }
            for (auto& p : dedup_points(std::move(reals), cfg.tol_dedup)) {
                FoundZero z;
                z.residual = inf_norm(eval_f(ns, p));
                z.possibly_positive_dimensional = near_singular_jacobian(ns, p);
                z.lambda = std::move(p);
                rep.zeros.push_back(std::move(z));
            }
            if (rep.zeros.empty())
                rep.notes.push_back(
                    "no real zero found numerically; this is not a proof of nonexistence");
        }
    } else {
        if (square) {
            rep = solve_complex_total_degree(sys, cfg);
        } else {
            rep = run_multistart(compile_numeric(sys.polys, N), cfg, true);
            rep.notes.push_back("non-square complex system; damped Gauss-Newton multistart");
        }
    }
    attach_zeros(rep, maps, H, n);

    if (Hprime.dim() > H.dim())
        rep.notes.push_back("target subspace dimension exceeds source subspace dimension");
    NondegAssessment assess;
    if (!leading.empty() && !any_zero_map) {
        assess = assess_nondegeneracy(leading, H, cfg);
        rep.notes.push_back("leading-form non-degeneracy: " + assess.summary);
    }
    rep.verdicts = theorem_verdicts(maps, H, Hprime, assess, degrees, cfg, rep.notes);
    return rep;
}

std::vector<TheoremVerdict> theorem_verdicts(const std::vector<PolynomialMap>& maps,
                                             const Subspace& H, const Subspace& Hprime,
                                             const NondegAssessment& assess,
                                             const std::vector<int>& degrees,
                                             const SolveConfig& cfg,
                                             std::vector<std::string>& notes) {
    const Field field = H.alg->field;
    const int n = maps[0].nvars;
    std::vector<TheoremVerdict> verdicts;
    const bool dims_ok = Hprime.dim() <= H.dim();
    bool all_pos = true;
    bool all_odd = true;
    for (int d : degrees) {
        if (d < 1) all_pos = false;
        if (d < 1 || d % 2 == 0) all_odd = false;
    }
    const bool nondeg_evidence =
        assess.certified_complex || assess.certified_real ||
        (assess.probe && assess.probe->verdict == "numerically-nondegenerate" &&
         !assess.degenerate);

    {
        TheoremVerdict v{"Thm 3.1", false, ""};
        if (field != Field::Complex)
            v.reason = "ground field is not complex";
        else if (!all_pos)
            v.reason = "some map has non-positive degree";
        else if (!dims_ok)
            v.reason = "dim H' > dim H";
        else if (!assess.certified_complex)
            v.reason = "leading forms not certified non-degenerate over C";
        else {
            v.applies = true;
            v.reason = "complex field, positive degrees, non-degenerate leading forms";
        }
        verdicts.push_back(std::move(v));
    }
    {
        TheoremVerdict v{"Thm 3.2", false, ""};
        if (field != Field::Real)
            v.reason = "ground field is not real";
        else if (!all_odd)
            v.reason = "some map has even or non-positive degree";
        else if (!dims_ok)
            v.reason = "dim H' > dim H";
        else if (assess.degenerate)
            v.reason = "leading forms are degenerate";
        else if (!nondeg_evidence)
            v.reason = "leading-form non-degeneracy could not be established";
        else {
            v.applies = true;
            v.reason = (assess.certified_real || assess.certified_complex)
                           ? "odd degrees with exactly certified non-degenerate leading forms"
                           : "odd degrees; non-degeneracy supported numerically only";
        }
        verdicts.push_back(std::move(v));
    }
    {
        TheoremVerdict v{"Cor 3.4", false, ""};
        if (!is_quaternion_or_octonion(*H.alg))
            v.reason = "algebra is not the quaternions or octonions";
        else if (!all_odd)
            v.reason = "some map has even or non-positive degree";
        else if (!dims_ok)
            v.reason = "dim H' > dim H";
        else if (assess.degenerate || !nondeg_evidence)
            v.reason = "leading-form non-degeneracy could not be established";
        else {
            v.applies = true;
            v.reason = "odd-degree maps on a normed division algebra";
        }
        verdicts.push_back(std::move(v));
    }
    {
        TheoremVerdict v{"Thm 4.1", false, ""};
        if (maps.size() != 1 || n != 1)
            v.reason = "applies to a single one-variable map only";
        else if (!is_quaternion_or_octonion(*H.alg))
            v.reason = "algebra is not the quaternions or octonions";
        else if (degrees[0] < 2 || degrees[0] % 2 != 0)
            v.reason = "degree is not even and positive";
        else {
            TwoMonomialVerdict tm = two_monomial_guarantee(maps[0], cfg);
            v.applies = tm.guaranteed;
            v.reason = tm.reason;
            for (const auto& s : tm.homotopy_spot_checks) notes.push_back(s);
        }
        verdicts.push_back(std::move(v));
    }
    return verdicts;
}

TwoMonomialVerdict two_monomial_guarantee(const PolynomialMap& p, const SolveConfig& cfg) {
    TwoMonomialVerdict v;
    const AlgebraPtr alg = p.alg;
    if (p.nvars != 1) {
        v.reason = "applies to one-variable maps only";
        return v;
    }
    if (!is_quaternion_or_octonion(*alg)) {
        v.reason = "algebra is not the quaternions or octonions";
        return v;
    }
    HomogeneousDecomposition dec = decompose(p);
    if (dec.is_zero_map() || dec.semantic_degree < 2 || dec.semantic_degree % 2 != 0) {
        v.reason = "degree is not even and positive";
        return v;
    }
    const auto& terms = dec.leading_form.terms;
    if (terms.size() > 2) {
        v.reason = "leading form has more than two monomials";
        return v;
    }
    if (terms.size() == 1) {
        v.guaranteed = true;
        v.reason = "single-monomial leading form; multiplicative norm gives "
                   "||m(a)|| = c ||a||^d with c > 0";
        return v;
    }

    Rat n1 = monomial_norm_sq_exact(*alg, *terms[0].word, terms[0].coeff);
    Rat n2 = monomial_norm_sq_exact(*alg, *terms[1].word, terms[1].coeff);
    if (n1 < n2) std::swap(n1, n2);
    bool nondeg = false;
    if (n1 > n2 && n2 >= 0 && n1 > 0) {
        nondeg = true;
        v.reason = "strict monomial norm gap: ||m1||^2 = " + rat_to_string(n1) +
                   " > ||m2||^2 = " + rat_to_string(n2) +
                   ", so ||m1(a)+m2(a)|| >= (||m1||-||m2||) ||a||^d > 0";
    } else {
        ScalarizedSystem lsys = scalarize({dec.leading_form}, full_subspace(alg),
                                          full_subspace(alg));
        try {
            Certificate c = certify_nondegenerate_real(lsys);
            if (c.kind == Certificate::Kind::Nondegenerate) {
                nondeg = true;
                v.reason = "equal monomial norms; non-degeneracy certified exactly (" +
                           c.method + ")";
            } else {
                v.reason = "equal monomial norms and no exact non-degeneracy certificate";
            }
        } catch (const GuardExceeded& g) {
            v.reason = std::string("non-degeneracy certification hit guards: ") + g.what();
        }
    }
    if (!nondeg) return v;
    v.guaranteed = true;

    // Spot checks along the deformation h_t = m1 + (1-t) m2: the leading form
    // stays bounded away from zero on the unit sphere for sampled t.
    SolveConfig probe_cfg = cfg;
    probe_cfg.n_starts = 24;
    for (double t : {0.25, 0.5, 0.75}) {
        PolynomialMap ht{alg, 1, {}};
        ht.terms.push_back(terms[0]);
        Term m2 = terms[1];
        m2.coeff = Scalar(rat_from_double(1.0 - t)) * m2.coeff;
        ht.terms.push_back(m2);
        ScalarizedSystem hsys = scalarize({ht}, full_subspace(alg), full_subspace(alg));
        NondegProbe pr = numeric_nondegeneracy_min(hsys, probe_cfg);
        v.homotopy_spot_checks.push_back("deformation t=" + fmt(t) +
                                         ": min sphere norm " + fmt(pr.min_value));
    }
    return v;
}

// ---- report serialization ----------------------------------------------------------

std::string SolveReport::to_json() const {
    nlohmann::json j;
    j["method"] = method;
    j["bezout_count"] = bezout_count;
    j["paths"] = {{"tracked", paths.tracked},
                  {"converged", paths.converged},
                  {"diverged", paths.diverged},
                  {"singular", paths.singular}};
    nlohmann::json zs = nlohmann::json::array();
    for (const auto& z : zeros) {
        nlohmann::json zj;
        nlohmann::json pt = nlohmann::json::array();
        for (const auto& el : z.point) {
            nlohmann::json coords = nlohmann::json::array();
            for (const auto& c : el) coords.push_back({c.real(), c.imag()});
            pt.push_back(std::move(coords));
        }
        zj["point"] = std::move(pt);
        nlohmann::json lam = nlohmann::json::array();
        for (const auto& c : z.lambda) lam.push_back({c.real(), c.imag()});
        zj["lambda"] = std::move(lam);
        zj["residual"] = z.residual;
        zj["possibly_positive_dimensional"] = z.possibly_positive_dimensional;
        zs.push_back(std::move(zj));
    }
    j["zeros"] = std::move(zs);
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : verdicts)
        vs.push_back({{"theorem", v.theorem}, {"applies", v.applies}, {"reason", v.reason}});
    j["verdicts"] = std::move(vs);
    j["notes"] = notes;
    return j.dump(2);
}

} // namespace algpoly
