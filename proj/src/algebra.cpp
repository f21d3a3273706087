#include "algpoly/algebra.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace algpoly {

namespace {

std::vector<std::string> default_labels(int dim) {
    std::vector<std::string> l(dim);
    for (int i = 0; i < dim; ++i) l[i] = "b" + std::to_string(i + 1);
    return l;
}

void check_same_dim(const Element& x, const Element& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("algebra element dimension mismatch");
}

} // namespace

// ---- element arithmetic ----------------------------------------------------

Element multiply(const Algebra& a, const Element& x, const Element& y) {
    check_same_dim(x, y);
    if (static_cast<int>(x.size()) != a.dim)
        throw std::invalid_argument("element does not belong to this algebra");
    Element r(a.dim, Scalar{});
    for (int i = 0; i < a.dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < a.dim; ++j) {
            if (y[j].is_zero()) continue;
            Scalar c = x[i] * y[j];
            for (int k = 0; k < a.dim; ++k) {
                const Scalar& g = a.g(i, j, k);
                if (!g.is_zero()) r[k] += c * g;
            }
        }
    }
    return r;
}

Element add(const Element& x, const Element& y) {
    check_same_dim(x, y);
    Element r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return r;
}

Element sub(const Element& x, const Element& y) {
    check_same_dim(x, y);
    Element r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return r;
}

Element scale(const Scalar& c, const Element& x) {
    Element r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
    return r;
}

Element zero_element(const Algebra& a) { return Element(a.dim, Scalar{}); }

Element basis_element(const Algebra& a, int i) {
    Element e(a.dim, Scalar{});
    e.at(i) = Scalar(1);
    return e;
}

Element apply_involution(const Algebra& a, const Element& x) {
    if (!a.involution) throw std::domain_error("algebra has no involution");
    const auto& m = *a.involution;
    Element r(a.dim, Scalar{});
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            if (!m[i * a.dim + j].is_zero()) r[i] += m[i * a.dim + j] * x[j];
    return r;
}

bool is_zero(const Element& x) {
    return std::all_of(x.begin(), x.end(), [](const Scalar& s) { return s.is_zero(); });
}

ElementD to_numeric(const Element& x) {
    ElementD r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i].to_complex();
    return r;
}

ElementD multiply_numeric(const Algebra& a, const ElementD& x, const ElementD& y) {
    ElementD r(a.dim, {0.0, 0.0});
    for (int i = 0; i < a.dim; ++i) {
        if (x[i] == std::complex<double>{}) continue;
        for (int j = 0; j < a.dim; ++j) {
            if (y[j] == std::complex<double>{}) continue;
            auto c = x[i] * y[j];
            for (int k = 0; k < a.dim; ++k) {
                const Scalar& g = a.g(i, j, k);
                if (!g.is_zero()) r[k] += c * g.to_complex();
            }
        }
    }
    return r;
}

double norm(const Element& x) {
    double s = 0;
    for (const auto& c : x) s += c.norm_sq().get_d();
    return std::sqrt(s);
}

double norm_numeric(const ElementD& x) {
    double s = 0;
    for (const auto& c : x) s += std::norm(c);
    return std::sqrt(s);
}

Rat norm_sq_exact(const Element& x) {
    Rat s = 0;
    for (const auto& c : x) s += c.norm_sq();
    return s;
}

// ---- classification --------------------------------------------------------

AlgebraClass classify(const Algebra& a) {
    AlgebraClass c;
    const int d = a.dim;
    c.commutative = true;
    for (int i = 0; i < d && c.commutative; ++i)
        for (int j = i + 1; j < d && c.commutative; ++j)
            for (int k = 0; k < d; ++k)
                if (a.g(i, j, k) != a.g(j, i, k)) { c.commutative = false; break; }
    c.associative = true;
    std::vector<Element> bb(d);
    for (int i = 0; i < d; ++i) bb[i] = basis_element(a, i);
    for (int i = 0; i < d && c.associative; ++i)
        for (int j = 0; j < d && c.associative; ++j) {
            Element bij = multiply(a, bb[i], bb[j]);
            for (int k = 0; k < d; ++k) {
                Element lhs = multiply(a, bij, bb[k]);
                Element rhs = multiply(a, bb[i], multiply(a, bb[j], bb[k]));
                if (lhs != rhs) { c.associative = false; break; }
            }
        }
    if (a.unit) {
        c.unital = true;
    } else {
        // Solve u*b_i = b_i and b_i*u = b_i for u, exactly.
        std::vector<std::vector<Scalar>> cols(d);
        int rows = 2 * d * d;
        for (int t = 0; t < d; ++t) {
            std::vector<Scalar> col(rows, Scalar{});
            for (int i = 0; i < d; ++i)
                for (int k = 0; k < d; ++k) {
                    col[i * d + k] = a.g(t, i, k);
                    col[d * d + i * d + k] = a.g(i, t, k);
                }
            cols[t] = std::move(col);
        }
        std::vector<Scalar> rhs(rows, Scalar{});
        for (int i = 0; i < d; ++i) {
            rhs[i * d + i] = Scalar(1);
            rhs[d * d + i * d + i] = Scalar(1);
        }
        ExactSolver solver(cols, rows);
        c.unital = solver.solve(rhs).has_value();
    }
    return c;
}

// ---- construction ----------------------------------------------------------

AlgebraPtr make_algebra_explicit(int dim, Field field, std::vector<Scalar> gamma,
                                 std::vector<std::string> labels, std::optional<Element> unit,
                                 std::optional<std::vector<Scalar>> involution, std::string name) {
    if (dim <= 0) throw std::invalid_argument("algebra dimension must be positive");
    if (static_cast<int>(gamma.size()) != dim * dim * dim)
        throw std::invalid_argument("structure-constant tensor has inconsistent dimensions");
    if (labels.empty()) labels = default_labels(dim);
    if (static_cast<int>(labels.size()) != dim)
        throw std::invalid_argument("basis label count does not match dimension");
    auto a = std::make_shared<Algebra>();
    a->dim = dim;
    a->field = field;
    a->gamma = std::move(gamma);
    a->basis_labels = std::move(labels);
    a->unit = std::move(unit);
    a->involution = std::move(involution);
    a->name = std::move(name);
    if (a->unit) {
        if (static_cast<int>(a->unit->size()) != dim)
            throw std::invalid_argument("unit vector has wrong dimension");
        for (int i = 0; i < dim; ++i) {
            Element b = basis_element(*a, i);
            if (multiply(*a, *a->unit, b) != b || multiply(*a, b, *a->unit) != b)
                throw std::invalid_argument("declared unit fails the unit law");
        }
    }
    if (a->involution) {
        if (static_cast<int>(a->involution->size()) != dim * dim)
            throw std::invalid_argument("involution matrix has wrong dimensions");
        for (int i = 0; i < dim; ++i) {
            Element b = basis_element(*a, i);
            if (apply_involution(*a, apply_involution(*a, b)) != b)
                throw std::invalid_argument("involution is not of order 2");
        }
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                Element bi = basis_element(*a, i), bj = basis_element(*a, j);
                Element lhs = apply_involution(*a, multiply(*a, bi, bj));
                Element rhs = multiply(*a, apply_involution(*a, bj), apply_involution(*a, bi));
                if (lhs != rhs)
                    throw std::invalid_argument("involution is not anti-multiplicative");
            }
    }
    return a;
}

// Builtins are memoized so repeated lookups share one instance; subspace and
// map compatibility checks compare AlgebraPtr identity.
// Builtins are memoized so repeated lookups share one instance; subspace and
// map compatibility checks compare AlgebraPtr identity.
AlgebraPtr make_reals() {
    static const AlgebraPtr cached = [] {
        std::vector<Scalar> g{Scalar(1)};
        auto a = make_algebra_explicit(1, Field::Real, g, {"1"}, Element{Scalar(1)}, std::nullopt,
                                       "reals");
        const_cast<Algebra&>(*a).has_composition_norm = true;
        return a;
    }();
    return cached;
}

AlgebraPtr make_complex_as_real() {
    static const AlgebraPtr cached = [] {
        int d = 2;
        std::vector<Scalar> g(d * d * d, Scalar{});
        auto set = [&](int i, int j, int k, long v) { g[(i * d + j) * d + k] = Scalar(v); };
        set(0, 0, 0, 1);
        set(0, 1, 1, 1);
        set(1, 0, 1, 1);
        set(1, 1, 0, -1);
        std::vector<Scalar> inv{Scalar(1), Scalar(0), Scalar(0), Scalar(-1)};
        auto a = make_algebra_explicit(2, Field::Real, g, {"1", "i"},
                                       Element{Scalar(1), Scalar(0)}, inv, "complex-as-real");
        const_cast<Algebra&>(*a).has_composition_norm = true;
        return a;
    }();
    return cached;
}

namespace {

// Quaternion product on raw coordinate quadruples (1, i, j, k).
std::array<Scalar, 4> qmul(const std::array<Scalar, 4>& a, const std::array<Scalar, 4>& b) {
    return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

std::array<Scalar, 4> qconj(const std::array<Scalar, 4>& a) {
    return {a[0], -a[1], -a[2], -a[3]};
}

} // namespace

AlgebraPtr make_quaternions() {
    static const AlgebraPtr cached = [] {
        int d = 4;
        std::vector<Scalar> g(d * d * d, Scalar{});
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                std::array<Scalar, 4> bi{}, bj{};
                bi[i] = Scalar(1);
                bj[j] = Scalar(1);
                auto p = qmul(bi, bj);
                for (int k = 0; k < d; ++k) g[(i * d + j) * d + k] = p[k];
            }
        std::vector<Scalar> inv(d * d, Scalar{});
        inv[0] = Scalar(1);
        for (int i = 1; i < 4; ++i) inv[i * d + i] = Scalar(-1);
        auto a = make_algebra_explicit(d, Field::Real, g, {"1", "i", "j", "k"},
                                       Element{Scalar(1), Scalar(0), Scalar(0), Scalar(0)}, inv,
                                       "quaternions");
        const_cast<Algebra&>(*a).has_composition_norm = true;
        return a;
    }();
    return cached;
}

AlgebraPtr make_octonions() {
    static const AlgebraPtr cached = [] {
        // Cayley-Dickson doubling: (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
        int d = 8;
        std::vector<Scalar> g(d * d * d, Scalar{});
        auto prod = [&](int u, int v) {
            std::array<Scalar, 4> ua{}, ub{}, va{}, vb{};
            (u < 4 ? ua[u] : ub[u - 4]) = Scalar(1);
            (v < 4 ? va[v] : vb[v - 4]) = Scalar(1);
            auto first = qmul(ua, va);
            auto t = qmul(qconj(vb), ub);
            for (int k = 0; k < 4; ++k) first[k] = first[k] - t[k];
            auto second = qmul(vb, ua);
            auto s = qmul(ub, qconj(va));
            for (int k = 0; k < 4; ++k) second[k] = second[k] + s[k];
            std::array<Scalar, 8> r{};
            for (int k = 0; k < 4; ++k) {
                r[k] = first[k];
                r[k + 4] = second[k];
            }
            return r;
        };
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                auto p = prod(i, j);
                for (int k = 0; k < d; ++k) g[(i * d + j) * d + k] = p[k];
            }
        std::vector<Scalar> inv(d * d, Scalar{});
        inv[0] = Scalar(1);
        for (int i = 1; i < 8; ++i) inv[i * d + i] = Scalar(-1);
        std::vector<std::string> labels;
        for (int i = 0; i < 8; ++i) labels.push_back("e" + std::to_string(i));
        Element unit(8, Scalar{});
        unit[0] = Scalar(1);
        auto a = make_algebra_explicit(d, Field::Real, g, labels, unit, inv, "octonions");
        const_cast<Algebra&>(*a).has_composition_norm = true;
        return a;
    }();
    return cached;
}

AlgebraPtr make_matrix(int m, Field field) {
    static std::map<std::pair<int, int>, AlgebraPtr> cache;
    auto key = std::make_pair(m, static_cast<int>(field));
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    AlgebraPtr built = [&] {
        if (m < 1) throw std::invalid_argument("matrix size must be >= 1");
        int d = m * m;
        std::vector<Scalar> g(d * d * d, Scalar{});
        auto idx = [m](int p, int q) { return p * m + q; };
        for (int p = 0; p < m; ++p)
            for (int q = 0; q < m; ++q)
                for (int r = 0; r < m; ++r)
                    for (int s = 0; s < m; ++s)
                        if (q == r) g[(idx(p, q) * d + idx(r, s)) * d + idx(p, s)] = Scalar(1);
        std::vector<std::string> labels(d);
        for (int p = 0; p < m; ++p)
            for (int q = 0; q < m; ++q)
                labels[idx(p, q)] = "E" + std::to_string(p + 1) + std::to_string(q + 1);
        Element unit(d, Scalar{});
        for (int p = 0; p < m; ++p) unit[idx(p, p)] = Scalar(1);
        std::string name = "matrix(" + std::to_string(m) + "," +
                           (field == Field::Real ? "real" : "complex") + ")";
        return make_algebra_explicit(d, field, g, labels, unit, std::nullopt, name);
    }();
    cache.emplace(key, built);
    return built;
}

AlgebraPtr make_complex_matrix_as_real(int m) {
    static std::map<int, AlgebraPtr> cache;
    if (auto it = cache.find(m); it != cache.end()) return it->second;
    AlgebraPtr built = [&] {
        if (m < 1) throw std::invalid_argument("matrix size must be >= 1");
        int mm = m * m, d = 2 * mm;
        std::vector<Scalar> g(d * d * d, Scalar{});
        auto idx = [m](int p, int q) { return p * m + q; };
        // basis: E_pq for indices < m^2, then i*E_pq.
        for (int p = 0; p < m; ++p)
            for (int q = 0; q < m; ++q)
                for (int r = 0; r < m; ++r)
                    for (int s = 0; s < m; ++s) {
                        if (q != r) continue;
                        int e1 = idx(p, q), e2 = idx(r, s), t = idx(p, s);
                        g[(e1 * d + e2) * d + t] = Scalar(1);                    // E * E = E
                        g[(e1 * d + (e2 + mm)) * d + t + mm] = Scalar(1);        // E * iE = iE
                        g[((e1 + mm) * d + e2) * d + t + mm] = Scalar(1);        // iE * E = iE
                        g[((e1 + mm) * d + (e2 + mm)) * d + t] = Scalar(-1);     // iE * iE = -E
                    }
        std::vector<std::string> labels(d);
        for (int p = 0; p < m; ++p)
            for (int q = 0; q < m; ++q) {
                std::string pq = std::to_string(p + 1) + std::to_string(q + 1);
                labels[idx(p, q)] = "E" + pq;
                labels[mm + idx(p, q)] = "iE" + pq;
            }
        Element unit(d, Scalar{});
        for (int p = 0; p < m; ++p) unit[idx(p, p)] = Scalar(1);
        // conjugate transpose: (E_pq)* = E_qp, (iE_pq)* = -iE_qp.
        std::vector<Scalar> inv(d * d, Scalar{});
        for (int p = 0; p < m; ++p)
            for (int q = 0; q < m; ++q) {
                inv[idx(q, p) * d + idx(p, q)] = Scalar(1);
                inv[(mm + idx(q, p)) * d + mm + idx(p, q)] = Scalar(-1);
            }
        std::string name = "complex-matrix-as-real(" + std::to_string(m) + ")";
        return make_algebra_explicit(d, Field::Real, g, labels, unit, inv, name);
    }();
    cache.emplace(m, built);
    return built;
}

AlgebraPtr make_algebra(const std::string& spec) {
    std::string s;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(c));
    if (s == "reals" || s == "r") return make_reals();
    if (s == "complex-as-real" || s == "complexes-as-real" || s == "c") return make_complex_as_real();
    if (s == "quaternions" || s == "h") return make_quaternions();
    if (s == "octonions" || s == "o") return make_octonions();
    auto parse_arg = [&](const std::string& prefix) -> std::optional<std::string> {
        if (s.rfind(prefix, 0) == 0 && s.back() == ')')
            return s.substr(prefix.size(), s.size() - prefix.size() - 1);
        return std::nullopt;
    };
    if (auto arg = parse_arg("matrix(")) {
        auto comma = arg->find(',');
        int m = std::stoi(arg->substr(0, comma));
        Field f = Field::Real;
        if (comma != std::string::npos) {
            std::string ft = arg->substr(comma + 1);
            if (ft == "complex") f = Field::Complex;
            else if (ft != "real") throw std::invalid_argument("unknown field tag: " + ft);
        }
        return make_matrix(m, f);
    }
    if (auto arg = parse_arg("complex-matrix-as-real("))
        return make_complex_matrix_as_real(std::stoi(*arg));
    if (s == "mat2") return make_matrix(2, Field::Real);
    throw std::invalid_argument("unknown algebra: '" + spec + "'");
}

// ---- JSON ------------------------------------------------------------------

AlgebraPtr load_algebra_json(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    int dim = j.at("dim").get<int>();
    Field field = j.at("field").get<std::string>() == "complex" ? Field::Complex : Field::Real;
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    std::vector<Scalar> gamma(static_cast<size_t>(dim) * dim * dim, Scalar{});
    for (const auto& t : j.at("gamma")) {
        int i = t.at(0).get<int>() - 1, jj = t.at(1).get<int>() - 1, k = t.at(2).get<int>() - 1;
        if (i < 0 || i >= dim || jj < 0 || jj >= dim || k < 0 || k >= dim)
            throw std::invalid_argument("gamma index out of range");
        gamma[(static_cast<size_t>(i) * dim + jj) * dim + k] = parse_scalar(t.at(3).get<std::string>());
    }
    std::optional<Element> unit;
    if (j.contains("unit")) {
        Element u;
        for (const auto& c : j["unit"]) u.push_back(parse_scalar(c.get<std::string>()));
        unit = std::move(u);
    }
    std::optional<std::vector<Scalar>> inv;
    if (j.contains("involution")) {
        std::vector<Scalar> m;
        for (const auto& row : j["involution"])
            for (const auto& c : row) m.push_back(parse_scalar(c.get<std::string>()));
        inv = std::move(m);
    }
    std::string name = j.value("name", std::string("custom"));
    return make_algebra_explicit(dim, field, std::move(gamma), std::move(labels), std::move(unit),
                                 std::move(inv), name);
}

std::string algebra_to_json(const Algebra& a) {
    nlohmann::json j;
    j["dim"] = a.dim;
    j["field"] = a.field == Field::Real ? "real" : "complex";
    j["name"] = a.name;
    j["labels"] = a.basis_labels;
    nlohmann::json gamma = nlohmann::json::array();
    for (int i = 0; i < a.dim; ++i)
        for (int jj = 0; jj < a.dim; ++jj)
            for (int k = 0; k < a.dim; ++k)
                if (!a.g(i, jj, k).is_zero())
                    gamma.push_back({i + 1, jj + 1, k + 1, a.g(i, jj, k).to_string()});
    j["gamma"] = std::move(gamma);
    if (a.unit) {
        std::vector<std::string> u;
        for (const auto& c : *a.unit) u.push_back(c.to_string());
        j["unit"] = u;
    }
    if (a.involution) {
        nlohmann::json m = nlohmann::json::array();
        for (int i = 0; i < a.dim; ++i) {
            std::vector<std::string> row;
            for (int jj = 0; jj < a.dim; ++jj)
                row.push_back((*a.involution)[i * a.dim + jj].to_string());
            m.push_back(row);
        }
        j["involution"] = std::move(m);
    }
    return j.dump(2);
}

// ---- subspaces -------------------------------------------------------------

Subspace full_subspace(const AlgebraPtr& a) {
    Subspace s;
    s.alg = a;
    for (int i = 0; i < a->dim; ++i) s.basis.push_back(basis_element(*a, i));
    return s;
}

Subspace make_subspace(const AlgebraPtr& a, std::vector<Element> basis) {
    std::vector<std::vector<Scalar>> cols;
    for (const auto& b : basis) {
        if (static_cast<int>(b.size()) != a->dim)
            throw std::invalid_argument("subspace basis element has wrong dimension");
        cols.push_back(b);
    }
    ExactSolver solver(cols, a->dim);
    if (solver.rank() != static_cast<int>(basis.size()))
        throw std::invalid_argument("subspace basis is linearly dependent");
    return Subspace{a, std::move(basis)};
}

std::optional<std::vector<Scalar>> coords_in(const Subspace& s, const Element& x) {
    std::vector<std::vector<Scalar>> cols;
    for (const auto& b : s.basis) cols.push_back(b);
    ExactSolver solver(cols, s.alg->dim);
    return solver.solve(x);
}

Subspace hermitian_subspace(int m) {
    auto a = make_complex_matrix_as_real(m);
    int mm = m * m;
    auto idx = [m](int p, int q) { return p * m + q; };
    std::vector<Element> basis;
    for (int p = 0; p < m; ++p) {
        Element e(2 * mm, Scalar{});
        e[idx(p, p)] = Scalar(1);
        basis.push_back(e);
    }
    for (int p = 0; p < m; ++p)
        for (int q = p + 1; q < m; ++q) {
            Element sym(2 * mm, Scalar{});
            sym[idx(p, q)] = Scalar(1);
            sym[idx(q, p)] = Scalar(1);
            basis.push_back(sym);
            Element asym(2 * mm, Scalar{});
            asym[mm + idx(p, q)] = Scalar(1);
            asym[mm + idx(q, p)] = Scalar(-1);
            basis.push_back(asym);
        }
    return make_subspace(a, std::move(basis));
}

// ---- exact Gaussian elimination ---------------------------------------------

ExactSolver::ExactSolver(std::vector<std::vector<Scalar>> columns, int rows)
    : rows_(rows), cols_(static_cast<int>(columns.size())), rank_(0), columns_(columns) {
    // Work on [A | I]; after elimination the right block holds E with E*A = rref.
    std::vector<std::vector<Scalar>> m(rows_);
    for (int i = 0; i < rows_; ++i) {
        m[i].assign(cols_ + rows_, Scalar{});
        for (int j = 0; j < cols_; ++j) m[i][j] = columns[j].at(i);
        m[i][cols_ + i] = Scalar(1);
    }
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int piv = -1;
        for (int i = r; i < rows_; ++i)
            if (!m[i][c].is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        Scalar inv = Scalar(1) / m[r][c];
        for (int j = 0; j < cols_ + rows_; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Scalar f = m[i][c];
            for (int j = 0; j < cols_ + rows_; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col_.push_back(c);
        ++r;
    }
    rank_ = r;
    rref_.assign(rows_, {});
    record_.assign(rows_, {});
    for (int i = 0; i < rows_; ++i) {
        rref_[i].assign(m[i].begin(), m[i].begin() + cols_);
        record_[i].assign(m[i].begin() + cols_, m[i].end());
    }
}

std::optional<std::vector<Scalar>> ExactSolver::solve(const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != rows_)
        throw std::invalid_argument("ExactSolver: rhs has wrong dimension");
    std::vector<Scalar> w(rows_, Scalar{});
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < rows_; ++j)
            if (!record_[i][j].is_zero()) w[i] += record_[i][j] * v[j];
    for (int i = rank_; i < rows_; ++i)
        if (!w[i].is_zero()) {
            last_bad_row_ = i;
            return std::nullopt;
        }
    // Free variables take zero; pivot rows of the rref then read off directly.
    std::vector<Scalar> c(cols_, Scalar{});
    for (int i = 0; i < rank_; ++i) c[pivot_col_[i]] = w[i];
    return c;
}

std::vector<Scalar> ExactSolver::residual(const std::vector<Scalar>& v) const {
    std::vector<Scalar> w(rows_, Scalar{});
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < rows_; ++j)
            if (!record_[i][j].is_zero()) w[i] += record_[i][j] * v[j];
    std::vector<Scalar> c(cols_, Scalar{});
    for (int i = 0; i < rank_; ++i) c[pivot_col_[i]] = w[i];
    std::vector<Scalar> r = v;
    for (int j = 0; j < cols_; ++j) {
        if (c[j].is_zero()) continue;
        for (int i = 0; i < rows_; ++i) r[i] -= c[j] * columns_[j][i];
    }
    return r;
}

} // namespace algpoly
