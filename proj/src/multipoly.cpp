#include "algpoly/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace algpoly {

MultiPoly MultiPoly::constant(int nvars, const Scalar& c) {
    MultiPoly p(nvars);
    if (!c.is_zero()) p.terms_[ExpVec(nvars, 0)] = c;
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int v) {
    if (v < 0 || v >= nvars) throw std::invalid_argument("variable index out of range");
    MultiPoly p(nvars);
    ExpVec e(nvars, 0);
    e[v] = 1;
    p.terms_[e] = Scalar(1);
    return p;
}

MultiPoly MultiPoly::monomial(int nvars, ExpVec e, const Scalar& c) {
    if (static_cast<int>(e.size()) != nvars)
        throw std::invalid_argument("exponent vector length mismatch");
    MultiPoly p(nvars);
    if (!c.is_zero()) p.terms_[std::move(e)] = c;
    return p;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, expvec_degree(e));
    return d;
}

MultiPoly MultiPoly::homogeneous_part(int d) const {
    MultiPoly p(nvars_);
    for (const auto& [e, c] : terms_)
        if (expvec_degree(e) == d) p.terms_[e] = c;
    return p;
}

MultiPoly MultiPoly::derivative(int v) const {
    if (v < 0 || v >= nvars_) throw std::invalid_argument("variable index out of range");
    MultiPoly p(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        ExpVec d = e;
        d[v] -= 1;
        p.terms_[d] = Scalar(Rat(e[v])) * c;
    }
    return p;
}

MultiPoly MultiPoly::homogenized() const {
    int D = total_degree();
    MultiPoly p(nvars_ + 1);
    for (const auto& [e, c] : terms_) {
        ExpVec f = e;
        f.push_back(D - expvec_degree(e));
        p.terms_[f] = c;
    }
    return p;
}

MultiPoly MultiPoly::dehomogenized() const {
    if (nvars_ < 1) throw std::domain_error("no variable to dehomogenize");
    MultiPoly p(nvars_ - 1);
    for (const auto& [e, c] : terms_) {
        ExpVec f(e.begin(), e.end() - 1);
        p.add_term(f, c);
    }
    return p;
}

bool MultiPoly::is_homogeneous() const {
    int d = -2;
    for (const auto& [e, c] : terms_) {
        int de = expvec_degree(e);
        if (d == -2) d = de;
        else if (de != d) return false;
    }
    return true;
}

Scalar MultiPoly::eval(const std::vector<Scalar>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("evaluation point has wrong arity");
    Scalar s{};
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (int v = 0; v < nvars_; ++v)
            for (int r = 0; r < e[v]; ++r) t *= point[v];
        s += t;
    }
    return s;
}

std::complex<double> MultiPoly::eval_numeric(const std::vector<std::complex<double>>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("evaluation point has wrong arity");
    std::complex<double> s{};
    for (const auto& [e, c] : terms_) {
        std::complex<double> t = c.to_complex();
        for (int v = 0; v < nvars_; ++v) {
            if (e[v] == 0) continue;
            std::complex<double> b = point[v], acc = 1.0;
            int n = e[v];
            while (n > 0) { // fast power
                if (n & 1) acc *= b;
                b *= b;
                n >>= 1;
            }
            t *= acc;
        }
        s += t;
    }
    return s;
}

bool MultiPoly::involves_only(const std::vector<bool>& keep) const {
    for (const auto& [e, c] : terms_)
        for (int v = 0; v < nvars_; ++v)
            if (e[v] > 0 && !keep[v]) return false;
    return true;
}

std::vector<Scalar> MultiPoly::to_univariate(int v) const {
    std::vector<Scalar> coeffs;
    for (const auto& [e, c] : terms_) {
        for (int u = 0; u < nvars_; ++u)
            if (u != v && e[u] > 0)
                throw std::domain_error("polynomial is not univariate in the requested variable");
        if (static_cast<int>(coeffs.size()) <= e[v]) coeffs.resize(e[v] + 1, Scalar{});
        coeffs[e[v]] = c;
    }
    return coeffs;
}

void MultiPoly::add_term(const ExpVec& e, const Scalar& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw std::invalid_argument("exponent vector length mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("nvars mismatch");
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("nvars mismatch");
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly operator-(const MultiPoly& a) {
    MultiPoly r(a.nvars_);
    for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("nvars mismatch");
    MultiPoly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            ExpVec e(a.nvars_);
            for (int v = 0; v < a.nvars_; ++v) e[v] = ea[v] + eb[v];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly operator*(const Scalar& c, const MultiPoly& a) {
    MultiPoly r(a.nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : a.terms_) r.terms_[e] = c * k;
    return r;
}

std::string MultiPoly::to_string(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    auto vname = [&](int v) {
        if (v < static_cast<int>(var_names.size())) return var_names[v];
        return "x" + std::to_string(v + 1);
    };
    // print highest degree first, ties broken by the map order
    std::vector<std::pair<ExpVec, Scalar>> ts(terms_.begin(), terms_.end());
    std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        return expvec_degree(a.first) > expvec_degree(b.first);
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : ts) {
        Scalar coeff = c;
        bool neg = coeff.is_real() && coeff.re < 0;
        if (first) {
            if (neg) { out << "-"; coeff = -coeff; }
        } else {
            out << (neg ? " - " : " + ");
            if (neg) coeff = -coeff;
        }
        first = false;
        bool any_var = expvec_degree(e) > 0;
        bool unit_coeff = (coeff == Scalar(1));
        if (!unit_coeff || !any_var) {
            if (coeff.is_real()) out << rat_to_string(coeff.re);
            else out << "(" << coeff.to_string() << ")";
            if (any_var) out << "*";
        }
        bool first_var = true;
        for (int v = 0; v < nvars_; ++v) {
            if (e[v] == 0) continue;
            if (!first_var) out << "*";
            first_var = false;
            out << vname(v);
            if (e[v] > 1) out << "^" << e[v];
        }
    }
    return out.str();
}

} // namespace algpoly
