// Sparse multivariate polynomials with exact scalar coefficients.
#pragma once

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "algpoly/scalar.hpp"

namespace algpoly {

using ExpVec = std::vector<int>;

inline int expvec_degree(const ExpVec& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

class MultiPoly {
  public:
    MultiPoly() = default;
    explicit MultiPoly(int nvars) : nvars_(nvars) {}
    static MultiPoly constant(int nvars, const Scalar& c);
    static MultiPoly variable(int nvars, int v); // v in [0, nvars)
    static MultiPoly monomial(int nvars, ExpVec e, const Scalar& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<ExpVec, Scalar>& terms() const { return terms_; }

    /// -1 for the zero polynomial.
    int total_degree() const;
    MultiPoly homogeneous_part(int d) const;
    MultiPoly derivative(int v) const;
    /// Adds one variable (index nvars) so every term reaches degree D = deg.
    MultiPoly homogenized() const;
    /// Substitutes 1 for the last variable, dropping it.
    MultiPoly dehomogenized() const;
    bool is_homogeneous() const;

    Scalar eval(const std::vector<Scalar>& point) const;
    std::complex<double> eval_numeric(const std::vector<std::complex<double>>& point) const;

    /// True when every variable outside `keep` has exponent 0 in every term.
    bool involves_only(const std::vector<bool>& keep) const;
    /// Reinterpret as a polynomial in a single variable; requires all other
    /// exponents to vanish. Returns dense coefficient vector (ascending).
    std::vector<Scalar> to_univariate(int v) const;

    void add_term(const ExpVec& e, const Scalar& c); // merges, drops zeros

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Scalar& c, const MultiPoly& a);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    std::string to_string(const std::vector<std::string>& var_names = {}) const;

  private:
    int nvars_ = 0;
    std::map<ExpVec, Scalar> terms_; // no zero coefficients stored
};

} // namespace algpoly
