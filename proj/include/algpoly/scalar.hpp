// Exact field scalars: rationals (GMP) and Gaussian rationals.
//
// All symbolic computation in this library runs over Q or Q(i); floats only
// appear in the numeric solver layer. A Scalar is a pair (re, im) of exact
// rationals; real ground fields simply keep im == 0.
#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace algpoly {

using Rat = mpq_class;

/// Parse "p", "-p/q" etc. exactly. Throws std::invalid_argument on junk.
Rat parse_rational(const std::string& s);

/// Canonical form "p" or "p/q" with positive denominator.
std::string rat_to_string(const Rat& r);

/// Exact lift of a finite double (doubles are dyadic, so this never rounds).
/// Throws on NaN/inf.
Rat rat_from_double(double x);

struct Scalar {
    Rat re{0};
    Rat im{0};

    Scalar() = default;
    Scalar(long v) : re(v) {}           // NOLINT(google-explicit-constructor)
    Scalar(int v) : re(v) {}            // NOLINT(google-explicit-constructor)
    Scalar(Rat r) : re(std::move(r)) {} // NOLINT(google-explicit-constructor)
    Scalar(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
    double to_double() const { return re.get_d(); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend Scalar operator-(const Scalar& a) { return {-a.re, -a.im}; }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        Rat n = b.re * b.re + b.im * b.im;
        if (n == 0) throw std::domain_error("Scalar: division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    Scalar& operator+=(const Scalar& b) { re += b.re; im += b.im; return *this; }
    Scalar& operator-=(const Scalar& b) { re -= b.re; im -= b.im; return *this; }
    Scalar& operator*=(const Scalar& b) { *this = *this * b; return *this; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) {
        int c = cmp(a.re, b.re);
        if (c != 0) return c < 0;
        return cmp(a.im, b.im) < 0;
    }

    Scalar conj() const { return {re, -im}; }
    /// |re| for real scalars, exact. Throws if im != 0.
    Rat abs_real() const {
        if (im != 0) throw std::domain_error("Scalar: abs_real of non-real value");
        return re < 0 ? Rat(-re) : re;
    }
    /// re^2 + im^2, exact.
    Rat norm_sq() const { return re * re + im * im; }

    std::string to_string() const;
};

/// Parse a scalar; accepts "3", "-2/5", and "a+b*i" forms like "1/2+3*i".
Scalar parse_scalar(const std::string& s);

} // namespace algpoly
