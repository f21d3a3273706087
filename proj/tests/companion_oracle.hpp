// Independent root oracle for univariate complex polynomials: eigenvalues of
// the companion matrix (Eigen), used to cross-check the homotopy solver.
#pragma once

#include <complex>
#include <vector>

#include <Eigen/Eigenvalues>

inline std::vector<std::complex<double>> companion_roots(
    const std::vector<std::complex<double>>& ascending_coeffs) {
    int d = static_cast<int>(ascending_coeffs.size()) - 1;
    while (d > 0 && std::abs(ascending_coeffs[d]) == 0.0) --d;
    if (d < 1) return {};
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) C(i, d - 1) = -ascending_coeffs[i] / ascending_coeffs[d];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C);
    std::vector<std::complex<double>> roots(d);
    for (int i = 0; i < d; ++i) roots[i] = es.eigenvalues()[i];
    return roots;
}

/// Multiset match within tol: greedy matching, each root used once.
inline bool roots_match(std::vector<std::complex<double>> a,
                        std::vector<std::complex<double>> b, double tol) {
    if (a.size() != b.size()) return false;
    for (const auto& x : a) {
        double best = 1e300;
        size_t arg = 0;
        for (size_t i = 0; i < b.size(); ++i) {
            double dst = std::abs(x - b[i]);
            if (dst < best) {
                best = dst;
                arg = i;
            }
        }
        if (best > tol) return false;
        b.erase(b.begin() + static_cast<long>(arg));
    }
    return true;
}
