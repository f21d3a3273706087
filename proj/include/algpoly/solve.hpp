// Numerical zero finding: total-degree homotopy continuation over C,
// multistart damped Newton over R, numeric non-degeneracy probing,
// topological mapping-degree estimation, and theorem-applicability verdicts.
#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "algpoly/groebner.hpp"
#include "algpoly/polymap.hpp"
#include "algpoly/scalarize.hpp"

namespace algpoly {

struct HomotopyConfig {
    double dt_init = 0.05;
    double dt_min = 1e-8;
    double corrector_tol = 1e-12;
    int max_steps = 10000;
};

struct SolveConfig {
    double tol_residual = 1e-10;
    double tol_dedup = 1e-6;
    int max_newton_iters = 50;
    int max_damping_halvings = 20;
    int n_starts = 200;
    std::uint64_t seed = 0;
    HomotopyConfig homotopy;
    double real_filter_tol = 1e-8;
};

enum class PathStatus { Converged, Diverged, SingularEndpoint };

struct PathStats {
    int tracked = 0, converged = 0, diverged = 0, singular = 0;
};

struct TheoremVerdict {
    std::string theorem; // "Thm 3.1", "Thm 3.2", "Cor 3.4", "Thm 4.1"
    bool applies = false;
    std::string reason;
};

struct FoundZero {
    std::vector<ElementD> point; // algebra-element tuple
    std::vector<std::complex<double>> lambda;
    double residual = 0; // max_i ||p_i(a)|| at algebra level
    bool possibly_positive_dimensional = false;
};

struct SolveReport {
    std::vector<FoundZero> zeros;
    PathStats paths;
    long bezout_count = 0;
    std::vector<TheoremVerdict> verdicts;
    std::vector<std::string> notes;
    std::string method; // "newton-multistart", "homotopy", ...
    std::string to_json() const;
};

// ---- scalar-system solvers ---------------------------------------------------

/// Roots of a square system by total-degree homotopy, gamma-trick start
/// system x_i^{d_i} - 1. Deterministic given cfg.seed. Solutions are in
/// lambda coordinates; zeros are deduplicated endpoint values.
SolveReport solve_complex_total_degree(const ScalarizedSystem& sys, const SolveConfig& cfg);

/// Damped Newton from Gaussian starts; never claims nonexistence.
SolveReport solve_real_multistart(const ScalarizedSystem& sys, const SolveConfig& cfg);

// ---- non-degeneracy probing ---------------------------------------------------

struct NondegProbe {
    double min_value = 0;                 // min over starts of max_i ||p_i(a)||
    std::vector<double> argmin;           // lambda coordinates on the unit sphere
    std::string verdict;                  // "degenerate-witness" | "numerically-nondegenerate"
};
/// Projected-gradient minimization of max_i ||p_i^max|| on the unit sphere of
/// H^n (in lambda coordinates). A probe, never a proof.
NondegProbe numeric_nondegeneracy_min(const ScalarizedSystem& leading_forms,
                                      const SolveConfig& cfg);

/// Exact certificates first (division-algebra shortcut for single monomials,
/// complex zero-dim GB, sphere-Groebner real certificate), numeric probe as a
/// fallback. The summary string records which route decided.
struct NondegAssessment {
    bool certified_complex = false; // no common zero over C outside 0
    bool certified_real = false;    // no common real zero outside 0
    bool degenerate = false;
    Certificate certificate;
    std::optional<NondegProbe> probe;
    std::string summary;
};
NondegAssessment assess_nondegeneracy(const std::vector<PolynomialMap>& leading_forms,
                                      const Subspace& H, const SolveConfig& cfg);

// ---- mapping degree ------------------------------------------------------------

struct DegreeEstimate {
    int value = 0;
    std::vector<double> regular_value_used;
    int preimage_count = 0;
    std::vector<int> jacobian_signs;
    std::vector<std::string> confidence_notes;
    bool low_confidence = false;
};
/// Degree of the leading-form map via preimages of a random unit target:
/// sum of sign(det J) over real preimages found by complexified homotopy.
/// Retries with a fresh target on singular paths or colliding preimages.
DegreeEstimate mapping_degree_estimate(const std::vector<PolynomialMap>& leading_forms,
                                       const Subspace& H, const SolveConfig& cfg);

// ---- orchestration --------------------------------------------------------------

/// Scalarize, solve (real multistart, homotopy fallback), map back to algebra
/// tuples, verify residuals at algebra level, and fill theorem verdicts.
SolveReport find_common_zero(const std::vector<PolynomialMap>& maps, const Subspace& H,
                             const Subspace& Hprime, const SolveConfig& cfg);

/// Applicability of each existence statement, given the decomposition degrees
/// and a non-degeneracy assessment of the leading forms. `notes` collects
/// spot-check output from the two-monomial analysis.
std::vector<TheoremVerdict> theorem_verdicts(const std::vector<PolynomialMap>& maps,
                                             const Subspace& H, const Subspace& Hprime,
                                             const NondegAssessment& assess,
                                             const std::vector<int>& degrees,
                                             const SolveConfig& cfg,
                                             std::vector<std::string>& notes);

struct TwoMonomialVerdict {
    bool guaranteed = false;
    std::string reason;
    std::vector<std::string> homotopy_spot_checks;
};
/// Existence guarantee for even-degree maps on H/O whose leading form has at
/// most two monomials (ordered so ||m1|| >= ||m2||, compared exactly).
TwoMonomialVerdict two_monomial_guarantee(const PolynomialMap& p, const SolveConfig& cfg);

// ---- shared numeric helpers (also used by tests) --------------------------------

/// Dense complex linear solve (partial pivoting); returns false if singular.
bool linsolve_complex(std::vector<std::vector<std::complex<double>>> a,
                      std::vector<std::complex<double>> b,
                      std::vector<std::complex<double>>& x);

/// Map lambda coordinates back to an algebra-element tuple over H's basis.
std::vector<ElementD> lambda_to_elements(const std::vector<std::complex<double>>& lambda,
                                         const Subspace& H, int nargs);

/// max_i ||p_i(a)|| at algebra level.
double algebra_residual(const std::vector<PolynomialMap>& maps, const std::vector<ElementD>& point);

} // namespace algpoly
