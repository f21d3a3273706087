// Expansion of polynomial maps over a subspace basis into classical
// multivariate polynomial systems, plus Jacobians, homogenization and the
// coefficient matrix of a linear map.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "algpoly/multipoly.hpp"
#include "algpoly/polymap.hpp"

namespace algpoly {

/// Bijection (k, l) <-> flat index for the coefficients lambda_{kl} of the
/// generic element of H^n; k in [0,d), l in [0,n), flat = l*d + k.
struct VariableAtlas {
    int subspace_dim = 0; // d
    int nargs = 0;        // n
    int nvars() const { return subspace_dim * nargs; }
    int flat(int k, int l) const { return l * subspace_dim + k; }
    int coord_of(int flat) const { return flat % subspace_dim; }  // k
    int arg_of(int flat) const { return flat / subspace_dim; }    // l
    std::string var_name(int flat) const {
        return "l_" + std::to_string(coord_of(flat) + 1) + "_" + std::to_string(arg_of(flat) + 1);
    }
    std::vector<std::string> var_names() const;
};

struct ScalarizedSystem {
    std::vector<MultiPoly> polys; // h_{ji}; grouped per map, e polys each
    VariableAtlas atlas;
    std::vector<Element> target_basis; // basis of H'
    std::vector<Element> source_basis; // basis of H (for mapping lambda back)
    int nmaps = 0;
    bool has_homogenizing_var = false; // polys then have atlas.nvars()+1 variables
    int poly_nvars() const { return atlas.nvars() + (has_homogenizing_var ? 1 : 0); }
    int polys_per_map() const { return nmaps ? static_cast<int>(polys.size()) / nmaps : 0; }
};

/// Thrown when some p_i(H^n) is not contained in span(H').
struct ImageNotContained : std::runtime_error {
    int map_index;
    int ambient_coord;
    MultiPoly residual;
    ImageNotContained(int mi, int ac, MultiPoly r);
};

/// Substitutes the generic element sum_k lambda_{kl} b_k for each variable,
/// evaluates word trees through the structure constants, and expresses the
/// results in the H' basis. Exact throughout.
ScalarizedSystem scalarize(const std::vector<PolynomialMap>& maps, const Subspace& H,
                           const Subspace& Hprime);

/// Ambient-coordinate scalarization of one map at explicitly given generic
/// arguments (each argument = vector of dim_A coordinate polynomials).
std::vector<MultiPoly> scalarize_ambient(const PolynomialMap& p,
                                         const std::vector<std::vector<MultiPoly>>& args,
                                         int nvars);

/// True iff the map is semantically zero on H (all scalarized coordinates 0).
bool is_semantically_zero(const PolynomialMap& p, const Subspace& H);

/// Each poly h of degree D becomes z^D h(lambda/z), z appended as the last
/// variable. Exact.
ScalarizedSystem homogenize(const ScalarizedSystem& sys);
ScalarizedSystem dehomogenize(const ScalarizedSystem& sys);

/// Coefficient matrix of a (semantically) linear single-variable map on H:
/// column k = H'-coordinates of p(b_k). Row-major d x d.
std::vector<std::vector<Scalar>> linear_coefficient_matrix(const PolynomialMap& p,
                                                           const Subspace& H,
                                                           const Subspace& Hprime);

/// Entry (i, v) = d poly_i / d lambda_v.
std::vector<std::vector<MultiPoly>> jacobian(const ScalarizedSystem& sys);

/// Exact determinant by cofactor-free Gaussian elimination over the field.
Scalar exact_determinant(std::vector<std::vector<Scalar>> m);

/// Evaluate all polys at an exact point.
std::vector<Scalar> eval_system(const ScalarizedSystem& sys, const std::vector<Scalar>& point);

std::string system_to_json(const ScalarizedSystem& sys);

} // namespace algpoly
