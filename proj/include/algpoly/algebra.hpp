// Finite-dimensional (possibly non-associative, non-unital) algebras given by
// structure constants, their elements, and subspaces.
#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "algpoly/scalar.hpp"

namespace algpoly {

enum class Field { Real, Complex };

/// Coordinate vector of an algebra element in the ambient basis.
using Element = std::vector<Scalar>;

struct Algebra {
    int dim = 0;
    Field field = Field::Real;
    // gamma[(i*dim + j)*dim + k] is the k-th coordinate of b_i * b_j.
    std::vector<Scalar> gamma;
    std::vector<std::string> basis_labels;
    std::optional<Element> unit;
    bool has_composition_norm = false;
    // Row-major dim x dim matrix: (x*)_i = sum_j inv[i*dim+j] x_j.
    std::optional<std::vector<Scalar>> involution;
    std::string name;

    const Scalar& g(int i, int j, int k) const { return gamma[(i * dim + j) * dim + k]; }
    Scalar& g(int i, int j, int k) { return gamma[(i * dim + j) * dim + k]; }
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// ---- builtin constructors ------------------------------------------------

AlgebraPtr make_reals();
AlgebraPtr make_complex_as_real();
AlgebraPtr make_quaternions();
AlgebraPtr make_octonions(); // Cayley-Dickson doubling of the quaternions
AlgebraPtr make_matrix(int m, Field field);
AlgebraPtr make_complex_matrix_as_real(int m);

/// Builtin by name: "reals", "complex-as-real", "quaternions"/"H",
/// "octonions"/"O", "matrix(m,real)", "matrix(m,complex)",
/// "complex-matrix-as-real(m)". Throws std::invalid_argument on unknown names.
AlgebraPtr make_algebra(const std::string& spec);

/// Explicit structure constants. Validates tensor dimensions, the unit law
/// and the involution axioms; throws std::invalid_argument on violation.
AlgebraPtr make_algebra_explicit(int dim, Field field, std::vector<Scalar> gamma,
                                 std::vector<std::string> labels,
                                 std::optional<Element> unit = std::nullopt,
                                 std::optional<std::vector<Scalar>> involution = std::nullopt,
                                 std::string name = "custom");

/// Load/store the JSON algebra definition format.
AlgebraPtr load_algebra_json(const std::string& json_text);
std::string algebra_to_json(const Algebra& a);

// ---- element arithmetic --------------------------------------------------

Element multiply(const Algebra& a, const Element& x, const Element& y);
Element add(const Element& x, const Element& y);
Element sub(const Element& x, const Element& y);
Element scale(const Scalar& c, const Element& x);
Element zero_element(const Algebra& a);
Element basis_element(const Algebra& a, int i);
Element apply_involution(const Algebra& a, const Element& x);
bool is_zero(const Element& x);

/// Numeric coordinates (complex to cover both ground fields uniformly).
using ElementD = std::vector<std::complex<double>>;
ElementD to_numeric(const Element& x);
ElementD multiply_numeric(const Algebra& a, const ElementD& x, const ElementD& y);

/// Euclidean norm of the coordinate vector; this is the canonical norm on
/// R, C-as-real, H and O (where it is multiplicative).
double norm(const Element& x);
double norm_numeric(const ElementD& x);
/// Exact squared Euclidean norm (real algebras).
Rat norm_sq_exact(const Element& x);

struct AlgebraClass {
    bool associative = false;
    bool commutative = false;
    bool unital = false;
};
/// Decided exactly on basis pairs/triples (sufficient by bilinearity).
AlgebraClass classify(const Algebra& a);

// ---- subspaces -----------------------------------------------------------

struct Subspace {
    AlgebraPtr alg;
    std::vector<Element> basis;
    int dim() const { return static_cast<int>(basis.size()); }
};

/// Full ambient space with the standard basis.
Subspace full_subspace(const AlgebraPtr& a);

/// Throws std::invalid_argument if the basis is linearly dependent.
Subspace make_subspace(const AlgebraPtr& a, std::vector<Element> basis);

/// Unique coefficients of x in span(s), or nullopt if x is not a member.
std::optional<std::vector<Scalar>> coords_in(const Subspace& s, const Element& x);

/// The m^2-dimensional real subspace of Hermitian matrices inside
/// complex-matrix-as-real(m). Basis order: E_11..E_mm, then for each pair
/// p<q the symmetric E_pq+E_qp followed by i(E_pq-E_qp).
Subspace hermitian_subspace(int m);

// ---- exact linear algebra helper ------------------------------------------

/// Solver for A c = v with a fixed matrix A (columns = given vectors),
/// factored once by exact Gaussian elimination.
class ExactSolver {
  public:
    /// columns: list of length-`rows` vectors.
    ExactSolver(std::vector<std::vector<Scalar>> columns, int rows);
    int rank() const { return rank_; }
    /// Least structure: returns coefficients if v lies in the column span,
    /// nullopt otherwise (with the first inconsistent row index recorded).
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& v) const;
    int last_inconsistent_row() const { return last_bad_row_; }
    /// v - A*c where c is the pivot-row partial solution; zero iff solvable.
    std::vector<Scalar> residual(const std::vector<Scalar>& v) const;

  private:
    int rows_, cols_, rank_;
    std::vector<std::vector<Scalar>> columns_;
    std::vector<std::vector<Scalar>> rref_; // reduced rows of [A]
    std::vector<int> pivot_col_;
    std::vector<std::vector<Scalar>> record_; // row ops applied, as rows of E with E*A = rref
    mutable int last_bad_row_ = -1;
};

} // namespace algpoly
