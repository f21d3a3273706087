// Built-in worked example over the quaternions, the Mat2 degenerate fixture,
// and the 8-parameter determinant identity. Compiled in so the CLI's
// worked-example command runs with no filesystem setup.
#pragma once

#include <string>
#include <vector>

#include "algpoly/multipoly.hpp"
#include "algpoly/polymap.hpp"
#include "algpoly/sturm.hpp"

namespace algpoly::fixtures {

/// p(x) = c0 x^2 + (x c1) x + (c2 x)(c3 x) + c4 over the quaternions with
/// c0 = -1-i+k, c1 = -1-i+j-k, c2 = -i-j+k, c3 = -1+i+j+k, c4 = 6i.
extern const char* const quaternion_example_text;
PolynomialMap quaternion_example_map();

/// The degree-1 map a -> c0 a + a c1 + (c2 a) c3 obtained by cancelling one
/// copy of a from the leading form.
PolynomialMap quaternion_example_linearization();

/// Its 4x4 coefficient matrix (row-major) and exact determinant (-3, frozen
/// from an independent cofactor-expansion oracle).
std::vector<std::vector<Scalar>> expected_matrix_m();
Scalar expected_det_m();

/// The four expected coordinate polynomials of the example in the real
/// coordinates a = a1 + a2 i + a3 j + a4 k (variables in that order).
std::vector<MultiPoly> expected_coordinates();

/// 216 + 324 a4^2 - 927 a4^4 - 148 a4^6 + 2578 a4^8 (ascending coefficients)
/// and its substitution q = 216 + 324 x - 927 x^2 - 148 x^3 + 2578 x^4.
UniPoly expected_eliminant();
UniPoly q_quartic();

/// X -> E11 X + I on Mat2(R): degenerate leading form, no zero.
PolynomialMap mat2_example_map();

/// det M(c0, c1) for l(x) = c0 x + x c1 on the quaternions, as an expanded
/// polynomial in (c01, c02, c03, c04, c11, c12, c13, c14), and the
/// sum-of-squares form it equals:
/// (c01+c11)^2 ((c01+c11)^2 + 2(|im c0|^2 + |im c1|^2)) + (|im c0|^2 - |im c1|^2)^2.
MultiPoly det_identity_determinant();
MultiPoly det_identity_sum_of_squares();

/// The linear form l(x) = c0 x + x c1 for explicit quaternions c0, c1
/// (used to replay the degeneracy characterization on random instances).
PolynomialMap pencil_map(const Element& c0, const Element& c1);

} // namespace algpoly::fixtures
