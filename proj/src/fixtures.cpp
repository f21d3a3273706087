#include "algpoly/fixtures.hpp"

#include <array>

namespace algpoly::fixtures {

namespace {

Element quat(int a, int b, int c, int d) {
    return {Scalar(a), Scalar(b), Scalar(c), Scalar(d)};
}

const Element C0 = quat(-1, -1, 0, 1);
const Element C1 = quat(-1, -1, 1, -1);
const Element C2 = quat(0, -1, -1, 1);
const Element C3 = quat(-1, 1, 1, 1);
const Element C4 = quat(0, 6, 0, 0);

MultiPoly poly4(std::initializer_list<std::array<int, 5>> terms) {
    MultiPoly p(4);
    for (const auto& t : terms) p.add_term({t[1], t[2], t[3], t[4]}, Scalar(t[0]));
    return p;
}

// 4x4 determinant of polynomial entries by cofactor expansion (tiny sizes only).
MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 1) return m[0][0];
    MultiPoly acc(m[0][0].nvars());
    for (int c = 0; c < n; ++c) {
        std::vector<std::vector<MultiPoly>> minor;
        for (int r = 1; r < n; ++r) {
            std::vector<MultiPoly> row;
            for (int j = 0; j < n; ++j)
                if (j != c) row.push_back(m[r][j]);
            minor.push_back(std::move(row));
        }
        MultiPoly term = m[0][c] * poly_det(minor);
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

} // namespace

const char* const quaternion_example_text =
    "(-1-i+k)*x^2 + x*(-1-i+j-k)*x + ((-i-j+k)*x)*((-1+i+j+k)*x) + 6*i";

PolynomialMap quaternion_example_map() {
    AlgebraPtr H = make_quaternions();
    WordPtr x = Word::make_var(0);
    PolynomialMap p{H, 1, {}};
    p.terms.push_back({Scalar(1), Word::make_prod(Word::make_const(C0),
                                                  Word::make_prod(x, x))});
    p.terms.push_back({Scalar(1), Word::make_prod(
                                      Word::make_prod(x, Word::make_const(C1)), x)});
    p.terms.push_back({Scalar(1), Word::make_prod(
                                      Word::make_prod(Word::make_const(C2), x),
                                      Word::make_prod(Word::make_const(C3), x))});
    p.terms.push_back({Scalar(1), Word::make_const(C4)});
    return p;
}

PolynomialMap quaternion_example_linearization() {
    AlgebraPtr H = make_quaternions();
    WordPtr x = Word::make_var(0);
    PolynomialMap p{H, 1, {}};
    p.terms.push_back({Scalar(1), Word::make_prod(Word::make_const(C0), x)});
    p.terms.push_back({Scalar(1), Word::make_prod(x, Word::make_const(C1))});
    p.terms.push_back({Scalar(1), Word::make_prod(
                                      Word::make_prod(Word::make_const(C2), x),
                                      Word::make_const(C3))});
    return p;
}

std::vector<std::vector<Scalar>> expected_matrix_m() {
    return {{Scalar(-1), Scalar(-1), Scalar(0), Scalar(1)},
            {Scalar(-3), Scalar(-1), Scalar(1), Scalar(0)},
            {Scalar(4), Scalar(3), Scalar(-1), Scalar(-1)},
            {Scalar(-1), Scalar(0), Scalar(1), Scalar(-5)}};
}

Scalar expected_det_m() { return Scalar(-3); }

std::vector<MultiPoly> expected_coordinates() {
    return {
        poly4({{-1, 2, 0, 0, 0}, {2, 1, 1, 0, 0}, {-4, 1, 0, 1, 0}, {2, 1, 0, 0, 1},
               {1, 0, 2, 0, 0}, {-4, 0, 1, 1, 0}, {1, 0, 0, 2, 0}, {5, 0, 0, 0, 2}}),
        poly4({{-3, 2, 0, 0, 0}, {-2, 1, 1, 0, 0}, {2, 1, 0, 1, 0}, {4, 1, 0, 0, 1},
               {-1, 0, 2, 0, 0}, {4, 0, 1, 0, 1}, {-1, 0, 0, 2, 0}, {4, 0, 0, 1, 1},
               {-1, 0, 0, 0, 2}, {6, 0, 0, 0, 0}}),
        poly4({{4, 2, 0, 0, 0}, {2, 1, 1, 0, 0}, {-2, 1, 0, 1, 0}, {2, 1, 0, 0, 1},
               {-4, 0, 1, 0, 1}}),
        poly4({{-1, 2, 0, 0, 0}, {-4, 1, 1, 0, 0}, {-2, 1, 0, 1, 0}, {-6, 1, 0, 0, 1},
               {-3, 0, 2, 0, 0}, {1, 0, 0, 2, 0}, {1, 0, 0, 0, 2}}),
    };
}

UniPoly expected_eliminant() {
    return {Rat(216), Rat(0), Rat(324), Rat(0), Rat(-927), Rat(0), Rat(-148), Rat(0), Rat(2578)};
}

UniPoly q_quartic() { return {Rat(216), Rat(324), Rat(-927), Rat(-148), Rat(2578)}; }

PolynomialMap mat2_example_map() {
    AlgebraPtr A = make_matrix(2, Field::Real);
    PolynomialMap p{A, 1, {}};
    // basis order E11, E12, E21, E22
    Element e11 = basis_element(*A, 0);
    Element id = *A->unit;
    p.terms.push_back({Scalar(1), Word::make_prod(Word::make_const(e11), Word::make_var(0))});
    p.terms.push_back({Scalar(1), Word::make_const(id)});
    return p;
}

// variable order: c01 c02 c03 c04 c11 c12 c13 c14
namespace {
MultiPoly cvar(int v) { return MultiPoly::variable(8, v); }
} // namespace

MultiPoly det_identity_determinant() {
    MultiPoly c01 = cvar(0), c02 = cvar(1), c03 = cvar(2), c04 = cvar(3);
    MultiPoly c11 = cvar(4), c12 = cvar(5), c13 = cvar(6), c14 = cvar(7);
    std::vector<std::vector<MultiPoly>> M = {
        {c01 + c11, -(c02 + c12), -(c03 + c13), -(c04 + c14)},
        {c02 + c12, c01 + c11, c14 - c04, c03 - c13},
        {c03 + c13, c04 - c14, c01 + c11, c12 - c02},
        {c04 + c14, c13 - c03, c02 - c12, c01 + c11},
    };
    return poly_det(M);
}

MultiPoly det_identity_sum_of_squares() {
    MultiPoly c01 = cvar(0), c02 = cvar(1), c03 = cvar(2), c04 = cvar(3);
    MultiPoly c11 = cvar(4), c12 = cvar(5), c13 = cvar(6), c14 = cvar(7);
    MultiPoly s = c01 + c11;
    MultiPoly n0 = c02 * c02 + c03 * c03 + c04 * c04;
    MultiPoly n1 = c12 * c12 + c13 * c13 + c14 * c14;
    MultiPoly diff = n0 - n1;
    return s * s * (s * s + Scalar(2) * (n0 + n1)) + diff * diff;
}

PolynomialMap pencil_map(const Element& c0, const Element& c1) {
    AlgebraPtr H = make_quaternions();
    WordPtr x = Word::make_var(0);
    PolynomialMap p{H, 1, {}};
    p.terms.push_back({Scalar(1), Word::make_prod(Word::make_const(c0), x)});
    p.terms.push_back({Scalar(1), Word::make_prod(x, Word::make_const(c1))});
    return p;
}

} // namespace algpoly::fixtures
