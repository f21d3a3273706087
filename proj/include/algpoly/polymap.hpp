// Polynomial maps A^n -> A as k-linear combinations of bracketed word trees.
//
// Bracketing is semantic: no flattening is ever performed, so results over
// non-associative algebras depend on the tree shape exactly as written.
#pragma once

#include <map>
#include <memory>
#include <vector>

#include "algpoly/algebra.hpp"

namespace algpoly {

struct Word;
using WordPtr = std::shared_ptr<const Word>;

struct Word {
    enum class Kind { Const, Var, Prod };
    Kind kind;
    Element value; // Const
    int var = -1;  // Var, 0-based
    WordPtr left, right;

    static WordPtr make_const(Element v);
    static WordPtr make_var(int v);
    static WordPtr make_prod(WordPtr l, WordPtr r);

    /// Number of Var leaves (the syntactic degree of the monomial).
    int var_leaf_count() const;
    int max_var_index() const;
};

bool words_equal(const Word& a, const Word& b);

struct Term {
    Scalar coeff;
    WordPtr word;
};

struct PolynomialMap {
    AlgebraPtr alg;
    int nvars = 1;
    std::vector<Term> terms; // empty = the zero map

    bool structurally_equal(const PolynomialMap& other) const;
};

/// Sums coeff * word(a) over terms, recursing word trees through multiply.
Element evaluate(const PolynomialMap& p, const std::vector<Element>& args);
ElementD evaluate_numeric(const PolynomialMap& p, const std::vector<ElementD>& args);

/// Largest Var-leaf count over terms; -1 for an empty term list.
int syntactic_degree(const PolynomialMap& p);

struct HomogeneousDecomposition {
    /// Semantically nonzero components only, keyed by degree.
    std::map<int, PolynomialMap> components;
    /// -1 means the zero map.
    int semantic_degree = -1;
    PolynomialMap leading_form;
    bool is_zero_map() const { return semantic_degree < 0; }
};

/// Groups terms by Var-leaf count; each group is tested for semantic
/// nonzero-ness by exact scalarization over the full algebra.
HomogeneousDecomposition decompose(const PolynomialMap& p);

/// |coeff| * product of the norms of all Const leaves. Requires a
/// composition norm; then ||m(a)|| = monomial_norm * ||a||^deg for all a.
double monomial_norm(const Algebra& alg, const Word& w, const Scalar& coeff);
/// Exact squared version (used for exact norm comparisons in Thm-4.1 logic).
Rat monomial_norm_sq_exact(const Algebra& alg, const Word& w, const Scalar& coeff);

/// Decides exactly whether a |-> p(a)* and a |-> p(a*) have identical
/// scalarizations over the full algebra. Requires an involution.
bool check_self_adjoint(const PolynomialMap& p);

// convenience builders
PolynomialMap zero_map(const AlgebraPtr& alg, int nvars);
PolynomialMap identity_map(const AlgebraPtr& alg);
/// x^d as a left-nested product ((x*x)*x)... of the given variable.
WordPtr power_word(int var, int d);

} // namespace algpoly
