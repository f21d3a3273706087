// Buchberger Groebner bases, elimination, and exact certificates.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "algpoly/multipoly.hpp"
#include "algpoly/scalarize.hpp"

namespace algpoly {

struct MonomialOrder {
    enum class Kind { Lex, Grevlex };
    Kind kind = Kind::Grevlex;
    /// perm[0] is the largest variable; empty = identity permutation.
    std::vector<int> perm;

    static MonomialOrder lex(int nvars);
    static MonomialOrder grevlex(int nvars);
    /// Lex order with `eliminated` variables largest (in the given sequence),
    /// kept variables after them.
    static MonomialOrder elimination(int nvars, const std::vector<int>& eliminated);

    /// <0 if a < b, 0 if equal, >0 if a > b.
    int compare(const ExpVec& a, const ExpVec& b) const;
};

struct GroebnerBasis {
    MonomialOrder order;
    std::vector<MultiPoly> polys; // reduced, monic, interreduced
    bool is_trivial_unit() const; // GB == {1}
};

struct BuchbergerLimits {
    int max_basis = 500;
    int max_degree = 60;
};

struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Reduced monic Groebner basis; deterministic under a fixed order (normal
/// pair selection: lowest lcm degree first, ties by pair index). Throws
/// GuardExceeded when limits are hit, never silently truncates.
GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, const MonomialOrder& order,
                         const BuchbergerLimits& limits = {});

/// Full normal form of f modulo the basis (used for ideal-membership replay).
MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& gb);

/// Basis elements that involve only the kept variables, from a lex GB with
/// eliminated variables largest.
std::vector<MultiPoly> eliminate(const std::vector<MultiPoly>& gens,
                                 const std::vector<int>& keep,
                                 const BuchbergerLimits& limits = {});

// ---- certificates ----------------------------------------------------------

struct Certificate {
    enum class Kind { Nondegenerate, DegenerateWitness, NoRealZero, Inconclusive };
    Kind kind = Kind::Inconclusive;
    std::string method; // e.g. "groebner-zero-dim", "sphere-groebner", "norm-gap"
    std::string reason; // Inconclusive detail / human-readable note

    std::optional<GroebnerBasis> gb;
    std::vector<ExpVec> pure_power_leading_monomials; // one per variable

    std::vector<Scalar> witness;  // exact witness (replayable)
    std::vector<std::complex<double>> witness_numeric;
    bool witness_is_exact = false;

    int eliminant_variable = -1; // -1 when certified via GB == {1}
    std::optional<MultiPoly> eliminant;
    int sturm_root_count = -1;

    std::string to_json() const;
};

/// Zero-dimensionality at the origin over the algebraic closure: every
/// variable must contribute a pure-power leading monomial to the GB. Exact
/// standard-basis witnesses are tried on failure; the numeric fallback lives
/// in the solve module.
Certificate nondegenerate_complex(const ScalarizedSystem& leading_forms,
                                  const BuchbergerLimits& limits = {});

/// Exact REAL non-degeneracy of a homogeneous system: adjoins the unit-sphere
/// equation sum lambda_v^2 = 1 and certifies that the augmented system has no
/// real solution (GB == {1} or a real-root-free eliminant). Sound: a nonzero
/// real common zero could be scaled onto the sphere.
Certificate certify_nondegenerate_real(const ScalarizedSystem& leading_forms,
                                       const BuchbergerLimits& limits = {});

/// Eliminant-with-no-real-root certificate for the full system; tries
/// variables from last to first. GB == {1} short-circuits.
Certificate certify_no_real_zero(const ScalarizedSystem& sys,
                                 const BuchbergerLimits& limits = {});

} // namespace algpoly
