// Exact univariate real-root counting via Sturm chains.
#pragma once

#include <optional>
#include <vector>

#include "algpoly/multipoly.hpp"

namespace algpoly {

/// Dense univariate polynomial over Q, ascending coefficients.
using UniPoly = std::vector<Rat>;

int uni_degree(const UniPoly& p); // -1 for zero
UniPoly uni_derivative(const UniPoly& p);
/// Remainder of a by b (b nonzero).
UniPoly uni_rem(const UniPoly& a, const UniPoly& b);
UniPoly uni_gcd(UniPoly a, UniPoly b); // monic
UniPoly uni_squarefree_part(const UniPoly& p);
Rat uni_eval(const UniPoly& p, const Rat& x);

/// p0 = squarefree part, p1 = p0', p_{i+1} = -rem(p_{i-1}, p_i); the last
/// element is a nonzero constant.
struct SturmChain {
    std::vector<UniPoly> polys;
};
SturmChain sturm_chain(const UniPoly& squarefree);

struct Interval {
    std::optional<Rat> lo, hi; // nullopt = -inf / +inf
};

/// Number of distinct real roots of q (q != 0) on the whole line or [lo, hi].
int sturm_count(const UniPoly& q, const Interval& iv = {});
int sturm_count(const MultiPoly& q, int var, const Interval& iv = {});

} // namespace algpoly
