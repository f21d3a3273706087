// Text format for algebra elements and polynomial maps.
//
// Grammar: rational literals (`3`, `-2/5`), basis labels (`1,i,j,k` for H,
// `e0..e7` for O, `E11..` for matrices), variables `x1..xn` (`x` means `x1`),
// operators + - * ^ with precedence ^ > * > +/-, parentheses, `#` line
// comments. `*` is left-associative (bracketing matters over non-associative
// algebras -- parenthesize explicitly there). Multiplying by a rational
// literal is field-scalar action, not algebra multiplication. Juxtaposed
// constants fold into a single Const leaf; a parenthesized sum of constants
// forms one element.
#pragma once

#include <stdexcept>
#include <string>

#include "algpoly/polymap.hpp"

namespace algpoly {

struct MapSource {
    std::string text;
    AlgebraPtr algebra;
    int nvars = 1;
};

struct ParseError : std::runtime_error {
    size_t position;
    std::string expected;
    ParseError(const std::string& msg, size_t pos, std::string exp = "")
        : std::runtime_error(msg + " at position " + std::to_string(pos) +
                             (exp.empty() ? "" : " (expected " + exp + ")")),
          position(pos), expected(std::move(exp)) {}
};

/// Parse into a fully distributed PolynomialMap.
PolynomialMap parse_map(const MapSource& src);
PolynomialMap parse_map(const std::string& text, const AlgebraPtr& alg, int nvars = 1);

/// Constant expressions only (no variables).
Element parse_element(const std::string& text, const AlgebraPtr& alg);

/// Canonical fully parenthesized form; parse(print(p)) reproduces p
/// term-for-term for parser-producible maps.
std::string print_map(const PolynomialMap& p);
std::string print_element(const Algebra& alg, const Element& e);

} // namespace algpoly
