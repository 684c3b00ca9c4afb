#pragma once

#include <stdexcept>
#include <string>

#include "dh/drinfeld.hpp"

namespace dh {

// Raised for malformed input text (bad syntax, unknown symbol, unsupported
// operation such as dividing twisted polynomials).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

// Shared grammar, value semantics per target type:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ['^' integer]
//   atom   := integer | symbol | '(' expr ')'
// Symbols: 'T' always; 'g' for the constant-field generator when q is not
// prime; 'X' in defining polynomials; the ambient's generator name in
// element expressions; 't0','t1',... for powers of tau in twisted
// polynomials.  Integer literals reduce into the prime field.

// A rational function in T ("(T^2+1)/T").
RatFunc parse_ratfunc(unsigned q, const std::string& text);
// An integral polynomial in T ("T^2+T+1"); rejects true fractions.
PolyA parse_poly(unsigned q, const std::string& text);
// A defining polynomial in X over k ("X^2 - T"); division only by constants.
PolyK parse_polyk(unsigned q, const std::string& text);
// An element of the given ambient ("l+1" with the generator named "l").
AlgebraicElement parse_element(const AmbientPtr& amb, const std::string& text);
// A twisted polynomial ("T*t0+t2"); division is not defined.
OreK parse_ore(unsigned q, const std::string& text);
// Inverse of parse_ore for display; coefficients printed before their tau.
std::string render_ore(const OreK& op);

}  // namespace dh
