#pragma once

#include <string>

#include "qalg/poly.hpp"
#include "qalg/prime_field.hpp"
#include "qalg/rational.hpp"

namespace qalg {

// Parses either expression form ("x^3 - 2", "1/2*x + 3") or coefficient
// list form ("[ -2, 0, 1 ]", index = degree). The variable is x or X; a
// unary minus is allowed only at the head of the expression. Throws
// ParseError with the offending position.
Poly<Rational> parse_poly(const std::string& text);

// Canonical rendering: terms from highest degree down, " + " / " - "
// separators, unit coefficients omitted on powers of the variable.
// parse_poly(print_poly(p)) == p.
std::string print_poly(const Poly<Rational>& p, const std::string& var = "x");

std::string print_poly(const Poly<Fp>& p, const std::string& var = "x");

}  // namespace qalg
