#pragma once

// Text input: polynomials such as "x^4 + 2*x^2", "(1/2)*x^3 - x", number-field
// elements written in the generator g such as "(1+g)/2", and polynomials in x
// whose coefficients involve g.

#include <string>
#include <string_view>
#include <vector>

#include "belyi/number_field.hpp"

namespace belyi {

/// Raised for malformed input text; distinct from DomainError so the CLI can
/// report usage problems separately.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A rational polynomial in one variable. Division is allowed only by
/// nonzero constants.
QPoly parse_qpoly(std::string_view text, char var = 'x');

/// An element of `field` written as a polynomial in g.
Element parse_element(std::string_view text, const FieldPtr& field);

/// A polynomial in x with coefficients in `field` (g denotes the generator).
KPoly parse_kpoly(std::string_view text, const FieldPtr& field);

/// Comma-separated integers, e.g. "2,3,6".
std::vector<long> parse_int_list(std::string_view text);

/// Comma-separated rationals or "inf", e.g. "0,1/2,1,inf".
struct ParsedPoint {
  bool infinity = false;
  Rational value;
};
std::vector<ParsedPoint> parse_point_list(std::string_view text);

}  // namespace belyi
