#pragma once

// Utilities specific to polynomials over Q.

#include <vector>

#include "belyi/polynomial.hpp"

namespace belyi {

/// Integer coefficients of the primitive part: denominators cleared, content
/// removed, leading coefficient positive. f must be nonzero.
std::vector<Integer> primitive_integer_coeffs(const QPoly& f);
QPoly primitive_part(const QPoly& f);

/// Rational roots of a nonzero polynomial, ascending, without multiplicity.
std::vector<Rational> rational_roots(const QPoly& f);

/// Irreducibility over Q: exact for degree <= 4, for higher degree only the
/// absence of rational roots is tested.
bool probably_irreducible(const QPoly& f);

/// s*a + t*b = gcd, gcd monic.
struct ExtendedGcd {
  QPoly gcd;
  QPoly s;
  QPoly t;
};
ExtendedGcd extended_gcd(const QPoly& a, const QPoly& b);

/// All positive divisors of a nonzero integer, ascending.
std::vector<Integer> positive_divisors(const Integer& n);

}  // namespace belyi
