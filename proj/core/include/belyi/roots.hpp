#pragma once

// Complex root isolation for rational polynomials (Aberth iteration in MPFR)
// with certified inclusion discs.

#include <stdexcept>
#include <vector>

#include "belyi/bigfloat.hpp"
#include "belyi/polynomial.hpp"

namespace belyi {

/// The requested numeric certificate could not be produced at the given
/// precision; retry with more bits.
class PrecisionInsufficient : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RootDisc {
  Complex center;
  BigFloat radius;  // rounded up; the disc contains exactly one root
};

/// Isolates the roots of a squarefree rational polynomial of degree >= 1.
/// Throws PrecisionInsufficient if the inclusion discs cannot be separated.
std::vector<RootDisc> isolate_roots(const QPoly& f, mpfr_prec_t prec);

/// Roots with multiplicity of an arbitrary nonzero rational polynomial,
/// via its squarefree decomposition.
std::vector<RootDisc> roots_with_multiplicity(const QPoly& f, mpfr_prec_t prec);

/// Runs fn(prec) doubling prec on PrecisionInsufficient, up to max_prec.
template <class F>
auto with_precision_retry(F&& fn, mpfr_prec_t prec, mpfr_prec_t max_prec) {
  for (;;) {
    try {
      return fn(prec);
    } catch (const PrecisionInsufficient&) {
      if (prec >= max_prec) throw;
      prec = std::min<mpfr_prec_t>(2 * prec, max_prec);
    }
  }
}

}  // namespace belyi
