#pragma once

// Seeded property checks of the hat transform: degree drop, the height
// bound, and agreement with a numeric route (roots of f', evaluated by f).

#include <cstdint>
#include <string>
#include <vector>

#include "belyi/bigfloat.hpp"
#include "belyi/polynomial.hpp"

namespace belyi {

struct HatCheckOptions {
  int trials = 100;
  std::uint64_t seed = 1;
  int max_deg = 8;
  long max_coeff = 10;
  mpfr_prec_t precision = 128;
  double tolerance = 1e-6;
  unsigned jobs = 1;
};

struct HatCheckRecord {
  std::string poly;
  std::string hat;
  bool degree_ok;
  bool height_ok;   // H(hat f) <= 2^(n^2) (n+1)^(2n) H(f)^(2n)
  double numeric_error;
  bool numeric_ok;
};

struct HatCheckReport {
  std::vector<HatCheckRecord> records;
  double max_numeric_error = 0.0;
  std::size_t failures() const;
};

/// Sup-norm distance between the coefficients of fh and of prod (X - f(y))
/// over the numeric roots y of f', relative to max(1, |fh|).
double hat_numeric_error(const QPoly& f, const QPoly& fh, mpfr_prec_t prec);

HatCheckReport verify_hat_properties(const HatCheckOptions& opt);

}  // namespace belyi
