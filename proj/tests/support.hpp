#pragma once

#include <string>
#include <vector>

#include "belyi/heights.hpp"
#include "belyi/parse.hpp"
#include "belyi/polynomial.hpp"

namespace belyi::testing {

inline QPoly qp(const std::string& s) { return parse_qpoly(s); }
inline Rational qr(const std::string& s) { return parse_rational(s); }

// Random polynomial over Q with small integer coefficients; monic on request.
inline QPoly random_qpoly(SeededRng& rng, int deg, long max_coeff, bool monic) {
  std::vector<Rational> c;
  for (int i = 0; i < deg; ++i) c.emplace_back(rng.range(-max_coeff, max_coeff));
  long top = 0;
  while (top == 0) top = monic ? 1 : rng.range(-max_coeff, max_coeff);
  c.emplace_back(top);
  return QPoly(QQ{}, std::move(c));
}

// Rational with bounded numerator/denominator.
inline Rational random_rational(SeededRng& rng, long bound) {
  Rational q(rng.range(-bound, bound), rng.range(1, bound));
  q.canonicalize();
  return q;
}

}  // namespace belyi::testing
