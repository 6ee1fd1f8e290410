#include "belyi/roots.hpp"

#include <algorithm>

namespace belyi {

namespace {

Complex horner(const std::vector<BigFloat>& a, const Complex& z, mpfr_prec_t prec) {
  Complex acc(prec);
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    acc = acc * z;
    acc.re += *it;
  }
  return acc;
}

// Upper bound for sum |a_k| |z|^k, which also bounds the Horner rounding
// error up to a factor of a few ulps per step.
BigFloat abs_horner(const std::vector<BigFloat>& a, const BigFloat& r, mpfr_prec_t prec) {
  BigFloat acc(prec);
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    acc = add_round(mul_round(acc, r, MPFR_RNDU), abs(*it), MPFR_RNDU);
  }
  return acc;
}

}  // namespace

std::vector<RootDisc> isolate_roots(const QPoly& f, mpfr_prec_t prec) {
  const int n = f.degree();
  if (n < 1) throw DomainError("root isolation needs a nonconstant polynomial");
  if (gcd(f, f.derivative()).degree() > 0) throw DomainError("root isolation needs a squarefree polynomial");
  std::vector<RootDisc> out;
  if (n == 1) {
    Rational r = -f.coeff(0) / f.coeff(1);
    BigFloat c(r, prec);
    BigFloat rad = mul_round(abs(c), pow2(2 - static_cast<long>(prec), prec), MPFR_RNDU);
    out.push_back({Complex(c, BigFloat(prec)), rad});
    return out;
  }

  std::vector<BigFloat> a;
  for (const auto& c : f.coeffs()) a.emplace_back(c, prec);
  std::vector<BigFloat> da;
  for (std::size_t k = 1; k < a.size(); ++k) da.push_back(a[k] * BigFloat(static_cast<long>(k), prec));

  BigFloat bound(1L, prec);
  for (int k = 0; k < n; ++k) bound = max(bound, abs(a[static_cast<std::size_t>(k)] / a.back()));
  bound = bound + BigFloat(1L, prec);

  const auto un = static_cast<std::size_t>(n);
  std::vector<Complex> z;
  BigFloat two_pi = pi(prec) * BigFloat(2L, prec);
  for (std::size_t k = 0; k < un; ++k) {
    BigFloat theta = two_pi * BigFloat(static_cast<long>(k), prec) / BigFloat(n, prec) +
                     BigFloat(Rational(7, 10), prec);
    z.emplace_back(bound * cos(theta), bound * sin(theta));
  }

  const BigFloat tol = pow2(8 - static_cast<long>(prec), prec);
  const int max_iter = 200 + 20 * n + static_cast<int>(prec);
  std::vector<bool> done(un, false);
  for (int iter = 0; iter < max_iter; ++iter) {
    bool all_done = true;
    for (std::size_t k = 0; k < un; ++k) {
      if (done[k]) continue;
      Complex p = horner(a, z[k], prec);
      Complex dp = horner(da, z[k], prec);
      if (p.re.is_zero() && p.im.is_zero()) {
        done[k] = true;
        continue;
      }
      Complex ratio = p / dp;
      Complex sum(prec);
      for (std::size_t j = 0; j < un; ++j) {
        if (j == k) continue;
        sum = sum + Complex(BigFloat(1L, prec), BigFloat(prec)) / (z[k] - z[j]);
      }
      Complex w = ratio / (Complex(BigFloat(1L, prec), BigFloat(prec)) - ratio * sum);
      z[k] = z[k] - w;
      if (w.abs() <= tol * max(BigFloat(1L, prec), z[k].abs())) {
        done[k] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
  }

  // Inclusion discs D(z_i, n |W_i|), W_i the Weierstrass correction.
  const BigFloat eps = pow2(6 - static_cast<long>(prec), prec);
  const BigFloat slack = BigFloat(1L, prec) + eps;
  BigFloat lc_abs = abs(a.back());
  std::vector<BigFloat> radius;
  for (std::size_t i = 0; i < un; ++i) {
    Complex p = horner(a, z[i], prec);
    BigFloat err = mul_round(abs_horner(a, z[i].abs(), prec),
                             mul_round(eps, BigFloat(n + 1, prec), MPFR_RNDU), MPFR_RNDU);
    BigFloat num = add_round(p.abs(), err, MPFR_RNDU);
    BigFloat den = lc_abs;
    for (std::size_t j = 0; j < un; ++j) {
      if (j == i) continue;
      den = mul_round(den, (z[i] - z[j]).abs(), MPFR_RNDD);
    }
    if (den.is_zero()) throw PrecisionInsufficient("coincident root approximations");
    BigFloat r = mul_round(num / den, BigFloat(n, prec), MPFR_RNDU);
    radius.push_back(mul_round(r, slack, MPFR_RNDU));
  }
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t j = i + 1; j < un; ++j) {
      BigFloat dist = mul_round((z[i] - z[j]).abs(), BigFloat(1L, prec) - eps, MPFR_RNDD);
      if (dist <= add_round(radius[i], radius[j], MPFR_RNDU))
        throw PrecisionInsufficient("root inclusion discs overlap at " + std::to_string(prec) + " bits");
    }
  }
  for (std::size_t i = 0; i < un; ++i) out.push_back({z[i], radius[i]});
  return out;
}

std::vector<RootDisc> roots_with_multiplicity(const QPoly& f, mpfr_prec_t prec) {
  if (f.is_zero()) throw DomainError("roots of the zero polynomial");
  std::vector<RootDisc> out;
  auto parts = squarefree_decomposition(f);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k].degree() < 1) continue;
    for (auto& d : isolate_roots(parts[k], prec)) {
      for (std::size_t m = 0; m <= k; ++m) out.push_back(d);
    }
  }
  return out;
}

}  // namespace belyi
