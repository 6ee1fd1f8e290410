#include "belyi/qpoly.hpp"

#include <algorithm>
#include <set>

namespace belyi {

std::vector<Integer> primitive_integer_coeffs(const QPoly& f) {
  if (f.is_zero()) throw DomainError("primitive part of the zero polynomial");
  Integer den = 1;
  for (const auto& c : f.coeffs()) den = lcm(den, c.get_den());
  std::vector<Integer> v;
  v.reserve(f.coeffs().size());
  Integer content = 0;
  for (const auto& c : f.coeffs()) {
    Integer z = c.get_num() * (den / c.get_den());
    content = gcd(content, z);
    v.push_back(z);
  }
  if (f.lc() < 0) content = -content;
  for (auto& z : v) z /= content;
  return v;
}

QPoly primitive_part(const QPoly& f) {
  std::vector<Rational> c;
  for (auto& z : primitive_integer_coeffs(f)) c.emplace_back(z);
  return QPoly(QQ{}, std::move(c));
}

std::vector<Integer> positive_divisors(const Integer& n) {
  std::vector<Integer> divs{1};
  for (auto& [p, e] : factor_integer(n)) {
    const std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::vector<Rational> rational_roots(const QPoly& f) {
  if (f.is_zero()) throw DomainError("roots of the zero polynomial");
  std::set<Rational> roots;
  auto coeffs = primitive_integer_coeffs(f);
  std::size_t low = 0;
  while (coeffs[low] == 0) ++low;
  if (low > 0) roots.insert(Rational(0));
  std::vector<Integer> c(coeffs.begin() + static_cast<std::ptrdiff_t>(low), coeffs.end());
  if (c.size() > 1) {
    QPoly g = primitive_part(QPoly(QQ{}, [&] {
      std::vector<Rational> v;
      for (auto& z : c) v.emplace_back(z);
      return v;
    }()));
    auto nums = positive_divisors(c.front());
    auto dens = positive_divisors(c.back());
    for (const auto& p : nums) {
      for (const auto& q : dens) {
        if (gcd(p, q) != 1) continue;
        for (int s : {1, -1}) {
          Rational r = make_rational(s * p, q);
          if (g(r) == 0) roots.insert(r);
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

namespace {

// Monic integer quartic x^4 + a3 x^3 + a2 x^2 + a1 x + a0 without rational
// roots: is it a product of two monic integer quadratics?
bool splits_into_quadratics(const std::vector<Integer>& c) {
  const Integer& a0 = c[0];
  const Integer& a1 = c[1];
  const Integer& a2 = c[2];
  const Integer& a3 = c[3];
  for (const auto& pd : positive_divisors(a0)) {
    for (int s : {1, -1}) {
      Integer b = s * pd;
      Integer d = a0 / b;
      // (x^2 + a x + b)(x^2 + e x + d): a + e = a3, ae + b + d = a2, ad + be = a1.
      if (d != b) {
        Integer num = a1 - b * a3;
        Integer den = d - b;
        if (num % den != 0) continue;
        Integer a = num / den;
        Integer e = a3 - a;
        if (a * e + b + d == a2) return true;
      } else {
        if (a1 != b * a3) continue;
        // a and e are the roots of t^2 - a3 t + (a2 - 2b).
        Integer disc = a3 * a3 - 4 * (a2 - 2 * b);
        if (disc >= 0 && is_perfect_square(disc) && (a3 + isqrt(disc)) % 2 == 0) return true;
      }
    }
  }
  return false;
}

}  // namespace

bool probably_irreducible(const QPoly& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  if (!rational_roots(f).empty()) return false;
  if (f.degree() != 4) return true;
  // Scale to a monic integer quartic: L^4 f(x/L) with L clearing denominators.
  QPoly m = f.monic();
  Integer l = 1;
  for (const auto& c : m.coeffs()) l = lcm(l, c.get_den());
  std::vector<Integer> c(5);
  Integer lk = 1;
  for (int k = 4; k >= 0; --k) {
    Rational v = m.coeff(static_cast<std::size_t>(k)) * Rational(lk);
    c[static_cast<std::size_t>(k)] = v.get_num();
    lk *= l;
  }
  return !splits_into_quadratics(c);
}

ExtendedGcd extended_gcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  QPoly s0(QQ{}, {Rational(1)}), s1(QQ{});
  QPoly t0(QQ{}), t1(QQ{}, {Rational(1)});
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly s2 = s0 - q * s1;
    QPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = Rational(1) / r0.lc();
  return {r0 * inv, s0 * inv, t0 * inv};
}

}  // namespace belyi
