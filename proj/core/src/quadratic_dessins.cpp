#include "belyi/quadratic_dessins.hpp"

#include <algorithm>
#include <cmath>

#include "belyi/parallel.hpp"

namespace belyi {

std::string to_string(const FamilyParams& p) {
  return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + "," + std::to_string(p.c) + ")";
}

bool family_valid(const FamilyParams& p) {
  return p.a != 0 && p.b != 0 && p.c != 0 && p.b + p.c != 0 && p.a + p.b + p.c > 0;
}

bool family_distinct(const FamilyParams& p) {
  const long v[4] = {p.a, p.b, p.c, p.a + p.b + p.c};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (v[i] == v[j]) return false;
  return true;
}

Integer family_delta(const FamilyParams& p) {
  return -Integer(p.a) * Integer(p.b) * Integer(p.c) * Integer(p.a + p.b + p.c);
}

long family_degree(const FamilyParams& p) {
  long d = 0;
  for (long e : {p.a, p.b, p.c})
    if (e > 0) d += e;
  return d;
}

FactoredMap family_map(const FamilyParams& p, const Element& x, const Element& y) {
  const FieldPtr& k = x.field();
  // 1 - tX = -t (X - 1/t)
  std::vector<MapFactor> factors;
  Element constant = k->one();
  auto add = [&](const Element& t, long e) {
    if (t.is_zero()) return;  // the factor is the constant 1
    constant *= (-t).pow(e);
    factors.push_back({KPoly(k, {-t.inverse(), k->one()}), e});
  };
  add(k->one(), p.a);
  add(x, p.b);
  add(y, p.c);
  return FactoredMap(constant, std::move(factors));
}

QuadraticDessin family_solve(const FamilyParams& p) {
  if (!family_valid(p)) throw DomainError("invalid family parameters " + to_string(p) + ": need abc(b+c) != 0 and a+b+c > 0");
  const Integer delta = family_delta(p);
  const bool square = sgn(delta) >= 0 && is_perfect_square(delta);
  FieldPtr k;
  Integer radicand = 1;
  Rational root_rational = 0, root_coeff = 0;  // sqrt(delta) = root_rational + root_coeff*sqrt(radicand)
  if (square) {
    k = NumberField::rationals();
    root_rational = isqrt(delta);
  } else {
    auto sq = squarefree_part(delta);
    radicand = sq.squarefree;
    k = NumberField::quadratic(radicand);
    root_coeff = sq.cofactor;
  }
  auto sqrt_form = [&](const Rational& u, const Rational& v) {
    // u + v*sqrt(delta)
    if (square) return k->from_rational(u + v * root_rational);
    return k->from_sqrt_form(u, v * root_coeff);
  };
  const Rational a(p.a), b(p.b), c(p.c);
  // x = -(ab - sqrt(delta)) / (b(b+c)), y = -(ac + sqrt(delta)) / (c(b+c))
  const Rational dx = b * (b + c), dy = c * (b + c);
  Element x = sqrt_form(-a * b / dx, 1 / dx);
  Element y = sqrt_form(-a * c / dy, -1 / dy);
  const Element ka = k->from_rational(a), kb = k->from_rational(b), kc = k->from_rational(c);
  if (!(ka + kb * x + kc * y).is_zero() || !(ka + kb * x * x + kc * y * y).is_zero())
    throw DomainError("internal: closed-form solution fails the defining equations for " + to_string(p));
  FactoredMap map = family_map(p, x, y);
  long degree = map.degree();
  return {p, delta, radicand, square, k, std::move(x), std::move(y), std::move(map), degree};
}

bool verify_log_derivative(const FactoredMap& f) {
  KPoly l = f.log_derivative_numerator();
  if (l.is_zero()) return false;
  for (int i = 0; i < l.degree(); ++i)
    if (!l.coeff(static_cast<std::size_t>(i)).is_zero()) return false;
  return true;
}

bool verify_log_derivative(const QuadraticDessin& d) { return verify_log_derivative(d.map); }

QuadraticDessin construct_prime(long p) {
  if (p <= 7) throw DomainError("construct_prime needs p > 7, got " + std::to_string(p));
  if (!is_prime(static_cast<std::int64_t>(p))) throw DomainError(std::to_string(p) + " is not prime");
  if (p % 12 == 1) throw DomainError(std::to_string(p) + " is 1 mod 12; no construction");
  FamilyParams params;
  if (p % 3 == 2) {
    long n = (p - 2) / 3;
    params = {2, n, 2 * n};
  } else {
    long n = (p - 3) / 4;  // p = 7 mod 12, so p = 3 mod 4
    params = {3, n, 3 * n};
  }
  QuadraticDessin d = family_solve(params);
  if (d.radicand != -p) throw DomainError("internal: construction for " + std::to_string(p) + " gives the wrong field");
  return d;
}

namespace {

void check_radicand_arg(long d, const char* what) {
  if (d < 5) throw DomainError(std::string(what) + " needs d >= 5, got " + std::to_string(d));
  if (!is_squarefree(Integer(d))) throw DomainError(std::string(what) + " needs squarefree d, got " + std::to_string(d));
}

}  // namespace

QuadraticDessin construct_imaginary(long d) {
  check_radicand_arg(d, "construct_imaginary");
  QuadraticDessin out = family_solve({2, d, d + 2});
  if (out.radicand != -d) throw DomainError("internal: wrong field for construct_imaginary");
  return out;
}

QuadraticDessin construct_real(long d) {
  check_radicand_arg(d, "construct_real");
  QuadraticDessin out = family_solve({-2, d - 2, d});
  if (out.radicand != d) throw DomainError("internal: wrong field for construct_real");
  return out;
}

DessinVerification verify_dessin(const QuadraticDessin& d) {
  DessinVerification v;
  const FieldPtr& k = d.field;
  const Element ka = k->from_rational(Rational(d.params.a));
  const Element kb = k->from_rational(Rational(d.params.b));
  const Element kc = k->from_rational(Rational(d.params.c));
  v.equations = (ka + kb * d.x + kc * d.y).is_zero() && (ka + kb * d.x * d.x + kc * d.y * d.y).is_zero();
  v.log_derivative = verify_log_derivative(d);
  v.belyi = critical_values_in_01inf(critical_values(d.map));
  const Element one = k->one();
  v.nondegenerate = d.degenerate || !(d.x * d.y * (d.x - d.y) * (d.x - one) * (d.y - one)).is_zero();
  if (d.degenerate || !k->is_quadratic()) {
    v.moduli = ModuliField::kRationals;
    v.moduli_is_field = true;  // coefficients and moduli are both Q
  } else {
    v.moduli = moduli_field_quadratic(d.map).field;
    v.moduli_is_field = v.moduli == ModuliField::kBaseField;
  }
  return v;
}

namespace {

bool is_square_i64(std::int64_t n) {
  if (n < 0) return false;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}

}  // namespace

std::vector<FamilyHit> search_family_params(long d, long max_degree, unsigned jobs) {
  if (d == 0 || d == 1) throw DomainError("search needs a radicand other than 0 and 1");
  if (!is_squarefree(Integer(d))) throw DomainError("search needs a squarefree radicand, got " + std::to_string(d));
  if (max_degree < 1) return {};
  if (max_degree > 5000) throw DomainError("search degree above 5000 is out of range");
  const long m = max_degree;
  // one block per value of a, merged in order afterwards
  std::vector<std::vector<FamilyHit>> blocks(static_cast<std::size_t>(2 * m + 1));
  parallel_for(blocks.size(), jobs, [&](std::size_t idx) {
    const long a = static_cast<long>(idx) - m;
    if (a == 0) return;
    for (long b = -m; b <= m; ++b) {
      if (b == 0) continue;
      for (long c = -m; c <= m; ++c) {
        if (c == 0 || b + c == 0) continue;
        const long s = a + b + c;
        if (s <= 0) continue;
        const FamilyParams p{a, b, c};
        const long deg = family_degree(p);
        if (deg > m) continue;
        const std::int64_t delta = -static_cast<std::int64_t>(a) * b * c * s;
        if (delta % d != 0) continue;
        const std::int64_t q = delta / d;
        if (q <= 0 || !is_square_i64(q)) continue;
        blocks[idx].push_back({p, deg, Integer(static_cast<long>(delta))});
      }
    }
  });
  std::vector<FamilyHit> out;
  for (auto& b : blocks)
    for (auto& h : b) out.push_back(std::move(h));
  std::sort(out.begin(), out.end(), [](const FamilyHit& x, const FamilyHit& y) {
    return std::tie(x.degree, x.params.a, x.params.b, x.params.c) <
           std::tie(y.degree, y.params.a, y.params.b, y.params.c);
  });
  return out;
}

std::vector<QuadraticDessin> search_family(long d, long max_degree, unsigned jobs, std::size_t limit) {
  std::vector<QuadraticDessin> out;
  for (const auto& h : search_family_params(d, max_degree, jobs)) {
    if (out.size() >= limit) break;
    out.push_back(family_solve(h.params));
  }
  return out;
}

}  // namespace belyi
