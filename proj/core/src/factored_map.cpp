#include "belyi/factored_map.hpp"

#include <algorithm>
#include <map>

namespace belyi {

namespace {

bool coeff_less(const KPoly& a, const KPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    const auto& x = a.coeffs()[i].coords();
    const auto& y = b.coeffs()[i].coords();
    if (x != y) return x < y;
  }
  return false;
}

KPoly pow_mod(const KPoly& base, long e, const KPoly& m) {
  KPoly result = KPoly::constant(m.context()->one());
  KPoly b = base % m;
  auto k = static_cast<unsigned long>(e);
  while (k > 0) {
    if (k & 1UL) result = (result * b) % m;
    k >>= 1UL;
    if (k > 0) b = (b * b) % m;
  }
  return result;
}

}  // namespace

KPoint Mobius::operator()(const KPoint& p) const {
  if (p.is_infinity()) {
    if (c.is_zero()) return KPoint::infinity();
    return KPoint::finite(a / c);
  }
  Element den = c * *p.value + d;
  if (den.is_zero()) return KPoint::infinity();
  return KPoint::finite((a * *p.value + b) / den);
}

namespace {

// Sends z1, z2, z3 to 0, infinity, 1.
Mobius to_standard(const KPoint& z1, const KPoint& z2, const KPoint& z3, const FieldPtr& k) {
  const Element zero = k->zero();
  const Element one = k->one();
  if (z1.is_infinity()) return {zero, *z3.value - *z2.value, one, -*z2.value};
  if (z2.is_infinity()) return {one, -*z1.value, zero, *z3.value - *z1.value};
  if (z3.is_infinity()) return {one, -*z1.value, one, -*z2.value};
  Element u = *z3.value - *z2.value;
  Element v = *z3.value - *z1.value;
  return {u, -(*z1.value) * u, v, -(*z2.value) * v};
}

}  // namespace

Mobius Mobius::inverse() const { return {d, -b, -c, a}; }

Mobius Mobius::then(const Mobius& n) const {
  return {n.a * a + n.b * c, n.a * b + n.b * d, n.c * a + n.d * c, n.c * b + n.d * d};
}

Mobius Mobius::from_points(const KPoint& z1, const KPoint& z2, const KPoint& z3, const KPoint& w1,
                           const KPoint& w2, const KPoint& w3) {
  FieldPtr k;
  for (const KPoint* p : {&z1, &z2, &z3, &w1, &w2, &w3})
    if (!p->is_infinity()) k = p->value->field();
  if (!k) throw DomainError("Mobius map from points needs a finite point");
  if (z1 == z2 || z1 == z3 || z2 == z3 || w1 == w2 || w1 == w3 || w2 == w3)
    throw DomainError("Mobius map from points needs distinct points");
  return to_standard(z1, z2, z3, k).then(to_standard(w1, w2, w3, k).inverse());
}

FactoredMap::FactoredMap(Element constant, std::vector<MapFactor> factors) : constant_(std::move(constant)) {
  std::vector<MapFactor> merged;
  for (auto& f : factors) {
    if (f.poly.is_zero()) throw DomainError("zero factor in a factored map");
    if (f.exponent == 0) continue;
    Element lc = f.poly.lc();
    constant_ *= lc.pow(f.exponent);
    if (f.poly.degree() == 0) continue;
    KPoly m = f.poly.monic();
    auto it = std::find_if(merged.begin(), merged.end(), [&](const MapFactor& g) { return g.poly == m; });
    if (it != merged.end()) {
      it->exponent += f.exponent;
    } else {
      merged.push_back({std::move(m), f.exponent});
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(), [](const MapFactor& f) { return f.exponent == 0; }),
               merged.end());
  std::sort(merged.begin(), merged.end(),
            [](const MapFactor& x, const MapFactor& y) { return coeff_less(x.poly, y.poly); });
  for (std::size_t i = 0; i < merged.size(); ++i) {
    const KPoly& p = merged[i].poly;
    if (p.degree() > 1 && gcd(p, p.derivative()).degree() > 0)
      throw DomainError("factor " + to_string(p) + " is not squarefree");
    for (std::size_t j = i + 1; j < merged.size(); ++j) {
      if (p.degree() == 1 && merged[j].poly.degree() == 1) continue;  // distinct monic linears
      if (gcd(p, merged[j].poly).degree() > 0) throw DomainError("factors of a factored map must be coprime");
    }
  }
  factors_ = std::move(merged);
}

FactoredMap FactoredMap::from_rational_map(const KRationalMap& f) {
  if (f.num().is_zero()) throw DomainError("factored form of the zero map");
  std::vector<MapFactor> fs;
  auto add = [&](const KPoly& p, long sign) {
    auto parts = squarefree_decomposition(p);
    for (std::size_t k = 0; k < parts.size(); ++k)
      if (parts[k].degree() > 0) fs.push_back({parts[k], sign * static_cast<long>(k + 1)});
  };
  add(f.num(), 1);
  add(f.den(), -1);
  Element c = f.num().lc() / f.den().lc();
  return FactoredMap(c, std::move(fs));
}

long FactoredMap::numerator_degree() const {
  long s = 0;
  for (const auto& f : factors_)
    if (f.exponent > 0) s += f.exponent * f.poly.degree();
  return s;
}

long FactoredMap::denominator_degree() const {
  long s = 0;
  for (const auto& f : factors_)
    if (f.exponent < 0) s -= f.exponent * f.poly.degree();
  return s;
}

long FactoredMap::ramification_at_infinity() const {
  long ord = order_at_infinity();
  if (ord != 0) return ord > 0 ? ord : -ord;
  if (factors_.empty()) throw DomainError("ramification of a constant map");
  long s = 0;
  for (const auto& f : factors_) s += f.poly.degree();
  // f'/f = L / prod P_i behaves like X^(deg L - s) = X^(-r-1).
  return s - log_derivative_numerator().degree() - 1;
}

KPoint FactoredMap::operator()(const KPoint& p) const {
  if (p.is_infinity()) {
    long ord = order_at_infinity();
    if (ord > 0) return KPoint::infinity();
    if (ord < 0) return KPoint::finite(field()->zero());
    return KPoint::finite(constant_);
  }
  Element v = constant_;
  for (const auto& f : factors_) {
    Element y = f.poly(*p.value);
    if (y.is_zero()) return f.exponent > 0 ? KPoint::finite(field()->zero()) : KPoint::infinity();
    v *= y.pow(f.exponent);
  }
  return KPoint::finite(v);
}

KRationalMap FactoredMap::expand() const {
  KPoly num = KPoly::constant(constant_);
  KPoly den = KPoly::constant(field()->one());
  for (const auto& f : factors_) {
    if (f.exponent > 0) {
      num = num * f.poly.pow(static_cast<unsigned long>(f.exponent));
    } else {
      den = den * f.poly.pow(static_cast<unsigned long>(-f.exponent));
    }
  }
  return KRationalMap::coprime(std::move(num), std::move(den));
}

KPoly FactoredMap::log_derivative_numerator() const {
  const FieldPtr& k = field();
  KPoly sum(k);
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    KPoly term = factors_[i].poly.derivative() * k->from_rational(Rational(factors_[i].exponent));
    for (std::size_t j = 0; j < factors_.size(); ++j)
      if (j != i) term = term * factors_[j].poly;
    sum += term;
  }
  return sum;
}

FactoredMap FactoredMap::conjugate() const {
  std::vector<MapFactor> fs;
  for (const auto& f : factors_) fs.push_back({belyi::conjugate(f.poly), f.exponent});
  return FactoredMap(apply_automorphism(constant_), std::move(fs));
}

FactoredMap FactoredMap::compose(const Mobius& phi) const {
  const FieldPtr& k = field();
  KPoly num_lin(k, {phi.b, phi.a});  // aX + b
  KPoly den_lin(k, {phi.d, phi.c});  // cX + d
  if ((phi.a * phi.d - phi.b * phi.c).is_zero()) throw DomainError("degenerate Mobius map");
  std::vector<MapFactor> fs;
  long shift = 0;
  for (const auto& f : factors_) {
    const long deg = f.poly.degree();
    KPoly h(k);
    for (long j = 0; j <= deg; ++j) {
      h += num_lin.pow(static_cast<unsigned long>(j)) * den_lin.pow(static_cast<unsigned long>(deg - j)) *
           f.poly.coeff(static_cast<std::size_t>(j));
    }
    fs.push_back({std::move(h), f.exponent});
    shift += f.exponent * deg;
  }
  fs.push_back({den_lin, -shift});
  return FactoredMap(constant_, std::move(fs));
}

bool FactoredMap::has_rational_coefficients() const {
  if (!constant_.is_rational()) return false;
  for (const auto& f : factors_)
    if (!belyi::has_rational_coefficients(f.poly)) return false;
  return true;
}

bool operator==(const FactoredMap& x, const FactoredMap& y) {
  if (x.constant_ != y.constant_ || x.factors_.size() != y.factors_.size()) return false;
  for (std::size_t i = 0; i < x.factors_.size(); ++i) {
    if (x.factors_[i].exponent != y.factors_[i].exponent || x.factors_[i].poly != y.factors_[i].poly) return false;
  }
  return true;
}

CriticalValues<Element> critical_values(const FactoredMap& f) {
  const FieldPtr& k = f.field();
  if (f.factors().empty()) throw DomainError("critical values of a constant map");
  const KPoly t = KPoly::variable(k);
  CriticalValues<Element> out{KPoly::constant(k->one()), false};
  bool zero_critical = false;
  for (const auto& fac : f.factors()) {
    if (fac.exponent >= 2) zero_critical = true;
    if (fac.exponent <= -2) out.infinity = true;
  }
  const long ord = f.order_at_infinity();
  if (ord >= 2) out.infinity = true;
  if (ord <= -2) zero_critical = true;
  if (ord == 0 && f.ramification_at_infinity() >= 2) out.finite = out.finite * (t - KPoly::constant(f.constant()));
  if (zero_critical) out.finite = out.finite * t;

  const KPoly l = f.log_derivative_numerator();
  if (l.degree() >= 1) {
    KPoly a = KPoly::constant(f.constant());
    KPoly b = KPoly::constant(k->one());
    for (const auto& fac : f.factors()) {
      if (fac.exponent > 0) {
        a = (a * pow_mod(fac.poly, fac.exponent, l)) % l;
      } else {
        b = (b * pow_mod(fac.poly, -fac.exponent, l)) % l;
      }
    }
    // Roots T = A(y)/B(y) over the roots y of L.
    Polynomial<KPoly> moving = lift_constant(a) - lift_constant(b) * t;
    KPoly r = resultant(lift_constant(l), moving);
    if (r.is_zero()) throw DomainError("critical value resultant vanished identically");
    out.finite = out.finite * r;
  }
  out.finite = out.finite.monic();
  return out;
}

std::vector<RamificationPoint> ramification_points(const FactoredMap& f) {
  const FieldPtr& k = f.field();
  std::vector<RamificationPoint> out;
  // a zero/pole label with exponent e is complete when every factor with that
  // exponent is linear
  auto exponent_complete = [&](long e) {
    return std::all_of(f.factors().begin(), f.factors().end(),
                       [&](const MapFactor& m) { return m.exponent != e || m.poly.degree() == 1; });
  };
  for (const auto& fac : f.factors()) {
    if (fac.poly.degree() != 1) continue;
    KPoint root = KPoint::finite(-fac.poly.coeff(0));
    KPoint value = fac.exponent > 0 ? KPoint::finite(k->zero()) : KPoint::infinity();
    out.push_back({root, value, fac.exponent > 0 ? fac.exponent : -fac.exponent, exponent_complete(fac.exponent)});
  }
  const KPoly l = f.log_derivative_numerator();
  auto parts = squarefree_decomposition(l);
  const long ord = f.order_at_infinity();
  const long r_inf = f.ramification_at_infinity();
  bool inf_complete = false;
  // a pole of order ord pairs with exponent -ord; a zero of order -ord likewise
  if (ord != 0) inf_complete = exponent_complete(-ord);
  if (ord == 0 && r_inf >= 2)
    inf_complete = static_cast<std::size_t>(r_inf - 2) >= parts.size() || parts[r_inf - 2].degree() <= 1;
  out.push_back({KPoint::infinity(), f(KPoint::infinity()), r_inf, inf_complete});
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() != 1) continue;
    KPoint root = KPoint::finite(-parts[i].monic().coeff(0));
    out.push_back({root, f(root), static_cast<long>(i) + 2, true});
  }
  return out;
}

std::string to_string(ModuliField m) {
  switch (m) {
    case ModuliField::kRationals:
      return "Q";
    case ModuliField::kBaseField:
      return "K";
    case ModuliField::kUndetermined:
      return "undetermined";
  }
  return "undetermined";
}

namespace {

bool same_label(const RamificationPoint& x, const RamificationPoint& y) {
  return x.multiplicity == y.multiplicity && x.value == y.value;
}

}  // namespace

ModuliResult moduli_field_quadratic(const FactoredMap& f) {
  if (f.has_rational_coefficients()) return {ModuliField::kRationals, std::nullopt, 0};
  if (!f.field()->is_quadratic())
    throw DomainError("field of moduli check needs a quadratic coefficient field, got " + f.field()->name());
  const FactoredMap g = f.conjugate();
  if (g == f) return {ModuliField::kRationals, std::nullopt, 0};

  auto complete_only = [](std::vector<RamificationPoint> v) {
    v.erase(std::remove_if(v.begin(), v.end(), [](const RamificationPoint& p) { return !p.label_complete; }),
            v.end());
    return v;
  };
  const auto pf = complete_only(ramification_points(f));
  const auto pg = complete_only(ramification_points(g));
  if (pg.size() < 3) return {ModuliField::kUndetermined, std::nullopt, 0};

  // Fix three points of the conjugate with the rarest labels; each admissible
  // assignment of images gives one Mobius candidate.
  auto class_size = [&](const RamificationPoint& p) {
    return std::count_if(pf.begin(), pf.end(), [&](const RamificationPoint& q) { return same_label(p, q); });
  };
  std::vector<std::size_t> order(pg.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return class_size(pg[i]) < class_size(pg[j]); });
  const auto& z1 = pg[order[0]];
  const auto& z2 = pg[order[1]];
  const auto& z3 = pg[order[2]];

  ModuliResult result{ModuliField::kBaseField, std::nullopt, 0};
  for (std::size_t i = 0; i < pf.size(); ++i) {
    if (!same_label(z1, pf[i])) continue;
    for (std::size_t j = 0; j < pf.size(); ++j) {
      if (j == i || !same_label(z2, pf[j])) continue;
      for (std::size_t l = 0; l < pf.size(); ++l) {
        if (l == i || l == j || !same_label(z3, pf[l])) continue;
        ++result.candidates_tried;
        Mobius phi = Mobius::from_points(z1.point, z2.point, z3.point, pf[i].point, pf[j].point, pf[l].point);
        bool labels_ok = std::all_of(pg.begin(), pg.end(), [&](const RamificationPoint& p) {
          KPoint image = phi(p.point);
          return std::any_of(pf.begin(), pf.end(),
                             [&](const RamificationPoint& q) { return q.point == image && same_label(p, q); });
        });
        if (!labels_ok) continue;
        if (f.compose(phi) == g) {
          result.field = ModuliField::kRationals;
          result.isomorphism = phi;
          return result;
        }
      }
    }
  }
  return result;
}

ModuliResult moduli_field_quadratic(const KRationalMap& f) {
  return moduli_field_quadratic(FactoredMap::from_rational_map(f));
}

std::string to_string(const KPoint& p) { return p.is_infinity() ? "inf" : p.value->to_string(); }

std::string to_string(const FactoredMap& f) {
  std::string out = f.constant().to_string();
  if (detail::needs_parens(out)) out = "(" + out + ")";
  for (const auto& fac : f.factors()) {
    out += "*(" + to_string(fac.poly) + ")";
    if (fac.exponent != 1) out += "^" + (fac.exponent < 0 ? "(" + std::to_string(fac.exponent) + ")" : std::to_string(fac.exponent));
  }
  return out;
}

}  // namespace belyi
