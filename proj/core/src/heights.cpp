#include "belyi/heights.hpp"

#include <algorithm>
#include <cmath>

#include "belyi/hat.hpp"
#include "belyi/parallel.hpp"
#include "belyi/roots.hpp"

namespace belyi {

namespace {

Height exact_height(const Integer& v) {
  Height h;
  h.value = v.get_d();
  h.exact = true;
  h.error_bound = 0.0;
  h.exact_value = v;
  const auto prec = static_cast<mpfr_prec_t>(std::max<std::size_t>(64, bit_length(v) + 2));
  h.lo = BigFloat(v, prec, MPFR_RNDD);
  h.hi = BigFloat(v, prec, MPFR_RNDU);
  return h;
}

BigFloat sub_round(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
  BigFloat r(std::max(a.precision(), b.precision()));
  mpfr_sub(r.get(), a.get(), b.get(), rnd);
  return r;
}

std::string decimal(const BigFloat& x) { return x.to_string(12); }

}  // namespace

Integer height_rational_value(const Rational& x) {
  Integer p = abs(x.get_num());
  return p > x.get_den() ? p : Integer(x.get_den());
}

Height height_rational(const Rational& x) { return exact_height(height_rational_value(x)); }

Integer height_poly_q_value(const QPoly& f) {
  if (f.is_zero()) throw DomainError("height of the zero polynomial");
  Integer best = 0;
  for (const auto& c : primitive_integer_coeffs(f)) {
    Integer a = abs(c);
    if (a > best) best = a;
  }
  return best;
}

Height height_poly_q(const QPoly& f) { return exact_height(height_poly_q_value(f)); }

Integer height_poly_q_affine_value(const QPoly& f) {
  std::vector<Rational> c = f.coeffs();
  c.emplace_back(1);
  return height_poly_q_value(QPoly(QQ{}, std::move(c)));
}

QPoly minimal_polynomial(const Element& x) {
  const auto& k = x.field();
  const auto n = static_cast<std::size_t>(k->degree());
  Matrix<Rational> m(n, std::vector<Rational>(n));
  Element col = x;
  const Element g = k->generator();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col.coords()[i];
    col *= g;
  }
  QPoly chi = characteristic_polynomial(std::move(m), QQ{});
  // chi is a power of the minimal polynomial.
  return squarefree_part(chi);
}

MahlerMeasure mahler_measure(const QPoly& f, mpfr_prec_t prec) {
  if (f.is_zero()) throw DomainError("Mahler measure of the zero polynomial");
  auto ints = primitive_integer_coeffs(f);
  Integer lc = abs(ints.back());
  MahlerMeasure out{BigFloat(lc, prec, MPFR_RNDD), BigFloat(lc, prec, MPFR_RNDU)};
  if (f.degree() < 1) return out;
  const BigFloat one(1L, prec);
  for (const auto& disc : roots_with_multiplicity(f, prec)) {
    BigFloat r_lo = hypot(disc.center.re, disc.center.im, MPFR_RNDD);
    BigFloat r_hi = hypot(disc.center.re, disc.center.im, MPFR_RNDU);
    r_lo = sub_round(r_lo, disc.radius, MPFR_RNDD);
    r_hi = add_round(r_hi, disc.radius, MPFR_RNDU);
    out.lo = mul_round(out.lo, max(one, r_lo), MPFR_RNDD);
    out.hi = mul_round(out.hi, max(one, r_hi), MPFR_RNDU);
  }
  return out;
}

Height height_algebraic(const Element& x, mpfr_prec_t prec) {
  if (x.is_zero()) return exact_height(Integer(1));
  if (x.is_rational()) return height_rational(x.rational_value());
  QPoly p = minimal_polynomial(x);
  const auto d = static_cast<unsigned long>(p.degree());
  MahlerMeasure m = mahler_measure(p, prec);
  Height h;
  h.exact = false;
  h.lo = root(m.lo, d, MPFR_RNDD);
  h.hi = root(m.hi, d, MPFR_RNDU);
  BigFloat width = sub_round(h.hi, h.lo, MPFR_RNDU);
  if (width > mul_round(h.lo, pow2(-20, prec), MPFR_RNDD))
    throw PrecisionInsufficient("height enclosure too wide at " + std::to_string(prec) + " bits");
  h.value = ((h.lo + h.hi) / BigFloat(2L, prec)).to_double();
  h.error_bound = mpfr_get_d(width.get(), MPFR_RNDU);
  return h;
}

Height height_algebraic_auto(const Element& x, mpfr_prec_t prec, mpfr_prec_t max_prec) {
  return with_precision_retry([&](mpfr_prec_t p) { return height_algebraic(x, p); }, prec, max_prec);
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kIndeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

std::size_t HeightReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const auto& r) { return r.status == CheckStatus::kFail; }));
}

std::size_t HeightReport::indeterminate() const {
  return static_cast<std::size_t>(std::count_if(
      records.begin(), records.end(), [](const auto& r) { return r.status == CheckStatus::kIndeterminate; }));
}

namespace {

Rational random_rational(SeededRng& rng, long max_coeff) {
  long p = rng.range(-max_coeff, max_coeff);
  long q = rng.range(1, max_coeff);
  return make_rational(p, q);
}

QPoly random_qpoly(SeededRng& rng, int deg, long max_coeff) {
  std::vector<Rational> c;
  for (int i = 0; i <= deg; ++i) c.push_back(random_rational(rng, max_coeff));
  while (sgn(c.back()) == 0) c.back() = random_rational(rng, max_coeff);
  return QPoly(QQ{}, std::move(c));
}

InequalityRecord exact_record(std::string lemma, std::string instance, const Integer& lhs, const Integer& rhs) {
  return {std::move(lemma), std::move(instance), to_string(lhs), to_string(rhs), to_string(Integer(rhs - lhs)),
          lhs <= rhs ? CheckStatus::kPass : CheckStatus::kFail};
}

double ratio_of(const Integer& a, const Integer& b) {
  // log-domain to stay finite for large heights
  long ea = 0, eb = 0;
  double ma = mpz_get_d_2exp(&ea, a.get_mpz_t());
  double mb = mpz_get_d_2exp(&eb, b.get_mpz_t());
  return ma / mb * std::ldexp(1.0, static_cast<int>(std::clamp<long>(ea - eb, -1000, 1000)));
}

struct FactoredInstance {
  std::vector<QPoly> factors;  // irreducible over Q, primitive
  QPoly product;
};

FactoredInstance random_factored(SeededRng& rng, int max_deg, long max_coeff) {
  FactoredInstance inst{{}, QPoly(QQ{}, {Rational(1)})};
  int budget = std::max(1, max_deg);
  int count = static_cast<int>(rng.range(1, 4));
  for (int i = 0; i < count && budget > 0; ++i) {
    int deg = (budget >= 2 && rng.range(0, 1) == 1) ? 2 : 1;
    std::vector<Rational> c;
    for (int k = 0; k <= deg; ++k) c.emplace_back(rng.range(-max_coeff, max_coeff));
    while (sgn(c.back()) == 0) c.back() = Rational(rng.range(1, max_coeff));
    QPoly q(QQ{}, std::move(c));
    if (q.degree() < 1) continue;
    budget -= deg;
    inst.product = inst.product * q;
    auto roots = q.degree() == 2 ? rational_roots(q) : std::vector<Rational>{};
    if (q.degree() == 2 && !roots.empty()) {
      // split into its rational linear factors
      QPoly rest = q;
      for (const auto& r : roots) {
        QPoly lin(QQ{}, {-r, Rational(1)});
        while (lin.divides(rest)) {
          inst.factors.push_back(primitive_part(lin));
          rest = rest.exact_div(lin);
        }
      }
      if (rest.degree() > 0) inst.factors.push_back(primitive_part(rest));
    } else {
      inst.factors.push_back(primitive_part(q));
    }
  }
  if (inst.factors.empty()) {
    inst.factors.push_back(QPoly(QQ{}, {Rational(1), Rational(1)}));
    inst.product = inst.factors.back();
  }
  // random rational scalar: heights are projective
  inst.product = inst.product * Rational(rng.range(1, max_coeff), rng.range(1, max_coeff));
  return inst;
}

// Mahler measure of a primitive factor when it is an integer: linear factors,
// and quadratics with complex roots (both roots share the modulus sqrt(c/a)).
std::optional<Integer> exact_mahler(const QPoly& q) {
  auto c = primitive_integer_coeffs(q);
  if (q.degree() == 1) return std::max(Integer(abs(c[0])), Integer(abs(c[1])));
  if (q.degree() == 2 && c[1] * c[1] - 4 * c[0] * c[2] < 0) return std::max(Integer(abs(c[0])), Integer(abs(c[2])));
  return std::nullopt;
}

// Certified product of the root heights of the factors without an exact
// Mahler measure, with precision retries.
MahlerMeasure numeric_height_product(const std::vector<QPoly>& factors, mpfr_prec_t prec, mpfr_prec_t max_prec) {
  return with_precision_retry(
      [&](mpfr_prec_t p) {
        MahlerMeasure total{BigFloat(1L, p), BigFloat(1L, p)};
        for (const auto& q : factors) {
          MahlerMeasure m = mahler_measure(q, p);
          total.lo = mul_round(total.lo, m.lo, MPFR_RNDD);
          total.hi = mul_round(total.hi, m.hi, MPFR_RNDU);
        }
        return total;
      },
      prec, max_prec);
}

}  // namespace

HeightReport verify_height_inequalities(const HeightCheckOptions& opt) {
  if (opt.trials < 1) throw DomainError("trials must be positive");
  SeededRng rng(opt.seed);
  struct Instance {
    QPoly f;
    Rational x;
  };
  std::vector<Instance> plain;
  for (int i = 0; i < opt.trials; ++i) {
    int deg = static_cast<int>(rng.range(1, std::max(1, opt.max_deg)));
    QPoly f = random_qpoly(rng, deg, opt.max_coeff);
    plain.push_back({f, random_rational(rng, opt.max_coeff)});
  }
  std::vector<FactoredInstance> factored;
  for (int i = 0; i < opt.factored_trials; ++i) factored.push_back(random_factored(rng, opt.max_deg, opt.max_coeff));

  // Per-instance record blocks, filled in parallel and concatenated in order.
  std::vector<std::vector<InequalityRecord>> blocks(plain.size() + factored.size());
  parallel_for(plain.size(), opt.jobs, [&](std::size_t i) {
    const QPoly& f = plain[i].f;
    const Rational& x = plain[i].x;
    const int n = f.degree();
    const std::string inst = "f=" + to_string(f);
    const Integer hf = height_poly_q_value(f);
    auto& out = blocks[i];
    QPoly df = f.derivative();
    out.push_back(exact_record("lemma4", inst, height_poly_q_value(df), Integer(n) * hf));
    Integer hx = height_rational_value(x);
    out.push_back(exact_record("eq1", inst + "; x=" + to_string(x), height_rational_value(f(x)),
                               Integer(n + 1) * height_poly_q_affine_value(f) * ipow(hx, static_cast<unsigned long>(n))));
    if (n >= 2) {
      QPoly m = f.monic();
      QPoly fh = hat(m);
      const std::string minst = "f=" + to_string(m);
      out.push_back(exact_record("lemma5_degree", minst, Integer(fh.degree()), Integer(n - 1)));
      out.back().status = fh.degree() == n - 1 ? CheckStatus::kPass : CheckStatus::kFail;
      const auto un = static_cast<unsigned long>(n);
      Integer rhs = ipow(Integer(2), un * un) * ipow(Integer(n + 1), 2 * un) * ipow(height_poly_q_value(m), 2 * un);
      out.push_back(exact_record("lemma5", minst, height_poly_q_value(fh), rhs));
    }
  });
  parallel_for(factored.size(), opt.jobs, [&](std::size_t i) {
    const auto& inst = factored[i];
    const int n = inst.product.degree();
    const Integer hf = height_poly_q_value(inst.product);
    auto& out = blocks[plain.size() + i];
    std::string name = "f=" + to_string(inst.product);
    CheckStatus lower_status = CheckStatus::kIndeterminate;
    CheckStatus upper_status = CheckStatus::kIndeterminate;
    std::string lower_lhs = "?", upper_rhs = "?", lower_margin = "?", upper_margin = "?";
    Integer exact_part = 1;
    std::vector<QPoly> numeric;
    for (const auto& q : inst.factors) {
      if (auto m = exact_mahler(q)) {
        exact_part *= *m;
      } else {
        numeric.push_back(q);
      }
    }
    if (numeric.empty()) {
      // prod H(x_i) is the integer exact_part
      const Rational lhs(exact_part, ipow(Integer(2), static_cast<unsigned long>(n)));
      const Integer rhs = ipow(Integer(2), static_cast<unsigned long>(n - 1)) * exact_part;
      lower_status = lhs <= Rational(hf) ? CheckStatus::kPass : CheckStatus::kFail;
      upper_status = hf <= rhs ? CheckStatus::kPass : CheckStatus::kFail;
      lower_lhs = to_string(lhs);
      upper_rhs = to_string(rhs);
      lower_margin = to_string(Rational(hf) - lhs);
      upper_margin = to_string(Integer(rhs - hf));
    } else {
      try {
        MahlerMeasure p = numeric_height_product(numeric, opt.precision, opt.max_precision);
        const mpfr_prec_t prec = p.lo.precision();
        BigFloat ex_lo(exact_part, prec + 64, MPFR_RNDD), ex_hi(exact_part, prec + 64, MPFR_RNDU);
        p.lo = mul_round(p.lo, ex_lo, MPFR_RNDD);
        p.hi = mul_round(p.hi, ex_hi, MPFR_RNDU);
        BigFloat h_lo(hf, prec + 64, MPFR_RNDD);
        BigFloat h_hi(hf, prec + 64, MPFR_RNDU);
        // 2^-n prod H(x_i) <= H(f): certified when the upper end is below H(f).
        BigFloat lhs_hi = mul_round(p.hi, pow2(-n, prec), MPFR_RNDU);
        BigFloat lhs_lo = mul_round(p.lo, pow2(-n, prec), MPFR_RNDD);
        if (lhs_hi <= h_lo) {
          lower_status = CheckStatus::kPass;
        } else if (lhs_lo > h_hi) {
          lower_status = CheckStatus::kFail;
        }
        // H(f) <= 2^(n-1) prod H(x_i)
        BigFloat rhs_lo = mul_round(p.lo, pow2(n - 1, prec), MPFR_RNDD);
        BigFloat rhs_hi = mul_round(p.hi, pow2(n - 1, prec), MPFR_RNDU);
        if (h_hi <= rhs_lo) {
          upper_status = CheckStatus::kPass;
        } else if (h_lo > rhs_hi) {
          upper_status = CheckStatus::kFail;
        }
        lower_lhs = decimal(lhs_hi);
        upper_rhs = decimal(rhs_lo);
        lower_margin = decimal(sub_round(h_lo, lhs_hi, MPFR_RNDD));
        upper_margin = decimal(sub_round(rhs_lo, h_hi, MPFR_RNDD));
      } catch (const PrecisionInsufficient&) {
        // stays indeterminate
      }
    }
    out.push_back({"eq2_lower", name, lower_lhs, to_string(hf), lower_margin, lower_status});
    out.push_back({"eq2_upper", name, to_string(hf), upper_rhs, upper_margin, upper_status});
  });

  HeightReport report;
  for (auto& b : blocks)
    for (auto& r : b) report.records.push_back(std::move(r));
  // ratios, computed after the merge so the order is fixed
  std::vector<std::string> lemmas{"lemma4", "eq1", "lemma5", "eq2_lower", "eq2_upper"};
  auto as_double = [](const std::string& v) {
    // exact records carry integers or fractions, numeric ones decimals
    if (v.find_first_of(".eE") == std::string::npos) return parse_rational(v).get_d();
    return std::stod(v);
  };
  for (const auto& name : lemmas) {
    double best = 0.0;
    for (const auto& r : report.records) {
      if (r.lemma != name || r.lhs == "?" || r.rhs == "?") continue;
      if (r.lhs.find_first_of(".eE/") == std::string::npos && r.rhs.find_first_of(".eE/") == std::string::npos) {
        Integer a(r.lhs), b(r.rhs);
        if (b != 0) best = std::max(best, ratio_of(a, b));
        continue;
      }
      const double lhs = as_double(r.lhs), rhs = as_double(r.rhs);
      if (rhs > 0) best = std::max(best, lhs / rhs);
    }
    report.max_ratio.emplace_back(name, best);
  }
  return report;
}

RoyThunderReport roy_thunder_check(const FieldPtr& k, mpfr_prec_t prec) {
  if (!k->is_quadratic()) throw DomainError("the integral-basis check needs a quadratic field, got " + k->name());
  const Integer d = k->quadratic_data()->radicand;
  const Integer disc = quadratic_discriminant(d);
  Integer r = d % 4;
  if (r < 0) r += 4;
  Element omega = r == 1 ? k->from_sqrt_form(Rational(1, 2), Rational(1, 2)) : k->from_sqrt_form(Rational(0), Rational(1));
  RoyThunderReport rep{k->name(), disc, omega.to_string(), height_algebraic_auto(omega, prec), "", CheckStatus::kIndeterminate};
  BigFloat bound_lo = mul_round(sqrt(BigFloat(Integer(abs(disc)), prec, MPFR_RNDD), MPFR_RNDD), pow2(7, prec), MPFR_RNDD);
  BigFloat bound_hi = mul_round(sqrt(BigFloat(Integer(abs(disc)), prec, MPFR_RNDU), MPFR_RNDU), pow2(7, prec), MPFR_RNDU);
  rep.bound = decimal(bound_lo);
  if (rep.omega_height.hi <= bound_lo) {
    rep.status = CheckStatus::kPass;
  } else if (rep.omega_height.lo > bound_hi) {
    rep.status = CheckStatus::kFail;
  }
  return rep;
}

}  // namespace belyi
