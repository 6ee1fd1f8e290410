#include "belyi/bounds.hpp"

#include <algorithm>
#include <functional>

#include "belyi/parallel.hpp"

namespace belyi {

RamifiedPrimes ramified_primes(const FieldPtr& k) {
  if (k->is_rational()) return {{}, true};
  if (auto disc = k->field_discriminant()) return {prime_divisors(*disc), true};
  // Superset: primes of the discriminant of an integral generator D*g, whose
  // discriminant is D^(n(n-1)) disc(m).
  std::vector<Integer> primes = prime_divisors(k->polynomial_discriminant().get_num());
  for (const auto& c : k->min_poly().coeffs())
    for (const auto& p : prime_divisors(c.get_den())) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return {primes, false};
}

LowerBound lower_bound(const FieldPtr& k) {
  RamifiedPrimes r = ramified_primes(k);
  return {r.primes.empty() ? Integer(1) : r.primes.back(), !r.exact};
}

namespace {

// Candidate accepted only with a full certificate for the field Q(sqrt d).
std::optional<UpperBound> certified(QuadraticDessin d, const Integer& radicand, const std::string& method) {
  if (d.degenerate || d.radicand != radicand) return std::nullopt;
  DessinVerification v = verify_dessin(d);
  if (!v.verified()) return std::nullopt;
  long degree = d.degree;
  return UpperBound{degree, method, std::move(d), v};
}

}  // namespace

UpperBound upper_bound_quadratic(const FieldPtr& k, const BoundsOptions& opt) {
  if (!k->is_quadratic()) throw DomainError("upper bounds are available for quadratic fields only, got " + k->name());
  const Integer r = k->quadratic_data()->radicand;
  UpperBound best{std::nullopt, "unknown", std::nullopt, std::nullopt};
  if (!r.fits_slong_p()) return best;
  const long d = r.get_si();

  // Construction degrees are known in closed form; certifying a large one is
  // expensive, so only build those that can still win.
  struct Candidate {
    long degree;
    std::string method;
    std::function<QuadraticDessin()> build;
  };
  std::vector<Candidate> cands;
  if (d < -7 && is_prime(static_cast<std::int64_t>(-d)) && (-d) % 12 != 1)
    cands.push_back({-d, "prime", [d] { return construct_prime(-d); }});
  if (d <= -5) cands.push_back({2 * (-d) + 4, "imaginary", [d] { return construct_imaginary(-d); }});
  if (d >= 5) cands.push_back({2 * d - 2, "real", [d] { return construct_real(d); }});
  std::stable_sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) { return x.degree < y.degree; });

  // The family search is only used strictly below the constructions.
  auto run_search = [&](long cap) {
    if (cap < 1) return;
    for (const auto& hit : search_family_params(d, cap, opt.jobs)) {
      if (auto c = certified(family_solve(hit.params), r, "search")) {
        best = std::move(*c);
        return;  // hits come sorted by degree
      }
    }
  };
  run_search(cands.empty() ? opt.search_cap : std::min(opt.search_cap, cands.front().degree - 1));
  if (best.value) return best;
  for (const auto& c : cands) {
    if (auto u = certified(c.build(), r, c.method)) return std::move(*u);
    // a construction failing its certificate should not happen; widen the search instead
    run_search(std::min(opt.search_cap, c.degree));
    if (best.value) return best;
  }
  return best;
}

BoundsReport belyi_degree(const FieldPtr& k, const BoundsOptions& opt) {
  BoundsReport rep;
  // canonical presentation
  FieldPtr canon = k;
  if (k->is_quadratic()) canon = NumberField::quadratic(k->quadratic_data()->radicand);
  if (k->is_rational()) canon = NumberField::rationals();
  rep.field = canon->name();
  rep.discriminant = canon->field_discriminant();
  rep.ramified = ramified_primes(canon);
  rep.lower = lower_bound(canon);
  if (canon->is_rational()) {
    rep.upper = {1, "identity", std::nullopt, std::nullopt};
  } else if (canon->is_quadratic()) {
    rep.upper = upper_bound_quadratic(canon, opt);
  } else {
    rep.upper = {std::nullopt, "unknown", std::nullopt, std::nullopt};
  }
  if (rep.upper.value && Integer(*rep.upper.value) < rep.lower.value && !rep.lower.heuristic)
    throw DomainError("internal: verified dessin of degree " + std::to_string(*rep.upper.value) +
                      " below the lower bound " + to_string(rep.lower.value) + " for " + rep.field);
  rep.exact = !rep.lower.heuristic && rep.upper.value && Integer(*rep.upper.value) == rep.lower.value;
  return rep;
}

bool Delta2Report::all_ok() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const Delta2Row& r) { return r.verified && r.exact && r.lower_ineq && r.upper_ineq; });
}

bool Delta2Report::equality_attained() const {
  return std::any_of(rows.begin(), rows.end(), [](const Delta2Row& r) { return r.equality; });
}

Delta2Report delta2_harness(long limit, unsigned jobs) {
  if (limit < 11) throw DomainError("delta2 needs a limit of at least 11, got " + std::to_string(limit));
  Delta2Report rep{limit, {}, {}};
  std::vector<long> primes;
  for (auto p : primes_in_range(8, limit)) {
    if (p % 12 == 1) {
      rep.skipped.push_back(static_cast<long>(p));
    } else {
      primes.push_back(static_cast<long>(p));
    }
  }
  rep.rows.resize(primes.size());
  parallel_for(primes.size(), jobs, [&](std::size_t i) {
    const long p = primes[i];
    QuadraticDessin d = construct_prime(p);
    DessinVerification v = verify_dessin(d);
    FieldPtr k = NumberField::quadratic(Integer(-p));
    LowerBound lb = lower_bound(k);
    Integer disc = *k->field_discriminant();
    Integer ad = abs(disc);
    Delta2Row row;
    row.p = p;
    row.params = d.params;
    row.degree = d.degree;
    row.discriminant = disc;
    row.verified = v.verified() && d.degree == p;
    row.exact = row.verified && !lb.heuristic && lb.value == p;
    row.lower_ineq = 4 * Integer(p) >= ad;
    row.upper_ineq = Integer(p) <= 24 * ad;
    row.equality = 4 * Integer(p) == ad;
    row.ratio = make_rational(Integer(d.degree), ad);
    rep.rows[i] = std::move(row);
  });
  return rep;
}

}  // namespace belyi
