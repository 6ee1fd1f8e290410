#include "belyi/pipeline.hpp"

#include <algorithm>

#include "belyi/hat.hpp"
#include "belyi/heights.hpp"
#include "belyi/poly_algebra.hpp"

namespace belyi {

namespace {

// ---- arithmetic modulo word-size primes, used as cheap filters ----

using u64 = std::uint64_t;
using u128 = unsigned __int128;

const std::vector<u64>& filter_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<u64> out;
    for (std::int64_t c = (std::int64_t(1) << 61) - 1; out.size() < 4; c -= 2)
      if (is_prime(c)) out.push_back(static_cast<u64>(c));
    return out;
  }();
  return primes;
}

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

std::optional<u64> reduce(const Rational& x, u64 p) {
  u64 den = mpz_fdiv_ui(x.get_den_mpz_t(), p);
  if (den == 0) return std::nullopt;
  u64 num = mpz_fdiv_ui(x.get_num_mpz_t(), p);
  return mulmod(num, invmod(den, p), p);
}

using ModPoly = std::vector<u64>;

void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Reduction that keeps the degree, or nothing.
std::optional<ModPoly> reduce(const QPoly& f, u64 p) {
  ModPoly out;
  for (const auto& c : f.coeffs()) {
    auto r = reduce(c, p);
    if (!r) return std::nullopt;
    out.push_back(*r);
  }
  trim(out);
  if (static_cast<int>(out.size()) - 1 != f.degree()) return std::nullopt;
  return out;
}

ModPoly mod_rem(ModPoly a, const ModPoly& b, u64 p) {
  const u64 inv = invmod(b.back(), p);
  while (a.size() >= b.size()) {
    u64 q = mulmod(a.back(), inv, p);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p - mulmod(q, b[i], p)) % p;
    trim(a);
  }
  return a;
}

std::size_t mod_gcd_degree(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    ModPoly r = mod_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// Number of distinct complex roots. A squarefree reduction modulo a prime not
// dividing the leading coefficient proves squarefreeness over Q.
std::size_t distinct_root_count(const QPoly& f) {
  for (u64 p : filter_primes()) {
    auto fm = reduce(f, p);
    if (!fm) continue;
    ModPoly d;
    for (std::size_t i = 1; i < fm->size(); ++i) d.push_back(mulmod((*fm)[i], i % p, p));
    trim(d);
    if (d.empty()) continue;
    if (mod_gcd_degree(*fm, d, p) == 0) return static_cast<std::size_t>(f.degree());
  }
  return static_cast<std::size_t>(squarefree_part(f).degree());
}

bool is_root(const QPoly& f, const Rational& x) {
  for (u64 p : filter_primes()) {
    auto xm = reduce(x, p);
    auto fm = reduce(f, p);
    if (!xm || !fm) continue;
    u64 acc = 0;
    for (std::size_t i = fm->size(); i-- > 0;) acc = (mulmod(acc, *xm, p) + (*fm)[i]) % p;
    if (acc != 0) return false;
    break;
  }
  return sgn(f(x)) == 0;
}

bool is_root(const KPoly& f, const Rational& x) { return f(f.context()->from_rational(x)).is_zero(); }

// c r^m (1-r)^n with c = (m+n)^(m+n) / (m^m n^n), exactly.
Rational belyi_value(const Integer& m, const Integer& n, const Rational& r, std::size_t budget_bits) {
  if (sgn(r) == 0) return Rational(0);
  if (r == 1) return Rational(0);
  const Integer q = m + n;
  if (r.get_num() * q == m * r.get_den()) return Rational(1);  // the unique interior critical point
  if (!q.fits_ulong_p())
    throw ReductionBudgetExceeded("reduction stage degree has " + std::to_string(bit_length(q)) + " bits");
  const Integer u = r.get_num();
  const Integer v = r.get_den();
  const Integer w = v - u;
  // size estimate of the result before computing it
  const double est = q.get_d() * static_cast<double>(bit_length(abs(u)) + bit_length(v) + bit_length(abs(w)) +
                                                     2 * bit_length(q));
  if (est > static_cast<double>(budget_bits))
    throw ReductionBudgetExceeded("reduction stage of degree " + to_string(q) + " needs about " +
                                  std::to_string(static_cast<unsigned long long>(est)) + " bits, budget " +
                                  std::to_string(budget_bits));
  const unsigned long mu = m.get_ui(), nu = n.get_ui(), qu = q.get_ui();
  Integer num = ipow(q, qu) * ipow(u, mu) * ipow(w, nu);
  Integer den = ipow(m, mu) * ipow(n, nu) * ipow(v, qu);
  return make_rational(num, den);
}

std::vector<Rational> sorted_unique(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void set_locus(PointSet& s, const QPoly& locus) {
  s.locus_q = locus;
  std::size_t roots = distinct_root_count(locus);
  for (const auto& x : s.points)
    if (is_root(locus, x)) --roots;
  s.locus_roots = roots;
}

}  // namespace

bool PointSet::contains(const Rational& x) const {
  if (std::binary_search(points.begin(), points.end(), x)) return true;
  if (locus_q) return is_root(*locus_q, x);
  if (locus_k) return is_root(*locus_k, x);
  return false;
}

void PointSet::insert(const Rational& x) {
  if (std::binary_search(points.begin(), points.end(), x)) return;
  if (has_locus() && contains(x)) --locus_roots;
  points.insert(std::upper_bound(points.begin(), points.end(), x), x);
}

std::string to_string(StageKind k) {
  switch (k) {
    case StageKind::kPolynomialK:
      return "polynomial_k";
    case StageKind::kPolynomialQ:
      return "polynomial_q";
    case StageKind::kAffine:
      return "affine";
    case StageKind::kBelyi:
      return "belyi";
  }
  return "?";
}

Integer CompositionChain::degree() const {
  Integer d = 1;
  for (const auto& s : stages) d *= s.degree;
  return d;
}

KPoly pipeline_init(const FieldPtr& k, const std::vector<Element>& basis) {
  const auto n = static_cast<std::size_t>(k->degree());
  if (basis.size() != n)
    throw DomainError("basis needs " + std::to_string(n) + " elements, got " + std::to_string(basis.size()));
  if (basis.front() != k->one()) throw DomainError("the basis must start with 1");
  Matrix<Rational> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!basis[i].field()->same_as(*k)) throw DomainError("basis element from another field");
    for (std::size_t j = 0; j < n; ++j) m[i][j] = basis[i].coords()[j];
  }
  if (sgn(bareiss_determinant(std::move(m), QQ{})) == 0) throw DomainError("basis is not linearly independent over Q");
  std::vector<Element> c(n + 4, k->zero());
  c[1] = k->one();
  c[2] = k->one();
  for (std::size_t i = 1; i < n; ++i) c[i + 2] = basis[i];
  c[n + 3] = k->one();
  return KPoly(k, std::move(c));
}

std::vector<Element> default_basis(const FieldPtr& k) {
  std::vector<Element> out{k->one()};
  if (k->is_quadratic()) {
    Integer d = k->quadratic_data()->radicand;
    Integer r = d % 4;
    if (r < 0) r += 4;
    out.push_back(r == 1 ? k->from_sqrt_form(Rational(1, 2), Rational(1, 2))
                         : k->from_sqrt_form(Rational(0), Rational(1)));
    return out;
  }
  Element g = k->generator();
  for (int i = 1; i < k->degree(); ++i) out.push_back(out.back() * g);
  return out;
}

PipelineResult pipeline_run(const FieldPtr& k, const std::vector<Element>& basis) {
  const int n = k->degree();
  PipelineResult res;
  res.chain.base_field = k;
  res.s_bound = static_cast<std::size_t>((n + 1) * (n + 1) + 1);

  // Stage 0 over K.
  KPoly f0 = pipeline_init(k, basis);
  KPoly h0 = hat(f0);
  {
    ChainStage st{StageKind::kPolynomialK, f0, std::nullopt, {}, {}, {}, {}, f0.degree(), {}, std::nullopt};
    st.s_set.infinity = true;
    st.s_set.locus_k = h0;
    st.s_set.locus_roots = static_cast<std::size_t>(squarefree_part(h0).degree());
    res.chain.stages.push_back(std::move(st));
  }

  QPoly f = norm_poly(h0);
  if (!h0.divides(lift(f, k))) throw DomainError("internal: the norm is not divisible by its factor");
  std::vector<Rational> r;  // the explicit rational part of S
  for (int m = 1;; ++m) {
    ChainStage st{StageKind::kPolynomialQ, std::nullopt, f, {}, {}, {}, {}, f.degree(), {}, height_poly_q_value(f)};
    std::vector<Rational> next{Rational(0)};
    for (const auto& x : r) next.push_back(f(x));
    r = sorted_unique(std::move(next));
    st.s_set.infinity = true;
    st.s_set.points = r;
    std::optional<QPoly> fh;
    if (f.degree() >= 2) {
      fh = hat(f);
      set_locus(st.s_set, *fh);
    }
    res.chain.stages.push_back(std::move(st));
    if (!fh) break;
    f = std::move(*fh);
  }

  for (std::size_t i = 0; i < res.chain.stages.size(); ++i) {
    const auto& st = res.chain.stages[i];
    std::size_t size = st.s_set.cardinality();
    res.report.push_back(
        {static_cast<int>(i), static_cast<int>(st.degree.get_si()), st.height, size, size <= res.s_bound});
  }
  res.final_rational = !res.chain.stages.back().s_set.has_locus();
  return res;
}

PointSet stage_branch_values(const ChainStage& st) {
  PointSet s;
  switch (st.kind) {
    case StageKind::kAffine:
      break;
    case StageKind::kBelyi:
      s.infinity = true;
      s.points = {Rational(0), Rational(1)};
      break;
    case StageKind::kPolynomialK:
      s.infinity = true;
      if (st.poly_k->degree() >= 2) s.locus_k = hat(*st.poly_k, HatRoute::kCharPoly);
      break;
    case StageKind::kPolynomialQ:
      s.infinity = true;
      if (st.poly_q->degree() >= 2) s.locus_q = hat(*st.poly_q, HatRoute::kCharPoly);
      break;
  }
  return s;
}

CompositionChain litcanu_reduce(const PointSet& s, const ReductionOptions& opt) {
  if (s.has_locus()) throw DomainError("reduction needs a set of rational points");
  CompositionChain chain;
  chain.base_field = NumberField::rationals();
  std::vector<Rational> pts = sorted_unique(s.points);
  auto in_unit_set = [](const Rational& x) { return sgn(x) == 0 || x == 1; };
  auto push = [&](ChainStage st) {
    st.s_set.infinity = true;
    st.s_set.points = pts;
    chain.stages.push_back(std::move(st));
  };
  auto add_01 = [&] {
    pts.push_back(Rational(0));
    pts.push_back(Rational(1));
    pts = sorted_unique(std::move(pts));
  };

  // Affine normalization into [0, 1].
  std::optional<std::pair<Rational, Rational>> affine;
  if (pts.size() >= 2 && !(sgn(pts.front()) == 0 && pts.back() == 1)) {
    Rational a = 1 / (pts.back() - pts.front());
    affine = {a, -pts.front() * a};
  } else if (pts.size() == 1 && !in_unit_set(pts.front())) {
    affine = {Rational(1), -pts.front()};
  }
  if (affine) {
    for (auto& x : pts) x = affine->first * x + affine->second;
    add_01();
    ChainStage st{StageKind::kAffine, std::nullopt, std::nullopt, affine->first, affine->second, {}, {}, 1, {}, {}};
    push(std::move(st));
  } else {
    add_01();
  }

  for (;;) {
    std::vector<Rational> interior;
    for (const auto& x : pts)
      if (sgn(x) > 0 && x < 1) interior.push_back(x);
    if (interior.empty()) break;
    // the interior point of smallest height gives the cheapest stage
    auto t = *std::min_element(interior.begin(), interior.end(), [](const Rational& x, const Rational& y) {
      return x.get_den() < y.get_den() || (x.get_den() == y.get_den() && x < y);
    });
    Integer m = t.get_num();
    Integer n = t.get_den() - m;
    std::vector<Rational> next;
    for (const auto& x : pts) next.push_back(x == t ? Rational(1) : belyi_value(m, n, x, opt.budget_bits));
    pts = sorted_unique(std::move(next));
    add_01();
    ChainStage st{StageKind::kBelyi, std::nullopt, std::nullopt, {}, {}, m, n, m + n, {}, {}};
    push(std::move(st));
  }
  return chain;
}

CompositionChain concat(const CompositionChain& inner, const CompositionChain& outer) {
  CompositionChain out = inner;
  for (const auto& st : outer.stages) out.stages.push_back(st);
  return out;
}

namespace {

// Does the image of `prev` under `st` land in `cur`?
void check_image(const ChainStage& st, const PointSet& prev, const PointSet& cur, std::size_t idx,
                 ChainCheck& out, std::size_t budget_bits) {
  auto fail = [&](const std::string& what) {
    out.ok = false;
    out.problems.push_back("stage " + std::to_string(idx) + ": " + what);
  };
  if (prev.infinity && !cur.infinity) fail("image of infinity missing");
  for (const auto& x : prev.points) {
    Rational y;
    switch (st.kind) {
      case StageKind::kPolynomialK:
        fail("a field stage must come first");
        return;
      case StageKind::kPolynomialQ:
        y = (*st.poly_q)(x);
        break;
      case StageKind::kAffine:
        y = st.a * x + st.b;
        break;
      case StageKind::kBelyi:
        y = belyi_value(st.m, st.n, x, budget_bits);
        break;
    }
    if (!cur.contains(y)) fail("image of " + to_string(x) + " missing");
  }
  if (prev.has_locus()) {
    // roots of the previous locus must be sent to 0
    bool zero = false;
    if (st.kind == StageKind::kPolynomialQ) {
      if (prev.locus_k) zero = prev.locus_k->divides(lift(*st.poly_q, prev.locus_k->context()));
      if (prev.locus_q) zero = prev.locus_q->divides(*st.poly_q);
    }
    if (!zero) fail("cannot certify the image of the previous locus");
    else if (!cur.contains(Rational(0))) fail("0 missing from the image");
  }
}

void check_branch_values(const ChainStage& st, const PointSet& cur, std::size_t idx, ChainCheck& out) {
  auto fail = [&](const std::string& what) {
    out.ok = false;
    out.problems.push_back("stage " + std::to_string(idx) + ": " + what);
  };
  PointSet b = stage_branch_values(st);
  if (b.infinity && !cur.infinity) fail("branch value infinity not tracked");
  for (const auto& x : b.points)
    if (!cur.contains(x)) fail("branch value " + to_string(x) + " not tracked");
  if (b.locus_k) {
    if (!cur.locus_k || !b.locus_k->divides(*cur.locus_k))
      fail("critical values not contained in the tracked locus");
  }
  if (b.locus_q) {
    if (!cur.locus_q || !b.locus_q->divides(*cur.locus_q)) fail("critical values not contained in the tracked locus");
  }
}

}  // namespace

ChainCheck verify_chain(const CompositionChain& chain, bool require_01inf) {
  ChainCheck out;
  constexpr std::size_t kBudget = std::size_t(1) << 27;
  const PointSet* prev = nullptr;
  for (std::size_t i = 0; i < chain.stages.size(); ++i) {
    const auto& st = chain.stages[i];
    try {
      if (prev) check_image(st, *prev, st.s_set, i, out, kBudget);
      check_branch_values(st, st.s_set, i, out);
    } catch (const ReductionBudgetExceeded& e) {
      out.ok = false;
      out.problems.push_back("stage " + std::to_string(i) + ": " + e.what());
    }
    prev = &st.s_set;
  }
  if (prev) {
    out.final_in_01inf = !prev->has_locus() && std::all_of(prev->points.begin(), prev->points.end(), [](const Rational& x) {
      return sgn(x) == 0 || x == 1;
    });
  } else {
    out.final_in_01inf = true;
  }
  if (require_01inf && !out.final_in_01inf) {
    out.ok = false;
    out.problems.push_back("final branch set is not inside {0, 1, infinity}");
  }
  return out;
}

std::string stage_formula(const ChainStage& st) {
  switch (st.kind) {
    case StageKind::kPolynomialK:
      return to_string(*st.poly_k);
    case StageKind::kPolynomialQ:
      return to_string(*st.poly_q);
    case StageKind::kAffine:
      return to_string(KPoly(NumberField::rationals(), {NumberField::rationals()->from_rational(st.b),
                                                        NumberField::rationals()->from_rational(st.a)}));
    case StageKind::kBelyi: {
      const std::string m = to_string(st.m), n = to_string(st.n), q = to_string(Integer(st.m + st.n));
      return "(" + q + "^" + q + "/(" + m + "^" + m + "*" + n + "^" + n + "))*x^" + m + "*(1-x)^" + n;
    }
  }
  return "";
}

std::string to_string(const PointSet& s) {
  std::string out = "{";
  bool first = true;
  auto add = [&](const std::string& t) {
    if (!first) out += ", ";
    out += t;
    first = false;
  };
  for (const auto& x : s.points) add(to_string(x));
  if (s.locus_k) add("roots of " + to_string(*s.locus_k));
  if (s.locus_q) add("roots of " + to_string(*s.locus_q));
  if (s.infinity) add("inf");
  return out + "}";
}

}  // namespace belyi
