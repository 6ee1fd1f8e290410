#include <gtest/gtest.h>

#include <complex>

#include "belyi/cover.hpp"
#include "belyi/critical.hpp"
#include "belyi/factored_map.hpp"
#include "belyi/hat.hpp"
#include "belyi/hat_check.hpp"
#include "belyi/pipeline.hpp"
#include "belyi/quadratic_dessins.hpp"
#include "chain_expand.hpp"
#include "support.hpp"

using namespace belyi;
using namespace belyi::testing;

namespace {

using cplx = std::complex<long double>;

// Durand-Kerner in long double: an oracle that shares no code with the
// library's certified root isolation.
std::vector<cplx> dk_roots(const QPoly& f) {
  const int n = f.degree();
  std::vector<cplx> a;
  for (int i = 0; i <= n; ++i) a.emplace_back(f.coeff(static_cast<std::size_t>(i)).get_d() / f.lc().get_d());
  std::vector<cplx> z(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] = std::pow(cplx(0.4L, 0.9L), i);
  for (int it = 0; it < 2000; ++it) {
    long double moved = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      cplx p = 0;
      for (int k = n; k >= 0; --k) p = p * z[i] + a[static_cast<std::size_t>(k)];
      cplx d = 1;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) d *= z[i] - z[j];
      cplx step = p / d;
      z[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-30L) break;
  }
  return z;
}

// Relative sup-norm distance between hat(f) and prod (X - f(y)), f'(y) = 0.
long double numeric_hat_distance(const QPoly& f, const QPoly& fh) {
  std::vector<cplx> prod{1};
  for (cplx y : dk_roots(f.derivative())) {
    cplx v = 0;
    for (int k = f.degree(); k >= 0; --k) v = v * y + static_cast<long double>(f.coeff(static_cast<std::size_t>(k)).get_d());
    std::vector<cplx> next(prod.size() + 1, 0);
    for (std::size_t i = 0; i < prod.size(); ++i) {
      next[i + 1] += prod[i];
      next[i] -= v * prod[i];
    }
    prod = next;
  }
  long double scale = 1, err = 0;
  for (const auto& c : fh.coeffs()) scale = std::max(scale, std::abs(static_cast<long double>(c.get_d())));
  for (std::size_t i = 0; i < prod.size(); ++i)
    err = std::max(err, std::abs(prod[i] - static_cast<long double>(fh.coeff(i).get_d())));
  return err / scale;
}

PointSet rational_set(std::vector<Rational> pts, bool inf) {
  PointSet s;
  s.infinity = inf;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  s.points = pts;
  return s;
}

}  // namespace

TEST(Hat, Examples) {
  EXPECT_EQ(hat(qp("x^2")), qp("x"));
  EXPECT_EQ(hat(qp("x^3-3*x")), qp("x^2-4"));
  EXPECT_EQ(hat(qp("x^4")), qp("x^3"));
  EXPECT_EQ(hat(qp("x^4"), HatRoute::kCharPoly), qp("x^3"));
  EXPECT_THROW(hat(qp("x")), DomainError);
  EXPECT_THROW(hat(qp("2*x^2")), DomainError);
}

TEST(Hat, OverQuadraticField) {
  auto k = NumberField::quadratic(Integer(-11));
  // f = x^2 + g x: critical point -g/2, value -g^2/4 = 11/4
  KPoly f = parse_kpoly("x^2 + g*x", k);
  EXPECT_EQ(hat(f), parse_kpoly("x - 11/4", k));
  KPoly f3 = parse_kpoly("x + x^2 + g*x^3 + x^5", k);
  EXPECT_EQ(hat(f3), hat(f3, HatRoute::kCharPoly));
  EXPECT_EQ(hat(f3).degree(), 4);
}

TEST(Hat, PropertyRoutesAgreeAndMatchNumericOracle) {
  SeededRng rng(31);
  for (int t = 0; t < 100; ++t) {
    QPoly f = random_qpoly(rng, static_cast<int>(rng.range(2, 8)), 10, true);
    QPoly h = hat(f);
    ASSERT_EQ(h.degree(), f.degree() - 1);
    ASSERT_TRUE(h.is_monic());
    ASSERT_EQ(h, hat(f, HatRoute::kCharPoly)) << to_string(f);
    ASSERT_LT(numeric_hat_distance(f, h), 1e-6L) << to_string(f);
    ASSERT_LT(hat_numeric_error(f, h, 128), 1e-6) << to_string(f);
  }
}

TEST(Hat, SeededPropertyReport) {
  HatCheckReport r = verify_hat_properties(HatCheckOptions{});
  EXPECT_EQ(r.records.size(), 100u);
  EXPECT_EQ(r.failures(), 0u);
  EXPECT_LT(r.max_numeric_error, 1e-6);
}

TEST(CriticalValues, LogisticMap) {
  auto f = RationalMap<Rational>::polynomial(qp("4*x*(1-x)"));
  auto cv = critical_value_poly(f);
  EXPECT_EQ(cv.finite, qp("x-1"));
  EXPECT_TRUE(cv.infinity);
  EXPECT_TRUE(critical_values_in_01inf(cv));
  auto g = RationalMap<Rational>::polynomial(qp("x^3-3*x"));
  EXPECT_FALSE(critical_values_in_01inf(critical_value_poly(g)));
}

TEST(CriticalValues, RationalMapAtInfinity) {
  // x + 1/x: critical points +-1 with values +-2; infinity unramified
  auto f = rmap_normalize(qp("x^2+1"), qp("x"));
  auto cv = critical_value_poly(f);
  EXPECT_EQ(cv.finite, qp("x^2-4"));
  EXPECT_FALSE(cv.infinity);
}

TEST(Pipeline, InitialPolynomials) {
  auto q = NumberField::rationals();
  EXPECT_EQ(lower(pipeline_init(q, {q->one()})), qp("x+x^2+x^4"));
  auto k5 = NumberField::quadratic(Integer(5));
  Element omega = k5->from_sqrt_form(Rational(1, 2), Rational(1, 2));
  EXPECT_EQ(pipeline_init(k5, {k5->one(), omega}), parse_kpoly("x + x^2 + ((1+g)/2)*x^3 + x^5", k5));
  auto k11 = NumberField::quadratic(Integer(-11));
  EXPECT_EQ(pipeline_init(k11, {k11->one(), k11->generator()}), parse_kpoly("x + x^2 + g*x^3 + x^5", k11));
  EXPECT_THROW(pipeline_init(k11, {k11->generator(), k11->one()}), DomainError);
  EXPECT_THROW(pipeline_init(k11, {k11->one(), k11->from_rational(3)}), DomainError);
  EXPECT_THROW(pipeline_init(k11, {k11->one()}), DomainError);
}

TEST(Pipeline, RationalCaseStructure) {
  auto q = NumberField::rationals();
  PipelineResult r = pipeline_run(q, default_basis(q));
  std::vector<int> degs;
  for (const auto& s : r.report) degs.push_back(s.degree);
  EXPECT_EQ(degs, (std::vector<int>{4, 3, 2, 1}));
  EXPECT_EQ(r.chain.degree(), 24);
  EXPECT_EQ(r.s_bound, 5u);
  for (const auto& s : r.report) EXPECT_TRUE(s.s_bound_ok);
  EXPECT_TRUE(r.final_rational);
  const PointSet& last = r.chain.stages.back().s_set;
  EXPECT_FALSE(last.has_locus());
  EXPECT_TRUE(last.infinity);
  ChainCheck chk = verify_chain(r.chain, false);
  EXPECT_TRUE(chk.ok) << (chk.problems.empty() ? "" : chk.problems.front());
}

// The n = 1 composite has degree 24, so it can be expanded: every critical
// value of the expanded polynomial must lie in the tracked final set.
TEST(Pipeline, RationalCaseAgainstExpandedComposite) {
  auto q = NumberField::rationals();
  PipelineResult r = pipeline_run(q, default_basis(q));
  QPoly g = expand(r.chain);
  ASSERT_EQ(g.degree(), 24);
  QPoly cv = hat(g.monic(), HatRoute::kCharPoly);
  // critical values of g = lc * critical values of the monic g
  QPoly scaled = compose(cv, qp("x") * (1 / g.lc())).monic();
  const PointSet& last = r.chain.stages.back().s_set;
  QPoly target = QPoly::constant(Rational(1));
  for (const auto& s : last.points) target = target * (qp("x") - QPoly::constant(s));
  EXPECT_TRUE(squarefree_part(scaled).divides(target)) << to_string(squarefree_part(scaled));
}

TEST(Pipeline, QuadraticCaseStructure) {
  auto k = NumberField::quadratic(Integer(5));
  PipelineResult r = pipeline_run(k, default_basis(k));
  ASSERT_GE(r.report.size(), 2u);
  EXPECT_EQ(r.report[0].degree, 5);
  EXPECT_EQ(r.report[1].degree, 8);
  EXPECT_EQ(r.chain.stages[1].kind, StageKind::kPolynomialQ);
  EXPECT_EQ(r.s_bound, 10u);
  for (std::size_t m = 1; m < r.report.size(); ++m) {
    EXPECT_EQ(r.report[m].degree, 8 - static_cast<int>(m) + 1) << m;
    EXPECT_TRUE(r.report[m].height.has_value());
  }
  for (const auto& s : r.report) EXPECT_LE(s.s_size, 10u);
  EXPECT_TRUE(r.final_rational);
  EXPECT_TRUE(verify_chain(r.chain, false).ok);
}

TEST(Reduction, Examples) {
  CompositionChain id = litcanu_reduce(rational_set({Rational(0), Rational(1)}, true));
  EXPECT_EQ(id.degree(), 1);
  EXPECT_TRUE(id.stages.empty());

  CompositionChain half = litcanu_reduce(rational_set({Rational(0), Rational(1, 2), Rational(1)}, true));
  ASSERT_EQ(half.stages.size(), 1u);
  EXPECT_EQ(half.degree(), 2);
  EXPECT_EQ(stage_poly(half.stages[0]), qp("4*x*(1-x)"));

  CompositionChain third = litcanu_reduce(rational_set({Rational(0), Rational(1, 3), Rational(1)}, true));
  ASSERT_EQ(third.stages.size(), 1u);
  EXPECT_EQ(third.degree(), 3);
  EXPECT_EQ(stage_poly(third.stages[0]), qp("(27/4)*x*(1-x)^2"));
  EXPECT_EQ(stage_formula(third.stages[0]), "(3^3/(1^1*2^2))*x^1*(1-x)^2");
}

void check_reduction(const PointSet& s, const CompositionChain& c) {
  ChainCheck chk = verify_chain(c, true);
  ASSERT_TRUE(chk.ok) << to_string(s) << ": " << (chk.problems.empty() ? "" : chk.problems.front());
  ASSERT_TRUE(chk.final_in_01inf);
  const PointSet& fin = c.stages.empty() ? s : c.stages.back().s_set;
  for (const auto& p : fin.points) ASSERT_TRUE(p == 0 || p == 1) << to_string(p);
  // small composites: expand and test every critical value directly
  if (c.degree() <= 60 && c.degree() >= 2) {
    QPoly g = expand(c);
    auto cv = critical_value_poly(RationalMap<Rational>::polynomial(g));
    ASSERT_TRUE(critical_values_in_01inf(cv)) << to_string(s);
    for (const auto& x : s.points) {
      Rational y = g(x);
      ASSERT_TRUE(y == 0 || y == 1) << to_string(x);
    }
  }
}

PointSet random_set(SeededRng& rng, int max_points) {
  std::vector<Rational> pts;
  const int k = static_cast<int>(rng.range(1, max_points));
  for (int i = 0; i < k; ++i) {
    Rational x(rng.range(-6, 6), rng.range(1, 5));
    x.canonicalize();
    pts.push_back(x);
  }
  return rational_set(pts, rng.range(0, 1) == 1);
}

TEST(Reduction, TwoInteriorPoints) {
  // 1/2 is consumed first and sends 1/3 to 8/9, which needs degree 9
  PointSet s = rational_set({Rational(0), Rational(1, 3), Rational(1, 2), Rational(1)}, true);
  CompositionChain c = litcanu_reduce(s);
  EXPECT_EQ(c.degree(), 18);
  check_reduction(s, c);
}

// Up to three finite points: after the affine normalization at most one
// interior point remains, so the reduction is a single small stage.
TEST(Reduction, PropertySmallSetsReachZeroOneInfinity) {
  SeededRng rng(33);
  for (int t = 0; t < 60; ++t) {
    PointSet s = random_set(rng, 3);
    check_reduction(s, litcanu_reduce(s));
  }
}

// Larger sets either reduce (and verify) or stop with the budget error:
// consuming one point can blow up the height of the others exponentially.
TEST(Reduction, PropertyLargerSetsReduceOrReportBudget) {
  SeededRng rng(35);
  int reduced = 0;
  for (int t = 0; t < 40; ++t) {
    PointSet s = random_set(rng, 5);
    try {
      CompositionChain c = litcanu_reduce(s);
      check_reduction(s, c);
      ++reduced;
    } catch (const ReductionBudgetExceeded&) {
    }
  }
  EXPECT_GT(reduced, 10);
}

TEST(Reduction, BudgetIsEnforced) {
  PointSet s = rational_set({Rational(0), Rational(1), Rational(1, 1000003), Rational(7, 999983)}, true);
  ReductionOptions opt;
  opt.budget_bits = 64;
  EXPECT_THROW(litcanu_reduce(s, opt), ReductionBudgetExceeded);
}

TEST(Reduction, RationalCaseEndToEnd) {
  auto q = NumberField::rationals();
  PipelineResult r = pipeline_run(q, default_basis(q));
  CompositionChain red = litcanu_reduce(r.chain.stages.back().s_set);
  CompositionChain full = concat(r.chain, red);
  ChainCheck chk = verify_chain(full, true);
  EXPECT_TRUE(chk.ok) << (chk.problems.empty() ? "" : chk.problems.front());
  EXPECT_TRUE(chk.final_in_01inf);
  EXPECT_EQ(full.degree(), r.chain.degree() * red.degree());
  // every intermediate stage's critical values are tracked
  for (std::size_t i = 1; i < full.stages.size(); ++i) {
    PointSet bv = stage_branch_values(full.stages[i]);
    for (const auto& v : bv.points) EXPECT_TRUE(full.stages[i].s_set.contains(v)) << i;
  }
}

TEST(CoverIsomorphism, Examples) {
  auto shift = cover_isomorphic_affine(qp("x^2"), qp("x^2+2*x+1"));
  ASSERT_TRUE(shift);
  ASSERT_TRUE(shift->u);
  EXPECT_EQ(compose(qp("x^2"), QPoly(QQ{}, {*shift->v, *shift->u})), qp("x^2+2*x+1"));
  auto same = cover_isomorphic_affine(qp("x^3-3*x"), qp("x^3-3*x"));
  ASSERT_TRUE(same);
  ASSERT_TRUE(same->u);
  EXPECT_EQ(compose(qp("x^3-3*x"), QPoly(QQ{}, {*same->v, *same->u})), qp("x^3-3*x"));
  EXPECT_FALSE(cover_isomorphic_affine(qp("x+x^2+x^4"), qp("x+x^2+2*x^3+x^4")));
}

TEST(CoverIsomorphism, PropertyReflexiveSymmetricAndWitnessed) {
  SeededRng rng(34);
  for (int t = 0; t < 60; ++t) {
    QPoly f = random_qpoly(rng, static_cast<int>(rng.range(1, 6)), 6, true);
    Rational u = random_rational(rng, 4);
    if (sgn(u) == 0) u = 2;
    Rational v = random_rational(rng, 4);
    QPoly g = compose(f, QPoly(QQ{}, {v, u}));
    ASSERT_TRUE(cover_isomorphic_affine(f, f));
    auto fg = cover_isomorphic_affine(f, g);
    ASSERT_TRUE(fg) << to_string(f);
    ASSERT_TRUE(cover_isomorphic_affine(g, f));
    if (fg->u) {
      ASSERT_EQ(compose(f, QPoly(QQ{}, {*fg->v, *fg->u})), g);
    }
    QPoly h = random_qpoly(rng, f.degree(), 6, true);
    ASSERT_EQ(cover_isomorphic_affine(f, h).has_value(), cover_isomorphic_affine(h, f).has_value());
  }
}

TEST(ModuliField, Examples) {
  QuadraticDessin d = family_solve({2, 3, 6});
  ModuliResult r = moduli_field_quadratic(d.map);
  EXPECT_EQ(r.field, ModuliField::kBaseField);
  EXPECT_EQ(to_string(r.field), "K");
  auto k = NumberField::quadratic(Integer(-11));
  FactoredMap rational(k->from_rational(3), {{parse_kpoly("x-2", k), 2}, {parse_kpoly("x+1", k), -1}});
  EXPECT_EQ(moduli_field_quadratic(rational).field, ModuliField::kRationals);
  QuadraticDessin deg = family_solve({-1, 2, 8});
  EXPECT_TRUE(deg.degenerate);
  EXPECT_TRUE(deg.map.has_rational_coefficients());
}

TEST(ModuliField, ConjugateIsomorphicMapIsRational) {
  // f o phi for a Mobius phi swapping the roots of x^2+11 still has field of
  // moduli Q when f itself is rational.
  auto k = NumberField::quadratic(Integer(-11));
  FactoredMap f(k->one(), {{parse_kpoly("x", k), 3}, {parse_kpoly("x-1", k), -2}});
  Element g = k->generator();
  Mobius phi{k->one(), g, k->zero(), k->one()};  // x + sqrt(-11)
  FactoredMap h = f.compose(phi);
  EXPECT_FALSE(h.has_rational_coefficients());
  ModuliResult r = moduli_field_quadratic(h);
  EXPECT_EQ(r.field, ModuliField::kRationals);
}
