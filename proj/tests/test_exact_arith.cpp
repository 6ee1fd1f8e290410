#include <gtest/gtest.h>

#include "belyi/arith.hpp"
#include "belyi/number_field.hpp"
#include "belyi/parse.hpp"
#include "belyi/roots.hpp"
#include "support.hpp"

using namespace belyi;
using namespace belyi::testing;

namespace {

// trial division oracle: (s, c) with n = s*c^2
std::pair<long, long> squarefree_oracle(long n) {
  long s = n < 0 ? -1 : 1, c = 1;
  long m = n < 0 ? -n : n;
  for (long p = 2; p * p <= m; ++p) {
    while (m % (p * p) == 0) {
      m /= p * p;
      c *= p;
    }
    if (m % p == 0) {
      m /= p;
      s *= p;
    }
  }
  return {s * m, c};
}

bool prime_oracle(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST(Rationals, ParseAndPrintRoundTrip) {
  for (const char* s : {"0", "-7", "3/2", "-22/7", "123456789012345678901234567891/2"}) {
    EXPECT_EQ(to_string(parse_rational(s)), s);
  }
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_THROW(parse_rational("1/0"), std::exception);
  EXPECT_THROW(parse_rational("abc"), std::exception);
}

TEST(Integers, SquarefreePartExamples) {
  auto a = squarefree_part(Integer(-396));
  EXPECT_EQ(a.squarefree, -11);
  EXPECT_EQ(a.cofactor, 6);
  auto b = squarefree_part(Integer(144));
  EXPECT_EQ(b.squarefree, 1);
  EXPECT_EQ(b.cofactor, 12);
  auto c = squarefree_part(Integer(-7));
  EXPECT_EQ(c.squarefree, -7);
  EXPECT_EQ(c.cofactor, 1);
  EXPECT_THROW(squarefree_part(Integer(0)), DomainError);
}

TEST(Integers, SquarefreePartMatchesTrialDivision) {
  for (long n = -3000; n <= 3000; ++n) {
    if (n == 0) continue;
    auto got = squarefree_part(Integer(n));
    auto [s, c] = squarefree_oracle(n);
    ASSERT_EQ(got.squarefree, s) << n;
    ASSERT_EQ(got.cofactor, c) << n;
    ASSERT_EQ(is_squarefree(Integer(n)), c == 1) << n;
  }
}

TEST(Integers, QuadraticDiscriminant) {
  EXPECT_EQ(quadratic_discriminant(Integer(-11)), -11);
  EXPECT_EQ(quadratic_discriminant(Integer(-5)), -20);
  EXPECT_EQ(quadratic_discriminant(Integer(5)), 5);
  EXPECT_EQ(quadratic_discriminant(Integer(-1)), -4);
  for (long d = -200; d <= 200; ++d) {
    if (d == 0 || d == 1 || !is_squarefree(Integer(d))) continue;
    Integer disc = quadratic_discriminant(Integer(d));
    EXPECT_LE(abs(disc), 4 * std::abs(d));
    EXPECT_TRUE(disc == d || disc == 4 * d);
  }
  EXPECT_THROW(quadratic_discriminant(Integer(12)), DomainError);
}

TEST(Integers, PrimalityAndFactoringAgreeWithOracle) {
  for (long n = -5; n < 5000; ++n) ASSERT_EQ(is_prime(static_cast<std::int64_t>(n)), prime_oracle(n)) << n;
  for (long n = 2; n < 3000; ++n) {
    Integer prod = 1;
    for (auto& [p, e] : factor_integer(Integer(n))) {
      ASSERT_TRUE(prime_oracle(p.get_si()));
      prod *= ipow(p, e);
    }
    ASSERT_EQ(prod, n);
  }
  auto ps = primes_in_range(90, 110);
  EXPECT_EQ(ps, (std::vector<std::int64_t>{97, 101, 103, 107, 109}));
  EXPECT_TRUE(is_prime(Integer("2305843009213693951")));  // 2^61 - 1
}

TEST(NumberFields, DefiningRelations) {
  auto k = NumberField::quadratic(Integer(-11));
  Element s = k->generator();
  EXPECT_EQ(s * s, k->from_rational(-11));
  auto q5 = NumberField::quadratic(Integer(5));
  Element phi = q5->from_sqrt_form(Rational(1, 2), Rational(1, 2));
  Element psi = q5->from_sqrt_form(Rational(1, 2), Rational(-1, 2));
  EXPECT_EQ(phi + psi, q5->one());
  auto cubic = NumberField::from_min_poly(qp("x^3-2"));
  Element a = cubic->generator();
  EXPECT_EQ(a * (a * a), cubic->from_rational(2));
  EXPECT_EQ(cubic->name(), "Q[g]/(g^3-2)");
  EXPECT_EQ(k->name(), "Q(sqrt(-11))");
}

TEST(NumberFields, Automorphism) {
  auto k = NumberField::quadratic(Integer(-11));
  Element x = k->from_sqrt_form(Rational(-2, 9), Rational(2, 9));
  EXPECT_EQ(apply_automorphism(x), k->from_sqrt_form(Rational(-2, 9), Rational(-2, 9)));
  EXPECT_EQ(apply_automorphism(k->from_rational(7)), k->from_rational(7));
  auto q5 = NumberField::quadratic(Integer(5));
  EXPECT_EQ(apply_automorphism(q5->generator()), -q5->generator());
}

TEST(NumberFields, DivisionByZeroAndMixedFields) {
  auto k = NumberField::quadratic(Integer(-11));
  auto l = NumberField::quadratic(Integer(5));
  EXPECT_THROW(k->one() / k->zero(), DomainError);
  EXPECT_THROW(k->one() + l->one(), DomainError);
  EXPECT_THROW(NumberField::from_min_poly(qp("x^2-4")), DomainError);
  EXPECT_THROW(NumberField::quadratic(Integer(8)), DomainError);
}

// Field axioms on random elements, including the cubic field.
TEST(NumberFields, PropertyFieldAxioms) {
  SeededRng rng(7);
  for (const char* m : {"x^2+11", "x^2-5", "x^3-2", "x^4+x+1"}) {
    auto k = NumberField::from_min_poly(qp(m));
    auto rand_elem = [&] {
      std::vector<Rational> c;
      for (int i = 0; i < k->degree(); ++i) c.push_back(random_rational(rng, 9));
      return k->element(c);
    };
    for (int t = 0; t < 40; ++t) {
      Element a = rand_elem(), b = rand_elem(), c = rand_elem();
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ(a - a, k->zero());
      if (!a.is_zero()) {
        ASSERT_EQ(a * a.inverse(), k->one());
      }
      if (!b.is_zero()) {
        ASSERT_EQ((a / b) * b, a);
      }
      // g satisfies the defining polynomial
      ASSERT_EQ(lift(k->min_poly(), k)(k->generator()), k->zero());
    }
  }
}

TEST(NumberFields, QuadraticCoordinates) {
  auto k = NumberField::quadratic(Integer(-11));
  Element x = k->from_sqrt_form(Rational(1, 2), Rational(1, 2));
  QuadraticElement q = to_quadratic(x);
  EXPECT_EQ(q.a, Rational(1, 2));
  EXPECT_EQ(q.b, Rational(1, 2));
  EXPECT_EQ(q.norm(), Rational(3));
  EXPECT_EQ(from_quadratic(k, q), x);
  EXPECT_EQ(x.to_string(), "1/2+1/2*sqrt(-11)");
}

TEST(Parsing, PolynomialsAndElements) {
  EXPECT_EQ(to_string(qp("x^3 - 3*x")), "x^3-3*x");
  EXPECT_EQ(qp("(x+1)^2"), qp("x^2+2*x+1"));
  EXPECT_EQ(qp("x/2 + 1/3").coeff(1), Rational(1, 2));
  auto k = NumberField::quadratic(Integer(-11));
  EXPECT_EQ(parse_element("g", k), k->generator());
  EXPECT_EQ(parse_element("(1+g)/2", k), k->from_sqrt_form(Rational(1, 2), Rational(1, 2)));
  KPoly f = parse_kpoly("x - g", k);
  EXPECT_EQ(f.degree(), 1);
  EXPECT_THROW(parse_qpoly("x^"), ParseError);
  EXPECT_THROW(parse_qpoly("x + + "), ParseError);
  EXPECT_EQ(parse_int_list("2,3,6"), (std::vector<long>{2, 3, 6}));
  EXPECT_EQ(parse_int_list("-1, 2, 8"), (std::vector<long>{-1, 2, 8}));
  auto pts = parse_point_list("0,1/2,inf");
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_TRUE(pts[2].infinity);
  EXPECT_EQ(pts[1].value, Rational(1, 2));
}

TEST(Parsing, PropertyPrintParseRoundTrip) {
  SeededRng rng(11);
  for (int t = 0; t < 200; ++t) {
    std::vector<Rational> c;
    int deg = static_cast<int>(rng.range(0, 7));
    for (int i = 0; i <= deg; ++i) c.push_back(random_rational(rng, 30));
    QPoly f(QQ{}, c);
    ASSERT_EQ(parse_qpoly(to_string(f)), f) << to_string(f);
  }
}

TEST(Roots, IsolationEnclosesKnownRoots) {
  // (x-1)(x+2)(x^2+1)
  auto discs = isolate_roots(qp("(x-1)*(x+2)*(x^2+1)"), 128);
  ASSERT_EQ(discs.size(), 4u);
  int real_one = 0, real_m2 = 0, imag = 0;
  for (const auto& d : discs) {
    double re = d.center.re.to_double(), im = d.center.im.to_double();
    double r = d.radius.to_double();
    EXPECT_LT(r, 1e-20);
    if (std::abs(re - 1) < 1e-12 && std::abs(im) < 1e-12) ++real_one;
    if (std::abs(re + 2) < 1e-12 && std::abs(im) < 1e-12) ++real_m2;
    if (std::abs(re) < 1e-12 && std::abs(std::abs(im) - 1) < 1e-12) ++imag;
  }
  EXPECT_EQ(real_one, 1);
  EXPECT_EQ(real_m2, 1);
  EXPECT_EQ(imag, 2);
  EXPECT_THROW(isolate_roots(qp("x^2"), 128), DomainError);  // not squarefree
  auto mult = roots_with_multiplicity(qp("x^2*(x-3)"), 128);
  EXPECT_EQ(mult.size(), 3u);
}

TEST(BigFloats, DirectedRounding) {
  BigFloat lo(Rational(1, 3), 64, MPFR_RNDD);
  BigFloat hi(Rational(1, 3), 64, MPFR_RNDU);
  EXPECT_LT(lo, hi);
  BigFloat up = mul_round(hi, BigFloat(3L, 64), MPFR_RNDU);
  EXPECT_GE(up, BigFloat(1L, 64));
  EXPECT_NEAR(sqrt(BigFloat(Integer(2), 128)).to_double(), std::sqrt(2.0), 1e-15);
}
