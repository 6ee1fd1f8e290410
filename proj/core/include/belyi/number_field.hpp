#pragma once

// Number fields Q[a]/(m(a)) in power-basis coordinates, with a dedicated
// a + b*sqrt(D) value type for quadratic fields.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "belyi/arith.hpp"
#include "belyi/polynomial.hpp"
#include "belyi/qpoly.hpp"

namespace belyi {

class NumberField;
class Element;
using FieldPtr = std::shared_ptr<const NumberField>;

/// For a quadratic field: the squarefree radicand d and the generator
/// written as a = u + v*sqrt(d).
struct QuadraticData {
  Integer radicand;
  Rational gen_rational;
  Rational gen_sqrt;
};

class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  /// Builds Q[g]/(m). The polynomial is made monic. Irreducibility is
  /// verified for degree <= 4; above that only the absence of rational roots
  /// is checked and full irreducibility is the caller's responsibility.
  static FieldPtr from_min_poly(const QPoly& m);
  /// Q, as the degree-one field Q[g]/(g).
  static FieldPtr rationals();
  /// Q(sqrt d) presented by g^2 - d; d squarefree, d != 0, 1.
  static FieldPtr quadratic(const Integer& d);

  int degree() const { return min_poly_.degree(); }
  const QPoly& min_poly() const { return min_poly_; }
  bool is_rational() const { return degree() == 1; }
  bool is_quadratic() const { return degree() == 2; }
  const std::optional<QuadraticData>& quadratic_data() const { return quad_; }

  /// disc(m) = (-1)^{n(n-1)/2} Res(m, m').
  Rational polynomial_discriminant() const;
  /// Field discriminant; exact for degree <= 2, absent otherwise.
  std::optional<Integer> field_discriminant() const;

  /// "Q", "Q(sqrt(-11))", or "Q[g]/(g^3-2)".
  std::string name() const;

  bool same_as(const NumberField& other) const { return min_poly_ == other.min_poly_; }

  Element zero() const;
  Element one() const;
  Element generator() const;
  Element from_rational(const Rational& q) const;
  Element element(std::vector<Rational> coords) const;
  /// Reduces an arbitrary polynomial in g modulo the minimal polynomial.
  Element from_poly(const QPoly& p) const;
  /// a + b*sqrt(radicand), quadratic fields only.
  Element from_sqrt_form(const Rational& a, const Rational& b) const;

  /// Multiplication of coordinate vectors modulo the minimal polynomial.
  std::vector<Rational> multiply(const std::vector<Rational>& x, const std::vector<Rational>& y) const;

 private:
  explicit NumberField(QPoly m);
  QPoly min_poly_;
  // g^k mod m for k = n .. 2n-2, in coordinates.
  std::vector<std::vector<Rational>> reductions_;
  std::optional<QuadraticData> quad_;
};

class Element {
 public:
  Element(FieldPtr field, std::vector<Rational> coords);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// The value as a rational; requires is_rational().
  Rational rational_value() const;
  QPoly as_poly() const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Element& o);
  Element& operator/=(const Element& o) { return *this *= o.inverse(); }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Element& b) { return a *= b; }
  friend Element operator/(Element a, const Element& b) { return a /= b; }
  Element operator-() const;
  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  Element inverse() const;
  Element pow(long e) const;

  /// a+b*sqrt(D) for quadratic fields, the rational for Q, else a
  /// polynomial in g.
  std::string to_string() const;

 private:
  void check_same_field(const Element& o) const;
  FieldPtr field_;
  std::vector<Rational> c_;
};

/// The nontrivial automorphism of a quadratic field.
Element apply_automorphism(const Element& x);

/// Applies the nontrivial automorphism to every coefficient.
Polynomial<Element> conjugate(const Polynomial<Element>& f);

/// a + b*sqrt(D), D squarefree.
struct QuadraticElement {
  Rational a;
  Rational b;
  Integer radicand;

  QuadraticElement conjugate() const { return {a, -b, radicand}; }
  friend QuadraticElement operator+(const QuadraticElement& x, const QuadraticElement& y);
  friend QuadraticElement operator-(const QuadraticElement& x, const QuadraticElement& y);
  friend QuadraticElement operator*(const QuadraticElement& x, const QuadraticElement& y);
  friend QuadraticElement operator/(const QuadraticElement& x, const QuadraticElement& y);
  friend bool operator==(const QuadraticElement& x, const QuadraticElement& y) {
    return x.a == y.a && x.b == y.b && (x.b == 0 || x.radicand == y.radicand);
  }
  Rational norm() const { return a * a - b * b * Rational(radicand); }
  std::string to_string() const;
};

/// Coordinates of x in terms of sqrt of the field's radicand.
QuadraticElement to_quadratic(const Element& x);
Element from_quadratic(const FieldPtr& field, const QuadraticElement& q);

/// Renders a + b*sqrt(D) deterministically.
std::string format_sqrt_form(const Rational& a, const Rational& b, const Integer& radicand);

template <>
struct Ring<Element> {
  using Context = FieldPtr;
  static constexpr bool kIsField = true;

  static Element zero(const FieldPtr& f);
  static Element one(const FieldPtr& f);
  static Element from_int(const FieldPtr& f, long n);
  static FieldPtr context_of(const Element& x) { return x.field(); }
  static bool is_zero(const Element& x) { return x.is_zero(); }
  static bool is_unit(const Element& x) { return !x.is_zero(); }
  static Element inverse(const Element& x) { return x.inverse(); }
  static Element exact_div(const Element& a, const Element& b) { return a / b; }
  static std::string to_string(const Element& x) { return x.to_string(); }
};

using KPoly = Polynomial<Element>;

/// Coefficientwise embedding of a rational polynomial into K[X].
KPoly lift(const QPoly& f, const FieldPtr& field);

/// The rational polynomial with the same coefficients; all must be rational.
QPoly lower(const KPoly& f);
bool has_rational_coefficients(const KPoly& f);

}  // namespace belyi
