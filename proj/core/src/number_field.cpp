#include "belyi/number_field.hpp"

#include "belyi/resultant.hpp"

namespace belyi {

namespace {

std::vector<Rational> reduce_coords(const QPoly& p, const QPoly& m) {
  QPoly r = p % m;
  const auto n = static_cast<std::size_t>(m.degree());
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = r.coeff(i);
  return c;
}

}  // namespace

NumberField::NumberField(QPoly m) : min_poly_(std::move(m)) {
  const auto n = static_cast<std::size_t>(degree());
  QPoly x = QPoly::variable(QQ{});
  for (std::size_t k = n; k + 2 <= 2 * n; ++k) {
    reductions_.push_back(reduce_coords(x.pow(k), min_poly_));
  }
  if (n == 2) {
    // m = x^2 + p x + q, root (-p + sqrt(p^2 - 4q)) / 2.
    const Rational& p = min_poly_.coeff(1);
    const Rational& q = min_poly_.coeff(0);
    Rational disc = p * p - 4 * q;
    Integer num = disc.get_num() * disc.get_den();
    auto sf = squarefree_part(num);
    quad_ = QuadraticData{sf.squarefree, -p / 2, make_rational(sf.cofactor, 2 * disc.get_den())};
  }
}

FieldPtr NumberField::from_min_poly(const QPoly& m) {
  if (m.degree() < 1) throw DomainError("minimal polynomial must have positive degree");
  if (!probably_irreducible(m))
    throw DomainError("minimal polynomial " + belyi::to_string(m) + " is reducible over Q");
  return FieldPtr(new NumberField(m.monic()));
}

FieldPtr NumberField::rationals() {
  return FieldPtr(new NumberField(QPoly::variable(QQ{})));
}

FieldPtr NumberField::quadratic(const Integer& d) {
  if (d == 0 || d == 1 || !is_squarefree(d))
    throw DomainError("radicand " + belyi::to_string(d) + " must be squarefree and differ from 0, 1");
  return FieldPtr(new NumberField(QPoly(QQ{}, {Rational(-d), Rational(0), Rational(1)})));
}

Rational NumberField::polynomial_discriminant() const {
  const long n = degree();
  Rational r = resultant(min_poly_, min_poly_.derivative());
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

std::optional<Integer> NumberField::field_discriminant() const {
  if (degree() == 1) return Integer(1);
  if (quad_) return quadratic_discriminant(quad_->radicand);
  return std::nullopt;
}

std::string NumberField::name() const {
  if (degree() == 1) return "Q";
  if (quad_) return "Q(sqrt(" + belyi::to_string(quad_->radicand) + "))";
  return "Q[g]/(" + belyi::to_string(min_poly_, "g") + ")";
}

Element NumberField::zero() const {
  return Element(shared_from_this(), std::vector<Rational>(static_cast<std::size_t>(degree())));
}

Element NumberField::one() const { return from_rational(Rational(1)); }

Element NumberField::generator() const { return from_poly(QPoly::variable(QQ{})); }

Element NumberField::from_rational(const Rational& q) const {
  std::vector<Rational> c(static_cast<std::size_t>(degree()));
  c[0] = q;
  return Element(shared_from_this(), std::move(c));
}

Element NumberField::element(std::vector<Rational> coords) const {
  return Element(shared_from_this(), std::move(coords));
}

Element NumberField::from_poly(const QPoly& p) const {
  return Element(shared_from_this(), reduce_coords(p, min_poly_));
}

Element NumberField::from_sqrt_form(const Rational& a, const Rational& b) const {
  if (!quad_) throw DomainError("sqrt form requires a quadratic field");
  // sqrt(d) = (g - u) / v
  const Rational& u = quad_->gen_rational;
  const Rational& v = quad_->gen_sqrt;
  Rational c1 = b / v;
  Rational c0 = a - c1 * u;
  return Element(shared_from_this(), {c0, c1});
}

std::vector<Rational> NumberField::multiply(const std::vector<Rational>& x,
                                            const std::vector<Rational>& y) const {
  const auto n = static_cast<std::size_t>(degree());
  if (n == 1) return {x[0] * y[0]};
  if (n == 2) {
    // g^2 = -p g - q
    const Rational& p = min_poly_.coeff(1);
    const Rational& q = min_poly_.coeff(0);
    Rational hi = x[1] * y[1];
    Rational c0 = x[0] * y[0] - q * hi;
    Rational c1 = x[0] * y[1] + x[1] * y[0] - p * hi;
    return {c0, c1};
  }
  std::vector<Rational> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) prod[i + j] += x[i] * y[j];
  }
  std::vector<Rational> out(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(n));
  for (std::size_t k = n; k < 2 * n - 1; ++k) {
    if (sgn(prod[k]) == 0) continue;
    const auto& red = reductions_[k - n];
    for (std::size_t i = 0; i < n; ++i) out[i] += prod[k] * red[i];
  }
  return out;
}

Element::Element(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), c_(std::move(coords)) {
  if (!field_) throw DomainError("element without a field");
  if (c_.size() != static_cast<std::size_t>(field_->degree()))
    throw DomainError("coordinate vector length differs from the field degree");
}

bool Element::is_zero() const {
  for (const auto& c : c_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Element::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

Rational Element::rational_value() const {
  if (!is_rational()) throw DomainError("element " + to_string() + " is not rational");
  return c_[0];
}

QPoly Element::as_poly() const { return QPoly(QQ{}, c_); }

void Element::check_same_field(const Element& o) const {
  if (field_ != o.field_ && !field_->same_as(*o.field_))
    throw DomainError("field mismatch: " + field_->name() + " vs " + o.field_->name());
}

Element& Element::operator+=(const Element& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Element& Element::operator-=(const Element& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Element& Element::operator*=(const Element& o) {
  check_same_field(o);
  c_ = field_->multiply(c_, o.c_);
  return *this;
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

bool operator==(const Element& a, const Element& b) {
  a.check_same_field(b);
  return a.c_ == b.c_;
}

Element Element::inverse() const {
  if (is_zero()) throw DomainError("division by zero in " + field_->name());
  const auto n = c_.size();
  if (n == 1) return Element(field_, {Rational(1) / c_[0]});
  if (n == 2) {
    // 1/(a + b g) = (a + b g') / N, g' = -p - g the conjugate generator.
    const Rational& p = field_->min_poly().coeff(1);
    const Rational& q = field_->min_poly().coeff(0);
    const Rational& a = c_[0];
    const Rational& b = c_[1];
    Rational norm = a * a - p * a * b + q * b * b;
    return Element(field_, {Rational((a - p * b) / norm), Rational(-b / norm)});
  }
  auto eg = extended_gcd(as_poly(), field_->min_poly());
  if (eg.gcd.degree() != 0) throw DomainError("element is a zero divisor; minimal polynomial is reducible");
  return field_->from_poly(eg.s);
}

Element Element::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Element r = field_->one();
  Element b = *this;
  auto k = static_cast<unsigned long>(e);
  while (k > 0) {
    if (k & 1UL) r *= b;
    k >>= 1UL;
    if (k > 0) b *= b;
  }
  return r;
}

std::string format_sqrt_form(const Rational& a, const Rational& b, const Integer& radicand) {
  if (sgn(b) == 0) return belyi::to_string(a);
  std::string root = "sqrt(" + belyi::to_string(radicand) + ")";
  std::string bs;
  if (b == 1) {
    bs = root;
  } else if (b == -1) {
    bs = "-" + root;
  } else {
    bs = belyi::to_string(b) + "*" + root;
  }
  if (sgn(a) == 0) return bs;
  std::string out = belyi::to_string(a);
  if (bs[0] != '-') out += "+";
  return out + bs;
}

std::string Element::to_string() const {
  if (field_->degree() == 1) return belyi::to_string(c_[0]);
  if (field_->quadratic_data()) {
    auto q = to_quadratic(*this);
    return format_sqrt_form(q.a, q.b, q.radicand);
  }
  return belyi::to_string(as_poly(), "g");
}

Element apply_automorphism(const Element& x) {
  const auto& f = x.field();
  if (!f->is_quadratic()) throw DomainError("automorphisms are only supported for quadratic fields");
  // g -> -p - g
  const Rational& p = f->min_poly().coeff(1);
  const auto& c = x.coords();
  return f->element({Rational(c[0] - p * c[1]), Rational(-c[1])});
}

KPoly conjugate(const KPoly& f) {
  return f.map([](const Element& e) { return apply_automorphism(e); });
}

QuadraticElement to_quadratic(const Element& x) {
  const auto& data = x.field()->quadratic_data();
  if (!data) throw DomainError("element of a non-quadratic field");
  const auto& c = x.coords();
  return {c[0] + c[1] * data->gen_rational, c[1] * data->gen_sqrt, data->radicand};
}

Element from_quadratic(const FieldPtr& field, const QuadraticElement& q) {
  const auto& data = field->quadratic_data();
  if (!data) throw DomainError("target field is not quadratic");
  if (sgn(q.b) != 0 && q.radicand != data->radicand)
    throw DomainError("radicand mismatch: sqrt(" + to_string(q.radicand) + ") is not in " + field->name());
  return field->from_sqrt_form(q.a, q.b);
}

namespace {
void check_radicands(const QuadraticElement& x, const QuadraticElement& y) {
  if (sgn(x.b) != 0 && sgn(y.b) != 0 && x.radicand != y.radicand)
    throw DomainError("quadratic elements from different fields");
}
Integer common_radicand(const QuadraticElement& x, const QuadraticElement& y) {
  return sgn(x.b) != 0 ? x.radicand : y.radicand;
}
}  // namespace

QuadraticElement operator+(const QuadraticElement& x, const QuadraticElement& y) {
  check_radicands(x, y);
  return {x.a + y.a, x.b + y.b, common_radicand(x, y)};
}

QuadraticElement operator-(const QuadraticElement& x, const QuadraticElement& y) {
  check_radicands(x, y);
  return {x.a - y.a, x.b - y.b, common_radicand(x, y)};
}

QuadraticElement operator*(const QuadraticElement& x, const QuadraticElement& y) {
  check_radicands(x, y);
  Integer d = common_radicand(x, y);
  return {x.a * y.a + x.b * y.b * Rational(d), x.a * y.b + x.b * y.a, d};
}

QuadraticElement operator/(const QuadraticElement& x, const QuadraticElement& y) {
  check_radicands(x, y);
  Rational n = y.norm();
  if (sgn(n) == 0) throw DomainError("division by zero");
  QuadraticElement num = x * y.conjugate();
  return {num.a / n, num.b / n, num.radicand};
}

std::string QuadraticElement::to_string() const { return format_sqrt_form(a, b, radicand); }

Element Ring<Element>::zero(const FieldPtr& f) {
  if (!f) throw DomainError("polynomial without a coefficient field");
  return f->zero();
}

Element Ring<Element>::one(const FieldPtr& f) {
  if (!f) throw DomainError("polynomial without a coefficient field");
  return f->one();
}

Element Ring<Element>::from_int(const FieldPtr& f, long n) {
  if (!f) throw DomainError("polynomial without a coefficient field");
  return f->from_rational(Rational(n));
}

KPoly lift(const QPoly& f, const FieldPtr& field) {
  std::vector<Element> c;
  c.reserve(f.coeffs().size());
  for (const auto& q : f.coeffs()) c.push_back(field->from_rational(q));
  return KPoly(field, std::move(c));
}

bool has_rational_coefficients(const KPoly& f) {
  for (const auto& c : f.coeffs())
    if (!c.is_rational()) return false;
  return true;
}

QPoly lower(const KPoly& f) {
  std::vector<Rational> c;
  c.reserve(f.coeffs().size());
  for (const auto& e : f.coeffs()) c.push_back(e.rational_value());
  return QPoly(QQ{}, std::move(c));
}

}  // namespace belyi
