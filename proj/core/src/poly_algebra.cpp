#include "belyi/poly_algebra.hpp"

namespace belyi {

QPoly norm_poly_resultant(const KPoly& f) {
  if (f.is_zero()) throw DomainError("norm of the zero polynomial");
  const FieldPtr& k = f.context();
  if (k->degree() == 1) return lower(f);
  // f as a polynomial in a with coefficients in Q[X].
  const auto n = static_cast<std::size_t>(k->degree());
  std::vector<QPoly> in_a(n, QPoly(QQ{}));
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const auto& c = f.coeffs()[i].coords();
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(c[j]) == 0) continue;
      in_a[j] += QPoly::monomial(c[j], i);
    }
  }
  Polynomial<QPoly> fa(QQ{}, std::move(in_a));
  Polynomial<QPoly> m = lift_constant(k->min_poly());
  if (fa.degree() <= 0) {
    // f has rational coefficients: the norm is f^n.
    QPoly base = fa.is_zero() ? QPoly(QQ{}) : fa.lc();
    return base.pow(n);
  }
  return resultant(m, fa);
}

QPoly norm_poly(const KPoly& f) {
  if (f.is_zero()) throw DomainError("norm of the zero polynomial");
  const FieldPtr& k = f.context();
  if (k->degree() == 1) return lower(f);
  if (k->is_quadratic()) return lower(f * conjugate(f));
  return norm_poly_resultant(f);
}

}  // namespace belyi
