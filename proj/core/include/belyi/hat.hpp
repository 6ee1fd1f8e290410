#pragma once

// The critical-value polynomial of a monic polynomial f of degree n >= 2:
// the monic degree n-1 polynomial whose roots are f(y) over the roots y of
// f' (with multiplicity).

#include "belyi/resultant.hpp"

namespace belyi {

enum class HatRoute {
  kResultant,  // Res_Y(X - f(Y), f'(Y)), made monic
  kCharPoly,   // characteristic polynomial of multiplication by f in K[Y]/(f')
};

namespace detail {
template <class T>
void check_hat_input(const Polynomial<T>& f) {
  if (f.degree() < 2) throw DomainError("hat needs degree >= 2, got " + std::to_string(f.degree()));
  if (!f.is_monic()) throw DomainError("hat needs a monic polynomial");
}
}  // namespace detail

template <class T>
Polynomial<T> hat_resultant(const Polynomial<T>& f) {
  detail::check_hat_input(f);
  Polynomial<T> r = resultant(parameter_minus(f), lift_constant(f.derivative()));
  return r.monic();
}

template <class T>
Polynomial<T> hat_charpoly(const Polynomial<T>& f) {
  detail::check_hat_input(f);
  using Tr = Ring<T>;
  const auto ctx = f.context();
  const Polynomial<T> d = f.derivative().monic();
  const auto k = static_cast<std::size_t>(d.degree());
  const Polynomial<T> r = f % d;
  Matrix<T> m(k, std::vector<T>(k, Tr::zero(ctx)));
  Polynomial<T> col = r;
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) m[i][j] = col.coeff(i);
    col = col.shifted(1) % d;
  }
  return characteristic_polynomial(std::move(m), ctx);
}

template <class T>
Polynomial<T> hat(const Polynomial<T>& f, HatRoute route = HatRoute::kResultant) {
  return route == HatRoute::kResultant ? hat_resultant(f) : hat_charpoly(f);
}

}  // namespace belyi
