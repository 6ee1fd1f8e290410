#pragma once

// Field norms of K-polynomials and the functional-decomposition helpers:
// f = g o h with h monic and h(0) = 0, and affine relations h2 = a*h1 + b.

#include <optional>
#include <utility>

#include "belyi/number_field.hpp"
#include "belyi/resultant.hpp"

namespace belyi {

/// prod over embeddings of the conjugated polynomial, as Res_a(m(a), f(a, X)).
/// Monic input gives monic output.
QPoly norm_poly(const KPoly& f);

/// Same norm through the resultant route only (the quadratic fast path in
/// norm_poly multiplies by the conjugate instead).
QPoly norm_poly_resultant(const KPoly& f);

template <class T>
struct Decomposition {
  Polynomial<T> g;
  Polynomial<T> h;
};

/// f = g o h with deg h = d, h monic, h(0) = 0; absent if no such pair exists.
template <class T>
std::optional<Decomposition<T>> decompose(const Polynomial<T>& f, int d) {
  using Tr = Ring<T>;
  static_assert(Tr::kIsField, "decompose requires field coefficients");
  if (f.degree() < 1) throw DomainError("decompose needs a nonconstant polynomial");
  if (d < 1 || f.degree() % d != 0)
    throw DomainError("decomposition degree " + std::to_string(d) + " does not divide " +
                      std::to_string(f.degree()));
  const auto ctx = f.context();
  const int n = f.degree();
  const int r = n / d;
  const Polynomial<T> fm = f.monic();

  // Top-down: the coefficient of X^(n-j) in h^r is r*h_{d-j} plus terms in
  // the already-known h_{d-1}, ..., h_{d-j+1}.
  std::vector<T> hc(static_cast<std::size_t>(d) + 1, Tr::zero(ctx));
  hc[static_cast<std::size_t>(d)] = Tr::one(ctx);
  const T inv_r = Tr::inverse(Tr::from_int(ctx, r));
  for (int j = 1; j < d; ++j) {
    Polynomial<T> partial(ctx, hc);
    T have = partial.pow(static_cast<unsigned long>(r)).coeff(static_cast<std::size_t>(n - j));
    hc[static_cast<std::size_t>(d - j)] = (fm.coeff(static_cast<std::size_t>(n - j)) - have) * inv_r;
  }
  Polynomial<T> h(ctx, std::move(hc));

  // g from the h-adic expansion of f; every digit must be a constant.
  std::vector<T> gc;
  Polynomial<T> rest = f;
  while (!rest.is_zero()) {
    auto [q, rem] = rest.divmod(h);
    if (rem.degree() > 0) return std::nullopt;
    gc.push_back(rem.coeff(0));
    rest = std::move(q);
  }
  Polynomial<T> g(ctx, std::move(gc));
  if (compose(g, h) != f) return std::nullopt;
  return Decomposition<T>{std::move(g), std::move(h)};
}

/// (a, b) with h2 = a*h1 + b, if it exists.
template <class T>
std::optional<std::pair<T, T>> affine_relate(const Polynomial<T>& h1, const Polynomial<T>& h2) {
  if (h1.degree() != h2.degree() || h1.degree() < 1)
    throw DomainError("affine_relate needs polynomials of equal positive degree");
  T a = h2.lc() * Ring<T>::inverse(h1.lc());
  T b = h2.coeff(0) - a * h1.coeff(0);
  if (h1 * a + Polynomial<T>::constant(b) != h2) return std::nullopt;
  return std::make_pair(std::move(a), std::move(b));
}

}  // namespace belyi
