#pragma once

// Affine isomorphisms between polynomial covers: g = f o (uX + v).
//
// A polynomial cover is totally ramified over infinity with infinity alone in
// that fiber, so any isomorphism of covers fixes infinity and is affine.

#include <numeric>
#include <optional>

#include "belyi/number_field.hpp"

namespace belyi {

template <class T>
struct AffineIsomorphism {
  int root_degree;       // e: u is determined up to an e-th root of unity
  T u_power;             // u^e
  std::optional<T> u;    // an explicit u when u^e has an e-th root in the field
  std::optional<T> v;    // v = u*s_g - s_f, present together with u
};

/// Exact e-th root in the coefficient field, if one exists.
std::optional<Rational> exact_root(const Rational& w, int e);
std::optional<Element> exact_root(const Element& w, int e);

/// Decides whether g = f(uX + v) for some u != 0 and v over the algebraic
/// closure, and returns the witness data.
template <class T>
std::optional<AffineIsomorphism<T>> cover_isomorphic_affine(const Polynomial<T>& f, const Polynomial<T>& g) {
  using P = Polynomial<T>;
  using Tr = Ring<T>;
  if (f.degree() != g.degree()) throw DomainError("cover isomorphism needs equal degrees");
  if (f.degree() < 1) throw DomainError("cover isomorphism needs nonconstant polynomials");
  const auto ctx = f.context();
  const int n = f.degree();
  const T nn = Tr::from_int(ctx, n);
  // Depress both: F(X) = f(X - s_f) has no X^(n-1) term.
  const T sf = f.coeff(static_cast<std::size_t>(n - 1)) * Tr::inverse(nn * f.lc());
  const T sg = g.coeff(static_cast<std::size_t>(n - 1)) * Tr::inverse(nn * g.lc());
  const P x = P::variable(ctx);
  const P big_f = compose(f, x - P::constant(sf));
  const P big_g = compose(g, x - P::constant(sg));
  // Now g = f(uX + v) iff G(X) = F(uX), i.e. G_k = F_k u^k.
  if (big_f.coeff(0) != big_g.coeff(0)) return std::nullopt;
  std::vector<int> support;
  for (int k = 1; k <= n; ++k) {
    bool fz = Tr::is_zero(big_f.coeff(static_cast<std::size_t>(k)));
    bool gz = Tr::is_zero(big_g.coeff(static_cast<std::size_t>(k)));
    if (fz != gz) return std::nullopt;
    if (!fz) support.push_back(k);
  }
  // Bezout combination of the support exponents: sum c_k k = e.
  int e = 0;
  std::vector<long> coef(support.size(), 0);
  for (std::size_t i = 0; i < support.size(); ++i) {
    // extended gcd of (e, support[i]) folded into the running combination
    long old_r = e, r = support[i], old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
      long q = old_r / r;
      std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
      std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
      std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
    }
    for (std::size_t j = 0; j < i; ++j) coef[j] *= old_s;
    coef[i] = old_t;
    e = static_cast<int>(old_r);
  }
  auto ratio = [&](int k) -> T {
    return big_g.coeff(static_cast<std::size_t>(k)) * Tr::inverse(big_f.coeff(static_cast<std::size_t>(k)));
  };
  T w = Tr::one(ctx);
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (coef[i] == 0) continue;
    T r = ratio(support[i]);
    if (coef[i] < 0) r = Tr::inverse(r);
    T p = Tr::one(ctx);
    for (long c = 0; c < std::labs(coef[i]); ++c) p = p * r;
    w = w * p;
  }
  for (int k : support) {
    T p = Tr::one(ctx);
    for (int c = 0; c < k / e; ++c) p = p * w;
    if (p != ratio(k)) return std::nullopt;
  }
  AffineIsomorphism<T> out{e, w, std::nullopt, std::nullopt};
  out.u = exact_root(w, e);
  if (out.u) out.v = *out.u * sg - sf;
  return out;
}

}  // namespace belyi
