#pragma once

// Determinants and resultants over exact integral domains.
//
// The Sylvester route uses fraction-free (Bareiss) elimination, so it works
// over any ring with exact division, in particular over K[X] when a
// resultant has to be taken with a free parameter. The hybrid `resultant`
// first runs Euclidean reduction steps while one operand has an invertible
// leading coefficient, and falls back to Sylvester on what is left.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "belyi/polynomial.hpp"

namespace belyi {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// det(m) by Bareiss elimination with row pivoting.
template <class T>
T bareiss_determinant(Matrix<T> m, const typename Ring<T>::Context& ctx) {
  using Tr = Ring<T>;
  const std::size_t n = m.size();
  if (n == 0) return Tr::one(ctx);
  bool negate = false;
  T prev = Tr::one(ctx);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (Tr::is_zero(m[k][k])) {
      std::size_t p = k + 1;
      while (p < n && Tr::is_zero(m[p][k])) ++p;
      if (p == n) return Tr::zero(ctx);
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = Tr::exact_div(t, prev);
      }
    }
    prev = m[k][k];
  }
  T det = m[n - 1][n - 1];
  return negate ? T(-det) : det;
}

/// Sylvester matrix: deg g rows of f, then deg f rows of g, highest
/// coefficients first.
template <class T>
Matrix<T> sylvester_matrix(const Polynomial<T>& f, const Polynomial<T>& g) {
  const auto ctx = f.context();
  const std::size_t m = static_cast<std::size_t>(f.degree());
  const std::size_t n = static_cast<std::size_t>(g.degree());
  const std::size_t size = m + n;
  Matrix<T> s(size, std::vector<T>(size, Ring<T>::zero(ctx)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = f.coeff(m - k);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = g.coeff(n - k);
  return s;
}

namespace detail {

template <class T>
T ring_pow(const T& base, std::size_t e, const typename Ring<T>::Context& ctx) {
  T r = Ring<T>::one(ctx);
  T b = base;
  while (e > 0) {
    if (e & 1U) r = r * b;
    e >>= 1U;
    if (e > 0) b = b * b;
  }
  return r;
}

template <class T>
T trivial_resultant(const Polynomial<T>& f, const Polynomial<T>& g, bool& handled) {
  using Tr = Ring<T>;
  handled = true;
  const auto ctx = f.is_zero() ? g.context() : f.context();
  if (f.is_zero() && g.is_zero()) throw DomainError("resultant of two zero polynomials");
  if (f.is_zero() || g.is_zero()) {
    // Res(0, c) = 1 for a nonzero constant c by the empty-product convention.
    if (f.degree() == 0 || g.degree() == 0) return Tr::one(ctx);
    return Tr::zero(ctx);
  }
  if (f.degree() == 0) return ring_pow(f.lc(), static_cast<std::size_t>(g.degree()), ctx);
  if (g.degree() == 0) return ring_pow(g.lc(), static_cast<std::size_t>(f.degree()), ctx);
  handled = false;
  return Tr::zero(ctx);
}

}  // namespace detail

/// Res(f, g) as the determinant of the Sylvester matrix.
template <class T>
T resultant_sylvester(const Polynomial<T>& f, const Polynomial<T>& g) {
  bool handled = false;
  T t = detail::trivial_resultant(f, g, handled);
  if (handled) return t;
  return bareiss_determinant(sylvester_matrix(f, g), f.context());
}

/// Res(f, g) = lc(f)^deg(g) * prod g(roots of f). Equal to
/// resultant_sylvester, but reduces with Euclidean steps where the ring allows.
template <class T>
T resultant(Polynomial<T> f, Polynomial<T> g) {
  using Tr = Ring<T>;
  const auto ctx = f.is_zero() ? g.context() : f.context();
  T scale = Tr::one(ctx);
  for (;;) {
    bool handled = false;
    T t = detail::trivial_resultant(f, g, handled);
    if (handled) return scale * t;
    const std::size_t m = static_cast<std::size_t>(f.degree());
    const std::size_t n = static_cast<std::size_t>(g.degree());
    if (m >= n && Tr::is_unit(g.lc())) {
      // Res(f, g) = (-1)^{mn} Res(g, f) and f = g*q + r.
      Polynomial<T> r = f % g;
      if (r.is_zero()) return Tr::zero(ctx);
      if ((m * n) % 2 == 1) scale = -scale;
      scale = scale * detail::ring_pow(g.lc(), m - static_cast<std::size_t>(r.degree()), ctx);
      f = std::move(g);
      g = std::move(r);
      // now computing Res(f_old_g, r)
      continue;
    }
    if (n >= m && Tr::is_unit(f.lc())) {
      Polynomial<T> r = g % f;
      if (r.is_zero()) return Tr::zero(ctx);
      scale = scale * detail::ring_pow(f.lc(), n - static_cast<std::size_t>(r.degree()), ctx);
      g = std::move(r);
      continue;
    }
    return scale * bareiss_determinant(sylvester_matrix(f, g), ctx);
  }
}

/// Lifts a polynomial over T to a polynomial over T[X] with constant
/// coefficients (for resultants in which X stays a free parameter).
template <class T>
Polynomial<Polynomial<T>> lift_constant(const Polynomial<T>& f) {
  return f.map([](const T& c) { return Polynomial<T>::constant(c); });
}

/// The polynomial X - f(Y), as a polynomial in Y over T[X].
template <class T>
Polynomial<Polynomial<T>> parameter_minus(const Polynomial<T>& f) {
  auto lifted = lift_constant(-f);
  const auto& ctx = f.context();
  return lifted + Polynomial<Polynomial<T>>::constant(Polynomial<T>::variable(ctx));
}

/// det(X*I - m) by reduction to upper Hessenberg form (field coefficients).
template <class T>
Polynomial<T> characteristic_polynomial(Matrix<T> a, const typename Ring<T>::Context& ctx) {
  using Tr = Ring<T>;
  static_assert(Tr::kIsField, "characteristic polynomial requires a field");
  const std::size_t n = a.size();
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t k = 1; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && Tr::is_zero(a[p][k - 1])) ++p;
    if (p == n) continue;
    if (p != k) {
      std::swap(a[p], a[k]);
      for (auto& row : a) std::swap(row[p], row[k]);
    }
    const T inv = Tr::inverse(a[k][k - 1]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (Tr::is_zero(a[i][k - 1])) continue;
      T u = a[i][k - 1] * inv;
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= u * a[k][j];
      for (std::size_t j = 0; j < n; ++j) a[j][k] += u * a[j][i];
    }
  }
  // p_{k+1}(X) = (X - h_kk) p_k - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_i
  std::vector<Polynomial<T>> p;
  p.reserve(n + 1);
  p.emplace_back(ctx, std::vector<T>{Tr::one(ctx)});
  const Polynomial<T> x = Polynomial<T>::variable(ctx);
  for (std::size_t k = 0; k < n; ++k) {
    Polynomial<T> next = (x - Polynomial<T>(ctx, {a[k][k]})) * p[k];
    T prod = Tr::one(ctx);
    for (std::size_t i = k; i-- > 0;) {
      prod = prod * a[i + 1][i];
      if (Tr::is_zero(prod)) break;
      next -= p[i] * T(prod * a[i][k]);
    }
    p.push_back(std::move(next));
  }
  return p.back();
}

}  // namespace belyi
