#include "belyi/cover.hpp"

namespace belyi {

std::optional<Rational> exact_root(const Rational& w, int e) {
  if (e < 1) throw DomainError("root degree must be positive");
  if (e == 1) return w;
  if (sgn(w) < 0 && e % 2 == 0) return std::nullopt;
  auto int_root = [e](const Integer& z) -> std::optional<Integer> {
    Integer a = abs(z), r;
    if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(e)) == 0) return std::nullopt;
    return z < 0 ? Integer(-r) : r;
  };
  auto num = int_root(w.get_num());
  auto den = int_root(w.get_den());
  if (!num || !den) return std::nullopt;
  return make_rational(*num, *den);
}

std::optional<Element> exact_root(const Element& w, int e) {
  if (e == 1) return w;
  if (!w.is_rational()) return std::nullopt;
  auto r = exact_root(w.rational_value(), e);
  if (!r) return std::nullopt;
  return w.field()->from_rational(*r);
}

}  // namespace belyi
