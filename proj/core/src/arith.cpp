#include "belyi/arith.hpp"

#include <algorithm>
#include <cctype>

namespace belyi {

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  Integer num, den = 1;
  try {
    if (slash == std::string::npos) {
      num = Integer(s, 10);
    } else {
      num = Integer(s.substr(0, slash), 10);
      den = Integer(s.substr(slash + 1), 10);
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
  return make_rational(num, den);
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rational rpow(const Rational& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw DomainError("zero to a negative power");
    return rpow(Rational(1) / base, -exp);
  }
  auto e = static_cast<unsigned long>(exp);
  return make_rational(ipow(base.get_num(), e), ipow(base.get_den(), e));
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw DomainError("square root of a negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool is_prime(std::int64_t n) { return is_prime(Integer(static_cast<long>(n))); }

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n) {
  if (n == 0) throw DomainError("cannot factor zero");
  Integer m = abs(n);
  std::vector<std::pair<Integer, unsigned>> out;
  auto strip = [&](const Integer& p) {
    unsigned e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      m /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  if (m > 1 && is_prime(m)) {
    out.emplace_back(m, 1);
    return out;
  }
  // 6k +- 1 wheel; stop early once the cofactor is prime.
  for (Integer p = 5; p * p <= m; p += 6) {
    std::size_t before = out.size();
    strip(p);
    Integer q = p + 2;
    strip(q);
    if (out.size() != before && m > 1 && is_prime(m)) break;
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

std::vector<Integer> prime_divisors(const Integer& n) {
  std::vector<Integer> ps;
  for (auto& [p, e] : factor_integer(n)) ps.push_back(p);
  return ps;
}

SquarefreeDecomposition squarefree_part(const Integer& n) {
  if (n == 0) throw DomainError("squarefree part of zero");
  Integer s = n < 0 ? Integer(-1) : Integer(1);
  Integer c = 1;
  for (auto& [p, e] : factor_integer(n)) {
    if (e % 2 == 1) s *= p;
    c *= ipow(p, e / 2);
  }
  return {s, c};
}

bool is_squarefree(const Integer& n) {
  if (n == 0) return false;
  return squarefree_part(n).cofactor == 1;
}

Integer quadratic_discriminant(const Integer& d) {
  if (d == 0 || d == 1) throw DomainError("radicand must differ from 0 and 1");
  if (!is_squarefree(d)) throw DomainError("radicand " + to_string(d) + " is not squarefree");
  Integer r = d % 4;
  if (r < 0) r += 4;
  return r == 1 ? d : Integer(4 * d);
}

std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  if (hi < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(hi) + 1, false);
  for (std::int64_t i = 2; i <= hi; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    if (i >= lo) out.push_back(i);
    for (std::int64_t j = i * i; j <= hi; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return out;
}

std::size_t bit_length(const Integer& x) {
  if (abs(x) <= 1) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2) - 1;
}

}  // namespace belyi
