#pragma once

// Integer and rational scalars, plus the small number-theoretic helpers the
// rest of the library needs (squarefree parts, discriminants, trial-division
// factorization).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace belyi {

using Integer = mpz_class;
using Rational = mpq_class;  // canonical (lowest terms, positive denominator)

/// Raised when an operation's mathematical preconditions fail on valid input
/// (division by zero, non-squarefree radicand, intransitive triple, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p" or "p/q".
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

Integer ipow(const Integer& base, unsigned long exp);
Rational rpow(const Rational& base, long exp);

/// Floor of the square root of a nonnegative integer.
Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);

bool is_prime(const Integer& n);
bool is_prime(std::int64_t n);

/// Prime factorization by trial division, primes ascending with multiplicity
/// collapsed into (prime, exponent) pairs. |n| must be nonzero.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);

/// Distinct primes dividing n, ascending.
std::vector<Integer> prime_divisors(const Integer& n);

/// n = s * c^2 with s squarefree and sign(s) = sign(n).
struct SquarefreeDecomposition {
  Integer squarefree;
  Integer cofactor;
};
SquarefreeDecomposition squarefree_part(const Integer& n);

bool is_squarefree(const Integer& n);

/// Discriminant of Q(sqrt d): d when d = 1 (mod 4), 4d otherwise.
Integer quadratic_discriminant(const Integer& d);

/// Primes p with lo <= p <= hi, ascending.
std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi);

/// Largest k with 2^k <= |x|, and 0 for |x| <= 1. Used for size estimates.
std::size_t bit_length(const Integer& x);

}  // namespace belyi
