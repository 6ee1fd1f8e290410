#pragma once

// The three-factor family f = (1-X)^a (1-xX)^b (1-yX)^c whose logarithmic
// derivative vanishes only at the origin, with x, y in a quadratic field.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "belyi/factored_map.hpp"

namespace belyi {

struct FamilyParams {
  long a = 0, b = 0, c = 0;
  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};
std::string to_string(const FamilyParams& p);

/// abc(b+c) != 0 and a+b+c > 0.
bool family_valid(const FamilyParams& p);
/// a, b, c and a+b+c pairwise distinct.
bool family_distinct(const FamilyParams& p);
/// -abc(a+b+c)
Integer family_delta(const FamilyParams& p);
/// Sum of the positive exponents: the degree of the map.
long family_degree(const FamilyParams& p);

struct QuadraticDessin {
  FamilyParams params;
  Integer delta;
  Integer radicand;  // squarefree part of delta; 1 in the square case
  bool degenerate;   // delta is a perfect square, x and y rational
  FieldPtr field;    // Q(sqrt radicand), or Q
  Element x, y;
  FactoredMap map;
  long degree;
};

/// Closed-form x, y; both defining equations are checked exactly and a
/// failure throws.
QuadraticDessin family_solve(const FamilyParams& p);

/// True iff the numerator of df/f is a nonzero constant times a power of X.
bool verify_log_derivative(const FactoredMap& f);
bool verify_log_derivative(const QuadraticDessin& d);

/// (1-X)^a (1-xX)^b (1-yX)^c for arbitrary x, y in a common field.
FactoredMap family_map(const FamilyParams& p, const Element& x, const Element& y);

/// Degree-p dessin with field Q(sqrt(-p)), p > 7 prime, p != 1 mod 12.
QuadraticDessin construct_prime(long p);
/// (2, d, d+2): degree 2d+4, field Q(sqrt(-d)); d squarefree, d >= 5.
QuadraticDessin construct_imaginary(long d);
/// (-2, d-2, d): degree 2d-2, field Q(sqrt(d)); d squarefree, d >= 5.
QuadraticDessin construct_real(long d);

struct DessinVerification {
  bool equations = false;
  bool log_derivative = false;
  bool belyi = false;
  bool nondegenerate = false;  // xy(x-y)(x-1)(y-1) != 0, or the square case
  ModuliField moduli = ModuliField::kUndetermined;
  bool moduli_is_field = false;  // the field of moduli is the coefficient field
  bool verified() const { return equations && log_derivative && belyi && nondegenerate && moduli_is_field; }
};

DessinVerification verify_dessin(const QuadraticDessin& d);

struct FamilyHit {
  FamilyParams params;
  long degree;
  Integer delta;
};

/// All valid triples with degree <= max_degree whose delta has squarefree
/// part D, sorted by (degree, a, b, c). Field-of-moduli filtering is left to
/// the caller.
std::vector<FamilyHit> search_family_params(long d, long max_degree, unsigned jobs = 1);

/// Solved dessins for the hits above, at most `limit` of them.
std::vector<QuadraticDessin> search_family(long d, long max_degree, unsigned jobs = 1,
                                           std::size_t limit = SIZE_MAX);

}  // namespace belyi
