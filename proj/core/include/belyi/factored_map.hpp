#pragma once

// Rational maps kept in factored form c * prod P_i^e_i over a number field,
// with P_i monic, squarefree and pairwise coprime. Degrees in the hundreds
// stay cheap: critical values come from the logarithmic derivative and the
// factors are never multiplied out unless asked.

#include <optional>
#include <string>
#include <vector>

#include "belyi/critical.hpp"
#include "belyi/number_field.hpp"
#include "belyi/rational_map.hpp"

namespace belyi {

using KPoint = ProjPoint<Element>;
using KRationalMap = RationalMap<Element>;

struct MapFactor {
  KPoly poly;
  long exponent;
};

/// X -> (aX + b) / (cX + d), ad - bc != 0.
struct Mobius {
  Element a, b, c, d;

  KPoint operator()(const KPoint& p) const;
  /// The unique map sending z1, z2, z3 to w1, w2, w3 (each triple distinct).
  static Mobius from_points(const KPoint& z1, const KPoint& z2, const KPoint& z3, const KPoint& w1,
                            const KPoint& w2, const KPoint& w3);
  Mobius inverse() const;
  Mobius then(const Mobius& next) const;  // next o this
};

class FactoredMap {
 public:
  /// Normalizes factors to monic, folds constants and repeated factors, and
  /// checks that the factors are squarefree and pairwise coprime.
  FactoredMap(Element constant, std::vector<MapFactor> factors);

  static FactoredMap from_rational_map(const KRationalMap& f);

  const Element& constant() const { return constant_; }
  const std::vector<MapFactor>& factors() const { return factors_; }
  const FieldPtr& field() const { return constant_.field(); }

  long numerator_degree() const;
  long denominator_degree() const;
  long degree() const { return std::max(numerator_degree(), denominator_degree()); }
  /// f ~ X^k near infinity.
  long order_at_infinity() const { return numerator_degree() - denominator_degree(); }
  /// Ramification index at infinity.
  long ramification_at_infinity() const;

  KPoint operator()(const KPoint& p) const;
  KRationalMap expand() const;
  /// Numerator of f'/f over the product of the factors:
  /// sum_i e_i P_i' prod_{j != i} P_j.
  KPoly log_derivative_numerator() const;

  /// Applies the nontrivial automorphism of a quadratic field to every
  /// coefficient.
  FactoredMap conjugate() const;
  /// f o phi.
  FactoredMap compose(const Mobius& phi) const;
  bool has_rational_coefficients() const;

  friend bool operator==(const FactoredMap& x, const FactoredMap& y);

 private:
  Element constant_;
  std::vector<MapFactor> factors_;
};

/// Finite critical values as a polynomial in T, via the logarithmic
/// derivative: only the residues of the factors modulo its numerator are
/// ever formed.
CriticalValues<Element> critical_values(const FactoredMap& f);

/// A point labelled by its value and local multiplicity.
struct RamificationPoint {
  KPoint point;
  KPoint value;
  long multiplicity;
  // every point of P^1 with this (value, multiplicity) label is listed
  bool label_complete = false;
};

/// The points whose position and multiplicity are known exactly in the base
/// field: roots of linear factors, infinity, and roots of linear factors of
/// the log-derivative numerator.
std::vector<RamificationPoint> ramification_points(const FactoredMap& f);

enum class ModuliField { kRationals, kBaseField, kUndetermined };
std::string to_string(ModuliField m);

struct ModuliResult {
  ModuliField field;
  std::optional<Mobius> isomorphism;  // witness for kRationals when f is not rational
  std::size_t candidates_tried = 0;
};

/// Decides whether the conjugate cover is isomorphic to f (field of moduli
/// Q) or not (field of moduli K), for K quadratic. kUndetermined when fewer
/// than three points lie in completely known label classes.
ModuliResult moduli_field_quadratic(const FactoredMap& f);
ModuliResult moduli_field_quadratic(const KRationalMap& f);

std::string to_string(const FactoredMap& f);
std::string to_string(const KPoint& p);

}  // namespace belyi
