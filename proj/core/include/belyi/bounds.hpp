#pragma once

// Lower and upper bounds for the Belyi degree of a number field: the largest
// ramified prime from below, verified dessins from above.

#include <optional>
#include <string>
#include <vector>

#include "belyi/quadratic_dessins.hpp"

namespace belyi {

struct RamifiedPrimes {
  std::vector<Integer> primes;  // ascending
  bool exact;                   // false: a superset (primes of the polynomial discriminant)
};

RamifiedPrimes ramified_primes(const FieldPtr& k);

struct LowerBound {
  Integer value;     // largest ramified prime, 1 for Q
  bool heuristic;    // computed from a superset of the ramified primes
};

LowerBound lower_bound(const FieldPtr& k);

struct UpperBound {
  std::optional<long> value;                 // absent: unknown
  std::string method;                        // "prime", "imaginary", "real", "search", "identity"
  std::optional<QuadraticDessin> certificate;
  std::optional<DessinVerification> verification;
};

struct BoundsOptions {
  long search_cap = 200;  // largest degree scanned by the family search
  unsigned jobs = 1;
};

/// Smallest degree among the verified constructions and search hits for a
/// quadratic field.
UpperBound upper_bound_quadratic(const FieldPtr& k, const BoundsOptions& opt = {});

struct BoundsReport {
  std::string field;               // canonical name
  std::optional<Integer> discriminant;
  RamifiedPrimes ramified;
  LowerBound lower;
  UpperBound upper;
  bool exact = false;
};

/// Quadratic fields are canonicalized by their squarefree radicand, so
/// isomorphic presentations give identical reports.
BoundsReport belyi_degree(const FieldPtr& k, const BoundsOptions& opt = {});

struct Delta2Row {
  long p;
  FamilyParams params;
  long degree;
  Integer discriminant;   // of Q(sqrt(-p))
  bool verified;          // full certificate
  bool exact;             // lower = upper = p
  bool lower_ineq;        // p >= |disc| / 4
  bool upper_ineq;        // p <= 24 |disc|
  bool equality;          // p = |disc| / 4
  Rational ratio;         // degree / |disc|
};

struct Delta2Report {
  long limit;
  std::vector<Delta2Row> rows;
  std::vector<long> skipped;  // primes 1 mod 12
  bool all_ok() const;
  bool equality_attained() const;
};

/// Every prime 7 < p <= limit with p != 1 mod 12, in ascending order.
Delta2Report delta2_harness(long limit, unsigned jobs = 1);

}  // namespace belyi
