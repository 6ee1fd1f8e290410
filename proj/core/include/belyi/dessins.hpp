#pragma once

// Dessins as permutation triples (s0, s1, s_inf) with s0 s1 s_inf = 1.
// Products act left to right: (s0 s1)(i) = s1(s0(i)). Points are 0-based
// internally and 1-based in cycle notation.

#include <string>
#include <vector>

#include "belyi/arith.hpp"

namespace belyi {

using Perm = std::vector<int>;  // p[i] is the image of i

Perm perm_identity(int n);
Perm perm_inverse(const Perm& p);
/// Left-to-right product: apply a, then b.
Perm perm_then(const Perm& a, const Perm& b);
bool perm_valid(const Perm& p);
/// Cycle lengths, descending.
std::vector<int> cycle_type(const Perm& p);
int cycle_count(const Perm& p);
/// "(1 2)(3 4)", fixed points omitted, "()" for the identity.
std::string cycle_string(const Perm& p);
/// Parses cycle notation over {1..n}.
Perm parse_cycles(const std::string& text, int n);

struct PermutationTriple {
  int n = 0;
  Perm sigma0, sigma1, sigma_inf;
};

/// Builds the triple; throws DomainError unless <s0, s1> is transitive.
PermutationTriple triple_validate(const Perm& sigma0, const Perm& sigma1);
bool is_transitive(const Perm& a, const Perm& b);

struct Passport {
  std::vector<int> type0, type1, type_inf;
  int genus;
};

int genus(const PermutationTriple& t);
Passport passport(const PermutationTriple& t);

/// Order of a permutation group given by generators (Schreier-Sims).
Integer group_order(const std::vector<Perm>& gens, int n);

struct CombinatoricsLimits {
  int max_monodromy_degree = 12;
  int max_enumeration_degree = 7;
};

/// |<s0, s1>|.
Integer monodromy_order(const PermutationTriple& t, const CombinatoricsLimits& lim = {});
/// Primes dividing the monodromy order.
std::vector<Integer> beckmann_primes(const PermutationTriple& t, const CombinatoricsLimits& lim = {});

struct DessinClass {
  PermutationTriple triple;  // lexicographically least (s0, s1) in its class
  Integer class_size;        // number of transitive pairs conjugate to it
};

struct Census {
  int n = 0;
  std::vector<DessinClass> classes;  // ordered by (s0, s1)
  Integer raw_count() const;         // sum of class sizes
};

/// Transitive pairs up to simultaneous conjugation.
Census enumerate_dessins(int n, unsigned jobs = 1, const CombinatoricsLimits& lim = {});

}  // namespace belyi
