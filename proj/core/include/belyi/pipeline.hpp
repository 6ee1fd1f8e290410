#pragma once

// The explicit Belyi construction for a number field K: a chain of
// polynomials f_0 (over K), f_1 = N(hat f_0), f_{m+1} = hat f_m over Q,
// followed by a reduction chain pushing the remaining rational branch points
// into {0, 1, infinity}. Compositions are never expanded; branch points are
// tracked stage by stage.

#include <optional>
#include <string>
#include <vector>

#include "belyi/number_field.hpp"

namespace belyi {

/// Thrown when the reduction would need numbers larger than the configured
/// bit budget.
class ReductionBudgetExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A finite subset of P^1: infinity, explicit rationals, and the distinct
/// roots of a polynomial (over K or Q).
struct PointSet {
  bool infinity = false;
  std::vector<Rational> points;  // ascending, distinct
  // At most one locus: over K for the first stage, over Q afterwards.
  std::optional<KPoly> locus_k;
  std::optional<QPoly> locus_q;
  std::size_t locus_roots = 0;  // distinct roots of the locus not among `points`

  std::size_t cardinality() const { return (infinity ? 1 : 0) + points.size() + locus_roots; }
  bool has_locus() const { return locus_k.has_value() || locus_q.has_value(); }
  /// Finite x lies in the set: listed explicitly or a root of the locus.
  bool contains(const Rational& x) const;
  void insert(const Rational& x);
};

enum class StageKind {
  kPolynomialK,  // f_0, coefficients in K
  kPolynomialQ,  // f_m for m >= 1
  kAffine,       // X -> a X + b
  kBelyi,        // X -> c X^m (1 - X)^n, c = (m+n)^(m+n) / (m^m n^n)
};
std::string to_string(StageKind k);

struct ChainStage {
  StageKind kind;
  std::optional<KPoly> poly_k;  // f_0
  std::optional<QPoly> poly_q;  // f_m, m >= 1
  Rational a, b;              // affine stages
  Integer m, n;               // Belyi stages
  Integer degree;
  PointSet s_set;             // the branch set after this stage
  std::optional<Integer> height;  // exact height of a rational polynomial stage
};

struct CompositionChain {
  FieldPtr base_field;
  std::vector<ChainStage> stages;  // innermost first
  Integer degree() const;
};

/// X + X^2 + x_2 X^3 + ... + x_n X^(n+1) + X^(n+3) for a Q-basis
/// (1, x_2, ..., x_n) of K.
KPoly pipeline_init(const FieldPtr& k, const std::vector<Element>& basis);

/// The standard power basis 1, g, ..., g^(n-1), or for quadratic fields with
/// d = 1 mod 4 the integral basis 1, (1 + sqrt d)/2, and 1, sqrt d otherwise.
std::vector<Element> default_basis(const FieldPtr& k);

struct StageReport {
  int index;
  int degree;
  std::optional<Integer> height;
  std::size_t s_size;
  bool s_bound_ok;
};

struct PipelineResult {
  CompositionChain chain;
  std::vector<StageReport> report;
  std::size_t s_bound;  // (n+1)^2 + 1
  bool final_rational;  // S of the last stage lies in P^1(Q)
};

PipelineResult pipeline_run(const FieldPtr& k, const std::vector<Element>& basis);

struct ReductionOptions {
  std::size_t budget_bits = std::size_t(1) << 24;
};

/// Chain of affine and c X^m (1-X)^n stages sending every point of S into
/// {0, 1, infinity}. Each stage's s_set is the running image.
CompositionChain litcanu_reduce(const PointSet& s, const ReductionOptions& opt = {});

/// Closed-form branch values of a reduction stage (empty for affine maps).
PointSet stage_branch_values(const ChainStage& st);

struct ChainCheck {
  bool ok = true;
  std::vector<std::string> problems;
  bool final_in_01inf = false;
};

/// Walks a chain and checks, without expanding anything, that each stage's
/// branch points lie in its tracked s_set and that each s_set contains the
/// image of the previous one. With `require_01inf` the last s_set must lie
/// in {0, 1, infinity}.
ChainCheck verify_chain(const CompositionChain& chain, bool require_01inf);

/// Concatenation of the pipeline chain and its reduction.
CompositionChain concat(const CompositionChain& inner, const CompositionChain& outer);

std::string stage_formula(const ChainStage& st);
std::string to_string(const PointSet& s);

}  // namespace belyi
