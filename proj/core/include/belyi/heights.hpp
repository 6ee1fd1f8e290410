#pragma once

// Heights: exact over Q, Mahler-measure based for algebraic numbers, and the
// checks of the standard height inequalities on generated instances.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "belyi/bigfloat.hpp"
#include "belyi/number_field.hpp"

namespace belyi {

struct Height {
  double value = 1.0;
  bool exact = true;
  double error_bound = 0.0;
  std::optional<Integer> exact_value;  // heights over Q are integers
  // Certified enclosure lo <= H <= hi (equal to the exact value when exact).
  BigFloat lo{Integer(1), 64};
  BigFloat hi{Integer(1), 64};
};

/// H(p/q) = max(|p|, |q|) in lowest terms.
Integer height_rational_value(const Rational& x);
Height height_rational(const Rational& x);

/// Max absolute coefficient of the primitive integer multiple of f.
Integer height_poly_q_value(const QPoly& f);
Height height_poly_q(const QPoly& f);

/// Affine height H([1, a_0, ..., a_n]); equals height_poly_q_value when some
/// coefficient is 1 (monic f in particular). The evaluation bound
/// H(f(x)) <= (n+1) H(f) H(x)^n needs this one: the projective height is
/// blind to scaling f, f(x) is not.
Integer height_poly_q_affine_value(const QPoly& f);

/// Minimal polynomial over Q of an element, made monic.
QPoly minimal_polynomial(const Element& x);

struct MahlerMeasure {
  BigFloat lo;
  BigFloat hi;
};

/// Certified enclosure of the Mahler measure of a nonzero rational
/// polynomial (of its primitive integer multiple). Throws
/// PrecisionInsufficient when the roots cannot be separated.
MahlerMeasure mahler_measure(const QPoly& f, mpfr_prec_t prec);

/// M(p)^(1/deg p) for the primitive minimal polynomial p of x. Throws
/// PrecisionInsufficient when the relative enclosure width exceeds 2^-20.
Height height_algebraic(const Element& x, mpfr_prec_t prec);

/// height_algebraic with automatic precision doubling up to max_prec.
Height height_algebraic_auto(const Element& x, mpfr_prec_t prec = 128, mpfr_prec_t max_prec = 4096);

enum class CheckStatus { kPass, kFail, kIndeterminate };
std::string to_string(CheckStatus s);

struct InequalityRecord {
  std::string lemma;
  std::string instance;
  std::string lhs;
  std::string rhs;
  std::string margin;  // rhs - lhs, or the certified lower bound for it
  CheckStatus status;
};

struct HeightReport {
  std::vector<InequalityRecord> records;
  // Largest lhs/rhs ratio seen per lemma, as a double.
  std::vector<std::pair<std::string, double>> max_ratio;
  std::size_t failures() const;
  std::size_t indeterminate() const;
};

struct HeightCheckOptions {
  int trials = 200;
  std::uint64_t seed = 1;
  int max_deg = 6;
  int max_coeff = 20;
  int factored_trials = 50;
  mpfr_prec_t precision = 128;
  mpfr_prec_t max_precision = 4096;
  unsigned jobs = 1;
};

/// Lemma 4 (H(f') <= n H(f)) and the evaluation bound
/// H(f(x)) <= (n+1) H(f) H(x)^n, exactly, on `trials` generated polynomials;
/// the root-product bounds 2^-n prod H(x_i) <= H(f) <= 2^(n-1) prod H(x_i)
/// with certified numerics on `factored_trials` products of known factors;
/// and the critical-value bound H(hat f) <= 2^(n^2) (n+1)^(2n) H(f)^(2n)
/// exactly on monic instances.
HeightReport verify_height_inequalities(const HeightCheckOptions& opt);

/// Integral basis element w of a quadratic field and the check
/// H(w) <= 2^7 |disc|^(1/2) that bounds H(X + X^2 + w X^3 + X^5).
struct RoyThunderReport {
  std::string field;
  Integer discriminant;
  std::string omega;
  Height omega_height;
  std::string bound;  // 2^7 |disc|^(1/2), decimal
  CheckStatus status;
};
RoyThunderReport roy_thunder_check(const FieldPtr& k, mpfr_prec_t prec = 128);

/// Deterministic generator shared by the seeded checks: mt19937_64 with
/// explicit modular reduction, so results do not depend on the standard
/// library's distribution implementations.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Integer in [lo, hi] (modulo bias is irrelevant here).
  long range(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace belyi
