#include "belyi/hat_check.hpp"

#include <algorithm>

#include "belyi/hat.hpp"
#include "belyi/heights.hpp"
#include "belyi/parallel.hpp"
#include "belyi/roots.hpp"

namespace belyi {

std::size_t HatCheckReport::failures() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const HatCheckRecord& r) {
    return !(r.degree_ok && r.height_ok && r.numeric_ok);
  }));
}

double hat_numeric_error(const QPoly& f, const QPoly& fh, mpfr_prec_t prec) {
  const BigFloat zero(0L, prec);
  std::vector<Complex> coeffs{Complex(BigFloat(1L, prec), zero)};  // running product, constant first
  for (const auto& d : roots_with_multiplicity(f.derivative(), prec)) {
    Complex v(zero, zero);
    for (std::size_t i = f.coeffs().size(); i-- > 0;)
      v = v * d.center + Complex(BigFloat(f.coeffs()[i], prec), zero);
    // multiply by (X - v)
    std::vector<Complex> next(coeffs.size() + 1, Complex(zero, zero));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] = next[i + 1] + coeffs[i];
      next[i] = next[i] - coeffs[i] * v;
    }
    coeffs = std::move(next);
  }
  if (static_cast<int>(coeffs.size()) - 1 != fh.degree()) return 1e300;
  BigFloat scale(1L, prec);
  for (const auto& c : fh.coeffs()) scale = max(scale, abs(BigFloat(c, prec)));
  BigFloat err = zero;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Complex diff = coeffs[i] - Complex(BigFloat(fh.coeff(i), prec), zero);
    err = max(err, diff.abs());
  }
  return (err / scale).to_double();
}

HatCheckReport verify_hat_properties(const HatCheckOptions& opt) {
  if (opt.trials < 1 || opt.max_deg < 2) throw DomainError("hat check needs trials >= 1 and max degree >= 2");
  SeededRng rng(opt.seed);
  std::vector<QPoly> polys;
  for (int t = 0; t < opt.trials; ++t) {
    const int n = static_cast<int>(rng.range(2, opt.max_deg));
    std::vector<Rational> c;
    for (int i = 0; i < n; ++i) c.emplace_back(rng.range(-opt.max_coeff, opt.max_coeff));
    c.emplace_back(1);
    polys.emplace_back(QQ{}, std::move(c));
  }
  HatCheckReport rep;
  rep.records.resize(polys.size());
  parallel_for(polys.size(), opt.jobs, [&](std::size_t i) {
    const QPoly& f = polys[i];
    const int n = f.degree();
    QPoly fh = hat(f);
    HatCheckRecord r;
    r.poly = to_string(f);
    r.hat = to_string(fh);
    r.degree_ok = fh.degree() == n - 1;
    const auto un = static_cast<unsigned long>(n);
    Integer bound = ipow(Integer(2), un * un) * ipow(Integer(n + 1), 2 * un) * ipow(height_poly_q_value(f), 2 * un);
    r.height_ok = height_poly_q_value(fh) <= bound;
    r.numeric_error = with_precision_retry([&](mpfr_prec_t p) { return hat_numeric_error(f, fh, p); },
                                           opt.precision, 8 * opt.precision);
    r.numeric_ok = r.numeric_error <= opt.tolerance;
    rep.records[i] = std::move(r);
  });
  for (const auto& r : rep.records) rep.max_numeric_error = std::max(rep.max_numeric_error, r.numeric_error);
  return rep;
}

}  // namespace belyi
