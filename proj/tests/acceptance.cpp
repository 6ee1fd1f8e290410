// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "belyi/bounds.hpp"
#include "belyi/dessins.hpp"
#include "belyi/hat.hpp"
#include "belyi/hat_check.hpp"
#include "belyi/heights.hpp"
#include "belyi/pipeline.hpp"
#include "belyi/poly_algebra.hpp"
#include "belyi/quadratic_dessins.hpp"
#include "chain_expand.hpp"
#include "cli.hpp"
#include "dessin_oracle.hpp"
#include "support.hpp"

using namespace belyi;
using namespace belyi::testing;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct CliResult {
  int code;
  std::string out, err;
};

CliResult cli_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> json_lines(const std::string& s) {
  std::vector<json> v;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) v.push_back(json::parse(line));
  return v;
}

bool prime_oracle(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool squarefree_oracle(long n) {
  for (long p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

// Full certificate: equations, log-derivative, Belyi, nondegenerate, field of
// moduli equal to the coefficient field.
bool certificate_ok(const json& cert) {
  const auto& c = cert["checks"];
  return cert["verified"] == true && c["equations"] == true && c["log_derivative"] == true &&
         c["belyi"] == true && c["nondegenerate"] == true && c["moduli_field"] == cert["field"];
}

bool certificate_ok(const QuadraticDessin& d, const DessinVerification& v) {
  return v.verified() && v.moduli == ModuliField::kBaseField && d.field->is_quadratic();
}

// 1. Every prime 7 < p <= 100, p != 1 mod 12: degree of Q(sqrt(-p)) is p.
Outcome criterion1() {
  int checked = 0, expected = 0;
  for (long p = 8; p <= 100; ++p) {
    if (!prime_oracle(p) || p % 12 == 1) continue;
    ++expected;
    CliResult r = cli_run({"degree", "--field", "x^2+" + std::to_string(p)});
    if (r.code != 0) return {false, "p=" + std::to_string(p) + ": " + r.err};
    json j = json::parse(r.out);
    if (j["lower"] != p || j["upper"] != p || j["exact"] != true || j["lower_heuristic"] != false)
      return {false, "p=" + std::to_string(p) + ": " + j.dump()};
    if (j["field"] != "Q(sqrt(-" + std::to_string(p) + "))" || !certificate_ok(j["certificate"]))
      return {false, "p=" + std::to_string(p) + ": certificate " + j["certificate"].dump()};
    if (j["certificate"]["degree"] != p) return {false, "p=" + std::to_string(p) + ": certificate degree"};
    ++checked;
  }
  return {checked == expected && expected == 16, std::to_string(checked) + " primes, lower = upper = p, certificates verified"};
}

// 2. Ten seeded triples a < b < c with a+b+c = p prime <= 60.
Outcome criterion2() {
  SeededRng rng(2024);
  std::set<std::tuple<long, long, long>> seen;
  std::ostringstream log;
  int done = 0;
  while (done < 10) {
    long a = rng.range(1, 56), b = rng.range(1, 56), c = rng.range(1, 56);
    if (!(a < b && b < c)) continue;
    const long p = a + b + c;
    if (p > 60 || !prime_oracle(p) || !seen.insert({a, b, c}).second) continue;
    const Integer radicand = squarefree_part(-Integer(a) * b * c * p).squarefree;
    FieldPtr k = NumberField::quadratic(radicand);
    BoundsReport r = belyi_degree(k);
    const std::string tag = "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
    if (r.lower.heuristic || r.lower.value != p) return {false, tag + ": lower " + to_string(r.lower.value)};
    if (!r.upper.value || *r.upper.value != p || !r.exact) return {false, tag + ": upper not p"};
    if (!r.upper.certificate || !certificate_ok(*r.upper.certificate, *r.upper.verification))
      return {false, tag + ": certificate"};
    // the triple itself realizes the field with degree p
    QuadraticDessin own = family_solve({a, b, c});
    if (own.degree != p || own.radicand != radicand || !certificate_ok(own, verify_dessin(own)))
      return {false, tag + ": own triple"};
    log << (done ? " " : "") << tag << "->" << p;
    ++done;
  }
  return {true, log.str()};
}

// 3. 5 <= d <= 30 squarefree: degrees 2d+4 and 2d-2 with the right fields.
Outcome criterion3() {
  int n = 0, expected = 0;
  for (long d = 5; d <= 30; ++d) {
    if (!squarefree_oracle(d)) continue;
    ++expected;
    QuadraticDessin im = construct_imaginary(d);
    QuadraticDessin re = construct_real(d);
    if (im.degree != 2 * d + 4 || im.map.degree() != 2 * d + 4 || im.radicand != -d ||
        !certificate_ok(im, verify_dessin(im)))
      return {false, "imaginary d=" + std::to_string(d)};
    if (re.degree != 2 * d - 2 || re.map.degree() != 2 * d - 2 || re.radicand != d ||
        !certificate_ok(re, verify_dessin(re)))
      return {false, "real d=" + std::to_string(d)};
    ++n;
  }
  return {n == expected, std::to_string(n) + " radicands, both constructions verified"};
}

// 4. delta2 --limit 200.
Outcome criterion4() {
  CliResult r = cli_run({"delta2", "--limit", "200"});
  if (r.code != 0) return {false, r.err};
  auto lines = json_lines(r.out);
  if (lines.empty() || lines.back()["summary"] != true) return {false, "no summary line"};
  std::vector<long> expect;
  for (long p = 8; p <= 200; ++p)
    if (prime_oracle(p) && p % 12 != 1) expect.push_back(p);
  if (lines.size() != expect.size() + 1) return {false, "row count"};
  bool equality = false;
  for (std::size_t i = 0; i < expect.size(); ++i) {
    const json& row = lines[i];
    const long p = expect[i];
    const long disc = (p % 4 == 3) ? -p : -4 * p;  // field discriminant of Q(sqrt(-p))
    if (row["p"] != p || row["degree"] != p || row["exact"] != true || row["verified"] != true ||
        row["discriminant"] != disc)
      return {false, "p=" + std::to_string(p) + ": " + row.dump()};
    // both printed inequalities, in integers
    if (!(4 * p >= -disc) || !(p <= 24 * -disc)) return {false, "inequality p=" + std::to_string(p)};
    if (row["p_ge_quarter_disc"] != true || row["p_le_24_disc"] != true) return {false, "flags p=" + std::to_string(p)};
    const bool eq = 4 * p == -disc;
    if (row["equality"] != eq) return {false, "equality flag p=" + std::to_string(p)};
    equality |= eq;
  }
  const json& s = lines.back();
  return {equality && s["all_ok"] == true && s["equality_attained"] == true,
          std::to_string(expect.size()) + " primes exact; equality at p = 1 mod 4; ratio in [" +
              s["min_ratio"].get<std::string>() + ", " + s["max_ratio"].get<std::string>() + "]"};
}

// 5. Hat transform on 100 seeded monic polynomials.
Outcome criterion5() {
  HatCheckReport r = verify_hat_properties(HatCheckOptions{});
  if (r.records.size() != 100) return {false, "record count"};
  // independent re-check: exact degree drop and agreement of the two exact routes
  SeededRng rng(5);
  for (int t = 0; t < 100; ++t) {
    QPoly f = random_qpoly(rng, static_cast<int>(rng.range(2, 8)), 10, true);
    QPoly h = hat(f);
    if (h.degree() != f.degree() - 1 || h != hat(f, HatRoute::kCharPoly)) return {false, "routes " + to_string(f)};
    const long n = f.degree();
    Integer bound = ipow(Integer(2), static_cast<unsigned long>(n * n)) * ipow(Integer(n + 1), static_cast<unsigned long>(2 * n)) *
                    ipow(height_poly_q_value(f), static_cast<unsigned long>(2 * n));
    if (height_poly_q_value(h) > bound) return {false, "height " + to_string(f)};
  }
  std::ostringstream d;
  d << "100 polynomials, " << r.failures() << " failures, max numeric error " << r.max_numeric_error;
  return {r.failures() == 0 && r.max_numeric_error < 1e-6, d.str()};
}

// 6. Height lemmas: 200 random polynomials, 50 factored instances.
Outcome criterion6() {
  HeightReport r = verify_height_inequalities(HeightCheckOptions{});
  std::map<std::string, std::set<std::string>> instances;
  for (const auto& rec : r.records) instances[rec.lemma].insert(rec.instance);
  const bool coverage = instances["lemma4"].size() == 200 && instances["eq1"].size() == 200 &&
                        instances["eq2_lower"].size() == 50 && instances["eq2_upper"].size() == 50;
  std::ostringstream d;
  d << r.records.size() << " checks (lemma4 " << instances["lemma4"].size() << ", eq1 " << instances["eq1"].size()
    << ", eq2 " << instances["eq2_upper"].size() << "), " << r.failures() << " failures, " << r.indeterminate()
    << " indeterminate";
  return {coverage && r.failures() == 0 && r.indeterminate() == 0, d.str()};
}

std::size_t max_bits(const PointSet& s) {
  std::size_t b = 0;
  for (const auto& x : s.points) b = std::max(b, bit_length(abs(Integer(x.get_num()))) + bit_length(Integer(x.get_den())));
  return b;
}

// 7. Pipeline n = 1 and n = 2, each followed by the rational reduction.
Outcome criterion7() {
  std::ostringstream d;
  bool ok = true;
  {
    auto q = NumberField::rationals();
    PipelineResult r = pipeline_run(q, default_basis(q));
    std::vector<int> degs;
    bool bound = true;
    for (const auto& s : r.report) {
      degs.push_back(s.degree);
      bound &= s.s_size <= 5;
    }
    const PointSet& last = r.chain.stages.back().s_set;
    // independent: expand the degree-24 composite, its critical values lie in S
    QPoly g = expand(r.chain);
    QPoly cv = critical_value_poly(RationalMap<Rational>::polynomial(g)).finite;
    QPoly target = QPoly::constant(Rational(1));
    for (const auto& s : last.points) target = target * (QPoly::variable(QQ{}) - QPoly::constant(s));
    const bool contained = squarefree_part(cv).divides(target);
    CompositionChain red = litcanu_reduce(last);
    ChainCheck chk = verify_chain(concat(r.chain, red), true);
    const bool n1 = degs == std::vector<int>{4, 3, 2, 1} && bound && r.final_rational && contained && chk.ok &&
                    chk.final_in_01inf;
    d << "n=1 " << (n1 ? "ok" : "BAD") << " (stages 4,3,2,1; |S|<=5; total degree " << to_string(Integer(r.chain.degree() * red.degree()))
      << ")";
    ok &= n1;
  }
  {
    auto k = NumberField::quadratic(Integer(5));
    PipelineResult r = pipeline_run(k, default_basis(k));
    bool bound = true;
    for (const auto& s : r.report) bound &= s.s_size <= 10;
    const bool f1 = r.chain.stages.size() > 1 && r.chain.stages[1].kind == StageKind::kPolynomialQ &&
                    r.report[1].degree == 8;
    const bool structure = f1 && bound && r.final_rational && verify_chain(r.chain, false).ok;
    d << "; n=2 structure " << (structure ? "ok" : "BAD") << " (f1 rational of degree 8, |S|<=10)";
    ok &= structure;
    const PointSet& last = r.chain.stages.back().s_set;
    try {
      CompositionChain red = litcanu_reduce(last);
      ChainCheck chk = verify_chain(concat(r.chain, red), true);
      d << ", reduction " << (chk.ok && chk.final_in_01inf ? "ok" : "BAD");
      ok &= chk.ok && chk.final_in_01inf;
    } catch (const ReductionBudgetExceeded& e) {
      d << ", reduction infeasible: final S has rationals of " << max_bits(last) << " bits, " << e.what();
      ok = false;
    }
  }
  return {ok, d.str()};
}

// 8. Decomposition and affine-relation round trips.
Outcome criterion8() {
  SeededRng rng(8);
  for (int t = 0; t < 100; ++t) {
    const int dh = static_cast<int>(rng.range(1, 4)), dg = static_cast<int>(rng.range(1, 4));
    QPoly h = random_qpoly(rng, dh, 9, true);
    h = h - QPoly::constant(h.coeff(0));
    QPoly g = random_qpoly(rng, dg, 9, false);
    auto got = decompose(compose(g, h), dh);
    if (!got || got->h != h || got->g != g) return {false, "decompose " + to_string(g) + " o " + to_string(h)};
  }
  for (int t = 0; t < 100; ++t) {
    QPoly h1 = random_qpoly(rng, static_cast<int>(rng.range(1, 6)), 9, false);
    Rational a = random_rational(rng, 9);
    if (sgn(a) == 0) a = 1;
    Rational b = random_rational(rng, 9);
    auto got = affine_relate(h1, h1 * a + QPoly::constant(b));
    if (!got || got->first != a || got->second != b) return {false, "affine_relate " + to_string(h1)};
  }
  return {true, "100 decompositions and 100 affine relations recovered exactly"};
}

// 9. Enumeration against the brute-force oracle.
Outcome criterion9() {
  std::ostringstream d;
  for (int n = 1; n <= 4; ++n) {
    OracleCensus o = census_oracle(n);
    Census c = enumerate_dessins(n);
    if (c.classes.size() != o.classes || c.raw_count() != Integer(static_cast<unsigned long>(o.raw)))
      return {false, "count n=" + std::to_string(n)};
    for (const auto& cl : c.classes) {
      const auto& t = cl.triple;
      if (!o.class_sizes.count({t.sigma0, t.sigma1})) return {false, "representative n=" + std::to_string(n)};
      const int chi = cycles_oracle(t.sigma0) + cycles_oracle(t.sigma1) + cycles_oracle(t.sigma_inf) - n;
      if (chi % 2 != 0 || genus(t) != 1 - chi / 2 || genus(t) < 0) return {false, "genus n=" + std::to_string(n)};
      for (const auto& p : beckmann_primes(t))
        if (p > n) return {false, "beckmann n=" + std::to_string(n)};
    }
    d << (n > 1 ? ", " : "") << "n=" << n << ": " << c.classes.size();
  }
  const bool small = enumerate_dessins(1).classes.size() == 1 && enumerate_dessins(2).classes.size() == 3;
  return {small, d.str()};
}

// 10. Byte-identical output for repeated runs of seeded commands.
Outcome criterion10() {
  const std::vector<std::vector<std::string>> cmds = {
      {"degree", "--field", "x^2+11"},
      {"bounds", "--field", "x^2-5"},
      {"construct", "--triple", "2,3,6"},
      {"search", "--d", "-11", "--max-degree", "14"},
      {"hat", "--trials", "100", "--seed", "1"},
      {"heights", "--seed", "1"},
      {"pipeline", "--field", "x^2-5"},
      {"reduce", "--field", "x"},
      {"enumerate", "--degree", "5"},
      {"delta2", "--limit", "200"},
  };
  for (const auto& c : cmds) {
    CliResult a = cli_run(c), b = cli_run(c);
    auto par = c;
    par.insert(par.begin(), {"--jobs", "2"});
    CliResult p = cli_run(par);
    if (a.code != 0) return {false, c.front() + ": " + a.err};
    if (a.out != b.out || a.out != p.out) return {false, c.front() + " differs between runs"};
  }
  return {true, std::to_string(cmds.size()) + " commands, repeated and with --jobs 2"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"quadratic prime fields: exact degree p", criterion1},
      {"family triples with prime sum: exact degree", criterion2},
      {"imaginary and real constructions", criterion3},
      {"delta(2) harness", criterion4},
      {"hat transform properties", criterion5},
      {"height inequalities", criterion6},
      {"construction pipeline and reduction", criterion7},
      {"decomposition round trips", criterion8},
      {"dessin enumeration", criterion9},
      {"determinism", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].first << ": " << o.detail
              << " (" << std::fixed << std::setprecision(1) << secs << "s)" << std::endl;
  }
  return failed;
}
