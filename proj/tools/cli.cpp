#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "belyi/bounds.hpp"
#include "belyi/dessins.hpp"
#include "belyi/hat.hpp"
#include "belyi/hat_check.hpp"
#include "belyi/heights.hpp"
#include "belyi/json.hpp"
#include "belyi/parse.hpp"
#include "belyi/pipeline.hpp"
#include "belyi/quadratic_dessins.hpp"
#include "belyi/roots.hpp"

namespace belyi::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string format = "json";
  std::string output;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  long precision = 128;
  std::string field;
  std::string poly;
  std::string triple;
  std::string points;
  std::string verify;
  std::optional<long> d, p;
  std::optional<long> max_degree;
  std::optional<long> limit;
  std::optional<int> trials;
  std::optional<int> factored_trials;
  std::optional<int> degree;
  std::optional<long> budget_bits;
};

// ---- human rendering: a flat walk over the JSON ----

void print_human(const Json& j, std::ostream& out, const std::string& prefix) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      print_human(it.value(), out, prefix.empty() ? it.key() : prefix + "." + it.key());
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) print_human(j[i], out, prefix + "[" + std::to_string(i) + "]");
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

class Emitter {
 public:
  Emitter(const Config& cfg, std::ostream& out) : cfg_(cfg), out_(&out) {
    if (!cfg.output.empty()) {
      file_.open(cfg.output);
      if (!file_) throw UsageError("cannot open output file " + cfg.output);
      out_ = &file_;
    }
  }
  void object(const Json& j) {
    if (human()) {
      print_human(j, *out_, "");
    } else {
      *out_ << j.dump(2) << "\n";
    }
  }
  void line(const Json& j) {
    if (human()) {
      print_human(j, *out_, "");
      *out_ << "\n";
    } else {
      *out_ << j.dump() << "\n";
    }
  }
  void text(const std::string& s) { *out_ << s << "\n"; }
  bool human() const { return cfg_.format == "human"; }

 private:
  const Config& cfg_;
  std::ostream* out_;
  std::ofstream file_;
};

FieldPtr field_from(const std::string& spec) {
  if (spec.empty()) throw UsageError("--field is required");
  QPoly m;
  try {
    m = parse_qpoly(spec);
  } catch (const ParseError& e) {
    throw UsageError(std::string("bad --field: ") + e.what());
  }
  return NumberField::from_min_poly(m);
}

template <class T>
T need(const std::optional<T>& v, const char* flag) {
  if (!v) throw UsageError(std::string(flag) + " is required");
  return *v;
}

BoundsOptions bounds_options(const Config& c) {
  BoundsOptions o;
  if (c.max_degree) o.search_cap = *c.max_degree;
  o.jobs = c.jobs;
  return o;
}

// ---- subcommands ----

void cmd_bounds(const Config& c, Emitter& em) {
  BoundsReport r = belyi_degree(field_from(c.field), bounds_options(c));
  Json j = to_json(r);
  j.erase("certificate");
  em.object(j);
}

void cmd_degree(const Config& c, Emitter& em) { em.object(to_json(belyi_degree(field_from(c.field), bounds_options(c)))); }

Json dessin_json(const QuadraticDessin& d) { return to_json(d, verify_dessin(d)); }

int cmd_construct(const Config& c, Emitter& em) {
  const int given = !c.triple.empty() + c.p.has_value() + c.d.has_value() + !c.verify.empty();
  if (given != 1) throw UsageError("construct needs exactly one of --triple, --p, --d, --verify");
  if (!c.verify.empty()) {
    std::ifstream in(c.verify);
    if (!in) throw UsageError("cannot read " + c.verify);
    Json rec;
    try {
      rec = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw UsageError(std::string("bad JSON record: ") + e.what());
    }
    if (!rec.contains("triple") || !rec["triple"].is_array() || rec["triple"].size() != 3)
      throw UsageError("record has no triple");
    FamilyParams p{rec["triple"][0].get<long>(), rec["triple"][1].get<long>(), rec["triple"][2].get<long>()};
    Json fresh = dessin_json(family_solve(p));
    Json mismatches = Json::array();
    for (const char* key : {"delta", "squarefree_part", "field", "degree", "x", "y", "map"})
      if (!rec.contains(key) || rec[key] != fresh[key]) mismatches.push_back(key);
    const bool ok = mismatches.empty() && fresh["verified"].get<bool>();
    em.object(Json{{"verify", ok}, {"mismatches", mismatches}, {"record", fresh}});
    return ok ? kOk : kDomainError;
  }
  QuadraticDessin d = [&] {
    if (!c.triple.empty()) {
      std::vector<long> t;
      try {
        t = parse_int_list(c.triple);
      } catch (const ParseError& e) {
        throw UsageError(std::string("bad --triple: ") + e.what());
      }
      if (t.size() != 3) throw UsageError("--triple needs three integers");
      return family_solve({t[0], t[1], t[2]});
    }
    if (c.p) return construct_prime(*c.p);
    // negative d: imaginary construction for Q(sqrt(d)); positive: real
    return *c.d < 0 ? construct_imaginary(-*c.d) : construct_real(*c.d);
  }();
  em.object(dessin_json(d));
  return kOk;
}

void cmd_search(const Config& c, Emitter& em) {
  const long d = need(c.d, "--d");
  const long maxdeg = need(c.max_degree, "--max-degree");
  const auto limit = static_cast<std::size_t>(c.limit.value_or(20));
  for (const auto& dessin : search_family(d, maxdeg, c.jobs, limit)) em.line(dessin_json(dessin));
}

void cmd_hat(const Config& c, Emitter& em) {
  if (!c.poly.empty()) {
    if (c.field.empty()) {
      QPoly f = parse_qpoly(c.poly);
      QPoly h = hat(f);
      if (em.human()) return em.text(to_string(h));
      em.object(Json{{"input", to_string(f)}, {"hat", to_string(h)}, {"degree", h.degree()}});
    } else {
      FieldPtr k = field_from(c.field);
      KPoly f = parse_kpoly(c.poly, k);
      KPoly h = hat(f);
      if (em.human()) return em.text(to_string(h));
      em.object(Json{{"field", k->name()}, {"input", to_string(f)}, {"hat", to_string(h)}, {"degree", h.degree()}});
    }
    return;
  }
  HatCheckOptions o;
  o.trials = c.trials.value_or(100);
  o.seed = c.seed;
  o.max_deg = static_cast<int>(c.max_degree.value_or(8));
  o.precision = c.precision;
  o.jobs = c.jobs;
  em.object(to_json(verify_hat_properties(o)));
}

void cmd_pipeline(const Config& c, Emitter& em) {
  FieldPtr k = field_from(c.field.empty() ? "x" : c.field);
  PipelineResult r = pipeline_run(k, default_basis(k));
  Json j = to_json(r);
  j["verification"] = to_json(verify_chain(r.chain, false));
  em.object(j);
}

int cmd_reduce(const Config& c, Emitter& em) {
  if (c.points.empty() == c.field.empty()) throw UsageError("reduce needs exactly one of --points, --field");
  ReductionOptions opt;
  if (c.budget_bits) opt.budget_bits = static_cast<std::size_t>(*c.budget_bits);
  if (!c.points.empty()) {
    PointSet s;
    for (const auto& p : parse_point_list(c.points)) {
      if (p.infinity) {
        s.infinity = true;
      } else {
        s.points.push_back(p.value);
      }
    }
    std::sort(s.points.begin(), s.points.end());
    s.points.erase(std::unique(s.points.begin(), s.points.end()), s.points.end());
    CompositionChain chain = litcanu_reduce(s, opt);
    Json j;
    j["input"] = to_json(s);
    j["chain"] = to_json(chain);
    ChainCheck chk = verify_chain(chain, true);
    j["verification"] = to_json(chk);
    em.object(j);
    return chk.ok ? kOk : kDomainError;
  }
  FieldPtr k = field_from(c.field);
  PipelineResult r = pipeline_run(k, default_basis(k));
  CompositionChain red = litcanu_reduce(r.chain.stages.back().s_set, opt);
  CompositionChain full = concat(r.chain, red);
  ChainCheck chk = verify_chain(full, true);
  Json j;
  j["field"] = k->name();
  j["pipeline_degree"] = integer_json(r.chain.degree());
  j["reduction"] = to_json(red);
  j["total_degree"] = integer_json(full.degree());
  j["verification"] = to_json(chk);
  em.object(j);
  return chk.ok ? kOk : kDomainError;
}

void cmd_enumerate(const Config& c, Emitter& em) {
  const int n = need(c.degree, "--degree");
  Census census = enumerate_dessins(n, c.jobs);
  for (const auto& cls : census.classes) em.line(to_json(cls));
}

void cmd_heights(const Config& c, Emitter& em) {
  HeightCheckOptions o;
  if (c.trials) o.trials = *c.trials;
  if (c.factored_trials) o.factored_trials = *c.factored_trials;
  if (c.max_degree) o.max_deg = static_cast<int>(*c.max_degree);
  o.seed = c.seed;
  o.precision = c.precision;
  o.jobs = c.jobs;
  Json j = to_json(verify_height_inequalities(o));
  if (!c.field.empty()) j["integral_basis"] = to_json(roy_thunder_check(field_from(c.field), c.precision));
  em.object(j);
}

int cmd_delta2(const Config& c, Emitter& em) {
  Delta2Report r = delta2_harness(need(c.limit, "--limit"), c.jobs);
  for (const auto& row : r.rows) em.line(to_json(row));
  em.line(to_json(r));
  return r.all_ok() ? kOk : kDomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Belyi degrees of number fields: bounds, constructions and checks", "belyi"};
  app.require_subcommand(1, 1);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"human", "json"}));
  app.add_option("--output", cfg.output, "Write the report to a file");
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", cfg.seed, "Seed for generated instances");
  app.add_option("--precision", cfg.precision, "Working precision in bits")->check(CLI::Range(32L, 1L << 20));

  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  CLI::App* bounds = sub("bounds", "Lower and upper bounds for a field");
  CLI::App* degree = sub("degree", "Belyi degree report with certificate");
  CLI::App* construct = sub("construct", "Build and verify a dessin of the three-factor family");
  CLI::App* search = sub("search", "Scan the family for a quadratic field");
  CLI::App* hat_cmd = sub("hat", "Critical-value polynomial, or its seeded property check");
  CLI::App* pipeline = sub("pipeline", "Explicit construction chain for a number field");
  CLI::App* reduce = sub("reduce", "Push rational branch points into {0,1,inf}");
  CLI::App* enumerate = sub("enumerate", "Dessins of a given degree up to conjugation");
  CLI::App* heights = sub("heights", "Seeded checks of the height inequalities");
  CLI::App* delta2 = sub("delta2", "Prime-field harness for the discriminant exponent");

  for (CLI::App* s : {bounds, degree})
    s->add_option("--field", cfg.field, "Minimal polynomial in x")->required();
  for (CLI::App* s : {bounds, degree, search, hat_cmd, heights})
    s->add_option("--max-degree", cfg.max_degree, "Degree cap")->check(CLI::PositiveNumber);
  construct->add_option("--triple", cfg.triple, "a,b,c");
  construct->add_option("--p", cfg.p, "Prime p > 7, p != 1 mod 12");
  construct->add_option("--d", cfg.d, "Squarefree d with |d| >= 5; sign selects the field Q(sqrt(d))");
  construct->add_option("--verify", cfg.verify, "Re-check a saved construct record");
  search->add_option("--d", cfg.d, "Squarefree radicand")->required();
  search->add_option("--limit", cfg.limit, "Maximum number of records")->check(CLI::PositiveNumber);
  hat_cmd->add_option("--poly", cfg.poly, "Monic polynomial in x");
  hat_cmd->add_option("--field", cfg.field, "Coefficient field (generator g)");
  hat_cmd->add_option("--trials", cfg.trials, "Random instances")->check(CLI::PositiveNumber);
  pipeline->add_option("--field", cfg.field, "Minimal polynomial in x (default: x, i.e. Q)");
  reduce->add_option("--points", cfg.points, "Rational points and inf, comma separated");
  reduce->add_option("--field", cfg.field, "Run the construction for this field first");
  reduce->add_option("--budget-bits", cfg.budget_bits, "Largest number size allowed")->check(CLI::PositiveNumber);
  enumerate->add_option("--degree", cfg.degree, "Degree n")->required()->check(CLI::PositiveNumber);
  heights->add_option("--trials", cfg.trials, "Random polynomials")->check(CLI::PositiveNumber);
  heights->add_option("--factored-trials", cfg.factored_trials, "Random factored products")->check(CLI::NonNegativeNumber);
  heights->add_option("--field", cfg.field, "Quadratic field for the integral-basis check");
  delta2->add_option("--limit", cfg.limit, "Largest prime")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    Emitter em(cfg, out);
    CLI::App* chosen = app.get_subcommands().front();
    const std::string name = chosen->get_name();
    if (name == "bounds") cmd_bounds(cfg, em);
    else if (name == "degree") cmd_degree(cfg, em);
    else if (name == "construct") return cmd_construct(cfg, em);
    else if (name == "search") cmd_search(cfg, em);
    else if (name == "hat") cmd_hat(cfg, em);
    else if (name == "pipeline") cmd_pipeline(cfg, em);
    else if (name == "reduce") return cmd_reduce(cfg, em);
    else if (name == "enumerate") cmd_enumerate(cfg, em);
    else if (name == "heights") cmd_heights(cfg, em);
    else if (name == "delta2") return cmd_delta2(cfg, em);
    return kOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const PrecisionInsufficient& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace belyi::cli
