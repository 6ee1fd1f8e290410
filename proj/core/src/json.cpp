#include "belyi/json.hpp"

namespace belyi {

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return to_string(x);
}

namespace {

Json primes_json(const std::vector<Integer>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(integer_json(p));
  return a;
}

Json coefficients(const QPoly& f) {
  Json a = Json::array();
  for (const auto& c : f.coeffs()) a.push_back(to_string(c));
  return a;
}

Json coefficients(const KPoly& f) {
  Json a = Json::array();
  for (const auto& c : f.coeffs()) a.push_back(c.to_string());
  return a;
}

Json ints(const std::vector<int>& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(x);
  return a;
}

}  // namespace

Json to_json(const QuadraticDessin& d, const DessinVerification& v) {
  Json j;
  j["triple"] = {d.params.a, d.params.b, d.params.c};
  j["delta"] = integer_json(d.delta);
  j["squarefree_part"] = integer_json(d.radicand);
  j["field"] = d.field->name();
  j["degree"] = d.degree;
  j["degenerate"] = d.degenerate;
  j["distinct"] = family_distinct(d.params);
  j["x"] = d.x.to_string();
  j["y"] = d.y.to_string();
  j["map"] = to_string(d.map);
  j["checks"] = {{"equations", v.equations},
                 {"log_derivative", v.log_derivative},
                 {"belyi", v.belyi},
                 {"nondegenerate", v.nondegenerate},
                 {"moduli_field", d.degenerate ? std::string("Q") : (v.moduli == ModuliField::kBaseField
                                                                        ? d.field->name()
                                                                        : to_string(v.moduli))}};
  j["verified"] = v.verified();
  return j;
}

Json to_json(const BoundsReport& r) {
  Json j;
  j["field"] = r.field;
  j["discriminant"] = r.discriminant ? integer_json(*r.discriminant) : Json();
  j["ramified_primes"] = primes_json(r.ramified.primes);
  j["ramified_exact"] = r.ramified.exact;
  j["lower"] = integer_json(r.lower.value);
  j["lower_heuristic"] = r.lower.heuristic;
  j["upper"] = r.upper.value ? Json(*r.upper.value) : Json("unknown");
  j["upper_method"] = r.upper.method;
  j["exact"] = r.exact;
  if (r.upper.certificate && r.upper.verification) {
    j["certificate"] = to_json(*r.upper.certificate, *r.upper.verification);
  } else if (r.upper.method == "identity") {
    j["certificate"] = "identity cover of degree 1";
  } else {
    j["certificate"] = nullptr;
  }
  return j;
}

Json to_json(const Delta2Row& r) {
  Json j;
  j["p"] = r.p;
  j["triple"] = {r.params.a, r.params.b, r.params.c};
  j["degree"] = r.degree;
  j["discriminant"] = integer_json(r.discriminant);
  j["verified"] = r.verified;
  j["exact"] = r.exact;
  j["p_ge_quarter_disc"] = r.lower_ineq;
  j["p_le_24_disc"] = r.upper_ineq;
  j["equality"] = r.equality;
  j["ratio"] = to_string(r.ratio);
  return j;
}

Json to_json(const Delta2Report& r) {
  Json j;
  j["summary"] = true;
  j["limit"] = r.limit;
  j["primes"] = r.rows.size();
  Json skipped = Json::array();
  for (long p : r.skipped) skipped.push_back(p);
  j["skipped"] = skipped;
  j["all_ok"] = r.all_ok();
  j["equality_attained"] = r.equality_attained();
  Rational lo, hi;
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    if (i == 0 || r.rows[i].ratio < lo) lo = r.rows[i].ratio;
    if (i == 0 || r.rows[i].ratio > hi) hi = r.rows[i].ratio;
  }
  j["min_ratio"] = to_string(lo);
  j["max_ratio"] = to_string(hi);
  return j;
}

Json to_json(const PointSet& s) {
  Json j;
  j["infinity"] = s.infinity;
  Json pts = Json::array();
  for (const auto& x : s.points) pts.push_back(to_string(x));
  j["points"] = pts;
  if (s.locus_k) j["locus"] = to_string(*s.locus_k);
  else if (s.locus_q) j["locus"] = to_string(*s.locus_q);
  else j["locus"] = nullptr;
  j["locus_roots"] = s.locus_roots;
  j["cardinality"] = s.cardinality();
  return j;
}

Json to_json(const ChainStage& s) {
  Json j;
  j["kind"] = to_string(s.kind);
  switch (s.kind) {
    case StageKind::kPolynomialK:
      j["coefficients"] = coefficients(*s.poly_k);
      break;
    case StageKind::kPolynomialQ:
      j["coefficients"] = coefficients(*s.poly_q);
      break;
    case StageKind::kAffine:
      j["coefficients"] = {to_string(s.b), to_string(s.a)};
      break;
    case StageKind::kBelyi:
      j["m"] = integer_json(s.m);
      j["n"] = integer_json(s.n);
      j["formula"] = stage_formula(s);
      break;
  }
  j["degree"] = integer_json(s.degree);
  if (s.height) j["height_bits"] = bit_length(*s.height) + 1;
  j["s_set"] = to_json(s.s_set);
  return j;
}

Json to_json(const CompositionChain& c) {
  Json j;
  j["base_field"] = c.base_field ? c.base_field->name() : "Q";
  j["degree"] = integer_json(c.degree());
  Json st = Json::array();
  for (const auto& s : c.stages) st.push_back(to_json(s));
  j["stages"] = st;
  return j;
}

Json to_json(const PipelineResult& r) {
  Json j;
  Json rep = Json::array();
  for (const auto& s : r.report) {
    Json e;
    e["stage"] = s.index;
    e["degree"] = s.degree;
    e["height_bits"] = s.height ? Json(bit_length(*s.height) + 1) : Json();
    e["s_size"] = s.s_size;
    e["s_bound_ok"] = s.s_bound_ok;
    rep.push_back(e);
  }
  j["report"] = rep;
  j["s_bound"] = r.s_bound;
  j["final_rational"] = r.final_rational;
  j["chain"] = to_json(r.chain);
  return j;
}

Json to_json(const ChainCheck& c) {
  Json j;
  j["ok"] = c.ok;
  j["final_in_01inf"] = c.final_in_01inf;
  j["problems"] = c.problems;
  return j;
}

Json to_json(const InequalityRecord& r) {
  return Json{{"check", r.lemma}, {"instance", r.instance}, {"lhs", r.lhs},
              {"rhs", r.rhs},     {"margin", r.margin},     {"status", to_string(r.status)}};
}

Json to_json(const HeightReport& r) {
  Json j;
  j["records"] = r.records.size();
  j["failures"] = r.failures();
  j["indeterminate"] = r.indeterminate();
  Json ratios;
  for (const auto& [name, v] : r.max_ratio) ratios[name] = v;
  j["max_ratio"] = ratios;
  Json recs = Json::array();
  for (const auto& x : r.records) recs.push_back(to_json(x));
  j["details"] = recs;
  return j;
}

Json to_json(const RoyThunderReport& r) {
  Json j;
  j["field"] = r.field;
  j["discriminant"] = integer_json(r.discriminant);
  j["omega"] = r.omega;
  j["omega_height_lo"] = r.omega_height.lo.to_string(15);
  j["omega_height_hi"] = r.omega_height.hi.to_string(15);
  j["bound"] = r.bound;
  j["status"] = to_string(r.status);
  return j;
}

Json to_json(const HatCheckRecord& r) {
  return Json{{"poly", r.poly},           {"hat", r.hat},
              {"degree_ok", r.degree_ok}, {"height_ok", r.height_ok},
              {"numeric_error", r.numeric_error}, {"numeric_ok", r.numeric_ok}};
}

Json to_json(const HatCheckReport& r) {
  Json j;
  j["trials"] = r.records.size();
  j["failures"] = r.failures();
  j["max_numeric_error"] = r.max_numeric_error;
  Json recs = Json::array();
  for (const auto& x : r.records) recs.push_back(to_json(x));
  j["details"] = recs;
  return j;
}

Json to_json(const PermutationTriple& t) {
  return Json{{"degree", t.n},
              {"sigma0", cycle_string(t.sigma0)},
              {"sigma1", cycle_string(t.sigma1)},
              {"sigma_inf", cycle_string(t.sigma_inf)}};
}

Json to_json(const DessinClass& c, const CombinatoricsLimits& lim) {
  Json j = to_json(c.triple);
  Passport p = passport(c.triple);
  j["passport"] = {ints(p.type0), ints(p.type1), ints(p.type_inf)};
  j["genus"] = p.genus;
  j["group_order"] = integer_json(monodromy_order(c.triple, lim));
  j["beckmann_primes"] = primes_json(beckmann_primes(c.triple, lim));
  j["class_size"] = integer_json(c.class_size);
  return j;
}

}  // namespace belyi
