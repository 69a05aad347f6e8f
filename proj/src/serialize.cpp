#include "motivic/serialize.hpp"

namespace motivic::io {

namespace {

template <class T, class F>
Json opt(const std::optional<T>& o, F&& f) {
  return o ? Json(f(*o)) : Json(nullptr);
}

std::string rat(const Rational& r) { return to_string(r); }

}  // namespace

Json to_json(const yfy::FanoReport& r) {
  Json j;
  j["lhs"] = r.lhs.to_string();
  j["divisible_by_t4"] = r.divisible_by_t4;
  j["p_fano"] = opt(r.p_fano, [](const UniPoly& p) { return p.to_string(); });
  j["dim_fano"] = opt(r.dim_fano, [](int d) { return d; });
  j["b0_fano"] = opt(r.b0_fano, rat);
  j["violations"] = Json::array();
  for (const auto& v : r.violations) j["violations"].push_back({{"monomial", v.monomial}, {"reason", v.reason}});
  return j;
}

Json to_json(const yfy::FanoClassResult& r) {
  Json j;
  j["numerator"] = r.numerator.to_string();
  j["fano_class"] = opt(r.fano, [](const MotivicClass& c) { return c.to_string(); });
  j["obstruction"] = opt(r.obstruction, [](const std::string& s) { return s; });
  j["obstruction_monomial"] = opt(r.obstruction_monomial, [](const std::string& s) { return s; });
  j["b0_fano"] = opt(r.b0, rat);
  j["connected"] = r.connected;
  return j;
}

Json to_json(const yfy::NoEmptyTrace& t) {
  Json j;
  j["m"] = t.m;
  j["steps"] = Json::array();
  for (const auto& s : t.steps) {
    Json roots = Json::array();
    for (const auto& r : s.roots) roots.push_back(r.get_str());
    j["steps"].push_back({{"degree", s.degree},
                          {"unknown", "b" + std::to_string(s.unknown)},
                          {"equation", s.equation},
                          {"value", opt(s.value, [](const Integer& z) { return z.get_str(); })},
                          {"roots", roots},
                          {"has_claimed_shape", s.has_claimed_shape}});
  }
  j["fully_determined"] = t.fully_determined;
  j["forced_p"] = opt(t.forced_p, [](const UniPoly& p) { return p.to_string(); });
  j["residual"] = opt(t.residual, [](const UniPoly& p) { return p.to_string(); });
  j["all_betti_zero"] = t.all_betti_zero;
  j["contradiction"] = t.contradiction;
  j["top_only_pair"] = {t.top_only_pair.first.to_string(), t.top_only_pair.second.to_string()};
  j["top_only_pair_differs"] = t.top_only_pair_differs;
  j["summary"] = t.summary;
  return j;
}

Json to_json(const yfy::RelDimFacts& f) {
  Json j;
  j["m"] = f.m;
  j["top_coefficients"] = Json::array();
  for (const auto& c : f.top_coefficients) j["top_coefficients"].push_back(c.to_string());
  j["top_coefficient_dual"] = f.top_coefficient_dual.to_string();
  j["expected_top"] = f.expected_top.to_string();
  j["first_four_vanish"] = f.first_four_vanish;
  j["top_matches"] = f.top_matches;
  j["t2_coefficient"] = f.t2_coefficient.to_string();
  return j;
}

Json to_json(const bounds::Verdict& v, bool explain) {
  Json j;
  j["branch"] = bounds::to_string(v.branch);
  j["reason"] = v.reason;
  j["conditions_fired"] = Json::array();
  for (const auto& p : v.conditions_fired) {
    j["conditions_fired"].push_back({{"name", p.name}, {"value", p.value}, {"detail", p.detail}});
  }
  if (explain) j["citations"] = v.citations;
  return j;
}

Json to_json(const bounds::VarietyProfile& p) {
  Json j;
  j["ambient_n"] = p.ambient_n;
  j["dim_m"] = p.dim_m;
  j["degree_d"] = opt(p.degree_d, [](int d) { return d; });
  j["ci_degrees"] = opt(p.ci_degrees, [](const std::vector<int>& d) { return Json(d); });
  j["equation_count"] = opt(p.equation_count, [](int d) { return d; });
  j["smooth"] = p.smooth;
  j["nondegenerate"] = p.nondegenerate;
  j["fano_connected"] = opt(p.fano_connected, [](bool b) { return b; });
  j["family_type"] = bounds::to_string(p.family_type);
  j["b2"] = opt(p.b2, [](int d) { return d; });
  j["fano_dim"] = opt(p.fano_dim, [](int d) { return d; });
  j["assume_hartshorne"] = p.assume_hartshorne;
  j["assume_ddj"] = p.assume_ddj;
  j["containing_hypersurface_degree"] = opt(p.containing_hypersurface_degree, [](int d) { return d; });
  return j;
}

Json to_json(const studies::Certificate& c, bool explain) {
  Json j;
  j["name"] = c.name;
  j["overall"] = c.overall;
  j["claims"] = Json::array();
  for (const auto& cl : c.claims) {
    Json x{{"description", cl.description}, {"expected", cl.expected}, {"computed", cl.computed}, {"match", cl.match}};
    if (explain && !cl.citation.empty()) x["citation"] = cl.citation;
    j["claims"].push_back(std::move(x));
  }
  if (explain) j["notes"] = c.notes;
  return j;
}

Json to_json(const ideal::GroebnerBasis& gb) {
  Json j;
  j["variables"] = gb.variables;
  j["order"] = ideal::to_string(gb.order);
  j["reduced"] = gb.reduced;
  j["basis"] = Json::array();
  for (const auto& g : gb.basis) j["basis"].push_back(g.to_string());
  return j;
}

Json to_json(const gen::GenerationResult& r) {
  Json j;
  j["generated"] = r.generated;
  j["complete"] = r.complete;
  j["max_degree"] = r.max_degree;
  j["a"] = opt(r.a, [](const MultiPoly& p) { return p.to_string(); });
  j["failing_monomial"] = opt(r.failing_monomial, [](const std::string& s) { return s; });
  j["layers"] = Json::array();
  for (const auto& l : r.layers) {
    j["layers"].push_back({{"degree", l.degree},
                           {"equations", l.equations},
                           {"consistent", l.consistent},
                           {"failing_monomial", opt(l.failing_monomial, [](const std::string& s) { return s; })}});
  }
  return j;
}

Json to_json(const std::vector<MotivicClass>& classes) {
  Json j = Json::array();
  for (const auto& c : classes) j.push_back(c.to_string());
  return j;
}

Json to_json(const MeasureValue& v) {
  if (const auto* u = std::get_if<UniPoly>(&v)) return u->to_string();
  if (const auto* b = std::get_if<BiPoly>(&v)) return b->to_string();
  return to_string(std::get<Rational>(v));
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace motivic::io
