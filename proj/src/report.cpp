#include "ffzeta/report.hpp"

#include <sstream>

#include "ffzeta/numeric.hpp"

namespace ffzeta {

namespace {

Json roots_json(const std::vector<Root>& rs) {
  Json out = Json::array();
  for (const auto& r : rs) out.push_back({{"root", complex_json(r.value)}, {"multiplicity", r.multiplicity}});
  return out;
}

Json checks_json(const std::vector<MembershipCheck>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) {
    out.push_back({{"id", c.id}, {"pass", c.pass}, {"residual", c.residual}, {"detail", c.detail}});
  }
  return out;
}

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::ParseError, "member artifact: " + msg); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
  return j.at(key);
}

ExactPoly exact_poly_from(const Json& j) {
  if (!j.is_array()) bad("exact coefficients must be a list of strings");
  std::vector<GaussianRational> c;
  for (const auto& x : j) {
    if (!x.is_string()) bad("exact coefficients must be strings");
    c.push_back(GaussianRational::parse(x.get<std::string>()));
  }
  return ExactPoly(c);
}

ComplexPoly complex_poly_from(const Json& j) {
  if (!j.is_array()) bad("complex coefficients must be a list of [re, im] pairs");
  std::vector<Complex> c;
  for (const auto& x : j) {
    if (!x.is_array() || x.size() != 2 || !x[0].is_number() || !x[1].is_number()) bad("expected [re, im]");
    c.emplace_back(x[0].get<double>(), x[1].get<double>());
  }
  return ComplexPoly(c);
}

}  // namespace

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json exact_poly_json(const ExactPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.to_string());
  return out;
}

Json complex_poly_json(const ComplexPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(complex_json(c));
  return out;
}

Json curve_json(const CurveSpec& c) {
  return {{"description", c.describe()}, {"q", c.base().size()}, {"genus", c.genus()}};
}

Json counts_json(const PointCounts& pc) { return {{"q", pc.q}, {"counts", pc.counts}}; }

Json lpoly_json(const LPolynomial& l) {
  Json c = Json::array();
  for (const auto& x : l.c) c.push_back(x.get_str());
  return {{"q", l.q}, {"g", l.g}, {"coefficients", c}};
}

Json rh_json(const RhCheck& rh) {
  Json roots = Json::array();
  for (const auto& r : rh.roots) {
    roots.push_back({{"root", complex_json(r.root)},
                     {"multiplicity", r.multiplicity},
                     {"modulus", r.modulus},
                     {"deviation", r.deviation}});
  }
  return {{"rh_verdict", rh.verdict}, {"max_deviation", rh.max_deviation}, {"roots", roots}};
}

Json zeta_report_json(const ZetaReport& rep) {
  Json weil = Json::array();
  for (const auto& w : rep.weil) {
    weil.push_back({{"n", w.n}, {"a", w.a.get_str()}, {"bound", w.bound}, {"ratio", w.ratio}});
  }
  Json poles = Json::array();
  for (const auto& p : rep.poles) poles.push_back(complex_json(p));
  return {{"L", lpoly_json(rep.L)},
          {"symmetric", rep.L.symmetric()},
          {"rh", rh_json(rep.rh)},
          {"class_number",
           {{"h", rep.class_number.h.get_str()},
            {"residue_closed", rep.class_number.residue_closed},
            {"residue_numeric", rep.class_number.residue_numeric},
            {"residue_error", rep.class_number.residue_error}}},
          {"functional_equation",
           {{"samples", rep.fe.samples},
            {"zeta_form", rep.fe.zeta_form},
            {"l_form", rep.fe.l_form},
            {"inversion_form", rep.fe.inversion_form},
            {"reality", rep.fe.reality}}},
          {"weil", {{"ok", rep.weil_ok}, {"coefficients", weil}}},
          {"counts", rep.counts},
          {"predicted_counts", rep.predicted_counts},
          {"poles_within_10", poles}};
}

Json nevanlinna_json(const NevanlinnaReport& rep) {
  Json defs = Json::array();
  for (const auto& d : rep.deficiencies) {
    defs.push_back({{"alpha", d.alpha.to_string()}, {"k", d.k}, {"estimate", d.estimate}, {"target", d.target}});
  }
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    rows.push_back({{"r", r.r}, {"alpha", r.alpha}, {"n", r.n}, {"N", r.N}, {"m", r.m}, {"T", r.T}});
  }
  return {{"q", rep.q},
          {"degree", rep.degree},
          {"limsup_rule", "max over the top decade of the radius grid"},
          {"order", {{"order", rep.order.order}, {"lower_order", rep.order.lower_order}}},
          {"type", {{"type", rep.type.type}, {"target", rep.type.target}}},
          {"deficiencies", defs},
          {"deficiency_sum", rep.deficiency_sum},
          {"T_monotone", rep.monotone},
          {"r_grid", rep.r_grid},
          {"T", rep.T},
          {"quadrature_error", rep.quadrature_error},
          {"rows", rows}};
}

std::string nevanlinna_csv(const NevanlinnaReport& rep) {
  std::ostringstream os;
  os << "r,alpha,n,N,m,T\n";
  for (const auto& r : rep.rows) {
    os << format_double(r.r) << ',' << r.alpha << ',' << r.n << ',' << format_double(r.N) << ','
       << format_double(r.m) << ',' << format_double(r.T) << '\n';
  }
  return os.str();
}

Json ledger_json(const InequalityLedger& ledger) {
  Json entries = Json::array();
  for (const auto& e : ledger.entries) {
    entries.push_back({{"id", e.id}, {"pass", e.pass}, {"lhs", e.lhs}, {"rhs", e.rhs}, {"detail", e.detail}});
  }
  return {{"all_pass", ledger.all_pass()}, {"failures", ledger.failures()}, {"entries", entries}};
}

Json membership_json(const MembershipReport& rep) {
  return {{"verdict", rep.verdict}, {"checks", checks_json(rep.checks)}};
}

Json member_json(const ZetaLikeMember& m) {
  Json out{{"q", m.q()}, {"g", m.g()}, {"reference_L", lpoly_json(m.reference())["coefficients"]}};
  if (m.exact()) {
    out["representation"] = "exact";
    out["numerator"] = exact_poly_json(m.exact_h()->num());
    out["denominator"] = exact_poly_json(m.exact_h()->den());
  } else {
    out["representation"] = "complex";
    out["numerator"] = complex_poly_json(m.h().num());
    out["denominator"] = complex_poly_json(m.h().den());
  }
  return out;
}

ZetaLikeMember member_from_json(const Json& doc) {
  const Json* j = &doc;
  if (doc.is_object() && doc.contains("result") && doc.at("result").is_object() && doc.at("result").contains("member")) {
    j = &doc.at("result").at("member");
  } else if (doc.is_object() && doc.contains("member")) {
    j = &doc.at("member");
  }
  const Json& qj = field(*j, "q");
  const Json& gj = field(*j, "g");
  if (!qj.is_number_unsigned() || !gj.is_number_unsigned()) bad("q and g must be non-negative integers");
  LPolynomial ref;
  ref.q = qj.get<std::uint64_t>();
  ref.g = gj.get<unsigned>();
  const Json& lj = field(*j, "reference_L");
  if (!lj.is_array()) bad("reference_L must be a list");
  for (const auto& c : lj) {
    if (!c.is_string()) bad("reference_L entries must be integer strings");
    Integer v;
    if (v.set_str(c.get<std::string>(), 10) != 0) bad("bad integer '" + c.get<std::string>() + "'");
    ref.c.push_back(v);
  }
  if (ref.c.size() != 2 * ref.g + 1) bad("reference_L must have 2g+1 coefficients");
  const Json& rep = field(*j, "representation");
  if (rep == "exact") {
    return ZetaLikeMember(ref, ExactRational(exact_poly_from(field(*j, "numerator")), exact_poly_from(field(*j, "denominator"))));
  }
  if (rep == "complex") {
    return ZetaLikeMember(ref,
                          ComplexRational(complex_poly_from(field(*j, "numerator")), complex_poly_from(field(*j, "denominator"))));
  }
  bad("representation must be \"exact\" or \"complex\"");
}

Json perturbation_json(const PerturbationResult& res) {
  Json ladder = Json::array();
  for (const auto& s : res.ladder) ladder.push_back({{"u0", s.u0.get_str()}, {"deviation", s.deviation}});
  Json planted = Json::array();
  for (const auto& z : res.planted) planted.push_back(complex_json(z));
  Json nu{{"source_p", res.multiplier.exact_source ? exact_poly_json(*res.multiplier.exact_source)
                                                   : complex_poly_json(res.multiplier.source)}};
  if (res.multiplier.exact_nu) {
    nu["numerator"] = exact_poly_json(res.multiplier.exact_nu->num());
    nu["denominator"] = exact_poly_json(res.multiplier.exact_nu->den());
  }
  return {{"u0", res.u0.get_str()},
          {"multiplier", nu},
          {"bound", res.bound},
          {"boundary_sup_f", res.boundary_sup_f},
          {"boundary_deviation", res.boundary_deviation},
          {"ladder", ladder},
          {"planted", planted},
          {"rh", rh_json(res.rh)},
          {"member", member_json(res.member)}};
}

Json removal_json(const ZeroRemoval& res) {
  Json out{{"removed_Q", res.exact_removed ? exact_poly_json(*res.exact_removed) : complex_poly_json(res.removed)},
           {"exact", res.exact_removed.has_value()},
           {"scale_c", complex_json(res.scale)},
           {"off_circle", roots_json(res.off_circle)},
           {"rh", rh_json(res.rh)},
           {"member", member_json(res.member)}};
  return out;
}

Json translate_sum_json(const TranslateSum& ts, bool with_terms) {
  Json out{{"q", ts.q},
           {"eta", ts.eta},
           {"a", complex_json(ts.a)},
           {"grid_step", ts.grid_step},
           {"term_count", ts.terms.size()},
           {"sup_error", ts.sup_error},
           {"cauchy_pompeiu_error", ts.cauchy_pompeiu_error}};
  Json audit = Json::array();
  for (const auto& a : ts.audit) {
    audit.push_back({{"s", complex_json(a.s)}, {"value", complex_json(a.value)}, {"error", a.error}});
  }
  out["audit"] = audit;
  if (with_terms) {
    Json terms = Json::array();
    for (const auto& t : ts.terms) terms.push_back({{"lambda", complex_json(t.lambda)}, {"b", complex_json(t.b)}});
    out["terms"] = terms;
  }
  return out;
}

Json convergence_json(const ConvergenceStudy& study) {
  return {{"eta", study.eta},
          {"steps", study.steps},
          {"errors", study.errors},
          {"contractions", study.contractions},
          {"alt_eta", study.alt_eta},
          {"alt_error", study.alt_error}};
}

std::string approx_csv(const TranslateSum& ts) {
  std::ostringstream os;
  os << "re_s,im_s,abs_error,re_value,im_value,re_target,im_target\n";
  for (const auto& a : ts.audit) {
    os << format_double(a.s.real()) << ',' << format_double(a.s.imag()) << ',' << format_double(a.error) << ','
       << format_double(a.value.real()) << ',' << format_double(a.value.imag()) << ','
       << format_double(a.target.real()) << ',' << format_double(a.target.imag()) << '\n';
  }
  return os.str();
}

}  // namespace ffzeta
