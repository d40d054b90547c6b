#include "ffzeta/cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "ffzeta/approx.hpp"
#include "ffzeta/instability.hpp"
#include "ffzeta/nevanlinna.hpp"
#include "ffzeta/numeric.hpp"
#include "ffzeta/report.hpp"

namespace ffzeta {

namespace {

struct RunConfig {
  std::string command;
  std::string spec;
  std::string member;
  std::string out;
  std::string alpha;
  double rmin = 1;
  double rmax = 1000;
  double epsilon = 1e-3;
  double annulus = 10;
  std::string u0;
  double grid = 0.1;
  unsigned levels = 3;
  std::string eta = "auto";
  std::optional<double> tol;
  std::uint64_t seed = 20240611;
  std::string format = "report";
  std::string target = "exp";
  std::string k_region = "disk:0,0,1";
  std::string u_region = "disk:0,0,2";
  unsigned terms = 0;
};

struct Violation {
  std::string id;
  std::string detail;
};

// Thrown for problems with the invocation itself.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  Json config;
  Json result;
  std::vector<Violation> violations;
  std::optional<std::string> csv;
};

bool is_input_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::BadNormalization:
    case ErrorCode::OrbitMismatch:
    case ErrorCode::ResidualZeros:
    case ErrorCode::InconsistentCounts:
    case ErrorCode::NonPositiveH:
    case ErrorCode::ExtrapolationUnstable:
    case ErrorCode::QuadratureUnstable:
    case ErrorCode::NonConvergence:
      return false;
    default:
      return true;
  }
}

// Invariant name for a library verification failure.
std::string violation_id(ErrorCode c) {
  switch (c) {
    case ErrorCode::BadNormalization: return "multiplier.normalization";
    case ErrorCode::OrbitMismatch: return "member.zero_symmetry";
    case ErrorCode::ResidualZeros: return "removal.rh";
    case ErrorCode::InconsistentCounts: return "zeta.count_consistency";
    case ErrorCode::NonPositiveH: return "zeta.class_number";
    case ErrorCode::ExtrapolationUnstable: return "approx.residue";
    case ErrorCode::QuadratureUnstable: return "nevanlinna.quadrature";
    default: return "numeric.convergence";
  }
}

CurveSpec need_spec(const RunConfig& cfg) {
  if (cfg.spec.empty()) throw InputError("--spec PATH is required");
  const auto c = load_curve_spec(cfg.spec);
  validate_curve(c);
  return c;
}

ZetaFunction zeta_of(const CurveSpec& c, PointCounts* counts = nullptr) {
  const unsigned g = c.genus();
  const auto pc = count_series(c, std::max(1u, g + 1));
  if (counts) *counts = pc;
  return ZetaFunction(l_from_counts(pc, g));
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

// The input member: --member artifact, else the zeta function of --spec.
ZetaLikeMember load_member(const RunConfig& cfg, Json& config) {
  if (!cfg.member.empty()) {
    config["member"] = cfg.member;
    return member_from_json(read_json(cfg.member));
  }
  config["spec"] = cfg.spec;
  return ZetaLikeMember::from_zeta(zeta_of(need_spec(cfg)));
}

void add_membership_violations(const MembershipReport& rep, std::vector<Violation>& v) {
  for (const auto& c : rep.checks) {
    if (!c.pass) v.push_back({c.id, c.detail});
  }
}

std::vector<ExtendedComplex> parse_alphas(const std::string& list) {
  if (list.empty()) return default_probe_set();
  std::vector<ExtendedComplex> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(ExtendedComplex::parse(item));
  if (out.empty()) throw InputError("--alpha needs at least one value");
  return out;
}

// ---- subcommands ---------------------------------------------------------

Outcome curve_count(const RunConfig& cfg) {
  Outcome o;
  const auto c = need_spec(cfg);
  const unsigned m = cfg.terms ? cfg.terms : std::max(2u, 2 * c.genus());
  o.config = {{"spec", cfg.spec}, {"terms", m}};
  o.result = {{"curve", curve_json(c)}, {"point_counts", counts_json(count_series(c, m))}};
  return o;
}

Outcome zeta_build(const RunConfig& cfg, bool rh_only) {
  Outcome o;
  const double tol = cfg.tol.value_or(1e-8);
  o.config = {{"spec", cfg.spec}, {"tol", tol}, {"seed", cfg.seed}};
  const auto c = need_spec(cfg);
  PointCounts pc;
  const auto zf = zeta_of(c, &pc);
  const auto rep = zeta_report(zf, pc, tol, 20, cfg.seed);
  if (!rep.rh.verdict) o.violations.push_back({"zeta.rh", "max root deviation " + format_double(rep.rh.max_deviation)});
  if (rh_only) {
    o.result = {{"curve", curve_json(c)}, {"L", lpoly_json(rep.L)}, {"rh", rh_json(rep.rh)}};
    return o;
  }
  if (!rep.L.symmetric()) o.violations.push_back({"zeta.coefficient_symmetry", "c_j != c_{2g-j} q^{j-g}"});
  const double fe = std::max({rep.fe.zeta_form, rep.fe.l_form, rep.fe.inversion_form, rep.fe.reality});
  if (fe > 1e-9) o.violations.push_back({"zeta.functional_equation", "residual " + format_double(fe)});
  if (!rep.weil_ok) o.violations.push_back({"zeta.weil_bound", "|a_n| exceeds 2g q^{n/2}"});
  const double rel = std::abs(rep.class_number.residue_numeric - rep.class_number.residue_closed) /
                     std::abs(rep.class_number.residue_closed);
  if (rel > 1e-6) o.violations.push_back({"zeta.residue", "relative error " + format_double(rel)});
  for (std::size_t n = 0; n < rep.counts.size(); ++n) {
    if (std::abs(rep.predicted_counts[n] - static_cast<double>(rep.counts[n])) > 1e-6) {
      o.violations.push_back({"zeta.predicted_counts", "N_" + std::to_string(n + 1) + " disagrees with the roots"});
    }
  }
  o.result = {{"curve", curve_json(c)}, {"zeta", zeta_report_json(rep)}};
  return o;
}

Outcome zeta_nevanlinna(const RunConfig& cfg) {
  Outcome o;
  const auto alphas = parse_alphas(cfg.alpha);
  Json alpha_json = Json::array();
  for (const auto& a : alphas) alpha_json.push_back(a.to_string());
  o.config = {{"spec", cfg.spec}, {"alpha", alpha_json}, {"rmin", cfg.rmin}, {"rmax", cfg.rmax}};
  const auto c = need_spec(cfg);
  const auto zf = zeta_of(c);
  const auto f = MeromorphicFn::from_zeta(zf);
  const auto grid = log_grid(cfg.rmin, cfg.rmax);
  const auto rep = nevanlinna_report(f, alphas, grid);
  std::vector<double> samples;
  for (double r : {10.0, 30.0, 100.0, 300.0, 1000.0}) {
    if (r >= cfg.rmin && r <= cfg.rmax) samples.push_back(r);
  }
  Json ledger_out;
  if (!samples.empty()) {
    const auto ledger = inequality_suite({f}, samples, alphas);
    for (const auto& e : ledger.entries) {
      if (!e.pass) o.violations.push_back({e.id, e.detail});
    }
    ledger_out = ledger_json(ledger);
  }
  if (!rep.monotone) o.violations.push_back({"T.monotone", "T(r) decreases on the radius grid"});
  o.result = {{"curve", curve_json(c)}, {"nevanlinna", nevanlinna_json(rep)}, {"ledger", ledger_out}};
  o.csv = nevanlinna_csv(rep);
  return o;
}

Outcome perturb_fail(const RunConfig& cfg) {
  Outcome o;
  const auto base = load_member(cfg, o.config);
  PerturbationSpec spec;
  spec.r = cfg.annulus;
  spec.epsilon = cfg.epsilon;
  if (!cfg.u0.empty()) {
    Integer u0;
    if (u0.set_str(cfg.u0, 10) != 0) throw InputError("--u0 must be an integer");
    spec.u0 = u0;
  }
  o.config["epsilon"] = std::isfinite(cfg.epsilon) ? Json(cfg.epsilon) : Json("inf");
  o.config["annulus"] = cfg.annulus;
  if (!cfg.u0.empty()) o.config["u0"] = cfg.u0;
  const auto res = perturb_fail_rh(base, spec);
  const auto mem = validate_membership(res.member, cfg.tol.value_or(1e-10));
  add_membership_violations(mem, o.violations);
  if (std::isfinite(cfg.epsilon) && !(res.boundary_deviation < cfg.epsilon)) {
    o.violations.push_back({"perturb.closeness", "boundary deviation " + format_double(res.boundary_deviation)});
  }
  for (std::size_t i = 1; i < res.ladder.size(); ++i) {
    if (!(2 * res.ladder[i].deviation <= res.ladder[i - 1].deviation)) {
      o.violations.push_back({"perturb.ladder", "doubling u0 to " + res.ladder[i].u0.get_str() + " did not halve the deviation"});
    }
  }
  o.result = perturbation_json(res);
  o.result["membership"] = membership_json(mem);
  o.result["rh_verdict"] = res.rh.verdict;
  return o;
}

Outcome perturb_fix(const RunConfig& cfg) {
  Outcome o;
  const auto m = load_member(cfg, o.config);
  const double tol = cfg.tol.value_or(1e-7);
  o.config["tol"] = tol;
  const auto res = remove_offcircle_zeros(m, tol);
  const auto mem = validate_membership(res.member);
  add_membership_violations(mem, o.violations);
  if (!res.rh.verdict) o.violations.push_back({"removal.rh", "zeros remain off the critical circle"});
  o.result = removal_json(res);
  o.result["membership"] = membership_json(mem);
  o.result["rh_verdict"] = res.rh.verdict;
  return o;
}

Outcome validate_member(const RunConfig& cfg) {
  Outcome o;
  if (cfg.member.empty()) throw InputError("--member PATH is required");
  const auto m = load_member(cfg, o.config);
  const double tol = cfg.tol.value_or(1e-10);
  o.config["tol"] = tol;
  const auto rep = validate_membership(m, tol);
  add_membership_violations(rep, o.violations);
  const auto rh = member_rh(m);
  o.result = {{"member", member_json(m)}, {"membership", membership_json(rep)}, {"rh", rh_json(rh)},
              {"rh_verdict", rh.verdict}};
  return o;
}

Outcome approx_cmd(const RunConfig& cfg) {
  Outcome o;
  ApproxProblem prob{parse_target(cfg.target), parse_region(cfg.k_region), parse_region(cfg.u_region), std::nullopt,
                     cfg.grid};
  if (cfg.eta != "auto") {
    try {
      std::size_t used = 0;
      prob.eta = std::stod(cfg.eta, &used);
      if (used != cfg.eta.size()) throw std::invalid_argument(cfg.eta);
    } catch (const std::logic_error&) {
      throw InputError("--eta must be a number or 'auto'");
    }
  }
  if (cfg.levels < 2) throw InputError("--levels must be at least 2");
  const double tol = cfg.tol.value_or(0.05);
  const auto zf = zeta_of(need_spec(cfg));
  o.config = {{"spec", cfg.spec},   {"target", cfg.target}, {"K", to_string(prob.k)}, {"U", to_string(prob.u)},
              {"grid", cfg.grid},   {"levels", cfg.levels}, {"eta", cfg.eta},         {"tol", tol}};
  const auto study = convergence_study(zf, prob, cfg.levels);
  prob.eta = study.eta;
  prob.grid_step = study.steps.back();
  const auto ts = approximate(zf, prob);
  if (ts.sup_error > tol) o.violations.push_back({"approx.tolerance", "sup error " + format_double(ts.sup_error)});
  for (std::size_t i = 0; i < study.contractions.size(); ++i) {
    if (study.contractions[i] < 1.8) {
      o.violations.push_back({"approx.refinement", "grid step " + format_double(study.steps[i + 1]) +
                                                       " contracted by only " + format_double(study.contractions[i])});
    }
  }
  const std::size_t n = study.errors.size();
  const double band = study.errors[n - 2] - study.errors[n - 1];
  if (std::abs(study.alt_error - study.errors[n - 1]) >= band) {
    o.violations.push_back({"approx.eta_invariance", "error at eta/2 is " + format_double(study.alt_error)});
  }
  o.result = {{"convergence", convergence_json(study)}, {"translate_sum", translate_sum_json(ts)}};
  o.csv = approx_csv(ts);
  return o;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--out", cfg.out, "output file (default: standard output)");
  sub->add_option("--format", cfg.format, "report or csv")->check(CLI::IsMember({"report", "csv"}));
  sub->add_option("--seed", cfg.seed, "seed for sampled checks");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Zeta functions of curves over finite fields"};
  app.require_subcommand(1);

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, const std::string& full) {
    auto* sub = parent->add_subcommand(name, desc);
    sub->callback([&cfg, full] { cfg.command = full; });
    add_common(sub, cfg);
    return sub;
  };

  auto* curve = app.add_subcommand("curve", "curve utilities")->require_subcommand(1);
  auto* count = leaf(curve, "count", "point counts N_1..N_m", "curve count");
  count->add_option("--spec", cfg.spec, "curve-spec file")->required();
  count->add_option("--terms", cfg.terms, "number of counts (default max(2, 2g))");

  auto* zeta = app.add_subcommand("zeta", "zeta functions")->require_subcommand(1);
  for (const auto& [name, desc] : std::vector<std::pair<std::string, std::string>>{
           {"build", "L-polynomial and zeta report"}, {"rh", "Riemann hypothesis check"}, {"nevanlinna", "value distribution"}}) {
    auto* sub = leaf(zeta, name, desc, "zeta " + name);
    sub->add_option("--spec", cfg.spec, "curve-spec file")->required();
    sub->add_option("--tol", cfg.tol, "tolerance");
    if (name == "nevanlinna") {
      sub->add_option("--alpha", cfg.alpha, "comma-separated values, e.g. 0,1,2,i,inf");
      sub->add_option("--rmin", cfg.rmin, "smallest radius");
      sub->add_option("--rmax", cfg.rmax, "largest radius");
    }
  }

  auto* perturb = app.add_subcommand("perturb", "perturbations within the class")->require_subcommand(1);
  auto* fail = leaf(perturb, "fail-rh", "plant off-circle zeros", "perturb fail-rh");
  auto* fix = leaf(perturb, "fix-rh", "remove off-circle zeros", "perturb fix-rh");
  for (auto* sub : {fail, fix}) {
    auto* s = sub->add_option("--spec", cfg.spec, "curve-spec file");
    auto* m = sub->add_option("--member", cfg.member, "member artifact (JSON)");
    s->excludes(m);
    sub->add_option("--tol", cfg.tol, "tolerance");
  }
  fail->add_option("--epsilon", cfg.epsilon, "closeness on the annulus (inf allowed)");
  fail->add_option("--annulus", cfg.annulus, "outer radius r of 1/(qr) <= |u| <= r");
  fail->add_option("--u0", cfg.u0, "fixed planting point (integer > r)");

  auto* approx = leaf(&app, "approx", "approximation by zeta translates", "approx");
  approx->add_option("--spec", cfg.spec, "curve-spec file")->required();
  approx->add_option("--target", cfg.target, "exp, sin, cos, sq, zero, one or poly:c0,c1,...");
  approx->add_option("--compact", cfg.k_region, "K: disk:cx,cy,r or rect:x0,x1,y0,y1");
  approx->add_option("--domain", cfg.u_region, "U, same syntax as K");
  approx->add_option("--grid", cfg.grid, "coarsest grid step");
  approx->add_option("--levels", cfg.levels, "number of grid levels");
  approx->add_option("--eta", cfg.eta, "scale, a number or auto");
  approx->add_option("--tol", cfg.tol, "allowed sup error");

  auto* validate = app.add_subcommand("validate", "validation")->require_subcommand(1);
  auto* vm = leaf(validate, "member", "membership report for an artifact", "validate member");
  vm->add_option("--member", cfg.member, "member artifact (JSON)")->required();
  vm->add_option("--tol", cfg.tol, "tolerance");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInput;
  }

  Outcome o;
  try {
    if (cfg.command == "curve count") o = curve_count(cfg);
    else if (cfg.command == "zeta build") o = zeta_build(cfg, false);
    else if (cfg.command == "zeta rh") o = zeta_build(cfg, true);
    else if (cfg.command == "zeta nevanlinna") o = zeta_nevanlinna(cfg);
    else if (cfg.command == "perturb fail-rh") o = perturb_fail(cfg);
    else if (cfg.command == "perturb fix-rh") o = perturb_fix(cfg);
    else if (cfg.command == "approx") o = approx_cmd(cfg);
    else o = validate_member(cfg);
    if (cfg.format == "csv" && !o.csv) throw InputError("--format csv is only available for zeta nevanlinna and approx");
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    if (is_input_code(e.code())) {
      err << "error: " << e.what() << '\n';
      return kExitInput;
    }
    err << "verification failure [" << violation_id(e.code()) << "]: " << e.what() << '\n';
    return kExitVerification;
  }

  std::string text;
  if (cfg.format == "csv") {
    text = *o.csv;
  } else {
    Json viol = Json::array();
    for (const auto& v : o.violations) viol.push_back({{"id", v.id}, {"detail", v.detail}});
    Json doc{{"schema", kReportSchema},       {"version", kVersion},   {"command", cfg.command},
             {"config", o.config},            {"verdict", o.violations.empty()}, {"violations", viol},
             {"result", o.result}};
    text = doc.dump(2) + "\n";
  }
  if (cfg.out.empty()) {
    out << text;
  } else {
    std::ofstream f(cfg.out);
    if (!f) {
      err << "error: cannot write '" << cfg.out << "'\n";
      return kExitInput;
    }
    f << text;
  }
  for (const auto& v : o.violations) err << "violation [" << v.id << "]: " << v.detail << '\n';
  return o.violations.empty() ? kExitOk : kExitVerification;
}

}  // namespace ffzeta
