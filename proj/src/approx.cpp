#include "ffzeta/approx.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ffzeta/nevanlinna.hpp"
#include "ffzeta/numeric.hpp"

namespace ffzeta {

namespace {

std::vector<double> split_numbers(const std::string& body, const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (...) {
      throw Error(ErrorCode::ParseError, "bad number '" + item + "' in '" + text + "'");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) throw Error(ErrorCode::ParseError, "bad number '" + item + "' in '" + text + "'");
    out.push_back(v);
  }
  return out;
}

double rho_min(std::uint64_t q) { return std::min(1.0, 2 * kPi / std::log(static_cast<double>(q))); }

}  // namespace

// ---- regions ------------------------------------------------------------

bool contains(const Region& r, Complex s) {
  if (const auto* d = std::get_if<Disk>(&r)) return std::abs(s - d->center) <= d->radius;
  const auto& b = std::get<Rect>(r);
  return s.real() >= b.x0 && s.real() <= b.x1 && s.imag() >= b.y0 && s.imag() <= b.y1;
}

Region parse_region(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "region must look like disk:cx,cy,r or rect:x0,x1,y0,y1");
  const std::string kind = text.substr(0, colon);
  const auto v = split_numbers(text.substr(colon + 1), text);
  if (kind == "disk" && v.size() == 3) {
    if (!(v[2] > 0)) throw Error(ErrorCode::ParseError, "disk radius must be positive");
    return Disk{Complex(v[0], v[1]), v[2]};
  }
  if (kind == "rect" && v.size() == 4) {
    if (!(v[1] > v[0]) || !(v[3] > v[2])) throw Error(ErrorCode::ParseError, "rect needs x0 < x1 and y0 < y1");
    return Rect{v[0], v[1], v[2], v[3]};
  }
  throw Error(ErrorCode::ParseError, "cannot parse region '" + text + "'");
}

std::string to_string(const Region& r) {
  std::ostringstream os;
  os.precision(17);
  if (const auto* d = std::get_if<Disk>(&r)) {
    os << "disk:" << d->center.real() << "," << d->center.imag() << "," << d->radius;
  } else {
    const auto& b = std::get<Rect>(r);
    os << "rect:" << b.x0 << "," << b.x1 << "," << b.y0 << "," << b.y1;
  }
  return os.str();
}

double region_reach(const Region& u) {
  if (const auto* d = std::get_if<Disk>(&u)) return std::max(std::abs(d->center) + d->radius, 2 * d->radius);
  const auto& b = std::get<Rect>(u);
  double corner = 0;
  for (double x : {b.x0, b.x1})
    for (double y : {b.y0, b.y1}) corner = std::max(corner, std::hypot(x, y));
  return std::max(corner, std::hypot(b.x1 - b.x0, b.y1 - b.y0));
}

double choose_eta(std::uint64_t q, const Region& u) { return std::min(1.0, rho_min(q) / (2 * region_reach(u))); }

// ---- residue ------------------------------------------------------------

ResidueConstant residue_a(const ZetaFunction& zf, double eta) {
  if (!(eta > 0)) throw Error(ErrorCode::GeometryError, "eta must be positive");
  const double q = static_cast<double>(zf.q());
  const double lq = std::log(q);
  ResidueConstant out;
  out.closed_form = kPi * to_complex(zf.L().poly())(Complex(1)) / ((1 - q) * eta * lq);
  std::vector<Complex> values;
  for (int k = 3; k <= 6; ++k) {
    const double t = std::pow(10.0, -k);
    values.push_back(t * zf(Complex(eta * t)));
  }
  const auto [limit, err] = richardson(values, 10.0);
  out.a = kPi * limit;
  out.extrapolation_error = kPi * err;
  const double rel = std::abs(out.a - out.closed_form) / std::abs(out.closed_form);
  if (rel > 1e-8) {
    throw Error(ErrorCode::ExtrapolationUnstable,
                "numeric residue " + format_complex(out.a) + " differs from " + format_complex(out.closed_form));
  }
  return out;
}

// ---- cutoff -------------------------------------------------------------

double Cutoff::step(double t) {
  if (t <= 0) return 0;
  if (t >= 1) return 1;
  const double a = std::exp(-1 / t), b = std::exp(-1 / (1 - t));
  return a / (a + b);
}

double Cutoff::step_derivative(double t) {
  if (t <= 0 || t >= 1) return 0;
  const double s = step(t);
  return s * (1 - s) * (1 / (t * t) + 1 / ((1 - t) * (1 - t)));
}

Cutoff::Cutoff(const Region& k, const Region& u, double grid_step) {
  if (!(grid_step > 0)) throw Error(ErrorCode::GeometryError, "grid step must be positive");
  if (const auto* dk = std::get_if<Disk>(&k)) {
    const auto* du = std::get_if<Disk>(&u);
    if (!du) throw Error(ErrorCode::GeometryError, "K and U must both be disks or both be rectangles");
    radial_ = true;
    centre_ = dk->center;
    inner_ = dk->radius;
    outer_ = du->radius - std::abs(du->center - dk->center);
    if (!(outer_ > inner_)) throw Error(ErrorCode::GeometryError, "K is not inside U");
    if (outer_ - inner_ < 2 * grid_step) throw Error(ErrorCode::GeometryError, "collar thinner than two grid steps");
    return;
  }
  const auto* ru = std::get_if<Rect>(&u);
  if (!ru) throw Error(ErrorCode::GeometryError, "K and U must both be disks or both be rectangles");
  radial_ = false;
  kin_ = std::get<Rect>(k);
  uout_ = *ru;
  const double gap = std::min({kin_.x0 - uout_.x0, uout_.x1 - kin_.x1, kin_.y0 - uout_.y0, uout_.y1 - kin_.y1});
  if (!(gap > 0)) throw Error(ErrorCode::GeometryError, "K is not inside U");
  if (gap < 2 * grid_step) throw Error(ErrorCode::GeometryError, "collar thinner than two grid steps");
}

namespace {

// Profile equal to 1 on [k0, k1] and 0 outside (u0, u1), with derivative.
std::pair<double, double> axis_profile(double x, double k0, double k1, double u0, double u1) {
  if (x <= u0 || x >= u1) return {0, 0};
  if (x >= k0 && x <= k1) return {1, 0};
  if (x < k0) {
    const double w = k0 - u0;
    return {Cutoff::step((x - u0) / w), Cutoff::step_derivative((x - u0) / w) / w};
  }
  const double w = u1 - k1;
  return {Cutoff::step((u1 - x) / w), -Cutoff::step_derivative((u1 - x) / w) / w};
}

}  // namespace

double Cutoff::chi(Complex s) const {
  if (radial_) {
    const double rho = std::abs(s - centre_);
    return 1 - step((rho - inner_) / (outer_ - inner_));
  }
  return axis_profile(s.real(), kin_.x0, kin_.x1, uout_.x0, uout_.x1).first *
         axis_profile(s.imag(), kin_.y0, kin_.y1, uout_.y0, uout_.y1).first;
}

Complex Cutoff::dbar(Complex s) const {
  if (radial_) {
    const Complex d = s - centre_;
    const double rho = std::abs(d);
    if (rho <= inner_ || rho >= outer_) return 0;
    const double w = outer_ - inner_;
    const double dpsi = -step_derivative((rho - inner_) / w) / w;
    return dpsi * d / (2 * rho);
  }
  const auto [px, dx] = axis_profile(s.real(), kin_.x0, kin_.x1, uout_.x0, uout_.x1);
  const auto [py, dy] = axis_profile(s.imag(), kin_.y0, kin_.y1, uout_.y0, uout_.y1);
  return 0.5 * Complex(dx * py, px * dy);
}

bool Cutoff::in_collar(Complex s) const {
  if (radial_) {
    const double rho = std::abs(s - centre_);
    return rho > inner_ && rho < outer_;
  }
  const bool in_u = s.real() > uout_.x0 && s.real() < uout_.x1 && s.imag() > uout_.y0 && s.imag() < uout_.y1;
  const bool in_k = s.real() >= kin_.x0 && s.real() <= kin_.x1 && s.imag() >= kin_.y0 && s.imag() <= kin_.y1;
  return in_u && !in_k;
}

Rect Cutoff::box() const {
  if (radial_) {
    return {centre_.real() - outer_, centre_.real() + outer_, centre_.imag() - outer_, centre_.imag() + outer_};
  }
  return uout_;
}

// ---- targets ------------------------------------------------------------

Target parse_target(const std::string& text) {
  if (text == "exp") return {text, [](Complex s) { return std::exp(s); }};
  if (text == "sin") return {text, [](Complex s) { return std::sin(s); }};
  if (text == "cos") return {text, [](Complex s) { return std::cos(s); }};
  if (text == "sq") return {text, [](Complex s) { return s * s; }};
  if (text == "zero") return {text, [](Complex) { return Complex(0); }};
  if (text == "one") return {text, [](Complex) { return Complex(1); }};
  if (text.rfind("poly:", 0) == 0) {
    std::vector<Complex> c;
    std::stringstream ss(text.substr(5));
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto v = ExtendedComplex::parse(item);
      if (v.infinite) throw Error(ErrorCode::ParseError, "infinite coefficient in '" + text + "'");
      c.push_back(v.value);
    }
    if (c.empty()) throw Error(ErrorCode::ParseError, "empty polynomial target");
    const ComplexPoly p(c);
    return {text, [p](Complex s) { return p(s); }};
  }
  throw Error(ErrorCode::ParseError, "unknown target '" + text + "' (exp, sin, cos, sq, zero, one, poly:c0,c1,...)");
}

// ---- approximation ------------------------------------------------------

Complex eval_translate_sum(const TranslateSum& ts, Complex s) {
  std::vector<Complex> terms;
  terms.reserve(ts.terms.size());
  for (const auto& t : ts.terms) {
    try {
      terms.push_back(t.lambda * zeta_like_eval(ts.h, ts.q, ts.eta * s + t.b));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PoleHit) throw;
      throw Error(ErrorCode::PoleCollision, "eta s + b hits a pole at s = " + format_complex(s));
    }
  }
  return pairwise_sum(terms);
}

std::vector<Complex> audit_points(const Region& k, std::size_t count) {
  // Rings (or shrunken rectangles) at decreasing scale; half the points on the boundary.
  const std::vector<std::pair<double, double>> rings{{1.0, 0.5}, {0.9, 0.1875}, {0.7, 0.125}, {0.45, 0.09375},
                                                     {0.2, 0.0625}, {0.08, 0.02734375}};
  std::vector<Complex> out;
  out.reserve(count);
  std::size_t used = 1;  // the centre
  std::vector<std::size_t> per;
  for (const auto& r : rings) {
    const auto n = static_cast<std::size_t>(std::floor(r.second * static_cast<double>(count)));
    per.push_back(n);
    used += n;
  }
  if (used < count) per[0] += count - used;
  const double golden = kPi * (3 - std::sqrt(5.0));
  for (std::size_t i = 0; i < rings.size(); ++i) {
    const double scale = rings[i].first;
    const std::size_t n = per[i];
    for (std::size_t j = 0; j < n; ++j) {
      const double t = (static_cast<double>(j) + 0.5) / static_cast<double>(n);
      if (const auto* d = std::get_if<Disk>(&k)) {
        out.push_back(d->center + std::polar(scale * d->radius, 2 * kPi * t + golden * static_cast<double>(i)));
      } else {
        const auto& b = std::get<Rect>(k);
        const Complex c(0.5 * (b.x0 + b.x1), 0.5 * (b.y0 + b.y1));
        const double hw = 0.5 * (b.x1 - b.x0) * scale, hh = 0.5 * (b.y1 - b.y0) * scale;
        // walk the perimeter by arc length
        double p = t * 4 * (hw + hh);
        Complex z;
        if (p < 2 * hw) {
          z = Complex(-hw + p, -hh);
        } else if ((p -= 2 * hw) < 2 * hh) {
          z = Complex(hw, -hh + p);
        } else if ((p -= 2 * hh) < 2 * hw) {
          z = Complex(hw - p, hh);
        } else {
          p -= 2 * hw;
          z = Complex(-hw, hh - p);
        }
        out.push_back(c + z);
      }
    }
  }
  if (const auto* d = std::get_if<Disk>(&k)) {
    out.push_back(d->center);
  } else {
    const auto& b = std::get<Rect>(k);
    out.emplace_back(0.5 * (b.x0 + b.x1), 0.5 * (b.y0 + b.y1));
  }
  out.resize(std::min(out.size(), count));
  return out;
}

TranslateSum approximate(const ZetaFunction& zf, const ApproxProblem& prob) {
  const auto q = zf.q();
  const double eta = prob.eta ? *prob.eta : choose_eta(q, prob.u);
  if (!(eta > 0) || rho_min(q) / eta <= region_reach(prob.u)) {
    throw Error(ErrorCode::GeometryError, "eta = " + format_double(eta) + " lets a pole of zeta(eta s) into U or U - U");
  }
  const Cutoff chi(prob.k, prob.u, prob.grid_step);
  TranslateSum ts;
  ts.q = q;
  ts.h = zf.h();
  ts.eta = eta;
  ts.a = residue_a(zf, eta).a;
  ts.grid_step = prob.grid_step;

  const double d = prob.grid_step;
  const Rect box = chi.box();
  const auto nx = static_cast<long>(std::ceil((box.x1 - box.x0) / d));
  const auto ny = static_cast<long>(std::ceil((box.y1 - box.y0) / d));
  std::vector<Complex> weights, nodes;  // f dbar chi d^2 and z_k
  for (long i = 0; i < nx; ++i) {
    for (long j = 0; j < ny; ++j) {
      const Complex z(box.x0 + (static_cast<double>(i) + 0.5) * d, box.y0 + (static_cast<double>(j) + 0.5) * d);
      if (!chi.in_collar(z)) continue;
      const Complex w = prob.target.fn(z) * chi.dbar(z) * d * d;
      if (w == Complex(0)) continue;
      weights.push_back(w);
      nodes.push_back(z);
      ts.terms.push_back({w / ts.a, -eta * z});
    }
  }

  for (const auto& s : audit_points(prob.k)) {
    AuditPoint ap;
    ap.s = s;
    ap.target = prob.target.fn(s);
    ap.value = eval_translate_sum(ts, s);
    ap.error = std::abs(ap.value - ap.target);
    ts.sup_error = std::max(ts.sup_error, ap.error);
    std::vector<Complex> cp;
    cp.reserve(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) cp.push_back(weights[k] / (kPi * (s - nodes[k])));
    ts.cauchy_pompeiu_error = std::max(ts.cauchy_pompeiu_error, std::abs(pairwise_sum(cp) - ap.target));
    ts.audit.push_back(ap);
  }
  return ts;
}

ConvergenceStudy convergence_study(const ZetaFunction& zf, const ApproxProblem& prob, unsigned levels) {
  ConvergenceStudy out;
  ApproxProblem p = prob;
  out.eta = p.eta ? *p.eta : choose_eta(zf.q(), p.u);
  p.eta = out.eta;
  for (unsigned k = 0; k < levels; ++k) {
    p.grid_step = prob.grid_step / std::pow(2.0, k);
    out.steps.push_back(p.grid_step);
    out.errors.push_back(approximate(zf, p).sup_error);
    if (k > 0) out.contractions.push_back(out.errors[k - 1] / out.errors[k]);
  }
  out.alt_eta = out.eta / 2;
  p.eta = out.alt_eta;
  out.alt_error = approximate(zf, p).sup_error;
  return out;
}

}  // namespace ffzeta
