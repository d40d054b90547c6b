#include "ffzeta/nevanlinna.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "ffzeta/numeric.hpp"

namespace ffzeta {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double lq_of(std::uint64_t q) { return std::log(static_cast<double>(q)); }

bool same_kind(const MeromorphicFn& a, const MeromorphicFn& b) {
  if (a.in_u() != b.in_u()) return false;
  return !a.in_u() || a.q() == b.q();
}

bool is_constant(const ComplexRational& r) { return r.num().degree() <= 0 && r.den().degree() <= 0; }

ComplexPoly compose_shift(const ComplexPoly& p, Complex b) {
  // p(s + b) by Horner in polynomials
  ComplexPoly acc;
  const ComplexPoly lin{b, Complex(1)};
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * lin + ComplexPoly::constant(p.coeffs()[i]);
  return acc;
}

std::vector<std::size_t> top_decade(const std::vector<double>& r_grid) {
  std::vector<std::size_t> idx;
  if (r_grid.empty()) return idx;
  const double rmax = r_grid.back();
  for (std::size_t i = 0; i < r_grid.size(); ++i)
    if (r_grid[i] >= rmax / 10 * (1 - 1e-12)) idx.push_back(i);
  return idx;
}

void require_span(const std::vector<double>& r_grid, double decades) {
  if (r_grid.size() < 3 || r_grid.front() <= 0 || r_grid.back() / r_grid.front() < std::pow(10.0, decades) * (1 - 1e-9)) {
    throw Error(ErrorCode::InsufficientGrid, "the radius grid must span at least two decades with three or more radii");
  }
  for (std::size_t i = 1; i < r_grid.size(); ++i)
    if (!(r_grid[i] > r_grid[i - 1])) throw Error(ErrorCode::InsufficientGrid, "the radius grid must be increasing");
}

}  // namespace

// ---- ExtendedComplex ----------------------------------------------------

std::string ExtendedComplex::to_string() const {
  if (infinite) return "inf";
  std::ostringstream os;
  os.precision(15);
  const double re = value.real(), im = value.imag();
  if (im == 0) {
    os << re;
  } else {
    if (re != 0) os << re << (im > 0 ? "+" : "");
    if (im == 1) {
      os << "i";
    } else if (im == -1) {
      os << "-i";
    } else {
      os << im << "i";
    }
  }
  return os.str();
}

ExtendedComplex ExtendedComplex::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t == "inf" || t == "infinity" || t == "oo") return infinity();
  auto bad = [&]() -> ExtendedComplex { throw Error(ErrorCode::ParseError, "cannot parse value '" + text + "'"); };
  if (t.empty()) return bad();
  auto num = [&](const std::string& s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(s, &used);
    } catch (...) {
      bad();
    }
    if (used != s.size()) bad();
    return v;
  };
  if (t.back() != 'i') return {Complex(num(t), 0), false};
  const std::string body = t.substr(0, t.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {Complex(0, num(body)), false};
  return {Complex(num(body.substr(0, split)), num(body.substr(split))), false};
}

// ---- MeromorphicFn ------------------------------------------------------

MeromorphicFn::MeromorphicFn(std::uint64_t q, ComplexRational r) : q_(q), r_(std::move(r)) {
  num_log_ = prepare(r_.num());
  den_log_ = prepare(r_.den());
}

MeromorphicFn MeromorphicFn::of_u(std::uint64_t q, ComplexRational r) {
  if (q < 2) throw Error(ErrorCode::Unsupported, "q must be at least 2");
  return {q, std::move(r)};
}

MeromorphicFn MeromorphicFn::of_s(ComplexRational r) { return {0, std::move(r)}; }

MeromorphicFn MeromorphicFn::constant(Complex c) { return {0, ComplexRational(ComplexPoly::constant(c))}; }

MeromorphicFn MeromorphicFn::from_zeta(const ZetaFunction& zf) { return of_u(zf.q(), to_complex(zf.Z())); }

MeromorphicFn MeromorphicFn::zeta_like(std::uint64_t q, const ComplexRational& h) {
  const double qd = static_cast<double>(q);
  const ComplexPoly den = ComplexPoly{Complex(1), Complex(-1)} * ComplexPoly{Complex(1), Complex(-qd)};
  return of_u(q, h * ComplexRational(ComplexPoly::constant(1.0), den));
}

MeromorphicFn::LogPoly MeromorphicFn::prepare(const ComplexPoly& p) {
  LogPoly lp;
  if (p.is_zero()) {
    lp.zero = true;
    return lp;
  }
  lp.low = p.low_order();
  lp.core = p.shift_down(lp.low);
  lp.reversed = lp.core.reversed(static_cast<std::size_t>(lp.core.degree()));
  return lp;
}

int MeromorphicFn::degree() const {
  if (!in_u()) return std::max(r_.num().degree(), r_.den().degree());
  const long kn = static_cast<long>(num_log_.low), kd = static_cast<long>(den_log_.low);
  const long shift = kn - kd;
  const long dn = num_log_.core.degree() + std::max(shift, 0L);
  const long dd = den_log_.core.degree() + std::max(-shift, 0L);
  return static_cast<int>(std::max(dn, dd));
}

Complex MeromorphicFn::operator()(Complex s) const {
  if (!in_u()) return r_(s);
  return r_(std::exp(-s * lq_of(q_)));
}

double MeromorphicFn::log_abs_poly(const LogPoly& lp, Complex s) const {
  if (lp.zero) return -std::numeric_limits<double>::infinity();
  if (!in_u()) return std::log(std::abs(lp.core(s))) + static_cast<double>(lp.low) * std::log(std::abs(s));
  const double lq = lq_of(q_);
  const double logu = -s.real() * lq;
  const double theta = -s.imag() * lq;
  const double low = static_cast<double>(lp.low);
  if (logu <= 0) {
    const Complex u = std::polar(std::exp(logu), theta);
    return low * logu + std::log(std::abs(lp.core(u)));
  }
  const Complex v = std::polar(std::exp(-logu), -theta);
  const double d = static_cast<double>(lp.core.degree());
  return (low + d) * logu + std::log(std::abs(lp.reversed(v)));
}

double MeromorphicFn::log_abs(Complex s) const { return log_abs_poly(num_log_, s) - log_abs_poly(den_log_, s); }

MeromorphicFn MeromorphicFn::reciprocal_minus(Complex alpha) const {
  const ComplexPoly shifted = r_.num() - alpha * r_.den();
  if (shifted.is_zero()) throw Error(ErrorCode::DegenerateTarget, "f is identically equal to alpha");
  return {q_, cancel_common_roots(ComplexRational(r_.den(), shifted))};
}

MeromorphicFn MeromorphicFn::shifted(Complex b) const {
  if (in_u()) {
    const Complex c = std::exp(-b * lq_of(q_));
    return {q_, ComplexRational(r_.num().scale_argument(c), r_.den().scale_argument(c))};
  }
  return {0, ComplexRational(compose_shift(r_.num(), b), compose_shift(r_.den(), b))};
}

namespace {

std::uint64_t common_q(const MeromorphicFn& a, const MeromorphicFn& b) {
  if (is_constant(a.rational())) return b.q();
  if (is_constant(b.rational())) return a.q();
  if (!same_kind(a, b)) throw Error(ErrorCode::Unsupported, "sum or product of functions of different kinds");
  return a.q();
}

}  // namespace

MeromorphicFn operator+(const MeromorphicFn& a, const MeromorphicFn& b) {
  const std::uint64_t q = common_q(a, b);
  return {q, cancel_common_roots(a.r_ + b.r_)};
}

MeromorphicFn operator*(const MeromorphicFn& a, const MeromorphicFn& b) {
  const std::uint64_t q = common_q(a, b);
  return {q, cancel_common_roots(a.r_ * b.r_)};
}

ComplexRational cancel_common_roots(const ComplexRational& r, double tol) {
  if (r.num().degree() < 1 || r.den().degree() < 1) return r;
  std::vector<Complex> rn = flatten(roots(r.num()));
  std::vector<Complex> rd = flatten(roots(r.den()));
  std::vector<bool> used_n(rn.size(), false);
  std::vector<Complex> keep_d;
  bool changed = false;
  for (const auto& d : rd) {
    std::size_t best = rn.size();
    double best_dist = 0;
    for (std::size_t i = 0; i < rn.size(); ++i) {
      if (used_n[i]) continue;
      const double dist = std::abs(rn[i] - d);
      if (dist <= tol * std::max(1.0, std::abs(d)) && (best == rn.size() || dist < best_dist)) {
        best = i;
        best_dist = dist;
      }
    }
    if (best < rn.size()) {
      used_n[best] = true;
      changed = true;
    } else {
      keep_d.push_back(d);
    }
  }
  if (!changed) return r;
  std::vector<Complex> keep_n;
  for (std::size_t i = 0; i < rn.size(); ++i)
    if (!used_n[i]) keep_n.push_back(rn[i]);
  return {from_roots(keep_n, r.num().leading()), from_roots(keep_d, r.den().leading())};
}

// ---- alpha points -------------------------------------------------------

unsigned AlphaPointSet::k() const {
  unsigned total = 0;
  for (const auto& r : q ? u_roots : s_roots) total += r.multiplicity;
  return total;
}

std::vector<LatticePoint> AlphaPointSet::s_points(double r) const {
  std::vector<LatticePoint> out;
  if (r < 0) return out;
  // Closed disk, with room for the rounding in -log|w| / log q.
  const double slop = 1e-12 * std::max(1.0, r);
  if (q == 0) {
    for (const auto& z : s_roots)
      if (std::abs(z.value) <= r + slop) out.push_back({z.value, z.multiplicity});
    return out;
  }
  const double lq = lq_of(q);
  const double period = 2 * kPi / lq;
  for (const auto& w : u_roots) {
    const double sigma = -std::log(std::abs(w.value)) / lq;
    const double tau0 = -std::arg(w.value) / lq;
    if (std::fabs(sigma) > r + slop) continue;
    const double h = std::sqrt(std::max(0.0, r * r - sigma * sigma)) + slop;
    const auto m_lo = static_cast<long>(std::ceil((-h - tau0) / period));
    const auto m_hi = static_cast<long>(std::floor((h - tau0) / period));
    for (long m = m_lo; m <= m_hi; ++m) {
      const Complex s(sigma, tau0 + static_cast<double>(m) * period);
      if (std::abs(s) <= r + slop) out.push_back({s, w.multiplicity});
    }
  }
  return out;
}

AlphaPointSet alpha_points(const MeromorphicFn& f, const ExtendedComplex& alpha) {
  const ComplexRational& r = f.rational();
  AlphaPointSet aps;
  aps.alpha = alpha;
  aps.q = f.q();
  // A coefficient is zero when num_k - alpha den_k cancels to rounding level;
  // small coefficients of a wide-range polynomial are kept.
  std::vector<Complex> c;
  const std::size_t n = std::max(r.num().coeffs().size(), r.den().coeffs().size());
  for (std::size_t k = 0; k < n; ++k) {
    if (alpha.infinite) {
      c.push_back(r.den()[k]);
    } else {
      const Complex x = r.num()[k] - alpha.value * r.den()[k];
      const double mag = std::abs(r.num()[k]) + std::abs(alpha.value) * std::abs(r.den()[k]);
      c.push_back(std::abs(x) <= 64 * kEps * mag ? Complex(0) : x);
    }
  }
  const ComplexPoly p(c);
  if (p.is_zero()) throw Error(ErrorCode::DegenerateTarget, "f is identically " + alpha.to_string());
  if (p.degree() < 1) return aps;
  const auto rs = roots(p);
  for (const auto& z : rs) {
    if (f.in_u()) {
      if (z.value == Complex(0)) continue;  // u = 0 has no finite s-preimage
      aps.u_roots.push_back(z);
    } else {
      aps.s_roots.push_back(z);
    }
    const double az = std::abs(z.value);
    double val = 0, sc = 0;
    Complex acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
      acc = acc * z.value + c[i];
      sc = sc * az + std::abs(c[i]);
    }
    val = sc > 0 ? std::abs(acc) / sc : 0;
    aps.max_residual = std::max(aps.max_residual, val);
  }
  return aps;
}

unsigned long counting_n(const AlphaPointSet& aps, double r) {
  unsigned long n = 0;
  for (const auto& p : aps.s_points(r)) n += p.multiplicity;
  return n;
}

double integrated_N(const AlphaPointSet& aps, double r) {
  if (r <= 0) return 0;
  std::vector<double> terms;
  double at_origin = 0;
  for (const auto& p : aps.s_points(r)) {
    const double a = std::abs(p.s);
    if (a < 1e-12) {
      at_origin += p.multiplicity;
    } else {
      terms.push_back(p.multiplicity * std::max(0.0, std::log(r / a)));
    }
  }
  return pairwise_sum(terms) + at_origin * std::log(r);
}

// ---- proximity ----------------------------------------------------------

namespace {

std::size_t auto_nodes(const MeromorphicFn& f, double r) {
  const double lq = f.in_u() ? std::max(1.0, lq_of(f.q())) : 1.0;
  const double want = std::max(4096.0, 32.0 * r * lq);
  std::size_t n = 1;
  while (static_cast<double>(n) < want) n <<= 1;
  return n;
}

Proximity proximity_impl(const MeromorphicFn& f, double r, const QuadratureConfig& cfg, const AlphaPointSet* poles) {
  if (!(r > 0)) throw Error(ErrorCode::Unsupported, "proximity needs r > 0");
  const std::size_t n = cfg.nodes ? cfg.nodes : auto_nodes(f, r);
  const std::size_t fine = 2 * n;
  const double h = 2 * kPi / static_cast<double>(fine);

  // Poles that sit (almost) on the circle; nodes must keep away from them.
  std::vector<double> danger;
  {
    std::optional<AlphaPointSet> own;
    if (!poles) {
      try {
        own = alpha_points(f, ExtendedComplex::infinity());
        poles = &*own;
      } catch (const Error&) {
        poles = nullptr;
      }
    }
    if (poles) {
      for (const auto& p : poles->s_points(r + 1e-6)) {
        if (std::fabs(std::abs(p.s) - r) <= 1e-6) danger.push_back(std::arg(p.s));
      }
    }
  }
  const double min_gap = 1e-9 / r;
  double offset = 0.3819660112501051 * h;
  for (int attempt = 0; attempt < 16; ++attempt) {
    bool ok = true;
    for (double t : danger) {
      const double x = (t - offset) / h;
      if (std::fabs(x - std::round(x)) * h < min_gap) ok = false;
    }
    if (ok) break;
    offset += 0.0618 * h;
  }

  std::vector<double> even, all;
  even.reserve(n);
  all.reserve(fine);
  for (std::size_t j = 0; j < fine; ++j) {
    const double theta = offset + h * static_cast<double>(j);
    double v = f.log_abs(std::polar(r, theta));
    if (std::isnan(v)) v = 0;
    v = std::max(0.0, v);
    if (std::isinf(v)) throw Error(ErrorCode::QuadratureUnstable, "integrand is infinite on the circle r = " + format_double(r));
    all.push_back(v);
    if (j % 2 == 0) even.push_back(v);
  }
  Proximity out;
  const double coarse = pairwise_sum(even) / static_cast<double>(n);
  out.value = pairwise_sum(all) / static_cast<double>(fine);
  out.error = std::fabs(coarse - out.value);
  out.nodes = fine;
  out.offset = offset;
  if (out.error > cfg.abs_tol + cfg.rel_tol * std::fabs(out.value)) {
    throw Error(ErrorCode::QuadratureUnstable, "doubling " + std::to_string(n) + " nodes moved m(r) by " +
                                                   format_double(out.error) + " at r = " + format_double(r));
  }
  return out;
}

}  // namespace

Proximity proximity_m(const MeromorphicFn& f, double r, const QuadratureConfig& cfg) {
  return proximity_impl(f, r, cfg, nullptr);
}

Proximity proximity_to(const MeromorphicFn& f, const ExtendedComplex& alpha, double r, const QuadratureConfig& cfg) {
  if (alpha.infinite) return proximity_m(f, r, cfg);
  return proximity_m(f.reciprocal_minus(alpha.value), r, cfg);
}

Characteristic characteristic_T(const MeromorphicFn& f, const AlphaPointSet& poles, double r, const QuadratureConfig& cfg) {
  Characteristic c;
  const Proximity m = proximity_impl(f, r, cfg, &poles);
  c.m = m.value;
  c.error = m.error;
  c.N = integrated_N(poles, r);
  c.T = c.m + c.N;
  return c;
}

Characteristic characteristic_T(const MeromorphicFn& f, double r, const QuadratureConfig& cfg) {
  return characteristic_T(f, alpha_points(f, ExtendedComplex::infinity()), r, cfg);
}

// ---- estimators ---------------------------------------------------------

std::vector<double> log_grid(double r_min, double r_max, unsigned per_decade) {
  if (!(r_min > 0) || !(r_max > r_min) || per_decade == 0) {
    throw Error(ErrorCode::InsufficientGrid, "log grid needs 0 < r_min < r_max");
  }
  const auto steps = static_cast<std::size_t>(std::ceil(per_decade * std::log10(r_max / r_min) - 1e-9));
  std::vector<double> out;
  for (std::size_t i = 0; i <= steps; ++i) {
    out.push_back(r_min * std::pow(r_max / r_min, static_cast<double>(i) / static_cast<double>(steps)));
  }
  out.back() = r_max;
  return out;
}

OrderEstimate estimate_order(const std::vector<double>& r_grid, const std::vector<double>& T) {
  require_span(r_grid, 2);
  const auto idx = top_decade(r_grid);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto i : idx) {
    if (!(T[i] > 0)) throw Error(ErrorCode::InsufficientGrid, "T(r) must be positive on the top decade");
    const double x = std::log(r_grid[i]), y = std::log(T[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double k = static_cast<double>(idx.size());
  OrderEstimate out;
  out.order = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  out.lower_order = std::numeric_limits<double>::infinity();
  for (std::size_t j = 1; j < idx.size(); ++j) {
    const auto a = idx[j - 1], b = idx[j];
    out.lower_order = std::min(out.lower_order, (std::log(T[b]) - std::log(T[a])) / (std::log(r_grid[b]) - std::log(r_grid[a])));
  }
  return out;
}

namespace {

std::vector<double> T_on_grid(const MeromorphicFn& f, const std::vector<double>& r_grid, const QuadratureConfig& cfg) {
  const auto poles = alpha_points(f, ExtendedComplex::infinity());
  std::vector<double> T;
  for (double r : r_grid) T.push_back(characteristic_T(f, poles, r, cfg).T);
  return T;
}

}  // namespace

OrderEstimate estimate_order(const MeromorphicFn& f, const std::vector<double>& r_grid, const QuadratureConfig& cfg) {
  require_span(r_grid, 2);
  return estimate_order(r_grid, T_on_grid(f, r_grid, cfg));
}

TypeEstimate estimate_type(const std::vector<double>& r_grid, const std::vector<double>& T, double target) {
  require_span(r_grid, 2);
  std::vector<double> ratios;
  for (auto i : top_decade(r_grid)) ratios.push_back(T[i] / r_grid[i]);
  std::sort(ratios.begin(), ratios.end());
  TypeEstimate out;
  const std::size_t m = ratios.size();
  out.type = m % 2 ? ratios[m / 2] : 0.5 * (ratios[m / 2 - 1] + ratios[m / 2]);
  out.target = target;
  return out;
}

TypeEstimate estimate_type(const MeromorphicFn& f, const std::vector<double>& r_grid, const QuadratureConfig& cfg) {
  require_span(r_grid, 2);
  return estimate_type(r_grid, T_on_grid(f, r_grid, cfg), type_target(f));
}

double type_target(const MeromorphicFn& f) {
  if (!f.in_u()) return 0;
  return f.degree() * lq_of(f.q()) / kPi;
}

double deficiency_target(const MeromorphicFn& f, const ExtendedComplex& alpha) {
  const int d = f.degree();
  if (d == 0) return 1;
  const unsigned k = alpha_points(f, alpha).k();
  return 1.0 - static_cast<double>(k) / d;
}

double estimate_deficiency(const std::vector<double>& r_grid, const std::vector<double>& N, const std::vector<double>& T) {
  double best = -std::numeric_limits<double>::infinity();
  for (auto i : top_decade(r_grid)) best = std::max(best, T[i] > 0 ? N[i] / T[i] : 0.0);
  return 1 - best;
}

double estimate_deficiency(const MeromorphicFn& f, const ExtendedComplex& alpha, const std::vector<double>& r_grid,
                           const QuadratureConfig& cfg) {
  const auto aps = alpha_points(f, alpha);
  std::vector<double> N;
  for (double r : r_grid) N.push_back(integrated_N(aps, r));
  return estimate_deficiency(r_grid, N, T_on_grid(f, r_grid, cfg));
}

double max_heuristic_T(const ZetaFunction& zf, double r, const QuadratureConfig& cfg) {
  const double q = static_cast<double>(zf.q());
  const auto l = MeromorphicFn::of_u(zf.q(), ComplexRational(zf.L().complex_poly()));
  const auto d = MeromorphicFn::of_u(zf.q(), ComplexRational(ComplexPoly{Complex(-1), Complex(1)} * ComplexPoly{Complex(1), Complex(-q)}));
  return std::max(proximity_m(l, r, cfg).value, proximity_m(d, r, cfg).value + std::log(q - 1));
}

long argument_principle_count(const MeromorphicFn& f, const ExtendedComplex& alpha, double r, std::size_t nodes) {
  const ComplexRational& R = f.rational();
  ComplexPoly p = alpha.infinite ? R.den() : R.num() - alpha.value * R.den();
  if (p.is_zero()) throw Error(ErrorCode::DegenerateTarget, "f is identically " + alpha.to_string());
  const ComplexPoly core = p.shift_down(f.in_u() ? p.low_order() : 0);
  const ComplexPoly rev = core.reversed(static_cast<std::size_t>(std::max(core.degree(), 0)));
  const double lq = f.in_u() ? lq_of(f.q()) : 0;
  auto unit = [&](Complex s) {
    Complex v;
    if (!f.in_u()) {
      v = core(s);
    } else {
      const double logu = -s.real() * lq, theta = -s.imag() * lq;
      if (logu <= 0) {
        v = core(std::polar(std::exp(logu), theta));
      } else {
        v = rev(std::polar(std::exp(-logu), -theta)) * std::polar(1.0, core.degree() * theta);
      }
    }
    return v / std::abs(v);
  };
  double total = 0;
  Complex prev = unit(Complex(r, 0));
  for (std::size_t j = 1; j <= nodes; ++j) {
    const Complex cur = unit(std::polar(r, 2 * kPi * static_cast<double>(j) / static_cast<double>(nodes)));
    total += std::arg(cur / prev);
    prev = cur;
  }
  return std::lround(total / (2 * kPi));
}

std::vector<ExtendedComplex> default_probe_set() {
  return {{Complex(0), false}, {Complex(1), false}, {Complex(2), false}, {Complex(0, 1), false}, ExtendedComplex::infinity()};
}

// ---- report -------------------------------------------------------------

NevanlinnaReport nevanlinna_report(const MeromorphicFn& f, const std::vector<ExtendedComplex>& alphas,
                                   const std::vector<double>& r_grid, const QuadratureConfig& cfg) {
  NevanlinnaReport rep;
  rep.r_grid = r_grid;
  rep.degree = f.degree();
  rep.q = f.q();
  const auto poles = alpha_points(f, ExtendedComplex::infinity());
  for (double r : r_grid) {
    const auto c = characteristic_T(f, poles, r, cfg);
    rep.T.push_back(c.T);
    rep.quadrature_error.push_back(c.error);
  }
  for (std::size_t i = 1; i < rep.T.size(); ++i) {
    if (rep.T[i] < rep.T[i - 1] - rep.quadrature_error[i] - rep.quadrature_error[i - 1] - 1e-9) rep.monotone = false;
  }
  for (const auto& a : alphas) {
    AlphaPointSet aps;
    try {
      aps = alpha_points(f, a);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::DegenerateTarget) continue;
      throw;
    }
    std::vector<double> N;
    for (std::size_t i = 0; i < r_grid.size(); ++i) {
      NevanlinnaRow row;
      row.r = r_grid[i];
      row.alpha = a.to_string();
      row.n = counting_n(aps, r_grid[i]);
      row.N = integrated_N(aps, r_grid[i]);
      row.m = proximity_to(f, a, r_grid[i], cfg).value;
      row.T = rep.T[i];
      N.push_back(row.N);
      rep.rows.push_back(row);
    }
    DeficiencyEstimate d;
    d.alpha = a;
    d.k = aps.k();
    d.estimate = estimate_deficiency(r_grid, N, rep.T);
    d.target = rep.degree > 0 ? 1.0 - static_cast<double>(d.k) / rep.degree : 1.0;
    rep.deficiency_sum += d.estimate;
    rep.deficiencies.push_back(d);
  }
  rep.order = estimate_order(r_grid, rep.T);
  rep.type = estimate_type(r_grid, rep.T, type_target(f));
  return rep;
}

// ---- inequality ledger --------------------------------------------------

bool InequalityLedger::all_pass() const { return failures() == 0; }

std::size_t InequalityLedger::failures() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const LedgerEntry& e) { return !e.pass; }));
}

InequalityLedger inequality_suite(const std::vector<MeromorphicFn>& fs, const std::vector<double>& r_samples,
                                  const std::vector<ExtendedComplex>& probes, const QuadratureConfig& cfg) {
  InequalityLedger ledger;
  auto add = [&](std::string id, std::string detail, double lhs, double rhs) {
    ledger.entries.push_back({std::move(id), std::move(detail), lhs, rhs, lhs <= rhs});
  };
  const bool orders = r_samples.size() >= 3 && r_samples.back() / r_samples.front() >= 100 * (1 - 1e-9);

  struct Profile {
    std::vector<double> T, err;
  };
  auto profile = [&](const MeromorphicFn& f) {
    Profile p;
    const auto poles = alpha_points(f, ExtendedComplex::infinity());
    for (double r : r_samples) {
      const auto c = characteristic_T(f, poles, r, cfg);
      p.T.push_back(c.T);
      p.err.push_back(c.error);
    }
    return p;
  };
  std::vector<Profile> prof;
  for (const auto& f : fs) prof.push_back(profile(f));

  for (std::size_t i = 0; i < fs.size(); ++i) {
    const std::string tag = "f" + std::to_string(i);
    const auto& f = fs[i];
    for (std::size_t k = 1; k < r_samples.size(); ++k) {
      add("T.monotone", tag + " r=" + format_double(r_samples[k]), prof[i].T[k - 1] - prof[i].err[k - 1] - prof[i].err[k] - 1e-9,
          prof[i].T[k]);
    }
    // First fundamental theorem: T(r, 1/(f - a)) - T(r, f) stays in a band.
    std::vector<ExtendedComplex> ffts{{Complex(2), false}};
    for (const auto& a : probes)
      if (!a.infinite && a.value != Complex(2)) ffts.push_back(a);
    for (const auto& a : ffts) {
      AlphaPointSet aps;
      try {
        aps = alpha_points(f, a);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::DegenerateTarget) continue;
        throw;
      }
      double lo = std::numeric_limits<double>::infinity(), hi = -lo, slack = 1e-3;
      for (std::size_t k = 0; k < r_samples.size(); ++k) {
        const auto m = proximity_to(f, a, r_samples[k], cfg);
        const double diff = m.value + integrated_N(aps, r_samples[k]) - prof[i].T[k];
        lo = std::min(lo, diff);
        hi = std::max(hi, diff);
        slack += m.error + prof[i].err[k];
      }
      add("fft.bounded", tag + " alpha=" + a.to_string(), hi - lo, 2 * (log_plus(std::abs(a.value)) + std::log(2.0)) + slack);
    }
    // Second fundamental theorem over the probe set; constants have no deficiencies.
    if (is_constant(f.rational())) continue;
    double sum = 0;
    for (const auto& a : probes) {
      AlphaPointSet aps;
      try {
        aps = alpha_points(f, a);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::DegenerateTarget) continue;
        throw;
      }
      std::vector<double> N;
      for (double r : r_samples) N.push_back(integrated_N(aps, r));
      sum += estimate_deficiency(r_samples, N, prof[i].T);
    }
    add("sft.deficiency_sum", tag, sum, 2.1);
    if (orders && !is_constant(f.rational())) {
      const double rf = estimate_order(r_samples, prof[i].T).order;
      const auto inv = MeromorphicFn::of_u(f.q() ? f.q() : 2, ComplexRational(f.rational().den(), f.rational().num()));
      const auto inv_f = f.in_u() ? inv : MeromorphicFn::of_s(ComplexRational(f.rational().den(), f.rational().num()));
      const double ri = estimate_order(r_samples, profile(inv_f).T).order;
      add("order.reciprocal", tag, std::fabs(ri - rf), 0.05);
    }
  }

  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i; j < fs.size(); ++j) {
      const bool compatible = same_kind(fs[i], fs[j]) || is_constant(fs[i].rational()) || is_constant(fs[j].rational());
      if (!compatible) continue;
      const std::string tag = "f" + std::to_string(i) + ",f" + std::to_string(j);
      const auto sum = profile(fs[i] + fs[j]);
      const auto prod = profile(fs[i] * fs[j]);
      for (std::size_t k = 0; k < r_samples.size(); ++k) {
        const double slack = 1e-3 + prof[i].err[k] + prof[j].err[k];
        add("T.subadditive", tag + " r=" + format_double(r_samples[k]), sum.T[k],
            prof[i].T[k] + prof[j].T[k] + std::log(2.0) + slack + sum.err[k]);
        add("T.submultiplicative", tag + " r=" + format_double(r_samples[k]), prod.T[k],
            prof[i].T[k] + prof[j].T[k] + slack + prod.err[k]);
      }
      if (orders) {
        const double rmax = std::max(estimate_order(r_samples, prof[i].T).order, estimate_order(r_samples, prof[j].T).order);
        if (sum.T.back() > 0) add("order.sum", tag, estimate_order(r_samples, sum.T).order, rmax + 0.05);
        add("order.product", tag, estimate_order(r_samples, prod.T).order, rmax + 0.05);
      }
    }
  }
  return ledger;
}

}  // namespace ffzeta
