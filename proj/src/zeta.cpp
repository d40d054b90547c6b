#include "ffzeta/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "ffzeta/numeric.hpp"

namespace ffzeta {

ExactPoly LPolynomial::poly() const {
  std::vector<GaussianRational> v;
  v.reserve(c.size());
  for (const auto& x : c) v.emplace_back(x);
  return ExactPoly(std::move(v));
}

Integer LPolynomial::at_one() const {
  Integer s = 0;
  for (const auto& x : c) s += x;
  return s;
}

bool LPolynomial::symmetric() const {
  if (c.size() != 2 * g + 1) return false;
  Integer qq(static_cast<unsigned long>(q));
  for (unsigned j = 0; j <= 2 * g; ++j) {
    // c_j q^g == c_{2g-j} q^j, avoiding negative powers
    Integer lhs, rhs, qg, qj;
    mpz_pow_ui(qg.get_mpz_t(), qq.get_mpz_t(), g);
    mpz_pow_ui(qj.get_mpz_t(), qq.get_mpz_t(), j);
    lhs = c[j] * qg;
    rhs = c[2 * g - j] * qj;
    if (lhs != rhs) return false;
  }
  return true;
}

LPolynomial l_from_counts(const PointCounts& pc, unsigned g) {
  const std::size_t m = pc.counts.size();
  if (m < g) {
    throw Error(ErrorCode::InconsistentCounts,
                "genus " + std::to_string(g) + " needs at least " + std::to_string(g) + " counts, got " + std::to_string(m));
  }
  if (pc.q < 2) throw Error(ErrorCode::InconsistentCounts, "q must be at least 2");
  const Integer q(static_cast<unsigned long>(pc.q));

  // Z(u) = sum z_n u^n with Z'/Z = sum N_k u^{k-1}.
  std::vector<Rational> z(m + 1);
  z[0] = 1;
  for (std::size_t n = 1; n <= m; ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += Rational(Integer(static_cast<unsigned long>(pc.counts[k - 1]))) * z[n - k];
    acc /= Rational(static_cast<long>(n));
    acc.canonicalize();
    if (acc.get_den() != 1) {
      throw Error(ErrorCode::InconsistentCounts, "coefficient z_" + std::to_string(n) + " = " + acc.get_str() + " is not an integer");
    }
    z[n] = acc;
  }
  auto ell = [&](std::size_t j) {
    Integer v = z[j].get_num();
    if (j >= 1) v -= (q + 1) * z[j - 1].get_num();
    if (j >= 2) v += q * z[j - 2].get_num();
    return v;
  };

  LPolynomial out;
  out.q = pc.q;
  out.g = g;
  out.c.resize(2 * g + 1);
  for (unsigned j = 0; j <= g; ++j) out.c[j] = ell(j);
  for (unsigned j = g + 1; j <= 2 * g; ++j) {
    Integer qp;
    mpz_pow_ui(qp.get_mpz_t(), q.get_mpz_t(), j - g);
    out.c[j] = out.c[2 * g - j] * qp;
  }
  for (std::size_t j = g + 1; j <= m; ++j) {
    const Integer expected = j <= 2 * g ? out.c[j] : Integer(0);
    if (ell(j) != expected) {
      throw Error(ErrorCode::InconsistentCounts, "count N_" + std::to_string(j) + " disagrees with the genus-" +
                                                     std::to_string(g) + " symmetry (c_" + std::to_string(j) + " = " +
                                                     ell(j).get_str() + ", expected " + expected.get_str() + ")");
    }
  }
  return out;
}

ZetaFunction::ZetaFunction(LPolynomial l) : l_(std::move(l)) {
  if (l_.c.size() != 2 * l_.g + 1 || l_.c[0] != 1 || l_.q < 2) {
    throw Error(ErrorCode::Unsupported, "an L-polynomial needs 2g+1 coefficients with c_0 = 1 and q >= 2");
  }
}

ExactRational ZetaFunction::Z() const {
  const GaussianRational qq(static_cast<long>(l_.q));
  const ExactPoly den = ExactPoly{GaussianRational(1), GaussianRational(-1)} * ExactPoly{GaussianRational(1), -qq};
  return {l_.poly(), den};
}

Complex ZetaFunction::operator()(Complex s) const { return zeta_like_eval(h(), l_.q, s); }

Complex zeta_like_eval(const ComplexRational& h, std::uint64_t q, Complex s) {
  const double lq = std::log(static_cast<double>(q));
  const Complex one_minus_u = -cexpm1(-s * lq);
  const Complex one_minus_qu = -cexpm1((1.0 - s) * lq);
  if (std::abs(one_minus_u) < kPoleHitTolerance || std::abs(one_minus_qu) < kPoleHitTolerance) {
    throw Error(ErrorCode::PoleHit, "s = " + format_complex(s) + " lies on the pole lattice");
  }
  const Complex u = std::exp(-s * lq);
  const Complex d = h.den()(u);
  if (d == Complex(0)) throw Error(ErrorCode::PoleHit, "h has a pole at u = " + format_complex(u));
  return h.num()(u) / d / (one_minus_u * one_minus_qu);
}

std::vector<Complex> fe_samples(std::uint64_t q, std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(-2.0, 3.0), im(-10.0, 10.0);
  const double spacing = 2 * kPi / std::log(static_cast<double>(q));
  std::vector<Complex> out;
  while (out.size() < count) {
    const Complex s(re(rng), im(rng));
    bool near = false;
    for (double line : {0.0, 1.0}) {
      const double j = std::round(s.imag() / spacing);
      if (std::abs(s - Complex(line, j * spacing)) < 1e-6) near = true;
      // the reflected point 1 - s must avoid poles too
      if (std::abs((1.0 - s) - Complex(line, -j * spacing)) < 1e-6) near = true;
    }
    if (!near) out.push_back(s);
  }
  return out;
}

FunctionalEquationCheck functional_equation_residuals(const ComplexRational& h, unsigned g, std::uint64_t q,
                                                      const std::vector<Complex>& samples) {
  FunctionalEquationCheck out;
  const double lq = std::log(static_cast<double>(q));
  const double gd = static_cast<double>(g);
  for (const auto& s : samples) {
    const Complex f = zeta_like_eval(h, q, s);
    const Complex f_reflect = zeta_like_eval(h, q, 1.0 - s);
    const Complex factor = std::exp((gd - 1) * (2.0 * s - 1.0) * lq);
    out.zeta_form = std::max(out.zeta_form, std::abs(f_reflect - factor * f) / (1 + std::abs(f)));

    const Complex u = std::exp(-s * lq);
    const Complex ui = 1.0 / (static_cast<double>(q) * u);
    const Complex hu = h(u);
    const Complex hui = h(ui);
    const Complex weight = std::pow(static_cast<double>(q), -gd) * std::pow(u, -2.0 * gd);
    out.l_form = std::max(out.l_form, std::abs(hui - weight * hu) / (1 + std::abs(weight * hu)));

    const Complex cal_u = std::pow(u, -gd) * hu;
    const Complex cal_ui = std::pow(ui, -gd) * hui;
    out.inversion_form = std::max(out.inversion_form, std::abs(cal_ui - cal_u) / (1 + std::abs(cal_u)));

    const Complex fc = std::conj(zeta_like_eval(h, q, std::conj(s)));
    out.reality = std::max(out.reality, std::abs(fc - f) / (1 + std::abs(f)));
  }
  out.samples = samples.size();
  return out;
}

FunctionalEquationCheck verify_functional_equation(const ZetaFunction& zf, const std::vector<Complex>& samples) {
  return functional_equation_residuals(zf.h(), zf.genus(), zf.q(), samples);
}

RhCheck check_rh(const ComplexPoly& p, std::uint64_t q, double tol, const RootOptions& opt) {
  RhCheck out;
  if (p.degree() < 1) return out;
  const double sq = std::sqrt(static_cast<double>(q));
  for (const auto& r : roots(p, opt)) {
    RootDeviation d;
    d.root = r.value;
    d.multiplicity = r.multiplicity;
    d.modulus = std::abs(r.value);
    d.deviation = std::fabs(d.modulus * sq - 1);
    out.max_deviation = std::max(out.max_deviation, d.deviation);
    if (d.deviation > tol) out.verdict = false;
    out.roots.push_back(d);
  }
  return out;
}

RhCheck check_rh(const LPolynomial& l, double tol) { return check_rh(l.complex_poly(), l.q, tol); }

std::pair<Complex, double> richardson(const std::vector<Complex>& values, double ratio) {
  const std::size_t n = values.size();
  if (n == 0) throw Error(ErrorCode::ExtrapolationUnstable, "no values to extrapolate");
  std::vector<std::vector<Complex>> t(n);
  for (std::size_t k = 0; k < n; ++k) {
    t[k].push_back(values[k]);
    for (std::size_t j = 1; j <= k; ++j) {
      const double rj = std::pow(ratio, static_cast<double>(j));
      t[k].push_back((rj * t[k][j - 1] - t[k - 1][j - 1]) / (rj - 1));
    }
  }
  const Complex best = t[n - 1][n - 1];
  const double err = n >= 2 ? std::abs(best - t[n - 2][n - 2]) : std::abs(best);
  return {best, err};
}

ClassNumber class_number(const ZetaFunction& zf) {
  ClassNumber out;
  out.h = zf.L().at_one();
  if (out.h <= 0) throw Error(ErrorCode::NonPositiveH, "L(1) = " + out.h.get_str() + " is not a positive integer");
  const double q = static_cast<double>(zf.q());
  const double g = static_cast<double>(zf.genus());
  out.residue_closed = std::pow(q, 1 - g) * out.h.get_d() / ((q - 1) * std::log(q));
  std::vector<Complex> v;
  for (int k = 3; k <= 6; ++k) {
    const double s = 1 + std::pow(10.0, -k);
    v.push_back((s - 1) * zf(Complex(s, 0)));
  }
  const auto [lim, err] = richardson(v, 10.0);
  out.residue_numeric = lim.real();
  out.residue_error = std::fabs(out.residue_numeric - out.residue_closed);
  (void)err;
  return out;
}

std::vector<WeilCoefficient> weil_coefficients(const LPolynomial& l, unsigned n_max) {
  const auto a = log_derivative_coeffs(ExactRational(l.poly()), n_max);
  std::vector<WeilCoefficient> out;
  for (unsigned n = 1; n <= n_max; ++n) {
    WeilCoefficient w;
    w.n = n;
    w.a = a[n].re().get_num();
    w.bound = 2.0 * l.g * std::pow(static_cast<double>(l.q), n / 2.0);
    const double mag = std::fabs(a[n].re().get_d());
    w.ratio = w.bound > 0 ? mag / w.bound : (mag == 0 ? 0.0 : INFINITY);
    out.push_back(w);
  }
  return out;
}

std::vector<Complex> pole_lattice(std::uint64_t q, double r) {
  std::vector<Complex> out;
  if (r < 0) return out;
  const double d = 2 * kPi / std::log(static_cast<double>(q));
  const auto jmax = static_cast<long>(std::floor(r / d));
  for (double re : {0.0, 1.0}) {
    for (long j = -jmax; j <= jmax; ++j) {
      const Complex s(re, static_cast<double>(j) * d);
      if (std::abs(s) <= r) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

double predicted_count(const LPolynomial& l, unsigned n) {
  const double qn = std::pow(static_cast<double>(l.q), n);
  Complex sum = 0;
  if (l.g > 0) {
    for (const auto& z : flatten(roots(l.complex_poly()))) sum += std::pow(1.0 / z, static_cast<int>(n));
  }
  return qn + 1 - sum.real();
}

ZetaReport zeta_report(const ZetaFunction& zf, const PointCounts& pc, double rh_tol, unsigned weil_n, std::uint64_t seed) {
  ZetaReport r;
  r.L = zf.L();
  r.rh = check_rh(zf.L(), rh_tol);
  r.class_number = class_number(zf);
  r.fe = verify_functional_equation(zf, fe_samples(zf.q(), seed));
  r.weil = weil_coefficients(zf.L(), weil_n);
  for (const auto& w : r.weil) r.weil_ok = r.weil_ok && w.ratio <= 1.0 + 1e-12;
  r.counts = pc.counts;
  for (std::size_t n = 1; n <= pc.counts.size(); ++n) r.predicted_counts.push_back(predicted_count(zf.L(), static_cast<unsigned>(n)));
  r.poles = pole_lattice(zf.q(), 10.0);
  return r;
}

}  // namespace ffzeta
