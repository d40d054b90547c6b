#include "ffzeta/instability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ffzeta/numeric.hpp"

namespace ffzeta {

namespace {

double lq_of(std::uint64_t q) { return std::log(static_cast<double>(q)); }

double max_abs(const ComplexPoly& p) {
  double m = 0;
  for (const auto& c : p.coeffs()) m = std::max(m, std::abs(c));
  return m;
}

// Numerator with the u = 0 zeros removed.
ComplexPoly punctured(const ComplexPoly& p) { return p.is_zero() ? p : p.shift_down(p.low_order()); }

RhCheck rh_of(const ZetaLikeMember& m, double tol) { return check_rh(punctured(m.h().num()), m.q(), tol); }

Complex contour_residue(const ZetaLikeMember& m, Complex centre, double rho) {
  constexpr std::size_t kNodes = 256;
  std::vector<Complex> terms;
  for (std::size_t j = 0; j < kNodes; ++j) {
    const Complex e = std::polar(1.0, 2 * kPi * (static_cast<double>(j) + 0.5) / kNodes);
    terms.push_back(m(centre + rho * e) * rho * e);
  }
  Complex sum = 0;
  for (const auto& t : terms) sum += t;
  return sum / static_cast<double>(kNodes);
}

std::optional<Rational> snap(double v, double tol, const Integer& max_den) {
  for (const auto& conv : convergents(v, max_den))
    if (std::fabs(conv.get_d() - v) <= tol) return conv;
  return std::nullopt;
}

// Candidates for Q with exact coefficients: from rational roots, and from
// its real coefficients. The caller confirms each by exact division.
std::vector<ExactPoly> exact_candidates(const std::vector<Root>& outside, const ComplexPoly& Q, double rel) {
  const Integer max_den(1000000);
  std::vector<ExactPoly> out;
  ExactPoly from_roots_x = ExactPoly::constant(GaussianRational(1));
  bool ok = true;
  for (const auto& z : outside) {
    const double tol = rel * std::max(1.0, std::abs(z.value));
    const auto re = snap(z.value.real(), tol, max_den), im = snap(z.value.imag(), tol, max_den);
    if (!re || !im) {
      ok = false;
      break;
    }
    for (unsigned k = 0; k < z.multiplicity; ++k) from_roots_x = from_roots_x * ExactPoly::linear(GaussianRational(*re, *im));
  }
  if (ok) out.push_back(from_roots_x);
  std::vector<GaussianRational> c;
  const double tol = rel * std::max(1.0, max_abs(Q));
  for (const auto& x : Q.coeffs()) {
    const auto v = snap(x.real(), tol, max_den);
    if (!v) return out;
    c.emplace_back(*v);
  }
  out.emplace_back(std::move(c));
  return out;
}

}  // namespace

// ---- members ------------------------------------------------------------

ZetaLikeMember ZetaLikeMember::from_zeta(const ZetaFunction& zf) { return {zf.L(), ExactRational(zf.L().poly())}; }

ZetaLikeMember::ZetaLikeMember(LPolynomial reference, ExactRational h)
    : ref_(std::move(reference)), exact_h_(h), h_(to_complex(h)) {}

ZetaLikeMember::ZetaLikeMember(LPolynomial reference, ComplexRational h) : ref_(std::move(reference)), h_(std::move(h)) {}

Complex ZetaLikeMember::operator()(Complex s) const { return zeta_like_eval(h_, q(), s); }

Complex ZetaLikeMember::at_u(Complex u) const {
  const double qd = static_cast<double>(q());
  return h_(u) / ((1.0 - u) * (1.0 - qd * u));
}

std::vector<Root> ZetaLikeMember::zeros(const RootOptions& opt) const {
  const auto rs = exact_h_ ? roots(exact_h_->num(), opt) : roots(h_.num(), opt);
  std::vector<Root> out;
  for (const auto& r : rs)
    if (r.value != Complex(0)) out.push_back(r);
  return out;
}

const MembershipCheck* MembershipReport::find(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

double zero_symmetry_defect(const std::vector<Root>& zs, std::uint64_t q) {
  const std::vector<Complex> flat = flatten(zs);
  const double qd = static_cast<double>(q);
  double worst = 0;
  for (int map = 0; map < 2; ++map) {
    std::vector<bool> used(flat.size(), false);
    for (const auto& z : flat) {
      const Complex image = map == 0 ? std::conj(z) : 1.0 / (qd * z);
      double best = std::numeric_limits<double>::infinity();
      std::size_t at = flat.size();
      for (std::size_t i = 0; i < flat.size(); ++i) {
        if (used[i]) continue;
        const double d = std::abs(flat[i] - image) / std::max(1.0, std::abs(image));
        if (d < best) {
          best = d;
          at = i;
        }
      }
      if (at < flat.size()) used[at] = true;
      worst = std::max(worst, best);
    }
  }
  return flat.empty() ? 0 : worst;
}

MembershipReport validate_membership(const ZetaLikeMember& m, double tol) {
  MembershipReport rep;
  auto add = [&](std::string id, bool pass, double residual, std::string detail) {
    rep.checks.push_back({std::move(id), pass, residual, std::move(detail)});
    rep.verdict = rep.verdict && pass;
  };
  const auto q = m.q();
  const double qd = static_cast<double>(q);
  const ComplexRational& h = m.h();
  const ExactPoly L = m.reference().poly();

  // holomorphic on the punctured plane
  {
    const auto& den = h.den();
    double res = 0;
    if (m.exact()) {
      const auto& d = m.exact_h()->den();
      res = d.low_order() == static_cast<std::size_t>(d.degree()) ? 0 : 1;
    } else {
      for (int j = 0; j < den.degree(); ++j) res = std::max(res, std::abs(den[j]) / std::abs(den.leading()));
    }
    add("member.holomorphic", res <= tol, res, "denominator of h must be c u^k");
  }
  // normalization at u = 1 and u = 1/q
  {
    double res = 0;
    bool pass = true;
    try {
      if (m.exact()) {
        const GaussianRational one(1), inv_q(Rational(1, static_cast<unsigned long>(q)));
        pass = (*m.exact_h())(one) == L(one) && (*m.exact_h())(inv_q) == L(inv_q);
        res = pass ? 0 : 1;
      } else {
        const ComplexPoly Lc = to_complex(L);
        for (Complex u : {Complex(1), Complex(1 / qd)}) res = std::max(res, std::abs(h(u) - Lc(u)) / (1 + std::abs(Lc(u))));
        pass = res <= tol;
      }
    } catch (const Error&) {
      pass = false;
      res = std::numeric_limits<double>::infinity();
    }
    add("member.normalization", pass, res, "h(1) = L(1) and h(1/q) = L(1/q)");
  }
  // functional equation with the reference weight g
  {
    double res = 0;
    bool pass = true;
    if (m.exact()) {
      const auto& hx = *m.exact_h();
      Integer qpow = 1;
      for (unsigned k = 0; k < m.g(); ++k) qpow *= static_cast<unsigned long>(q);
      const ExactRational weight(ExactPoly::monomial(GaussianRational(qpow), 2 * m.g()));
      pass = weight * inversion_compose(hx, static_cast<long>(q)) == hx;
      res = pass ? 0 : 1;
    } else {
      res = functional_equation_residuals(h, m.g(), q, fe_samples(q)).l_form;
      pass = res <= tol;
    }
    add("member.functional_equation", pass, res, "u^{-g} h(u) = (qu)^g h(1/(qu))");
  }
  // reality
  {
    double res = 0;
    bool pass = true;
    if (m.exact()) {
      pass = schwarz_conjugate(*m.exact_h()) == *m.exact_h();
      res = pass ? 0 : 1;
    } else {
      const double scale = std::max({1.0, max_abs(h.num()), max_abs(h.den())});
      for (const auto* p : {&h.num(), &h.den()})
        for (const auto& c : p->coeffs()) res = std::max(res, std::fabs(c.imag()) / scale);
      pass = res <= tol;
    }
    add("member.reality", pass, res, "h has real coefficients");
  }
  // principal parts at the poles s = 0 and s = 1
  {
    const double lq = lq_of(q);
    const double rho = std::min(0.25, 0.25 * 2 * kPi / lq);
    const Complex L1 = to_complex(L)(Complex(1)), Lq = to_complex(L)(Complex(1 / qd));
    const Complex want0 = L1 / ((1 - qd) * lq);
    const Complex want1 = Lq / ((1 - 1 / qd) * lq);
    double res = 0;
    try {
      const Complex got0 = contour_residue(m, 0, rho);
      const Complex got1 = contour_residue(m, 1, rho);
      res = std::max(std::abs(got0 - want0) / std::abs(want0), std::abs(got1 - want1) / std::abs(want1));
    } catch (const Error&) {
      res = std::numeric_limits<double>::infinity();
    }
    add("member.principal_parts", res <= std::max(tol, 1e-9), res, "residues at s = 0 and s = 1 match the zeta function");
  }
  // double symmetry of the zeros
  {
    double res = 0;
    try {
      res = zero_symmetry_defect(m.zeros(), q);
    } catch (const Error&) {
      res = std::numeric_limits<double>::infinity();
    }
    add("member.zero_symmetry", res <= 1e-9, res, "zeros closed under conjugation and w -> 1/(q w)");
  }
  return rep;
}

// ---- multipliers --------------------------------------------------------

MultiplierFn make_multiplier(const ExactPoly& p, std::uint64_t q) {
  const GaussianRational one(1), inv_q(Rational(1, static_cast<unsigned long>(q)));
  if (!(p(one) == one) || !(p(inv_q) == one)) {
    throw Error(ErrorCode::BadNormalization, "p(1) = " + p(one).to_string() + ", p(1/q) = " + p(inv_q).to_string());
  }
  const ExactRational R(p);
  const ExactRational Rs = schwarz_conjugate(R);
  const long ql = static_cast<long>(q);
  const ExactRational nu = R * inversion_compose(R, ql) * Rs * inversion_compose(Rs, ql);
  if (!(inversion_compose(nu, ql) == nu) || !(schwarz_conjugate(nu) == nu) || !(nu(one) == one) || !(nu(inv_q) == one)) {
    throw Error(ErrorCode::BadNormalization, "multiplier invariants failed");
  }
  MultiplierFn out;
  out.q = q;
  out.exact_nu = nu;
  out.nu = to_complex(nu);
  out.exact_source = p;
  out.source = to_complex(p);
  return out;
}

MultiplierFn make_multiplier(const ComplexPoly& p, std::uint64_t q) {
  const double qd = static_cast<double>(q);
  const double e1 = std::abs(p(Complex(1)) - 1.0), eq = std::abs(p(Complex(1 / qd)) - 1.0);
  if (e1 > 1e-12 || eq > 1e-12) {
    throw Error(ErrorCode::BadNormalization, "p(1) - 1 = " + format_double(e1) + ", p(1/q) - 1 = " + format_double(eq));
  }
  const ComplexRational R(p);
  const ComplexRational Rs = schwarz_conjugate(R);
  const long ql = static_cast<long>(q);
  MultiplierFn out;
  out.q = q;
  out.nu = R * inversion_compose(R, ql) * Rs * inversion_compose(Rs, ql);
  out.source = p;
  return out;
}

RhCheck member_rh(const ZetaLikeMember& m, double tol) { return rh_of(m, tol); }

ExactPoly planting_polynomial(const Rational& u0, std::uint64_t q) {
  const Rational inv_q(1, static_cast<unsigned long>(q));
  const Rational k = (u0 - 1) * (u0 - inv_q);
  if (k == 0) throw Error(ErrorCode::BadNormalization, "u0 must differ from 1 and 1/q");
  const ExactPoly quad = ExactPoly::linear(GaussianRational(Rational(1))) * ExactPoly::linear(GaussianRational(inv_q));
  return ExactPoly::constant(GaussianRational(1)) - GaussianRational(Rational(1 / k)) * quad;
}

ZetaLikeMember apply_multiplier(const ZetaLikeMember& m, const MultiplierFn& nu) {
  if (nu.q != m.q()) throw Error(ErrorCode::Unsupported, "multiplier and member have different q");
  if (m.exact() && nu.exact_nu) return {m.reference(), *m.exact_h() * *nu.exact_nu};
  return {m.reference(), m.h() * nu.nu};
}

// ---- perturbation -------------------------------------------------------

std::vector<Complex> annulus_boundary(double r, std::uint64_t q, std::size_t count) {
  const double inner = 1 / (static_cast<double>(q) * r);
  const std::size_t half = std::max<std::size_t>(1, count / 2);
  std::vector<Complex> out;
  for (double rad : {r, inner}) {
    for (std::size_t j = 0; j < half; ++j) {
      out.push_back(std::polar(rad, 2 * kPi * (static_cast<double>(j) + 0.25) / static_cast<double>(half)));
    }
  }
  return out;
}

PerturbationResult perturb_fail_rh(const ZetaLikeMember& base, const PerturbationSpec& spec) {
  const auto q = base.q();
  const double qd = static_cast<double>(q);
  if (!(spec.r > qd)) throw Error(ErrorCode::GeometryError, "annulus radius must exceed q");
  const auto samples = annulus_boundary(spec.r, q, spec.boundary_samples);
  std::vector<Complex> fvals;
  double M = 0;
  for (const auto& u : samples) {
    fvals.push_back(base.at_u(u));
    M = std::max(M, std::abs(fvals.back()));
  }
  const auto t_of = [&](const Integer& u0) {
    const double x = u0.get_d();
    return (spec.r + 1) * (spec.r + 1 / qd) / ((x - 1) * (x - 1 / qd));
  };
  const auto sup_one_minus = [&](const MultiplierFn& nu) {
    double d = 0;
    for (const auto& u : samples) d = std::max(d, std::abs(1.0 - nu.nu(u)));
    return d;
  };
  const bool demand = std::isfinite(spec.epsilon);

  Integer u0 = spec.u0 ? *spec.u0 : Integer(static_cast<long>(std::ceil(2 * spec.r)));
  if (u0.get_d() <= spec.r) throw Error(ErrorCode::GeometryError, "u0 must lie outside the annulus");
  for (int iter = 0;; ++iter) {
    if (iter > 200) throw Error(ErrorCode::NonConvergence, "no planting point met the closeness target");
    const double t = t_of(u0);
    const double bound = M * (std::pow(1 + t, 4) - 1);
    if (!demand || spec.u0 || bound < spec.epsilon) {
      const MultiplierFn nu = make_multiplier(planting_polynomial(Rational(u0), q), q);
      double dev = 0;
      for (std::size_t j = 0; j < samples.size(); ++j) dev = std::max(dev, std::abs(fvals[j] * (nu.nu(samples[j]) - 1.0)));
      if (demand && !spec.u0 && dev >= spec.epsilon) {
        u0 *= 2;
        continue;
      }
      PerturbationResult out{apply_multiplier(base, nu), u0, nu, bound, dev, M, {}, {}, {}};
      for (int k = 0; k < 5; ++k) {
        const Integer uk = u0 << k;
        out.ladder.push_back({uk, sup_one_minus(make_multiplier(planting_polynomial(Rational(uk), q), q))});
      }
      const double x = u0.get_d();
      const double w = 1 + 1 / qd - x;
      out.planted = {Complex(x), Complex(w), Complex(1 / (qd * x)), Complex(1 / (qd * w))};
      out.rh = rh_of(out.member, 1e-8);
      return out;
    }
    u0 *= 2;
  }
}

// ---- zero removal -------------------------------------------------------

ZeroRemoval remove_offcircle_zeros(const ZetaLikeMember& m, double tol) {
  const auto q = m.q();
  const double qd = static_cast<double>(q);
  const double crit = 1 / std::sqrt(qd);
  std::vector<Root> off, outside;
  for (const auto& z : m.zeros()) {
    if (std::fabs(std::abs(z.value) / crit - 1) > 10 * tol) {
      off.push_back(z);
      if (std::abs(z.value) > crit) outside.push_back(z);
    }
  }
  if (off.empty()) {
    ZeroRemoval out{m, ComplexPoly::constant(1.0), std::nullopt, 1.0, {}, rh_of(m, 10 * tol)};
    if (m.exact()) out.exact_removed = ExactPoly::constant(GaussianRational(1));
    return out;
  }
  const double defect = zero_symmetry_defect(off, q);
  if (defect > 1e-6) {
    throw Error(ErrorCode::OrbitMismatch, "off-circle zeros are not closed under conjugation and inversion (defect " +
                                              format_double(defect) + ")");
  }
  ComplexPoly Q = from_roots(flatten(outside));
  {
    std::vector<Complex> c;
    const double scale = std::max(1.0, max_abs(Q));
    for (const auto& x : Q.coeffs()) {
      if (std::fabs(x.imag()) > 1e-7 * scale) throw Error(ErrorCode::OrbitMismatch, "outer zeros are not conjugation closed");
      c.emplace_back(x.real(), 0.0);
    }
    Q = ComplexPoly(std::move(c));
  }
  const std::size_t mdeg = static_cast<std::size_t>(Q.degree());

  ZeroRemoval out{m, Q, std::nullopt, 1.0, off, {}};
  bool done = false;
  if (m.exact()) {
    std::vector<ExactPoly> cands;
    for (double rel : {1e-12, 1e-9})
      for (auto& c : exact_candidates(outside, Q, rel)) cands.push_back(std::move(c));
    for (const ExactPoly& Qx : cands) {
      if (done) break;
      const GaussianRational qx(static_cast<long>(q));
      const ExactPoly Qt = inversion_numerator(Qx, mdeg, qx);
      const auto [quot, rem] = ExactPoly::divmod(m.exact_h()->num(), Qx * Qt);
      if (rem.is_zero()) {
        const GaussianRational c = Qx(GaussianRational(1)) * Qx(GaussianRational(Rational(1, static_cast<unsigned long>(q))));
        const ExactRational hp(c * quot.shift_up(mdeg), m.exact_h()->den());
        out.member = ZetaLikeMember(m.reference(), hp);
        out.exact_removed = Qx;
        out.removed = to_complex(Qx);
        out.scale = c.to_complex();
        done = true;
      }
    }
  }
  if (!done) {
    const ComplexPoly Qt = inversion_numerator(Q, mdeg, Complex(qd));
    const auto [quot, rem] = ComplexPoly::divmod(m.h().num(), Q * Qt);
    const double rres = max_abs(rem) / std::max(1e-300, max_abs(m.h().num()));
    if (rres > 1e-6) {
      throw Error(ErrorCode::ResidualZeros, "division by the off-circle factor left remainder " + format_double(rres));
    }
    const Complex c = Q(Complex(1)) * Q(Complex(1 / qd));
    out.member = ZetaLikeMember(m.reference(), ComplexRational(c * quot.shift_up(mdeg), m.h().den()));
    out.scale = c;
  }
  out.rh = rh_of(out.member, 10 * tol);
  if (!out.rh.verdict) {
    throw Error(ErrorCode::ResidualZeros, "zeros off the critical circle remain (max deviation " +
                                              format_double(out.rh.max_deviation) + ")");
  }
  return out;
}

}  // namespace ffzeta
