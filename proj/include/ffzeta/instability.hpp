#pragma once

// The class of zeta-like functions h(u)/((1-u)(1-qu)) sharing the functional
// equation, reality and poles of a curve's zeta function, and rational
// multipliers that move zeros on or off the critical circle |u| = q^{-1/2}.

#include <optional>
#include <string>
#include <vector>

#include "ffzeta/nevanlinna.hpp"
#include "ffzeta/zeta.hpp"

namespace ffzeta {

class ZetaLikeMember {
 public:
  /// h = L, i.e. the zeta function itself.
  static ZetaLikeMember from_zeta(const ZetaFunction& zf);
  ZetaLikeMember(LPolynomial reference, ExactRational h);
  ZetaLikeMember(LPolynomial reference, ComplexRational h);

  std::uint64_t q() const { return ref_.q; }
  unsigned g() const { return ref_.g; }
  const LPolynomial& reference() const { return ref_; }
  bool exact() const { return exact_h_.has_value(); }
  const std::optional<ExactRational>& exact_h() const { return exact_h_; }
  const ComplexRational& h() const { return h_; }

  /// f(s) = h(u)/((1-u)(1-qu)), u = q^{-s}. Errors: PoleHit.
  Complex operator()(Complex s) const;
  /// f as a function of u.
  Complex at_u(Complex u) const;
  MeromorphicFn as_meromorphic() const { return MeromorphicFn::zeta_like(q(), h_); }
  /// Nonzero roots of the numerator of h.
  std::vector<Root> zeros(const RootOptions& opt = {}) const;

 private:
  LPolynomial ref_;
  std::optional<ExactRational> exact_h_;
  ComplexRational h_;
};

struct MembershipCheck {
  std::string id;
  bool pass = true;
  double residual = 0;
  std::string detail;
};

struct MembershipReport {
  bool verdict = true;
  std::vector<MembershipCheck> checks;
  const MembershipCheck* find(const std::string& id) const;
};

/// Checks, by id:
///   member.holomorphic        denominator of h vanishes only at u = 0
///   member.normalization      h(1) = L(1), h(1/q) = L(1/q)
///   member.functional_equation u^{-g} h(u) = (qu)^g h(1/(qu))
///   member.reality            conj h(conj u) = h(u)
///   member.principal_parts    residues at s = 0 and s = 1 agree with the zeta function
///   member.zero_symmetry      zeros closed under w -> conj w and w -> 1/(q w)
/// Exact members are checked symbolically where possible, complex ones to `tol`.
MembershipReport validate_membership(const ZetaLikeMember& m, double tol = 1e-10);

/// RH for a member: every nonzero numerator root on |u| = q^{-1/2} within tol.
RhCheck member_rh(const ZetaLikeMember& m, double tol = 1e-8);

struct MultiplierFn {
  std::uint64_t q = 0;
  std::optional<ExactRational> exact_nu;
  ComplexRational nu;
  std::optional<ExactPoly> exact_source;
  ComplexPoly source;
};

/// nu(u) = p(u) p(1/(qu)) p*(u) p*(1/(qu)), p* the Schwarz conjugate.
/// Errors: BadNormalization unless p(1) = p(1/q) = 1 (exactly, or to 1e-12).
MultiplierFn make_multiplier(const ExactPoly& p, std::uint64_t q);
MultiplierFn make_multiplier(const ComplexPoly& p, std::uint64_t q);

/// 1 - (u-1)(u-1/q) / ((u0-1)(u0-1/q)): equal to 1 at u = 1, 1/q and 0 at u0.
ExactPoly planting_polynomial(const Rational& u0, std::uint64_t q);

/// nu * f, kept exact when both are.
ZetaLikeMember apply_multiplier(const ZetaLikeMember& m, const MultiplierFn& nu);

struct PerturbationSpec {
  double r = 0;                  // outer radius of the annulus 1/(qr) <= |u| <= r, r > q
  double epsilon = 1e-3;         // infinity disables the closeness demand
  std::optional<Integer> u0;     // fixed planting point; otherwise chosen
  std::size_t boundary_samples = 512;
};

struct LadderStep {
  Integer u0;
  double deviation = 0;  // sup over the annulus boundary of |1 - nu|
};

struct PerturbationResult {
  ZetaLikeMember member;
  Integer u0;
  MultiplierFn multiplier;
  double bound = 0;               // M ((1+t)^4 - 1) at the chosen u0
  double boundary_deviation = 0;  // max |f_new - f| over the sampled boundary
  double boundary_sup_f = 0;      // M
  std::vector<LadderStep> ladder; // u0, 2u0, ..., 16u0
  /// Zeros of nu: u0 and the second root 1 + 1/q - u0 of the planting
  /// polynomial, with their images under w -> 1/(q w). Each is double.
  std::vector<Complex> planted;
  RhCheck rh;
};

/// Boundary samples of the annulus: half on |u| = r, half on |u| = 1/(qr).
std::vector<Complex> annulus_boundary(double r, std::uint64_t q, std::size_t count);

/// Plant the zero orbit {u0, 1/(q u0)} with a multiplier close to 1 on the
/// annulus. Errors: GeometryError when r <= q.
PerturbationResult perturb_fail_rh(const ZetaLikeMember& base, const PerturbationSpec& spec);

struct ZeroRemoval {
  ZetaLikeMember member;
  ComplexPoly removed;                  // Q: monic, roots are the removed zeros outside the circle
  std::optional<ExactPoly> exact_removed;
  Complex scale = 1;                    // c = Q(1) Q(1/q)
  std::vector<Root> off_circle;         // all removed zeros (both sides of the circle)
  RhCheck rh;
};

/// Divide out every zero off |u| = q^{-1/2} by nu = c u^m / (Q(u) Q~(u)), with
/// Q~(u) = u^m Q(1/(qu)). Exact members stay exact when Q has rational
/// coefficients. Errors: OrbitMismatch, ResidualZeros.
ZeroRemoval remove_offcircle_zeros(const ZetaLikeMember& m, double tol = 1e-7);

/// Largest distance from a zero to the nearest partner under conjugation or
/// under inversion w -> 1/(q w), with multiplicity.
double zero_symmetry_defect(const std::vector<Root>& zs, std::uint64_t q);

}  // namespace ffzeta
