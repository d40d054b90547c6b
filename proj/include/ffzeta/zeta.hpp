#pragma once

// L-polynomials and zeta functions of curves over F_q, with checks of the
// classical identities.

#include <cstdint>
#include <vector>

#include "ffzeta/curves.hpp"
#include "ffzeta/rational_fn.hpp"
#include "ffzeta/roots.hpp"

namespace ffzeta {

struct LPolynomial {
  std::uint64_t q = 0;
  unsigned g = 0;
  std::vector<Integer> c;  // c_0 .. c_{2g}

  ExactPoly poly() const;
  ComplexPoly complex_poly() const { return to_complex(poly()); }
  Integer at_one() const;
  /// c_j == c_{2g-j} q^{j-g} for all j, in integer arithmetic.
  bool symmetric() const;
};

/// L from N_1..N_m through the exact recurrence n z_n = sum N_k z_{n-k} for
/// the coefficients of Z, then L = Z (1-u)(1-qu); c_{g+1}..c_{2g} come from
/// the symmetry and any extra counts are cross-checked.
/// Errors: InconsistentCounts.
LPolynomial l_from_counts(const PointCounts& pc, unsigned g);

class ZetaFunction {
 public:
  explicit ZetaFunction(LPolynomial l);

  const LPolynomial& L() const { return l_; }
  std::uint64_t q() const { return l_.q; }
  unsigned genus() const { return l_.g; }
  /// L(u) / ((1-u)(1-qu)) in exact arithmetic.
  ExactRational Z() const;
  /// The numerator as a complex rational function (for the member machinery).
  ComplexRational h() const { return ComplexRational(l_.complex_poly()); }

  /// Z(q^{-s}). Errors: PoleHit.
  Complex operator()(Complex s) const;

 private:
  LPolynomial l_;
};

/// h(u) / ((1-u)(1-qu)) at u = q^{-s}, with 1-u and 1-qu formed by expm1 so
/// that values next to the poles keep full relative accuracy.
/// Errors: PoleHit when u is within 1e-13 (relative) of 1 or 1/q.
Complex zeta_like_eval(const ComplexRational& h, std::uint64_t q, Complex s);

/// The pole-hit guard shared with the evaluators.
inline constexpr double kPoleHitTolerance = 1e-13;

/// Deterministic pseudo-random points in -2 <= Re s <= 3, |Im s| <= 10,
/// kept at least 1e-6 away from the pole lattice.
std::vector<Complex> fe_samples(std::uint64_t q, std::uint64_t seed = 20240611, std::size_t count = 100);

struct FunctionalEquationCheck {
  double zeta_form = 0;      // |f(1-s) - q^{(g-1)(2s-1)} f(s)| / (1 + |f(s)|)
  double l_form = 0;         // |h(1/(qu)) - q^{-g} u^{-2g} h(u)| / (1 + |h(u)| |q^{-g} u^{-2g}|)
  double inversion_form = 0; // |u'^{-g} h(u') - u^{-g} h(u)| / (1 + |u^{-g} h(u)|), u' = 1/(qu)
  double reality = 0;        // |conj f(conj s) - f(s)| / (1 + |f(s)|)
  std::size_t samples = 0;
};

FunctionalEquationCheck functional_equation_residuals(const ComplexRational& h, unsigned g, std::uint64_t q,
                                                      const std::vector<Complex>& samples);
/// Max over samples of the zeta-form residual, with the other forms alongside.
FunctionalEquationCheck verify_functional_equation(const ZetaFunction& zf, const std::vector<Complex>& samples);

struct RootDeviation {
  Complex root;
  unsigned multiplicity = 1;
  double modulus = 0;
  double deviation = 0;  // | |root| sqrt q - 1 |
};

struct RhCheck {
  bool verdict = true;
  double max_deviation = 0;
  std::vector<RootDeviation> roots;
};

/// Every root of p on |u| = q^{-1/2} within tol. A constant passes vacuously.
RhCheck check_rh(const ComplexPoly& p, std::uint64_t q, double tol, const RootOptions& opt = {});
RhCheck check_rh(const LPolynomial& l, double tol);

struct ClassNumber {
  Integer h;
  double residue_closed = 0;   // q^{1-g} h / ((q-1) log q)
  double residue_numeric = 0;  // extrapolated lim (s-1) zeta(s)
  double residue_error = 0;
};

/// Errors: NonPositiveH.
ClassNumber class_number(const ZetaFunction& zf);

/// Richardson extrapolation to t -> 0 of values taken at t_k = t_0 r^k.
/// Returns the extrapolated value and an error estimate (difference of the
/// last two diagonal entries).
std::pair<Complex, double> richardson(const std::vector<Complex>& values, double ratio);

struct WeilCoefficient {
  unsigned n = 0;
  Integer a;
  double bound = 0;  // 2g q^{n/2}
  double ratio = 0;  // |a_n| / bound (0 when the bound is 0 and a_n = 0)
};

/// a_n from u L'/L = sum a_n u^n.
std::vector<WeilCoefficient> weil_coefficients(const LPolynomial& l, unsigned n_max);

/// Poles s with |s| <= r: Re s in {0, 1}, Im s = 2 pi j / log q.
std::vector<Complex> pole_lattice(std::uint64_t q, double r);

/// q^n + 1 - sum over roots of root^{-n}, computed from floating roots.
double predicted_count(const LPolynomial& l, unsigned n);

struct ZetaReport {
  LPolynomial L;
  RhCheck rh;
  ClassNumber class_number;
  FunctionalEquationCheck fe;
  std::vector<WeilCoefficient> weil;
  bool weil_ok = true;
  std::vector<std::uint64_t> counts;      // input N_n
  std::vector<double> predicted_counts;   // from the roots, same length
  std::vector<Complex> poles;             // pole lattice within radius 10
};

ZetaReport zeta_report(const ZetaFunction& zf, const PointCounts& pc, double rh_tol = 1e-8, unsigned weil_n = 20,
                       std::uint64_t seed = 20240611);

}  // namespace ffzeta
