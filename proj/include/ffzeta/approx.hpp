#pragma once

// Approximation of holomorphic functions on a compact set by finite sums
// sum_k lambda_k zeta(eta s + b_k), from a smooth cutoff, its dbar, and a
// Riemann sum of the Cauchy-Pompeiu integral with zeta in place of 1/(pi s).

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ffzeta/zeta.hpp"

namespace ffzeta {

struct Disk {
  Complex center{};
  double radius = 0;
};

struct Rect {
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
};

using Region = std::variant<Disk, Rect>;

bool contains(const Region& r, Complex s);
/// "disk:cx,cy,r" or "rect:x0,x1,y0,y1". Errors: ParseError.
Region parse_region(const std::string& text);
std::string to_string(const Region& r);

/// sup{|w| : w in U or U - U}.
double region_reach(const Region& u);

/// min(1, rho_min / (2 M)) with rho_min = min(1, 2 pi / log q) the smallest
/// nonzero pole modulus and M = region_reach(U).
double choose_eta(std::uint64_t q, const Region& u);

struct ResidueConstant {
  Complex a;             // pi Res_{s=0} zeta(eta s)
  Complex closed_form;   // pi L(1) / ((1-q) eta log q)
  double extrapolation_error = 0;
};

/// Numeric limit pi t zeta(eta t), t = 10^-3..10^-6, by Richardson, checked
/// against the closed form to 1e-8 (relative). Errors: ExtrapolationUnstable.
ResidueConstant residue_a(const ZetaFunction& zf, double eta);

/// chi = 1 on K, 0 off U, with a C-infinity transition. Disks use a radial
/// profile about K's centre; rectangles a product of one-dimensional profiles.
class Cutoff {
 public:
  /// Errors: GeometryError when K is not inside U, the kinds differ, or the
  /// collar is thinner than 2 grid steps.
  Cutoff(const Region& k, const Region& u, double grid_step);

  double chi(Complex s) const;
  /// dbar chi = (d/dx + i d/dy) chi / 2.
  Complex dbar(Complex s) const;
  /// Where dbar chi can be nonzero.
  bool in_collar(Complex s) const;
  /// Bounding box of the collar.
  Rect box() const;

  /// Transition profile on [0, 1]: 0 at 0, 1 at 1, flat at both ends.
  static double step(double t);
  static double step_derivative(double t);

 private:
  bool radial_ = true;
  Complex centre_{};
  double inner_ = 0, outer_ = 0;
  Rect kin_{}, uout_{};
};

struct Target {
  std::string name;
  std::function<Complex(Complex)> fn;
};

/// exp, sin, cos, sq (s^2), zero, one, or poly:c0,c1,... Errors: ParseError.
Target parse_target(const std::string& text);

struct TranslateTerm {
  Complex lambda;
  Complex b;
};

struct AuditPoint {
  Complex s;
  Complex value;
  Complex target;
  double error = 0;
};

struct TranslateSum {
  std::uint64_t q = 0;
  ComplexRational h;  // numerator of the base zeta function
  double eta = 0;
  Complex a;
  std::vector<TranslateTerm> terms;
  double grid_step = 0;
  double sup_error = 0;
  /// Sup error of the same weights with zeta(eta w) replaced by its singular
  /// part a/(pi w), i.e. the plain Riemann sum of the Cauchy-Pompeiu integral.
  double cauchy_pompeiu_error = 0;
  std::vector<AuditPoint> audit;
};

/// sum lambda_k zeta(eta s + b_k), pairwise summed. Errors: PoleCollision.
Complex eval_translate_sum(const TranslateSum& ts, Complex s);

struct ApproxProblem {
  Target target;
  Region k;
  Region u;
  std::optional<double> eta;  // default: choose_eta
  double grid_step = 0.05;
};

/// Deterministic 256-point sample of K, weighted toward the boundary.
std::vector<Complex> audit_points(const Region& k, std::size_t count = 256);

/// Midpoint grid over the collar's bounding box; lambda_k = a^{-1} f dbar chi delta^2,
/// b_k = -eta z_k. Errors: GeometryError, PoleCollision, ExtrapolationUnstable.
TranslateSum approximate(const ZetaFunction& zf, const ApproxProblem& prob);

struct ConvergenceStudy {
  std::vector<double> steps;
  std::vector<double> errors;
  std::vector<double> contractions;  // errors[i-1] / errors[i]
  double eta = 0;
  double alt_eta = 0;
  double alt_error = 0;  // finest level at alt_eta
};

/// `levels` grids from grid_step, halving each time, plus the finest grid at
/// half the chosen eta.
ConvergenceStudy convergence_study(const ZetaFunction& zf, const ApproxProblem& prob, unsigned levels = 3);

}  // namespace ffzeta
