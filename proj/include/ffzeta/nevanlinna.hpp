#pragma once

// Nevanlinna value-distribution quantities for functions of s that are
// rational in u = q^{-s} (zeta functions and their relatives), and for plain
// rational functions of s as a comparison class.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ffzeta/zeta.hpp"

namespace ffzeta {

/// A point of the extended complex plane.
struct ExtendedComplex {
  Complex value{};
  bool infinite = false;

  static ExtendedComplex infinity() { return {Complex{}, true}; }
  std::string to_string() const;
  /// "inf", "2", "-1.5", "i", "1+2i", ...  Errors: ParseError.
  static ExtendedComplex parse(const std::string& text);
};

class MeromorphicFn {
 public:
  /// f(s) = R(q^{-s}).
  static MeromorphicFn of_u(std::uint64_t q, ComplexRational r);
  /// f(s) = R(s).
  static MeromorphicFn of_s(ComplexRational r);
  static MeromorphicFn constant(Complex c);
  static MeromorphicFn from_zeta(const ZetaFunction& zf);
  /// h(u) / ((1-u)(1-qu)).
  static MeromorphicFn zeta_like(std::uint64_t q, const ComplexRational& h);

  bool in_u() const { return q_ != 0; }
  std::uint64_t q() const { return q_; }
  const ComplexRational& rational() const { return r_; }
  /// max(deg num, deg den) after cancelling u = 0 factors (u-kind) or plain degree (s-kind).
  int degree() const;

  Complex operator()(Complex s) const;
  /// log|f(s)|, evaluated in log space so that |u| up to q^{|s|} never overflows.
  double log_abs(Complex s) const;

  /// 1 / (f - alpha); alpha = infinity is not allowed.
  MeromorphicFn reciprocal_minus(Complex alpha) const;
  /// s -> f(s + b).
  MeromorphicFn shifted(Complex b) const;

  /// Sums and products need the same kind and, for u-kind, the same q.
  /// Errors: Unsupported.
  friend MeromorphicFn operator+(const MeromorphicFn& a, const MeromorphicFn& b);
  friend MeromorphicFn operator*(const MeromorphicFn& a, const MeromorphicFn& b);

 private:
  MeromorphicFn(std::uint64_t q, ComplexRational r);
  std::uint64_t q_ = 0;
  ComplexRational r_;
  // Cached log-space evaluation data for each of num and den.
  struct LogPoly {
    std::size_t low = 0;
    ComplexPoly core;
    ComplexPoly reversed;
    bool zero = false;
  };
  LogPoly num_log_, den_log_;
  static LogPoly prepare(const ComplexPoly& p);
  double log_abs_poly(const LogPoly& lp, Complex s) const;
};

/// Cancel numerically common roots of num and den (relative distance <= tol).
ComplexRational cancel_common_roots(const ComplexRational& r, double tol = 1e-7);

struct LatticePoint {
  Complex s;
  unsigned multiplicity = 1;
};

struct AlphaPointSet {
  ExtendedComplex alpha;
  std::uint64_t q = 0;            // 0 for s-kind
  std::vector<Root> u_roots;      // nonzero u-solutions (u-kind)
  std::vector<Root> s_roots;      // s-solutions (s-kind)
  double max_residual = 0;        // backward error of the defining polynomial at the roots

  /// Number of u-solutions with multiplicity (the lattice density parameter k).
  unsigned k() const;
  /// All s-points with |s| <= r.
  std::vector<LatticePoint> s_points(double r) const;
};

/// Errors: DegenerateTarget when f is identically alpha.
AlphaPointSet alpha_points(const MeromorphicFn& f, const ExtendedComplex& alpha);

/// n(r, alpha): points in the closed disk, with multiplicity.
unsigned long counting_n(const AlphaPointSet& aps, double r);
/// N(r, alpha) = sum_{0 < |s_j| <= r} log(r / |s_j|) + n(0) log r.
double integrated_N(const AlphaPointSet& aps, double r);

struct QuadratureConfig {
  /// 0 selects max(4096, 32 r max(1, log q)) rounded up to a power of two.
  std::size_t nodes = 0;
  /// Allowed |m_N - m_2N| is abs_tol + rel_tol * |m_2N|.
  double abs_tol = 1e-4;
  double rel_tol = 1e-4;
};

struct Proximity {
  double value = 0;
  double error = 0;      // |m_N - m_2N|
  std::size_t nodes = 0; // the finer node count
  double offset = 0;     // node offset in theta
};

/// (1/2pi) int log+ |f(r e^{i theta})| d theta. Errors: QuadratureUnstable.
Proximity proximity_m(const MeromorphicFn& f, double r, const QuadratureConfig& cfg = {});
/// Proximity to alpha: m(r, 1/(f - alpha)), or m(r, f) for alpha = infinity.
Proximity proximity_to(const MeromorphicFn& f, const ExtendedComplex& alpha, double r, const QuadratureConfig& cfg = {});

struct Characteristic {
  double T = 0;
  double m = 0;
  double N = 0;
  double error = 0;
};

/// T = m(r, f) + N(r, infinity).
Characteristic characteristic_T(const MeromorphicFn& f, double r, const QuadratureConfig& cfg = {});
Characteristic characteristic_T(const MeromorphicFn& f, const AlphaPointSet& poles, double r,
                                const QuadratureConfig& cfg = {});

/// `per_decade` log-spaced radii from r_min to r_max inclusive.
std::vector<double> log_grid(double r_min, double r_max, unsigned per_decade = 10);

struct OrderEstimate {
  double order = 0;        // least-squares slope of log T vs log r on the top decade
  double lower_order = 0;  // minimum local slope on the top decade
};

/// Errors: InsufficientGrid unless the grid spans two decades.
OrderEstimate estimate_order(const std::vector<double>& r_grid, const std::vector<double>& T);
OrderEstimate estimate_order(const MeromorphicFn& f, const std::vector<double>& r_grid, const QuadratureConfig& cfg = {});

struct TypeEstimate {
  double type = 0;    // median of T(r)/r on the top decade
  double target = 0;  // degree * log q / pi from the lattice density
};

TypeEstimate estimate_type(const std::vector<double>& r_grid, const std::vector<double>& T, double target);
TypeEstimate estimate_type(const MeromorphicFn& f, const std::vector<double>& r_grid, const QuadratureConfig& cfg = {});

/// Asymptotic value of T(r)/r for u-kind f: degree * log q / pi.
double type_target(const MeromorphicFn& f);
/// 1 - k_alpha / degree: the deficiency implied by the lattice densities.
double deficiency_target(const MeromorphicFn& f, const ExtendedComplex& alpha);

/// 1 - max over the top decade of N(r, alpha) / T(r).
double estimate_deficiency(const std::vector<double>& r_grid, const std::vector<double>& N, const std::vector<double>& T);
double estimate_deficiency(const MeromorphicFn& f, const ExtendedComplex& alpha, const std::vector<double>& r_grid,
                           const QuadratureConfig& cfg = {});

/// max(m(r, L(u)), m(r, (u-1)(1-qu)) + log(q-1)).
double max_heuristic_T(const ZetaFunction& zf, double r, const QuadratureConfig& cfg = {});

/// Zeros minus poles of f - alpha inside |s| = r by the winding number of
/// the numerator and denominator polynomials along the circle.
long argument_principle_count(const MeromorphicFn& f, const ExtendedComplex& alpha, double r, std::size_t nodes = 1 << 16);

/// The probe set {0, 1, 2, i, infinity}.
std::vector<ExtendedComplex> default_probe_set();

struct NevanlinnaRow {
  double r = 0;
  std::string alpha;
  unsigned long n = 0;
  double N = 0;
  double m = 0;
  double T = 0;
};

struct DeficiencyEstimate {
  ExtendedComplex alpha;
  unsigned k = 0;
  double estimate = 0;
  double target = 0;
};

struct NevanlinnaReport {
  std::vector<double> r_grid;
  std::vector<double> T;
  std::vector<double> quadrature_error;
  std::vector<NevanlinnaRow> rows;
  OrderEstimate order;
  TypeEstimate type;
  std::vector<DeficiencyEstimate> deficiencies;
  double deficiency_sum = 0;
  int degree = 0;
  std::uint64_t q = 0;
  bool monotone = true;
};

NevanlinnaReport nevanlinna_report(const MeromorphicFn& f, const std::vector<ExtendedComplex>& alphas,
                                   const std::vector<double>& r_grid, const QuadratureConfig& cfg = {});

struct LedgerEntry {
  std::string id;
  std::string detail;
  double lhs = 0;
  double rhs = 0;
  bool pass = true;
};

struct InequalityLedger {
  std::vector<LedgerEntry> entries;
  bool all_pass() const;
  std::size_t failures() const;
};

/// Subadditivity and submultiplicativity of T over all same-kind pairs,
/// first-fundamental boundedness, the deficiency sum over the probe set, and
/// order inequalities (when the grid spans two decades).
InequalityLedger inequality_suite(const std::vector<MeromorphicFn>& fs, const std::vector<double>& r_samples,
                                  const std::vector<ExtendedComplex>& probes = default_probe_set(),
                                  const QuadratureConfig& cfg = {});

}  // namespace ffzeta
