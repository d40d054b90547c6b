#pragma once

// Curve models over F_q and exhaustive point counting over F_{q^n}.

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ffzeta/gf.hpp"

namespace ffzeta {

struct ProjectiveLine {};

/// y^2 = x^3 + a x + b
struct EllipticWeierstrass {
  FieldElement a;
  FieldElement b;
};

/// y^2 = f(x), coefficients lowest degree first, deg f >= 5.
struct Hyperelliptic {
  std::vector<FieldElement> f;
};

using CurveModel = std::variant<ProjectiveLine, EllipticWeierstrass, Hyperelliptic>;

class CurveSpec {
 public:
  /// Errors: InvalidModel (even characteristic for y^2 models, bad degree,
  /// coefficients from another field).
  CurveSpec(FiniteField base, CurveModel model);

  static CurveSpec projective_line(FiniteField base);
  static CurveSpec elliptic(FiniteField base, std::int64_t a, std::int64_t b);
  static CurveSpec hyperelliptic(FiniteField base, const std::vector<std::int64_t>& f);

  const FiniteField& base() const { return base_; }
  const CurveModel& model() const { return model_; }
  unsigned genus() const { return genus_; }
  /// The right-hand side f(x) of y^2 = f(x); empty for the projective line.
  std::vector<FieldElement> rhs() const;
  std::string describe() const;

 private:
  FiniteField base_;
  CurveModel model_;
  unsigned genus_ = 0;
};

struct PointCounts {
  std::uint64_t q = 0;
  std::vector<std::uint64_t> counts;  // N_1 .. N_m
};

struct CurveValidation {
  bool nonsingular = true;
  unsigned genus = 0;
  std::string detail;
  /// gcd(f, f') coefficients when singular (lowest first, as field indices).
  std::vector<std::uint64_t> witness;
  std::optional<std::uint64_t> repeated_root;  // index of a repeated root in F_q, if any
};

/// Nonsingularity verdict without throwing.
CurveValidation inspect_curve(const CurveSpec& c);
/// Throws SingularCurve carrying the witness in its message.
CurveValidation validate_curve(const CurveSpec& c);

/// Number of projective points over F_{q^n}. Errors: CapExceeded.
std::uint64_t count_points(const CurveSpec& c, unsigned n);
/// N_1..N_m. Errors: TooFewCounts when m < genus, CapExceeded.
PointCounts count_series(const CurveSpec& c, unsigned m);

/// Location of a curve-spec diagnostic (1-based line and column).
struct SpecLocation {
  std::size_t line = 0;
  std::size_t column = 0;
};

class SpecParseError : public Error {
 public:
  SpecParseError(SpecLocation where, const std::string& message)
      : Error(ErrorCode::ParseError, "line " + std::to_string(where.line) + ", column " +
                                         std::to_string(where.column) + ": " + message),
        where_(where) {}
  SpecLocation where() const { return where_; }

 private:
  SpecLocation where_;
};

/// Parse the `key = value` curve-spec format (see docs/FORMATS.md).
CurveSpec parse_curve_spec(std::istream& in, FieldLimits limits = {});
CurveSpec parse_curve_spec(const std::string& text, FieldLimits limits = {});
CurveSpec load_curve_spec(const std::string& path, FieldLimits limits = {});

}  // namespace ffzeta
