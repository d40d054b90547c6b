#include "ffzeta/curves.hpp"

#include <sstream>

namespace ffzeta {

namespace {

using FPoly = std::vector<FieldElement>;

void trim(FPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

FPoly derivative(const FPoly& f, const FiniteField& k) {
  FPoly out;
  for (std::size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * k.from_int(static_cast<std::int64_t>(i)));
  trim(out);
  return out;
}

FPoly poly_mod(FPoly a, const FPoly& m) {
  trim(a);
  const FieldElement lead_inv = m.back().inv();
  while (a.size() >= m.size()) {
    const FieldElement t = a.back() * lead_inv;
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = a[shift + i] - t * m[i];
    trim(a);
  }
  return a;
}

FPoly poly_gcd(FPoly a, FPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FPoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const FieldElement inv = a.back().inv();
    for (auto& c : a) c = c * inv;
  }
  return a;
}

FieldElement horner(const FPoly& f, const FieldElement& x) {
  FieldElement acc = x.field().zero();
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

void require_odd_characteristic(const FiniteField& k) {
  if (k.characteristic() == 2) {
    throw Error(ErrorCode::InvalidModel, "y^2 models require odd characteristic; use the projective line in characteristic 2");
  }
}

void require_field(const FiniteField& k, const FieldElement& e) {
  if (!(e.field() == k)) throw Error(ErrorCode::InvalidModel, "coefficient belongs to another field");
}

}  // namespace

CurveSpec::CurveSpec(FiniteField base, CurveModel model) : base_(std::move(base)), model_(std::move(model)) {
  if (auto* e = std::get_if<EllipticWeierstrass>(&model_)) {
    require_odd_characteristic(base_);
    require_field(base_, e->a);
    require_field(base_, e->b);
    genus_ = 1;
  } else if (auto* h = std::get_if<Hyperelliptic>(&model_)) {
    require_odd_characteristic(base_);
    for (const auto& c : h->f) require_field(base_, c);
    trim(h->f);
    if (h->f.size() < 6) throw Error(ErrorCode::InvalidModel, "hyperelliptic model needs deg f >= 5");
    genus_ = static_cast<unsigned>((h->f.size() - 2) / 2);  // deg f in {2g+1, 2g+2}
  } else {
    genus_ = 0;
  }
}

CurveSpec CurveSpec::projective_line(FiniteField base) { return CurveSpec(std::move(base), ProjectiveLine{}); }

CurveSpec CurveSpec::elliptic(FiniteField base, std::int64_t a, std::int64_t b) {
  auto ea = base.from_int(a);
  auto eb = base.from_int(b);
  return CurveSpec(std::move(base), EllipticWeierstrass{ea, eb});
}

CurveSpec CurveSpec::hyperelliptic(FiniteField base, const std::vector<std::int64_t>& f) {
  Hyperelliptic h;
  for (auto c : f) h.f.push_back(base.from_int(c));
  return CurveSpec(std::move(base), std::move(h));
}

std::vector<FieldElement> CurveSpec::rhs() const {
  if (const auto* e = std::get_if<EllipticWeierstrass>(&model_)) {
    return {e->b, e->a, base_.zero(), base_.one()};
  }
  if (const auto* h = std::get_if<Hyperelliptic>(&model_)) return h->f;
  return {};
}

std::string CurveSpec::describe() const {
  std::ostringstream os;
  if (std::holds_alternative<ProjectiveLine>(model_)) {
    os << "P^1";
  } else {
    os << "y^2 = ";
    const auto f = rhs();
    bool first = true;
    for (std::size_t i = f.size(); i-- > 0;) {
      if (f[i].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << f[i].index();
      if (i >= 1) os << "*x";
      if (i >= 2) os << "^" << i;
    }
  }
  os << " over F_" << base_.size();
  return os.str();
}

CurveValidation inspect_curve(const CurveSpec& c) {
  CurveValidation v;
  v.genus = c.genus();
  const FiniteField& k = c.base();
  if (std::holds_alternative<ProjectiveLine>(c.model())) {
    v.detail = "projective line";
    return v;
  }
  if (const auto* e = std::get_if<EllipticWeierstrass>(&c.model())) {
    const FieldElement disc = k.from_int(4) * e->a * e->a * e->a + k.from_int(27) * e->b * e->b;
    if (disc.is_zero()) {
      v.nonsingular = false;
      v.detail = "4a^3 + 27b^2 = 0";
    }
  }
  // Squarefreeness of f covers both models (it is equivalent to the
  // discriminant test in odd characteristic).
  const FPoly f = c.rhs();
  const FPoly g = poly_gcd(f, derivative(f, k));
  if (g.size() > 1) {
    v.nonsingular = false;
    if (v.detail.empty()) v.detail = "f is not squarefree";
    for (const auto& coeff : g) v.witness.push_back(coeff.index());
    for (const auto& x : k.elements()) {
      if (horner(g, x).is_zero()) {
        v.repeated_root = x.index();
        break;
      }
    }
  }
  if (v.nonsingular) v.detail = "nonsingular";
  return v;
}

CurveValidation validate_curve(const CurveSpec& c) {
  CurveValidation v = inspect_curve(c);
  if (!v.nonsingular) {
    std::ostringstream os;
    os << c.describe() << ": " << v.detail;
    if (!v.witness.empty()) {
      os << "; gcd(f, f') = [";
      for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? ", " : "") << v.witness[i];
      os << "]";
    }
    if (v.repeated_root) os << "; repeated root x = " << *v.repeated_root;
    throw Error(ErrorCode::SingularCurve, os.str());
  }
  return v;
}

std::uint64_t count_points(const CurveSpec& c, unsigned n) {
  if (n == 0) throw Error(ErrorCode::DegreeZero, "extension degree must be at least 1");
  const FiniteField& k = c.base();
  if (std::holds_alternative<ProjectiveLine>(c.model())) {
    std::uint64_t qn = 1;
    for (unsigned i = 0; i < n; ++i) qn *= k.size();
    return qn + 1;
  }
  const FieldExtension ext = extend(k, n);
  const FiniteField& big = ext.field;
  FPoly f;
  for (const auto& coeff : c.rhs()) f.push_back(ext.embedding(coeff));

  std::uint64_t affine = 0;
  for (std::uint64_t i = 0; i < big.size(); ++i) {
    const FieldElement v = horner(f, big.from_index(i));
    affine += big.square_roots(v).size();
  }

  std::uint64_t at_infinity = 1;
  const std::size_t deg = f.size() - 1;
  if (deg % 2 == 0) at_infinity = big.is_square(f.back()) ? 2 : 0;
  return affine + at_infinity;
}

PointCounts count_series(const CurveSpec& c, unsigned m) {
  if (m < c.genus()) {
    throw Error(ErrorCode::TooFewCounts,
                "need at least genus = " + std::to_string(c.genus()) + " counts, got " + std::to_string(m));
  }
  PointCounts pc;
  pc.q = c.base().size();
  for (unsigned n = 1; n <= m; ++n) pc.counts.push_back(count_points(c, n));
  return pc;
}

}  // namespace ffzeta
