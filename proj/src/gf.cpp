#include "ffzeta/gf.hpp"

#include <algorithm>
#include <mutex>
#include <string>

namespace ffzeta {

namespace detail {

struct FieldCore {
  std::uint64_t p = 0;
  unsigned r = 0;
  std::uint64_t q = 0;
  std::vector<std::uint32_t> modulus;  // monic, length r + 1
  FieldLimits limits;

  mutable std::once_flag squares_once;
  mutable std::vector<std::int64_t> square_root_of;  // index -> index of a root, or -1

  mutable std::once_flag primitive_once;
  mutable std::uint64_t primitive_index = 0;
};

}  // namespace detail

namespace {

using Coeffs = std::array<std::uint32_t, kMaxFieldDegree>;
using detail::FieldCore;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

// ---- polynomials over F_p as vectors, lowest degree first -----------------

using FpPoly = std::vector<std::uint64_t>;

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // p prime: a^(p-2)
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return result;
}

FpPoly fp_mod(FpPoly a, const FpPoly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint64_t t = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + p - mulmod(t, m[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  return fp_mod(std::move(out), m, p);
}

FpPoly fp_powmod(FpPoly base, std::uint64_t e, const FpPoly& m, std::uint64_t p) {
  FpPoly result{1};
  base = fp_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) result = fp_mulmod(result, base, m, p);
    base = fp_mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FpPoly r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: f of degree r is irreducible iff gcd(f, x^{p^k} - x) = 1 for k <= r/2.
// For k = 1 this is the root test.
bool fp_irreducible(const FpPoly& f, std::uint64_t p) {
  const std::size_t r = f.size() - 1;
  if (r == 1) return true;
  if (f[0] == 0) return false;
  FpPoly xpk{0, 1};
  for (std::size_t k = 1; k <= r / 2; ++k) {
    xpk = fp_powmod(xpk, p, f, p);
    FpPoly diff = xpk;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    FpPoly g = fp_gcd(f, diff, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// ---- element kernels on raw coefficient arrays -----------------------------

Coeffs raw_add(const FieldCore& f, const Coeffs& a, const Coeffs& b) {
  Coeffs out{};
  for (unsigned i = 0; i < f.r; ++i) out[i] = static_cast<std::uint32_t>((std::uint64_t{a[i]} + b[i]) % f.p);
  return out;
}

Coeffs raw_sub(const FieldCore& f, const Coeffs& a, const Coeffs& b) {
  Coeffs out{};
  for (unsigned i = 0; i < f.r; ++i) out[i] = static_cast<std::uint32_t>((std::uint64_t{a[i]} + f.p - b[i]) % f.p);
  return out;
}

Coeffs raw_mul(const FieldCore& f, const Coeffs& a, const Coeffs& b) {
  const unsigned r = f.r;
  std::array<std::uint64_t, 2 * kMaxFieldDegree> t{};
  for (unsigned i = 0; i < r; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < r; ++j) t[i + j] = (t[i + j] + mulmod(a[i], b[j], f.p)) % f.p;
  }
  for (unsigned k = 2 * r - 2; k >= r && k < 2 * r; --k) {
    const std::uint64_t c = t[k];
    if (c == 0) continue;
    t[k] = 0;
    for (unsigned i = 0; i < r; ++i) t[k - r + i] = (t[k - r + i] + f.p - mulmod(c, f.modulus[i], f.p)) % f.p;
  }
  Coeffs out{};
  for (unsigned i = 0; i < r; ++i) out[i] = static_cast<std::uint32_t>(t[i]);
  return out;
}

Coeffs raw_one() {
  Coeffs out{};
  out[0] = 1;
  return out;
}

Coeffs raw_pow(const FieldCore& f, Coeffs base, std::uint64_t e) {
  Coeffs result = raw_one();
  while (e) {
    if (e & 1) result = raw_mul(f, result, base);
    base = raw_mul(f, base, base);
    e >>= 1;
  }
  return result;
}

bool raw_is_zero(const FieldCore& f, const Coeffs& a) {
  for (unsigned i = 0; i < f.r; ++i)
    if (a[i] != 0) return false;
  return true;
}

std::uint64_t raw_index(const FieldCore& f, const Coeffs& a) {
  std::uint64_t idx = 0;
  for (unsigned i = f.r; i-- > 0;) idx = idx * f.p + a[i];
  return idx;
}

Coeffs raw_from_index(const FieldCore& f, std::uint64_t idx) {
  Coeffs out{};
  for (unsigned i = 0; i < f.r; ++i) {
    out[i] = static_cast<std::uint32_t>(idx % f.p);
    idx /= f.p;
  }
  return out;
}

bool same_field(const FieldCore* a, const FieldCore* b) {
  if (a == nullptr || b == nullptr) return false;
  return a == b || (a->p == b->p && a->modulus == b->modulus);
}

const FieldCore& require_same(const std::shared_ptr<const FieldCore>& a,
                              const std::shared_ptr<const FieldCore>& b) {
  if (!same_field(a.get(), b.get())) throw Error(ErrorCode::FieldMismatch, "operands belong to different fields");
  return *a;
}

std::uint64_t checked_power(std::uint64_t p, unsigned r, std::uint64_t cap) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < r; ++i) {
    if (q > cap / p) {
      throw Error(ErrorCode::CapExceeded, std::to_string(p) + "^" + std::to_string(r) + " exceeds field cap " +
                                              std::to_string(cap));
    }
    q *= p;
  }
  return q;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---- FieldElement -----------------------------------------------------------

std::span<const std::uint32_t> FieldElement::coeffs() const {
  return {c_.data(), core_ ? core_->r : 0u};
}

bool FieldElement::is_zero() const { return !core_ || raw_is_zero(*core_, c_); }

std::uint64_t FieldElement::index() const { return core_ ? raw_index(*core_, c_) : 0; }

FiniteField FieldElement::field() const {
  if (!core_) throw Error(ErrorCode::FieldMismatch, "element is not attached to a field");
  return FiniteField(core_);
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (!same_field(a.core_.get(), b.core_.get())) return false;
  for (unsigned i = 0; i < a.core_->r; ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const auto& f = require_same(a.core_, b.core_);
  FieldElement out;
  out.core_ = a.core_;
  out.c_ = raw_add(f, a.c_, b.c_);
  return out;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const auto& f = require_same(a.core_, b.core_);
  FieldElement out;
  out.core_ = a.core_;
  out.c_ = raw_sub(f, a.c_, b.c_);
  return out;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const auto& f = require_same(a.core_, b.core_);
  FieldElement out;
  out.core_ = a.core_;
  out.c_ = raw_mul(f, a.c_, b.c_);
  return out;
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same(a.core_, b.core_);
  return a * b.inv();
}

FieldElement FieldElement::operator-() const {
  if (!core_) throw Error(ErrorCode::FieldMismatch, "element is not attached to a field");
  FieldElement out;
  out.core_ = core_;
  out.c_ = raw_sub(*core_, Coeffs{}, c_);
  return out;
}

FieldElement FieldElement::pow(std::uint64_t k) const {
  if (!core_) throw Error(ErrorCode::FieldMismatch, "element is not attached to a field");
  FieldElement out;
  out.core_ = core_;
  out.c_ = raw_pow(*core_, c_, k);
  return out;
}

FieldElement FieldElement::inv() const {
  if (!core_) throw Error(ErrorCode::FieldMismatch, "element is not attached to a field");
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return pow(core_->q - 2);
}

FieldElement FieldElement::frobenius() const {
  if (!core_) throw Error(ErrorCode::FieldMismatch, "element is not attached to a field");
  return pow(core_->p);
}

// ---- FiniteField ------------------------------------------------------------

FiniteField FiniteField::make(std::uint64_t p, unsigned r, FieldLimits limits) {
  if (r == 0) throw Error(ErrorCode::DegreeZero, "extension degree must be at least 1");
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (r > kMaxFieldDegree) throw Error(ErrorCode::CapExceeded, "degree exceeds supported maximum");
  const std::uint64_t q = checked_power(p, r, limits.max_size);

  auto core = std::make_shared<FieldCore>();
  core->p = p;
  core->r = r;
  core->q = q;
  core->limits = limits;

  if (r == 1) {
    core->modulus = {0, 1};
  } else {
    const std::uint64_t count = q;  // p^r candidates for the low coefficients
    bool found = false;
    for (std::uint64_t t = 0; t < count && !found; ++t) {
      FpPoly f(r + 1, 0);
      std::uint64_t v = t;
      for (unsigned i = 0; i < r; ++i) {
        f[i] = v % p;
        v /= p;
      }
      f[r] = 1;
      if (fp_irreducible(f, p)) {
        core->modulus.assign(f.begin(), f.end());
        found = true;
      }
    }
    if (!found) throw Error(ErrorCode::NonConvergence, "no irreducible polynomial found");
  }
  return FiniteField(std::move(core));
}

FiniteField make_field(std::uint64_t p, unsigned r, FieldLimits limits) { return FiniteField::make(p, r, limits); }

std::uint64_t FiniteField::characteristic() const { return core_->p; }
unsigned FiniteField::degree() const { return core_->r; }
std::uint64_t FiniteField::size() const { return core_->q; }
const FieldLimits& FiniteField::limits() const { return core_->limits; }
const std::vector<std::uint32_t>& FiniteField::modulus() const { return core_->modulus; }

FieldElement FiniteField::zero() const {
  FieldElement out;
  out.core_ = core_;
  return out;
}

FieldElement FiniteField::one() const { return from_int(1); }

FieldElement FiniteField::from_int(std::int64_t v) const {
  FieldElement out;
  out.core_ = core_;
  const auto p = static_cast<std::int64_t>(core_->p);
  out.c_[0] = static_cast<std::uint32_t>(((v % p) + p) % p);
  return out;
}

FieldElement FiniteField::element(std::span<const std::int64_t> coeffs) const {
  if (coeffs.size() > core_->r) throw Error(ErrorCode::InvalidModel, "too many coefficients for field element");
  FieldElement out;
  out.core_ = core_;
  const auto p = static_cast<std::int64_t>(core_->p);
  for (std::size_t i = 0; i < coeffs.size(); ++i) out.c_[i] = static_cast<std::uint32_t>(((coeffs[i] % p) + p) % p);
  return out;
}

FieldElement FiniteField::from_index(std::uint64_t index) const {
  FieldElement out;
  out.core_ = core_;
  out.c_ = raw_from_index(*core_, index % core_->q);
  return out;
}

FieldElement FiniteField::generator() const {
  FieldElement out;
  out.core_ = core_;
  if (core_->r == 1) return out;  // x = 0 modulo the prime-field modulus x
  out.c_[1] = 1;
  return out;
}

std::vector<FieldElement> FiniteField::elements() const {
  std::vector<FieldElement> out;
  out.reserve(core_->q);
  for (std::uint64_t i = 0; i < core_->q; ++i) out.push_back(from_index(i));
  return out;
}

std::vector<FieldElement> FiniteField::square_roots(const FieldElement& a) const {
  if (!same_field(core_.get(), a.core_.get())) throw Error(ErrorCode::FieldMismatch, "element from another field");
  if (a.is_zero()) return {zero()};
  const FieldCore& f = *core_;
  std::call_once(f.squares_once, [&f] {
    f.square_root_of.assign(f.q, -1);
    for (std::uint64_t y = 0; y < f.q; ++y) {
      const Coeffs c = raw_from_index(f, y);
      const std::uint64_t sq = raw_index(f, raw_mul(f, c, c));
      if (f.square_root_of[sq] < 0) f.square_root_of[sq] = static_cast<std::int64_t>(y);
    }
  });
  const std::int64_t root = f.square_root_of[a.index()];
  if (root < 0) return {};
  FieldElement y = from_index(static_cast<std::uint64_t>(root));
  FieldElement minus_y = -y;
  if (minus_y == y) return {y};
  if (minus_y.index() < y.index()) std::swap(y, minus_y);
  return {y, minus_y};
}

bool FiniteField::is_square(const FieldElement& a) const { return !square_roots(a).empty(); }

FieldElement FiniteField::primitive_element() const {
  const FieldCore& f = *core_;
  std::call_once(f.primitive_once, [&f] {
    if (f.q == 2) {
      f.primitive_index = 1;
      return;
    }
    const auto factors = prime_factors(f.q - 1);
    for (std::uint64_t idx = 1; idx < f.q; ++idx) {
      const Coeffs c = raw_from_index(f, idx);
      bool primitive = true;
      for (std::uint64_t l : factors) {
        const Coeffs t = raw_pow(f, c, (f.q - 1) / l);
        if (raw_index(f, t) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        f.primitive_index = idx;
        return;
      }
    }
  });
  return from_index(f.primitive_index);
}

bool operator==(const FiniteField& a, const FiniteField& b) { return same_field(a.core_.get(), b.core_.get()); }

// ---- embeddings -------------------------------------------------------------

FieldEmbedding::FieldEmbedding(FiniteField source, FiniteField target, FieldElement generator_image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(generator_image)) {}

FieldElement FieldEmbedding::operator()(const FieldElement& a) const {
  if (!(a.field() == source_)) throw Error(ErrorCode::FieldMismatch, "element is not in the embedding source");
  const auto c = a.coeffs();
  FieldElement acc = target_.zero();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * image_ + target_.from_int(c[i]);
  }
  return acc;
}

FieldExtension extend(const FiniteField& k, unsigned n) {
  if (n == 0) throw Error(ErrorCode::DegreeZero, "extension degree must be at least 1");
  if (n == 1) return {k, FieldEmbedding(k, k, k.generator())};

  const unsigned r = k.degree();
  if (static_cast<std::uint64_t>(r) * n > kMaxFieldDegree) throw Error(ErrorCode::CapExceeded, "degree too large");
  FiniteField big = FiniteField::make(k.characteristic(), r * n, k.limits());

  if (r == 1) return {big, FieldEmbedding(k, big, big.zero())};

  // A root of k's modulus lies in the copy of F_q inside big, generated by
  // gamma^((Q-1)/(q-1)) for a primitive gamma. Pick the smallest-index root.
  const std::uint64_t q = k.size();
  const std::uint64_t big_q = big.size();
  const FieldElement beta = big.primitive_element().pow((big_q - 1) / (q - 1));
  const auto& m = k.modulus();
  FieldElement x = big.one();
  bool found = false;
  FieldElement best;
  for (std::uint64_t j = 0; j + 1 < q; ++j) {
    FieldElement v = big.zero();
    for (std::size_t i = m.size(); i-- > 0;) v = v * x + big.from_int(m[i]);
    if (v.is_zero() && (!found || x.index() < best.index())) {
      best = x;
      found = true;
    }
    x = x * beta;
  }
  if (!found) throw Error(ErrorCode::NonConvergence, "no root of the base modulus in the extension");
  return {big, FieldEmbedding(k, big, best)};
}

}  // namespace ffzeta
