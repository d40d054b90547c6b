#pragma once

// Dense univariate polynomials, lowest degree first, over either scalar kind.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "ffzeta/error.hpp"
#include "ffzeta/scalar.hpp"

namespace ffzeta {

template <class T>
class Poly {
  using Tr = ScalarTraits<T>;

 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { normalize(); }

  static Poly constant(T c) { return Poly(std::vector<T>{std::move(c)}); }
  static Poly monomial(T c, std::size_t k) {
    std::vector<T> v(k + 1, Tr::zero());
    v[k] = std::move(c);
    return Poly(std::move(v));
  }
  /// u - root
  static Poly linear(const T& root) { return Poly({-root, Tr::one()}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Tr::zero(); }
  T leading() const { return c_.empty() ? Tr::zero() : c_.back(); }
  /// Multiplicity of u = 0 as a root (number of vanishing low coefficients).
  std::size_t low_order() const {
    std::size_t k = 0;
    while (k < c_.size() && Tr::is_zero(c_[k])) ++k;
    return k;
  }

  T operator()(const T& x) const {
    T acc = Tr::zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly derivative() const {
    std::vector<T> out;
    for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * Tr::from_int(static_cast<long>(i)));
    return Poly(std::move(out));
  }

  /// Coefficient-wise conjugate: u -> conj(p(conj u)).
  Poly conj() const {
    std::vector<T> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(Tr::conj(x));
    return Poly(std::move(out));
  }

  /// p(c u)
  Poly scale_argument(const T& c) const {
    std::vector<T> out(c_);
    T pw = Tr::one();
    for (auto& x : out) {
      x = x * pw;
      pw = pw * c;
    }
    return Poly(std::move(out));
  }

  /// u^d p(1/u); requires d >= degree.
  Poly reversed(std::size_t d) const {
    std::vector<T> out(d + 1, Tr::zero());
    for (std::size_t i = 0; i < c_.size(); ++i) out[d - i] = c_[i];
    return Poly(std::move(out));
  }

  /// p / u^k, assuming the low k coefficients vanish.
  Poly shift_down(std::size_t k) const {
    if (k >= c_.size()) return {};
    return Poly(std::vector<T>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
  }
  Poly shift_up(std::size_t k) const {
    if (c_.empty()) return {};
    std::vector<T> out(k, Tr::zero());
    out.insert(out.end(), c_.begin(), c_.end());
    return Poly(std::move(out));
  }

  template <class F>
  auto map(F&& f) const {
    using U = decltype(f(std::declval<T>()));
    std::vector<U> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(f(x));
    return Poly<U>(std::move(out));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Tr::zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    normalize();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Tr::zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    normalize();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const {
    std::vector<T> out;
    for (const auto& x : c_) out.push_back(-x);
    return Poly(std::move(out));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.c_.size() + b.c_.size() - 1, Tr::zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (Tr::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }
  friend Poly operator*(const T& s, const Poly& p) {
    std::vector<T> out;
    for (const auto& x : p.c_) out.push_back(s * x);
    return Poly(std::move(out));
  }

  Poly pow(unsigned k) const {
    Poly result = constant(Tr::one());
    for (unsigned i = 0; i < k; ++i) result = result * *this;
    return result;
  }

  /// Euclidean division a = q b + r with deg r < deg b.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    std::vector<T> rem = a.c_;
    if (rem.size() < b.c_.size()) return {Poly{}, a};
    std::vector<T> quo(rem.size() - b.c_.size() + 1, Tr::zero());
    const T lead = b.c_.back();
    for (std::size_t k = quo.size(); k-- > 0;) {
      const T t = rem[k + b.c_.size() - 1] / lead;
      quo[k] = t;
      if (Tr::is_zero(t)) continue;
      for (std::size_t i = 0; i < b.c_.size(); ++i) rem[k + i] = rem[k + i] - t * b.c_[i];
      rem[k + b.c_.size() - 1] = Tr::zero();
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
  }

  /// Monic gcd; exact scalars only.
  friend Poly gcd(Poly a, Poly b) {
    static_assert(Tr::exact, "gcd requires exact coefficients");
    while (!b.is_zero()) {
      Poly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
  }

  Poly monic() const {
    if (c_.empty()) return *this;
    const T inv = Tr::one() / c_.back();
    return inv * *this;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }

 private:
  void normalize() {
    while (!c_.empty() && Tr::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

using ExactPoly = Poly<GaussianRational>;
using ComplexPoly = Poly<Complex>;

inline ComplexPoly to_complex(const ExactPoly& p) {
  return p.map([](const GaussianRational& x) { return x.to_complex(); });
}

/// Horner evaluation of an exact polynomial at a complex point.
inline Complex eval_at(const ExactPoly& p, Complex x) {
  Complex acc{};
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + p.coeffs()[i].to_complex();
  return acc;
}

/// Sum |c_k| |x|^k, the natural scale of p(x) for backward-error estimates.
inline double abs_scale(const ComplexPoly& p, double ax) {
  double acc = 0.0;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * ax + std::abs(p.coeffs()[i]);
  return acc;
}

}  // namespace ffzeta
