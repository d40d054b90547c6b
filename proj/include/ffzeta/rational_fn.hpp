#pragma once

// Rational functions num/den over either scalar kind. Exact values are kept
// reduced with a monic denominator; complex values only get a monic
// denominator.

#include <vector>

#include "ffzeta/poly.hpp"

namespace ffzeta {

template <class T>
class RationalFn {
  using Tr = ScalarTraits<T>;
  using P = Poly<T>;

 public:
  RationalFn() : num_(), den_(P::constant(Tr::one())) {}
  RationalFn(P num) : num_(std::move(num)), den_(P::constant(Tr::one())) {}  // NOLINT(google-explicit-constructor)
  RationalFn(P num, P den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error(ErrorCode::ZeroDenominator, "rational function with zero denominator");
    canonicalize();
  }

  const P& num() const { return num_; }
  const P& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  T operator()(const T& x) const {
    const T d = den_(x);
    if (Tr::is_zero(d)) throw Error(ErrorCode::ZeroDenominator, "evaluation at a pole");
    return num_(x) / d;
  }

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.num_.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero rational function");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  RationalFn operator-() const { return {-num_, den_}; }

  /// Equality as functions (cross multiplication).
  friend bool operator==(const RationalFn& a, const RationalFn& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

  template <class F>
  auto map(F&& f) const {
    using U = decltype(f(std::declval<T>()));
    return RationalFn<U>(num_.map(f), den_.map(f));
  }

 private:
  void canonicalize() {
    if constexpr (Tr::exact) {
      if (num_.is_zero()) {
        den_ = P::constant(Tr::one());
        return;
      }
      const P g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = P::divmod(num_, g).first;
        den_ = P::divmod(den_, g).first;
      }
    }
    const T lead = den_.leading();
    if (!(lead == Tr::one())) {
      const T inv = Tr::one() / lead;
      num_ = inv * num_;
      den_ = inv * den_;
    }
  }

  P num_;
  P den_;
};

using ExactRational = RationalFn<GaussianRational>;
using ComplexRational = RationalFn<Complex>;

inline ComplexRational to_complex(const ExactRational& r) { return {to_complex(r.num()), to_complex(r.den())}; }

/// u^d p(1/(q u)) as a polynomial, d >= deg p.
template <class T>
Poly<T> inversion_numerator(const Poly<T>& p, std::size_t d, const T& q) {
  return p.scale_argument(ScalarTraits<T>::one() / q).reversed(d);
}

/// u -> R(1/(q u)).
template <class T>
RationalFn<T> inversion_compose(const RationalFn<T>& r, long q) {
  if (q < 2) throw Error(ErrorCode::Unsupported, "inversion requires q >= 2");
  const T qq = ScalarTraits<T>::from_int(q);
  const auto dn = static_cast<std::size_t>(std::max(r.num().degree(), 0));
  const auto dd = static_cast<std::size_t>(std::max(r.den().degree(), 0));
  // num(1/(qu)) = u^{-dn} Ñ(u), den(1/(qu)) = u^{-dd} D̃(u)
  Poly<T> n = inversion_numerator(r.num(), dn, qq).shift_up(dd);
  Poly<T> d = inversion_numerator(r.den(), dd, qq).shift_up(dn);
  return {std::move(n), std::move(d)};
}

/// u -> conj(R(conj u)).
template <class T>
RationalFn<T> schwarz_conjugate(const RationalFn<T>& r) {
  return {r.num().conj(), r.den().conj()};
}

/// Truncated Taylor series c_0..c_m of R at u = 0. Errors: PoleAtOrigin.
template <class T>
std::vector<T> power_series(const RationalFn<T>& r, std::size_t m) {
  using Tr = ScalarTraits<T>;
  const T d0 = r.den()[0];
  if (Tr::is_zero(d0)) throw Error(ErrorCode::PoleAtOrigin, "denominator vanishes at u = 0");
  std::vector<T> c(m + 1, Tr::zero());
  for (std::size_t n = 0; n <= m; ++n) {
    T acc = r.num()[n];
    for (std::size_t k = 1; k <= n && k < r.den().coeffs().size(); ++k) acc = acc - r.den()[k] * c[n - k];
    c[n] = acc / d0;
  }
  return c;
}

/// b_1..b_m with u P'(u)/P(u) = sum b_n u^n, assuming P(0) != 0.
template <class T>
std::vector<T> log_derivative_poly(const Poly<T>& p, std::size_t m) {
  using Tr = ScalarTraits<T>;
  std::vector<T> b(m + 1, Tr::zero());
  const T p0 = p[0];
  for (std::size_t n = 1; n <= m; ++n) {
    T acc = p[n] * Tr::from_int(static_cast<long>(n));
    for (std::size_t k = 1; k < n && k < p.coeffs().size(); ++k) acc = acc - p[k] * b[n - k];
    b[n] = acc / p0;
  }
  return b;
}

/// a_1..a_m with u R'(u)/R(u) = sum a_n u^n (index 0 unused). Errors: PoleAtOrigin
/// when R(0) is 0 or infinite.
template <class T>
std::vector<T> log_derivative_coeffs(const RationalFn<T>& r, std::size_t m) {
  using Tr = ScalarTraits<T>;
  if (Tr::is_zero(r.num()[0]) || Tr::is_zero(r.den()[0])) {
    throw Error(ErrorCode::PoleAtOrigin, "log-derivative needs R(0) finite and nonzero");
  }
  auto a = log_derivative_poly(r.num(), m);
  const auto b = log_derivative_poly(r.den(), m);
  for (std::size_t n = 0; n <= m; ++n) a[n] = a[n] - b[n];
  return a;
}

}  // namespace ffzeta
