#pragma once

// The two scalar kinds used by the polynomial kernel: exact Gaussian
// rationals (Q(i) with GMP big rationals) and complex doubles.

#include <gmpxx.h>

#include <complex>
#include <string>

namespace ffzeta {

using Complex = std::complex<double>;
using Rational = mpq_class;
using Integer = mpz_class;

/// a + b i with a, b exact rationals.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(int v) : re_(v), im_(0) {}   // NOLINT(google-explicit-constructor)
  GaussianRational(const Rational& re) : re_(re), im_(0) { re_.canonicalize(); }  // NOLINT
  GaussianRational(const Integer& re) : re_(re), im_(0) {}                        // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return Rational(re_ * re_ + im_ * im_); }
  Complex to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// "a" for real values, otherwise "a+bi" with each part as "n" or "n/d".
  std::string to_string() const;
  static GaussianRational parse(const std::string& text);
  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_;
  Rational im_;
};

/// Uniform access for the template kernel.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<GaussianRational> {
  static constexpr bool exact = true;
  static GaussianRational zero() { return {}; }
  static GaussianRational one() { return GaussianRational(1); }
  static bool is_zero(const GaussianRational& x) { return x.is_zero(); }
  static GaussianRational conj(const GaussianRational& x) { return x.conj(); }
  static Complex to_complex(const GaussianRational& x) { return x.to_complex(); }
  static GaussianRational from_int(long v) { return GaussianRational(v); }
  static double magnitude(const GaussianRational& x) { return std::abs(x.to_complex()); }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static bool is_zero(const Complex& x) { return x == Complex(0.0, 0.0); }
  static Complex conj(const Complex& x) { return std::conj(x); }
  static Complex to_complex(const Complex& x) { return x; }
  static Complex from_int(long v) { return {static_cast<double>(v), 0.0}; }
  static double magnitude(const Complex& x) { return std::abs(x); }
};

/// Best rational approximations of x (continued-fraction convergents) with
/// denominators up to max_den.
std::vector<Rational> convergents(double x, const Integer& max_den);

}  // namespace ffzeta
