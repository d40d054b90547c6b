#pragma once

// Small numeric helpers shared by the floating-point modules.

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

namespace ffzeta {

inline constexpr double kPi = 3.14159265358979323846;

/// exp(z) - 1 without cancellation for small z.
inline std::complex<double> cexpm1(std::complex<double> z) {
  const double a = z.real(), b = z.imag();
  const double sb2 = std::sin(b / 2);
  const double re = std::expm1(a) * std::cos(b) - 2 * sb2 * sb2;
  const double im = std::exp(a) * std::sin(b);
  return {re, im};
}

inline std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string format_complex(std::complex<double> z) {
  return "(" + format_double(z.real()) + ", " + format_double(z.imag()) + ")";
}

/// Pairwise (cascade) summation over [begin, end).
template <class T>
T pairwise_sum(const T* data, std::size_t n) {
  if (n == 0) return T{};
  if (n <= 8) {
    T s = data[0];
    for (std::size_t i = 1; i < n; ++i) s += data[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(data, h) + pairwise_sum(data + h, n - h);
}

template <class T>
T pairwise_sum(const std::vector<T>& v) {
  return pairwise_sum(v.data(), v.size());
}

/// log(max(1, x))
inline double log_plus(double x) { return x > 1 ? std::log(x) : 0.0; }

}  // namespace ffzeta
