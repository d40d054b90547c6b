#include "ffzeta/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>

namespace ffzeta {

namespace {

using LComplex = std::complex<long double>;
constexpr double kPi = 3.14159265358979323846;

// Upper convex hull of (k, log|c_k|) gives the moduli of the root groups.
std::vector<Complex> initial_guesses(const std::vector<Complex>& c) {
  const std::size_t n = c.size() - 1;
  std::vector<std::size_t> idx;
  std::vector<double> lg(c.size());
  for (std::size_t k = 0; k <= n; ++k) {
    lg[k] = std::abs(c[k]) > 0 ? std::log(std::abs(c[k])) : -std::numeric_limits<double>::infinity();
  }
  for (std::size_t k = 0; k <= n; ++k) {
    if (!std::isfinite(lg[k])) continue;
    while (idx.size() >= 2) {
      const std::size_t a = idx[idx.size() - 2], b = idx.back();
      const double cross = (static_cast<double>(b) - a) * (lg[k] - lg[a]) - (lg[b] - lg[a]) * (static_cast<double>(k) - a);
      if (cross >= 0) {
        idx.pop_back();
      } else {
        break;
      }
    }
    idx.push_back(k);
  }
  std::vector<Complex> z;
  z.reserve(n);
  const double sigma = 0.7;
  for (std::size_t e = 0; e + 1 < idx.size(); ++e) {
    const std::size_t i = idx[e], j = idx[e + 1];
    const auto m = static_cast<double>(j - i);
    const double radius = std::exp((lg[i] - lg[j]) / m);
    for (std::size_t l = 0; l < j - i; ++l) {
      const double theta = 2 * kPi * static_cast<double>(l) / m + 2 * kPi * static_cast<double>(e) / static_cast<double>(n) + sigma;
      z.push_back(std::polar(radius, theta));
    }
  }
  return z;
}

template <class C>
void horner_with_derivative(const std::vector<C>& c, C z, C& p, C& dp) {
  p = c.back();
  dp = C(0);
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[i];
  }
}

double backward_error(const std::vector<Complex>& c, Complex z) {
  Complex p = c.back();
  double scale = std::abs(c.back());
  const double az = std::abs(z);
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    p = p * z + c[i];
    scale = scale * az + std::abs(c[i]);
  }
  return scale > 0 ? std::abs(p) / scale : 0.0;
}

std::vector<Complex> aberth(const std::vector<Complex>& c, const RootOptions& opt) {
  const std::size_t n = c.size() - 1;
  std::vector<Complex> z = initial_guesses(c);
  std::vector<bool> done(n, false);
  const double eps = std::numeric_limits<double>::epsilon();
  for (int it = 0; it < opt.max_iter; ++it) {
    bool all = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      Complex p, dp;
      horner_with_derivative(c, z[i], p, dp);
      if (p == Complex(0)) {
        done[i] = true;
        continue;
      }
      const Complex ratio = p / dp;
      Complex sum = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      }
      Complex w = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = ratio;
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
        done[i] = true;
        continue;
      }
      z[i] -= w;
      if (std::abs(w) <= 4 * eps * std::abs(z[i])) {
        done[i] = true;
      } else {
        all = false;
      }
    }
    if (all) break;
  }
  for (const auto& zi : z) {
    if (!std::isfinite(zi.real()) || !std::isfinite(zi.imag()) || backward_error(c, zi) > opt.tol) {
      throw Error(ErrorCode::NonConvergence, "root iteration did not converge within " + std::to_string(opt.max_iter) + " steps");
    }
  }
  return z;
}

// Newton on the (m-1)-th derivative; a root of multiplicity m is a simple root there.
Complex polish(const std::vector<Complex>& c, Complex z0, unsigned m, double radius) {
  std::vector<LComplex> d(c.begin(), c.end());
  for (unsigned k = 1; k < m; ++k) {
    std::vector<LComplex> next;
    for (std::size_t i = 1; i < d.size(); ++i) next.push_back(d[i] * static_cast<long double>(i));
    d = std::move(next);
  }
  if (d.size() < 2) return z0;
  LComplex z(z0.real(), z0.imag());
  for (int it = 0; it < 8; ++it) {
    LComplex p, dp;
    horner_with_derivative(d, z, p, dp);
    if (dp == LComplex(0)) break;
    const LComplex step = p / dp;
    z -= step;
    if (std::abs(step) <= 1e-18L * std::max(1.0L, std::abs(z))) break;
  }
  const Complex out(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  if (std::abs(out - z0) > radius * std::max(1.0, std::abs(z0))) return z0;
  return out;
}

}  // namespace

std::vector<Root> roots(const ComplexPoly& p, const RootOptions& opt) {
  if (p.is_zero()) throw Error(ErrorCode::Unsupported, "roots of the zero polynomial");
  std::vector<Root> out;
  const std::size_t zeros = p.low_order();
  const ComplexPoly core = p.shift_down(zeros);
  if (zeros > 0) out.push_back({Complex(0), static_cast<unsigned>(zeros)});
  if (core.degree() < 1) return out;

  std::vector<Complex> c = core.coeffs();
  const Complex lead = c.back();
  for (auto& x : c) x /= lead;
  const double radius = opt.cluster_radius > 0 ? opt.cluster_radius : 10 * opt.tol;

  std::vector<Complex> z;
  if (c.size() == 2) {
    z.push_back(-c[0]);
  } else {
    z = aberth(c, opt);
  }

  // Union-find clustering of nearby approximations.
  std::vector<std::size_t> parent(z.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      const double scale = std::max(1.0, std::max(std::abs(z[i]), std::abs(z[j])));
      if (std::abs(z[i] - z[j]) <= radius * scale) parent[find(i)] = find(j);
    }
  }
  std::vector<std::vector<std::size_t>> groups(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) groups[find(i)].push_back(i);
  for (const auto& g : groups) {
    if (g.empty()) continue;
    Complex centre = 0;
    for (auto i : g) centre += z[i];
    centre /= static_cast<double>(g.size());
    const auto m = static_cast<unsigned>(g.size());
    out.push_back({polish(c, centre, m, radius), m});
  }
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
    const double ma = std::abs(a.value), mb = std::abs(b.value);
    if (ma != mb) return ma < mb;
    return std::arg(a.value) < std::arg(b.value);
  });
  return out;
}

std::vector<Root> roots(const ExactPoly& p, const RootOptions& opt) { return roots(to_complex(p), opt); }

std::vector<Complex> flatten(const std::vector<Root>& rs) {
  std::vector<Complex> out;
  for (const auto& r : rs) out.insert(out.end(), r.multiplicity, r.value);
  return out;
}

ComplexPoly from_roots(const std::vector<Complex>& zs, Complex lead) {
  ComplexPoly p = ComplexPoly::constant(lead);
  for (const auto& z : zs) p = p * ComplexPoly::linear(z);
  return p;
}

}  // namespace ffzeta
