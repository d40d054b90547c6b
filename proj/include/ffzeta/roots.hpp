#pragma once

// Polynomial roots by simultaneous (Aberth) iteration with multiplicity
// clustering.

#include <vector>

#include "ffzeta/poly.hpp"

namespace ffzeta {

struct RootOptions {
  /// Accepted backward error |p(z)| / sum |c_k| |z|^k.
  double tol = 1e-7;
  /// Roots closer than this (relative to max(1, |z|)) merge into one cluster;
  /// 0 means 10 * tol.
  double cluster_radius = 0.0;
  int max_iter = 200;
};

struct Root {
  Complex value;
  unsigned multiplicity = 1;
};

/// All roots of p with multiplicities summing to deg p, sorted by modulus
/// then argument. Exact zero roots are reported as 0. Degree 0 gives none.
/// Errors: NonConvergence, Unsupported for the zero polynomial.
std::vector<Root> roots(const ComplexPoly& p, const RootOptions& opt = {});
std::vector<Root> roots(const ExactPoly& p, const RootOptions& opt = {});

/// Roots repeated according to multiplicity.
std::vector<Complex> flatten(const std::vector<Root>& rs);

/// lead * prod (u - z_i)
ComplexPoly from_roots(const std::vector<Complex>& zs, Complex lead = 1.0);

}  // namespace ffzeta
