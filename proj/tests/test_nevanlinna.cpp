#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "ffzeta/nevanlinna.hpp"
#include "ffzeta/numeric.hpp"

using namespace ffzeta;

namespace {

ZetaFunction line_f2() { return ZetaFunction(l_from_counts(count_series(CurveSpec::projective_line(make_field(2, 1)), 1), 0)); }

ZetaFunction elliptic_f5() {
  return ZetaFunction(l_from_counts(count_series(CurveSpec::elliptic(make_field(5, 1), 1, 1), 1), 1));
}

ZetaFunction genus2_f7() {
  return ZetaFunction(l_from_counts(count_series(CurveSpec::hyperelliptic(make_field(7, 1), {3, 1, 0, 0, 0, 1}), 2), 2));
}

ExtendedComplex val(double re, double im = 0) { return {Complex(re, im), false}; }

// Brute-force lattice count: walk a generous window of branches for each u-root.
unsigned long brute_count(const std::vector<Complex>& us, std::uint64_t q, double r) {
  const double lq = std::log(static_cast<double>(q));
  unsigned long n = 0;
  for (const auto& w : us) {
    const Complex logw = std::log(w);
    for (long m = -100000; m <= 100000; ++m) {
      const Complex s = -(logw + Complex(0, 2 * kPi * static_cast<double>(m))) / lq;
      if (std::abs(s) <= r) ++n;
    }
  }
  return n;
}

}  // namespace

TEST_CASE("extended complex parsing") {
  CHECK(ExtendedComplex::parse("inf").infinite);
  CHECK(ExtendedComplex::parse("2").value == Complex(2));
  CHECK(ExtendedComplex::parse("i").value == Complex(0, 1));
  CHECK(ExtendedComplex::parse("1-2i").value == Complex(1, -2));
  CHECK(ExtendedComplex::parse("-1.5e-1+3i").value == Complex(-0.15, 3));
  CHECK_THROWS_AS(ExtendedComplex::parse("abc"), Error);
  CHECK(ExtendedComplex::parse(val(1, -2).to_string()).value == Complex(1, -2));
}

TEST_CASE("alpha points of the elliptic zeta function") {
  const auto f = MeromorphicFn::from_zeta(elliptic_f5());
  const auto aps = alpha_points(f, val(2));
  REQUIRE(aps.k() == 2);
  // 1 + 3u + 5u^2 - 2(1-u)(1-5u) = -1 + 15u - 5u^2
  const double d = std::sqrt(225.0 - 20.0);
  std::vector<double> expect{(15 - d) / 10, (15 + d) / 10};
  std::vector<double> got;
  for (const auto& r : aps.u_roots) {
    CHECK(std::fabs(r.value.imag()) < 1e-12);
    got.push_back(r.value.real());
  }
  std::sort(got.begin(), got.end());
  CHECK(got[0] == doctest::Approx(expect[0]).epsilon(1e-12));
  CHECK(got[1] == doctest::Approx(expect[1]).epsilon(1e-12));
  CHECK(got[0] == doctest::Approx(0.0682).epsilon(1e-3));
  CHECK(got[1] == doctest::Approx(2.932).epsilon(1e-3));
  CHECK(aps.max_residual < 1e-13);

  const auto poles = alpha_points(f, ExtendedComplex::infinity());
  auto pts = poles.s_points(1);
  REQUIRE(pts.size() == 2);
  std::sort(pts.begin(), pts.end(), [](auto& a, auto& b) { return a.s.real() < b.s.real(); });
  CHECK(std::abs(pts[0].s) < 1e-15);
  CHECK(std::abs(pts[1].s - Complex(1)) < 1e-15);

  CHECK_THROWS_AS(alpha_points(MeromorphicFn::constant(2), val(2)), Error);
}

TEST_CASE("small roots of a wide-range numerator are kept") {
  // double roots at +-1/6400 and +-1280: the constant term is about 1e-15 of the largest
  const double a = 1.0 / 6400, b = 1280;
  const auto num = from_roots({a, a, -a, -a, b, b, -b, -b}, Complex(1));
  const ComplexPoly den{Complex(1), Complex(-6), Complex(5)};
  const auto f = MeromorphicFn::of_u(5, ComplexRational(num, den));
  const auto aps = alpha_points(f, val(0));
  CHECK(aps.k() == 8);
  for (const auto& z : aps.u_roots) CHECK(std::min(std::abs(std::abs(z.value) - a) / a, std::abs(std::abs(z.value) - b) / b) < 1e-6);
}

TEST_CASE("genus 0 has no zeros") {
  const auto f = MeromorphicFn::from_zeta(line_f2());
  const auto aps = alpha_points(f, val(0));
  CHECK(aps.k() == 0);
  for (double r : {1.0, 10.0, 1000.0}) {
    CHECK(counting_n(aps, r) == 0);
    CHECK(integrated_N(aps, r) == 0);
  }
}

TEST_CASE("lattice counts against brute force and the argument principle") {
  const auto e = MeromorphicFn::from_zeta(elliptic_f5());
  const auto l = MeromorphicFn::from_zeta(line_f2());
  const auto g2 = MeromorphicFn::from_zeta(genus2_f7());
  struct Case {
    const MeromorphicFn* f;
    ExtendedComplex a;
  };
  const std::vector<Case> cases{{&e, val(2)}, {&e, val(0)}, {&e, ExtendedComplex::infinity()}, {&l, val(1, 1)},
                                {&g2, val(0)}, {&g2, val(-3, 0.5)}, {&e, val(1)}};
  for (const auto& c : cases) {
    const auto aps = alpha_points(*c.f, c.a);
    for (double r : {0.5, 3.0, 7.3, 12.0}) {
      const auto n = counting_n(aps, r);
      CHECK(n == static_cast<unsigned long>(argument_principle_count(*c.f, c.a, r)));
    }
    std::vector<Complex> us;
    for (const auto& w : aps.u_roots)
      for (unsigned k = 0; k < w.multiplicity; ++k) us.push_back(w.value);
    CHECK(counting_n(aps, 100) == brute_count(us, c.f->q(), 100));
  }
  // Lattice density: two points per period in each of two directions.
  const auto aps = alpha_points(e, val(2));
  CHECK(counting_n(aps, 100) == 102);
  const double r = 500 * 2 * kPi / std::log(5.0);
  const double ratio = counting_n(aps, r) * kPi / (2 * std::log(5.0) * r);
  CHECK(ratio == doctest::Approx(1).epsilon(0.02));
}

TEST_CASE("Jensen: N(r,0) of an entire function from the boundary mean") {
  // L(u) for the elliptic curve is entire in s and L(1) = 9 at s = 0.
  const auto zf = elliptic_f5();
  const auto L = MeromorphicFn::of_u(5, ComplexRational(zf.L().complex_poly()));
  const auto aps = alpha_points(L, val(0));
  for (double r : {0.7, 4.0, 25.0}) {
    const std::size_t nodes = 1 << 17;
    std::vector<double> v;
    for (std::size_t j = 0; j < nodes; ++j) v.push_back(L.log_abs(std::polar(r, 2 * kPi * (j + 0.5) / nodes)));
    const double mean = pairwise_sum(v) / nodes;
    CHECK(integrated_N(aps, r) == doctest::Approx(mean - std::log(9.0)).epsilon(1e-7));
  }
}

TEST_CASE("proximity and characteristic") {
  const auto two = MeromorphicFn::constant(2);
  for (double r : {0.5, 10.0, 300.0}) {
    CHECK(proximity_m(two, r).value == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(characteristic_T(two, r).T == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  }
  const auto z0 = MeromorphicFn::from_zeta(line_f2());
  const auto m = proximity_m(z0, 10);
  CHECK(std::isfinite(m.value));
  CHECK(m.value >= 0);
  CHECK(m.error < 1e-6);

  // A pole exactly on the circle: s = 1 with r = 1.
  const auto e = MeromorphicFn::from_zeta(elliptic_f5());
  const auto mp = proximity_m(e, 1.0);
  CHECK(std::isfinite(mp.value));

  // log space agrees with direct evaluation where the latter is safe.
  for (Complex s : {Complex(0.3, 2), Complex(-3, 1), Complex(4, -7)}) {
    CHECK(e.log_abs(s) == doctest::Approx(std::log(std::abs(e(s)))).epsilon(1e-10));
  }
  // Deep in the left half plane direct evaluation overflows; log space does not.
  CHECK(std::fabs(e.log_abs(Complex(-800, 3))) < 1e-12);
  const auto L = MeromorphicFn::of_u(5, ComplexRational(elliptic_f5().L().complex_poly()));
  CHECK(L.log_abs(Complex(-800, 3)) == doctest::Approx(1600 * std::log(5.0) + std::log(5.0)).epsilon(1e-12));
}

TEST_CASE("type matches the lattice density degree * log q / pi") {
  const auto grid = log_grid(10, 1000, 10);
  const auto e = MeromorphicFn::from_zeta(elliptic_f5());
  const auto te = estimate_type(e, grid);
  CHECK(te.target == doctest::Approx(2 * std::log(5.0) / kPi));
  CHECK(te.type == doctest::Approx(te.target).epsilon(0.05));
  const auto l = MeromorphicFn::from_zeta(line_f2());
  const auto tl = estimate_type(l, grid);
  CHECK(tl.target == doctest::Approx(2 * std::log(2.0) / kPi));
  CHECK(tl.type == doctest::Approx(tl.target).epsilon(0.05));
}

TEST_CASE("order") {
  const auto grid = log_grid(10, 1000, 10);
  for (const auto& zf : {line_f2(), elliptic_f5(), genus2_f7()}) {
    const auto o = estimate_order(MeromorphicFn::from_zeta(zf), grid);
    CHECK(o.order == doctest::Approx(1).epsilon(0.02));
    CHECK(o.lower_order > 0.9);
  }
  const auto rat = MeromorphicFn::of_s(ComplexRational(ComplexPoly::constant(1.0), ComplexPoly{Complex(-5), Complex(1)}));
  CHECK(estimate_order(rat, grid).order < 0.3);
  CHECK_THROWS_AS(estimate_order(rat, log_grid(10, 500)), Error);
}

TEST_CASE("deficiencies") {
  const auto grid = log_grid(10, 1000, 10);
  const auto l = MeromorphicFn::from_zeta(line_f2());
  CHECK(estimate_deficiency(l, val(0), grid) == 1.0);
  CHECK(deficiency_target(l, val(0)) == 1.0);

  const auto e = MeromorphicFn::from_zeta(elliptic_f5());
  // Z - 1 = 9u / ((1-u)(1-5u)): the value 1 has no finite s-point.
  CHECK(alpha_points(e, val(1)).k() == 0);
  CHECK(deficiency_target(e, val(1)) == 1.0);
  CHECK(estimate_deficiency(e, val(1), grid) == 1.0);
  CHECK(estimate_deficiency(e, val(2), grid) == doctest::Approx(0).epsilon(0.05).scale(1));

  const auto g2 = MeromorphicFn::from_zeta(genus2_f7());
  CHECK(deficiency_target(g2, ExtendedComplex::infinity()) == 0.5);
  CHECK(estimate_deficiency(g2, ExtendedComplex::infinity(), grid) == doctest::Approx(0.5).epsilon(0.1));
  CHECK(deficiency_target(g2, val(1)) == 0.25);
}

TEST_CASE("max heuristic stays in a logarithmic band") {
  for (const auto& zf : {line_f2(), elliptic_f5(), genus2_f7()}) {
    const auto f = MeromorphicFn::from_zeta(zf);
    for (double r : log_grid(10, 1000, 5)) {
      const double diff = std::fabs(characteristic_T(f, r).T - max_heuristic_T(zf, r));
      CHECK(diff / std::log(r) <= 10);
    }
  }
}

TEST_CASE("inequality ledger") {
  const auto zf = elliptic_f5();
  const auto e = MeromorphicFn::from_zeta(zf);
  const auto shifted = e.shifted(Complex(0, 2 * kPi / std::log(5.0)));
  CHECK(std::abs(shifted(Complex(0.3, 0.2)) - e(Complex(0.3, 0.2))) < 1e-10);

  const auto two = MeromorphicFn::constant(2);
  const auto prod = two * two;
  CHECK(characteristic_T(prod, 5).T == doctest::Approx(std::log(4.0)));

  const auto l = MeromorphicFn::from_zeta(line_f2());
  const std::vector<double> rs{2, 5, 10, 30, 100, 300};
  const auto ledger = inequality_suite({e, shifted, two}, rs);
  for (const auto& entry : ledger.entries) {
    INFO(entry.id << " " << entry.detail << " " << entry.lhs << " <= " << entry.rhs);
    CHECK(entry.pass);
  }
  CHECK(ledger.all_pass());
  CHECK(std::any_of(ledger.entries.begin(), ledger.entries.end(), [](auto& x) { return x.id == "order.product"; }));

  const auto ledger2 = inequality_suite({l, MeromorphicFn::from_zeta(genus2_f7())}, rs);
  CHECK(ledger2.all_pass());
  CHECK_THROWS_AS(l + e, Error);
}

TEST_CASE("report") {
  const auto e = MeromorphicFn::from_zeta(elliptic_f5());
  const auto grid = log_grid(1, 100, 10);
  const auto rep = nevanlinna_report(e, default_probe_set(), grid);
  CHECK(rep.monotone);
  CHECK(rep.rows.size() == grid.size() * 5);
  for (const auto& row : rep.rows) {
    CHECK(row.N >= 0);
    CHECK(std::isfinite(row.m));
    CHECK(std::isfinite(row.T));
  }
  CHECK(rep.deficiency_sum <= 2.1);
  CHECK(rep.order.order == doctest::Approx(1).epsilon(0.05));
}
