#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ffzeta/approx.hpp"
#include "ffzeta/curves.hpp"
#include "ffzeta/numeric.hpp"

using namespace ffzeta;

namespace {

ZetaFunction elliptic_f5() {
  return ZetaFunction(l_from_counts(count_series(CurveSpec::elliptic(make_field(5, 1), 1, 1), 1), 1));
}

ZetaFunction line_f2() { return ZetaFunction(l_from_counts(count_series(CurveSpec::projective_line(make_field(2, 1)), 1), 0)); }

ApproxProblem exp_problem(double step) {
  ApproxProblem p{parse_target("exp"), Disk{Complex(0), 1}, Disk{Complex(0), 2}, std::nullopt, step};
  return p;
}

}  // namespace

TEST_CASE("regions parse and round trip") {
  const auto d = parse_region("disk:0.5,-1,2");
  CHECK(std::get<Disk>(d).center == Complex(0.5, -1));
  CHECK(parse_region(to_string(d)).index() == 0);
  const auto r = parse_region("rect:-1,1,-2,2");
  CHECK(contains(r, Complex(0.5, 1.5)));
  CHECK_FALSE(contains(r, Complex(1.5, 0)));
  CHECK_THROWS_AS(parse_region("disk:0,0"), Error);
  CHECK_THROWS_AS(parse_region("rect:1,0,0,1"), Error);
  CHECK_THROWS_AS(parse_region("circle:0,0,1"), Error);
  CHECK(region_reach(Disk{Complex(0), 2}) == doctest::Approx(4));
  CHECK(region_reach(Disk{Complex(3), 1}) == doctest::Approx(4));
  CHECK(region_reach(Rect{0, 3, 0, 4}) == doctest::Approx(5));
}

TEST_CASE("choose_eta") {
  // q = 5: 2 pi / log 5 > 1, so rho_min = 1 and M = 4.
  CHECK(choose_eta(5, Disk{Complex(0), 2}) == doctest::Approx(0.125));
  CHECK(choose_eta(5, Disk{Complex(0), 0.01}) == 1.0);
  const double rho = 2 * kPi / std::log(1000.0);
  CHECK(choose_eta(1000, Disk{Complex(0), 2}) == doctest::Approx(std::min(1.0, rho) / 8));
}

TEST_CASE("residue constant") {
  const auto g0 = residue_a(line_f2(), 1.0);
  CHECK(std::abs(g0.a - Complex(-kPi / std::log(2.0))) < 1e-8);
  const auto zf = elliptic_f5();
  for (double eta : {1.0, 0.125, 0.01}) {
    const auto r = residue_a(zf, eta);
    const Complex expect = -kPi * 2.25 / (std::log(5.0) * eta);
    CHECK(std::abs(r.a - expect) / std::abs(expect) < 1e-8);
  }
  CHECK(std::abs(residue_a(zf, 0.5).a - 2.0 * residue_a(zf, 1.0).a) < 1e-8);
  CHECK_THROWS_AS(residue_a(zf, 0.0), Error);
}

TEST_CASE("cutoff derivative matches finite differences") {
  CHECK(Cutoff::step(0) == 0);
  CHECK(Cutoff::step(1) == 1);
  CHECK(Cutoff::step(0.5) == doctest::Approx(0.5));
  const double hstep = 1e-6;
  for (double t : {0.1, 0.3, 0.5, 0.77, 0.95}) {
    const double fd = (Cutoff::step(t + hstep) - Cutoff::step(t - hstep)) / (2 * hstep);
    CHECK(std::abs(fd - Cutoff::step_derivative(t)) < 1e-6);
  }
  const Cutoff disk(Disk{Complex(0.2, 0), 1}, Disk{Complex(0), 2}, 0.05);
  const Cutoff rect(Rect{-1, 1, -1, 1}, Rect{-2, 2, -1.5, 1.5}, 0.05);
  for (const auto* c : {&disk, &rect}) {
    CHECK(c->chi(Complex(0.1, 0.1)) == 1.0);
    CHECK(c->chi(Complex(1.95, 1.45)) < 1e-6);
    for (Complex s : {Complex(1.3, 0.2), Complex(-0.4, 1.2), Complex(1.1, -1.1), Complex(-1.5, 0.3)}) {
      const double dx = (c->chi(s + hstep) - c->chi(s - hstep)) / (2 * hstep);
      const double dy = (c->chi(s + Complex(0, hstep)) - c->chi(s - Complex(0, hstep))) / (2 * hstep);
      const Complex fd = 0.5 * Complex(dx, dy);
      INFO(s);
      CHECK(std::abs(fd - c->dbar(s)) < 1e-6);
    }
  }
  CHECK_THROWS_AS(Cutoff(Disk{Complex(0), 1}, Disk{Complex(0), 1.05}, 0.05), Error);
  CHECK_THROWS_AS(Cutoff(Disk{Complex(0), 1}, Disk{Complex(1.5), 2}, 0.05), Error);
  CHECK_THROWS_AS(Cutoff(Disk{Complex(0), 1}, Rect{-2, 2, -2, 2}, 0.05), Error);
}

TEST_CASE("targets") {
  CHECK(parse_target("sq").fn(Complex(0, 2)) == Complex(-4));
  CHECK(parse_target("poly:1,0,i").fn(Complex(2)) == Complex(1, 4));
  CHECK(std::abs(parse_target("sin").fn(Complex(1)) - std::sin(1.0)) < 1e-15);
  CHECK_THROWS_AS(parse_target("tan"), Error);
  CHECK_THROWS_AS(parse_target("poly:1,inf"), Error);
}

TEST_CASE("audit points") {
  const auto pts = audit_points(Disk{Complex(1, 1), 0.5});
  CHECK(pts.size() == 256);
  std::size_t on_boundary = 0;
  for (const auto& s : pts) {
    CHECK(contains(Disk{Complex(1, 1), 0.5 + 1e-12}, s));
    if (std::abs(std::abs(s - Complex(1, 1)) - 0.5) < 1e-12) ++on_boundary;
  }
  CHECK(on_boundary >= 128);
  CHECK(audit_points(Rect{0, 1, 0, 2}).size() == 256);
}

TEST_CASE("zero target gives zero sum") {
  ApproxProblem p = exp_problem(0.1);
  p.target = parse_target("zero");
  const auto ts = approximate(elliptic_f5(), p);
  CHECK(ts.terms.empty());
  CHECK(ts.sup_error == 0.0);
}

TEST_CASE("exp on the unit disk converges") {
  const auto zf = elliptic_f5();
  const auto study = convergence_study(zf, exp_problem(0.1), 3);
  for (std::size_t i = 0; i < study.errors.size(); ++i) MESSAGE("delta ", study.steps[i], " error ", study.errors[i]);
  MESSAGE("alt eta error ", study.alt_error);
  CHECK(study.eta == doctest::Approx(0.125));
  REQUIRE(study.contractions.size() == 2);
  for (double c : study.contractions) CHECK(c >= 1.8);
  CHECK(study.errors.back() <= 0.05);
  // eta enters only through the sum; the error must not move by more than the grid error
  CHECK(std::abs(study.alt_error - study.errors.back()) <= std::max(0.5 * study.errors.back(), 1e-3));
}

TEST_CASE("translate sum agrees with the Cauchy-Pompeiu sum") {
  const auto zf = elliptic_f5();
  ApproxProblem p = exp_problem(0.05);
  p.target = parse_target("sq");
  const auto ts = approximate(zf, p);
  CHECK(ts.sup_error < 0.05);
  CHECK(std::abs(ts.sup_error - ts.cauchy_pompeiu_error) < 0.5 * ts.cauchy_pompeiu_error + 1e-6);
  const auto& c = ts.audit.back();
  CHECK(c.s == Complex(0));
  CHECK(c.error <= ts.sup_error);
}

TEST_CASE("rectangles") {
  const auto zf = elliptic_f5();
  ApproxProblem p{parse_target("cos"), Rect{-0.5, 0.5, -0.5, 0.5}, Rect{-1.5, 1.5, -1.5, 1.5}, std::nullopt, 0.05};
  const auto ts = approximate(zf, p);
  MESSAGE("rect error ", ts.sup_error);
  CHECK(ts.sup_error < 0.1);
}

TEST_CASE("eta that admits poles is rejected") {
  ApproxProblem p = exp_problem(0.1);
  p.eta = 1.0;
  CHECK_THROWS_AS(approximate(elliptic_f5(), p), Error);
}
