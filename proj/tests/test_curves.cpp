#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ffzeta/curves.hpp"

using namespace ffzeta;

namespace {

// Independent arithmetic in F_{p^2} = F_p[t]/(t^2 - nr), nr a non-residue.
struct Fp2 {
  long p, nr;
  long norm(long v) const { return ((v % p) + p) % p; }
  std::pair<long, long> mul(std::pair<long, long> a, std::pair<long, long> b) const {
    return {norm(a.first * b.first + nr * a.second * b.second), norm(a.first * b.second + a.second * b.first)};
  }
  std::pair<long, long> add(std::pair<long, long> a, std::pair<long, long> b) const {
    return {norm(a.first + b.first), norm(a.second + b.second)};
  }
};

// Affine solutions of y^2 = f(x) over F_{p^2} by double enumeration, plus
// the infinity count for odd degree.
long brute_force_quadratic_ext(long p, long nr, const std::vector<long>& f) {
  Fp2 k{p, nr};
  long count = 0;
  for (long a = 0; a < p; ++a)
    for (long b = 0; b < p; ++b) {
      std::pair<long, long> x{a, b}, acc{0, 0};
      for (std::size_t i = f.size(); i-- > 0;) acc = k.add(k.mul(acc, x), {k.norm(f[i]), 0});
      for (long c = 0; c < p; ++c)
        for (long d = 0; d < p; ++d)
          if (k.mul({c, d}, {c, d}) == acc) ++count;
    }
  return count + 1;
}

long brute_force_prime(long p, const std::vector<long>& f) {
  long count = 0;
  for (long x = 0; x < p; ++x) {
    long v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
    for (long y = 0; y < p; ++y)
      if ((y * y - v) % p == 0) ++count;
  }
  return count + 1;
}

}  // namespace

TEST_CASE("validation") {
  const auto f5 = make_field(5, 1);
  auto e = CurveSpec::elliptic(f5, 1, 1);
  auto v = validate_curve(e);
  CHECK(v.nonsingular);
  CHECK(v.genus == 1);

  try {
    validate_curve(CurveSpec::elliptic(f5, 0, 0));
    FAIL("expected SingularCurve");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::SingularCurve);
  }

  auto line = CurveSpec::projective_line(make_field(7, 1));
  CHECK(validate_curve(line).genus == 0);

  // x^5 + x + 1 = (x - 4)^2 (...) over F_7.
  const auto bad = inspect_curve(CurveSpec::hyperelliptic(make_field(7, 1), {1, 1, 0, 0, 0, 1}));
  CHECK_FALSE(bad.nonsingular);
  REQUIRE(bad.repeated_root.has_value());
  CHECK(*bad.repeated_root == 4);

  const auto good = validate_curve(CurveSpec::hyperelliptic(make_field(7, 1), {3, 1, 0, 0, 0, 1}));
  CHECK(good.genus == 2);

  CHECK_THROWS_AS(CurveSpec::elliptic(make_field(2, 1), 1, 1), Error);
  CHECK_THROWS_AS(CurveSpec::hyperelliptic(make_field(7, 1), {1, 0, 0, 1}), Error);
}

TEST_CASE("projective line counts") {
  const auto pc = count_series(CurveSpec::projective_line(make_field(3, 1)), 3);
  CHECK(pc.counts == std::vector<std::uint64_t>{4, 10, 28});
  CHECK(count_points(CurveSpec::projective_line(make_field(5, 1)), 2) == 26);
  CHECK(count_points(CurveSpec::projective_line(make_field(2, 3)), 2) == 65);
}

TEST_CASE("elliptic curve over F_5 against brute force") {
  const auto c = CurveSpec::elliptic(make_field(5, 1), 1, 1);
  CHECK(count_points(c, 1) == static_cast<std::uint64_t>(brute_force_prime(5, {1, 1, 0, 1})));
  CHECK(count_points(c, 1) == 9);
  CHECK(count_points(c, 2) == static_cast<std::uint64_t>(brute_force_quadratic_ext(5, 2, {1, 1, 0, 1})));
  CHECK(count_points(c, 2) == 27);
  CHECK(count_series(c, 1).counts == std::vector<std::uint64_t>{9});
}

TEST_CASE("genus 2 curve over F_7 against brute force") {
  const std::vector<long> f{3, 1, 0, 0, 0, 1};
  const auto c = CurveSpec::hyperelliptic(make_field(7, 1), {3, 1, 0, 0, 0, 1});
  CHECK(count_points(c, 1) == static_cast<std::uint64_t>(brute_force_prime(7, f)));
  CHECK(count_points(c, 2) == static_cast<std::uint64_t>(brute_force_quadratic_ext(7, 3, f)));
  try {
    count_series(c, 1);
    FAIL("expected TooFewCounts");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooFewCounts);
  }
}

TEST_CASE("even degree infinity rule") {
  // y^2 = x^6 + ... : two points at infinity when the leading coefficient is a square.
  const std::vector<long> sq{1, 0, 2, 0, 0, 0, 1};
  const std::vector<long> nsq{1, 0, 2, 0, 0, 0, 3};
  const auto k = make_field(7, 1);
  for (const auto& f : {sq, nsq}) {
    const auto c = CurveSpec::hyperelliptic(k, std::vector<std::int64_t>(f.begin(), f.end()));
    if (!inspect_curve(c).nonsingular) continue;
    const long affine = brute_force_prime(7, f) - 1;
    const long inf = f.back() == 1 ? 2 : 0;  // 3 is a non-residue mod 7
    CHECK(count_points(c, 1) == static_cast<std::uint64_t>(affine + inf));
    // Over F_49 every element of F_7 is a square.
    const long affine2 = brute_force_quadratic_ext(7, 3, f) - 1;
    CHECK(count_points(c, 2) == static_cast<std::uint64_t>(affine2 + 2));
  }
}

TEST_CASE("Weil window and extension monotonicity") {
  const auto c = CurveSpec::hyperelliptic(make_field(7, 1), {3, 1, 0, 0, 0, 1});
  const auto pc = count_series(c, 4);
  for (std::size_t n = 1; n <= pc.counts.size(); ++n) {
    const double qn = std::pow(7.0, static_cast<double>(n));
    CHECK(std::fabs(static_cast<double>(pc.counts[n - 1]) - (qn + 1)) <= 4 * std::sqrt(qn));
  }
  CHECK(pc.counts[0] <= pc.counts[1]);
  CHECK(pc.counts[1] <= pc.counts[3]);
}

TEST_CASE("curves over non-prime base fields") {
  // y^2 = x^3 + x + 1 over F_25 directly equals the n = 2 count over F_5.
  const auto c5 = CurveSpec::elliptic(make_field(5, 1), 1, 1);
  const auto c25 = CurveSpec::elliptic(make_field(5, 2), 1, 1);
  CHECK(count_points(c25, 1) == count_points(c5, 2));
  CHECK(count_points(c25, 2) == count_points(c5, 4));
}

TEST_CASE("curve-spec parsing") {
  const auto c = parse_curve_spec("# the test curve\np = 5\nmodel = elliptic\ncoefficients = [1, 1]\n");
  CHECK(c.genus() == 1);
  CHECK(count_points(c, 1) == 9);

  const auto h = parse_curve_spec("p = 7\nr = 1\nmodel = hyperelliptic\ncoefficients = [3, 1, 0, 0, 0, 1]\n");
  CHECK(h.genus() == 2);

  const auto ext = parse_curve_spec("p = 3\nr = 2\nmodel = elliptic\ncoefficients = [[0, 1], 2]\n");
  CHECK(ext.base().size() == 9);

  const auto line = parse_curve_spec("p = 2\nmodel = projective_line\n");
  CHECK(count_points(line, 3) == 9);

  auto expect_error = [](const std::string& text, std::size_t line, std::size_t col) {
    try {
      parse_curve_spec(text);
      FAIL("expected a parse error");
    } catch (const SpecParseError& e) {
      CHECK(e.where().line == line);
      CHECK(e.where().column == col);
    }
  };
  expect_error("p = 5\nmodl = elliptic\n", 2, 1);
  expect_error("p = 5\nmodel = elliptic\ncoefficients = [1, 1\n", 3, 21);
  expect_error("p = 6\nmodel = elliptic\ncoefficients = [1, 1]\n", 1, 5);
  expect_error("p = 5\nmodel = elliptic\n", 3, 1);
  expect_error("p = 5\np = 7\n", 2, 1);
  expect_error("p = 5\nmodel = conic\n", 2, 9);
}
