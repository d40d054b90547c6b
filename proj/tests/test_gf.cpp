#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "ffzeta/gf.hpp"

using namespace ffzeta;

namespace {

// F_9 as pairs (a, b) = a + b x with x^2 = -1, written out by hand.
struct F9 {
  int a, b;
};
F9 mul9(F9 u, F9 v) { return {((u.a * v.a - u.b * v.b) % 3 + 3) % 3, (u.a * v.b + u.b * v.a) % 3}; }

FieldElement from_pair(const FiniteField& k, int a, int b) {
  const std::int64_t c[2] = {a, b};
  return k.element(c);
}

}  // namespace

TEST_CASE("make_field picks the documented moduli") {
  const auto f5 = make_field(5, 1);
  CHECK(f5.size() == 5);
  CHECK(f5.modulus() == std::vector<std::uint32_t>{0, 1});

  const auto f9 = make_field(3, 2);
  CHECK(f9.size() == 9);
  CHECK(f9.modulus() == std::vector<std::uint32_t>{1, 0, 1});

  // Smallest irreducible cubic over F_2 in the high-coefficient-first order.
  CHECK(make_field(2, 3).modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
}

TEST_CASE("make_field errors") {
  CHECK_THROWS_AS(make_field(4, 1), Error);
  try {
    make_field(4, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPrime);
  }
  try {
    make_field(5, 0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeZero);
  }
  try {
    make_field(3, 20);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
  CHECK_NOTHROW(make_field(3, 20, FieldLimits{std::uint64_t{1} << 32}));
}

TEST_CASE("prime field arithmetic") {
  const auto k = make_field(5, 1);
  CHECK(k.from_int(2) + k.from_int(4) == k.from_int(1));
  CHECK(k.from_int(3).inv() == k.from_int(2));
  CHECK(k.from_int(-1) == k.from_int(4));
  CHECK(k.from_int(3) / k.from_int(4) == k.from_int(2));
  CHECK_THROWS_AS(k.zero().inv(), Error);
}

TEST_CASE("F_9 multiplication matches the hand table") {
  const auto k = make_field(3, 2);
  const auto x = k.generator();
  CHECK(x * x == k.from_int(2));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          const F9 w = mul9({a, b}, {c, d});
          CHECK(from_pair(k, a, b) * from_pair(k, c, d) == from_pair(k, w.a, w.b));
        }
}

TEST_CASE("mixing fields is rejected") {
  const auto a = make_field(5, 1).one();
  const auto b = make_field(7, 1).one();
  try {
    (void)(a + b);
    FAIL("expected FieldMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldMismatch);
  }
}

TEST_CASE("a^(q-1) = 1 and enumeration is a bijection") {
  for (auto [p, r] : std::vector<std::pair<int, unsigned>>{{2, 1}, {2, 5}, {3, 3}, {5, 2}, {7, 2}, {2, 12}, {13, 1}, {4093, 1}}) {
    const auto k = make_field(p, r);
    std::set<std::uint64_t> seen;
    for (const auto& a : k.elements()) {
      seen.insert(a.index());
      if (!a.is_zero()) REQUIRE(a.pow(k.size() - 1) == k.one());
    }
    CHECK(seen.size() == k.size());
  }
}

TEST_CASE("Frobenius is an automorphism fixing exactly F_p") {
  for (auto [p, r] : std::vector<std::pair<int, unsigned>>{{2, 10}, {3, 4}, {5, 3}, {31, 2}}) {
    const auto k = make_field(p, r);
    const auto elems = k.elements();
    std::set<std::uint64_t> image;
    std::size_t fixed = 0;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      const auto& a = elems[i];
      const auto& b = elems[(i * 7 + 3) % elems.size()];
      REQUIRE((a * b).frobenius() == a.frobenius() * b.frobenius());
      REQUIRE((a + b).frobenius() == a.frobenius() + b.frobenius());
      image.insert(a.frobenius().index());
      if (a.frobenius() == a) ++fixed;
    }
    CHECK(image.size() == k.size());
    CHECK(fixed == static_cast<std::size_t>(p));
  }
}

TEST_CASE("extend gives an embedding") {
  const auto f5 = make_field(5, 1);
  const auto same = extend(f5, 1);
  CHECK(same.field.size() == 5);
  CHECK(same.embedding(f5.from_int(3)) == same.field.from_int(3));

  const auto e = extend(f5, 2);
  CHECK(e.field.size() == 25);
  const auto two = e.embedding(f5.from_int(2));
  CHECK(two * two == e.embedding(f5.from_int(4)));

  const auto f9 = make_field(3, 2);
  const auto e3 = extend(f9, 3);
  CHECK(e3.field.size() == 729);
  const auto elems = f9.elements();
  std::set<std::uint64_t> images;
  for (const auto& a : elems) {
    images.insert(e3.embedding(a).index());
    for (const auto& b : elems) {
      REQUIRE(e3.embedding(a * b) == e3.embedding(a) * e3.embedding(b));
      REQUIRE(e3.embedding(a + b) == e3.embedding(a) + e3.embedding(b));
    }
  }
  CHECK(images.size() == 9);

  try {
    extend(make_field(3, 1), 20);
    FAIL("expected CapExceeded");
  } catch (const Error& e2) {
    CHECK(e2.code() == ErrorCode::CapExceeded);
  }
}

TEST_CASE("square roots") {
  const auto k = make_field(5, 1);
  auto r4 = k.square_roots(k.from_int(4));
  REQUIRE(r4.size() == 2);
  std::set<std::uint64_t> s{r4[0].index(), r4[1].index()};
  CHECK(s == std::set<std::uint64_t>{2, 3});
  CHECK(k.square_roots(k.from_int(3)).empty());
  auto r0 = k.square_roots(k.zero());
  REQUIRE(r0.size() == 1);
  CHECK(r0[0].is_zero());

  const auto k2 = make_field(3, 3);
  std::size_t squares = 0;
  for (const auto& a : k2.elements()) {
    const auto rs = k2.square_roots(a);
    for (const auto& y : rs) CHECK(y * y == a);
    if (!rs.empty()) ++squares;
  }
  CHECK(squares == (27 + 1) / 2);
}

TEST_CASE("primitive element has full order") {
  const auto k = make_field(7, 2);
  const auto g = k.primitive_element();
  for (std::uint64_t d : {2, 3, 4, 6, 8, 12, 16, 24}) CHECK_FALSE(g.pow(48 / d) == k.one());
}
