#include "doctest.h"
#include "metacs/exactalg.hpp"
#include "support.hpp"

using namespace metacs;
using testing_support::random_poly;
using testing_support::var;

TEST_CASE("poly arithmetic examples") {
  auto u = var("u");
  CHECK((u + 1) + (u - 1) == u.scaled(2));
  CHECK(var("z1") * var("z1", -1) == LaurentPoly(1));
  CHECK((1 - u) * (1 + u) == 1 - u * u);
  CHECK((u - u).is_zero());
  CHECK((u - u).variables().empty());
}

TEST_CASE("canonical form does not depend on construction order") {
  auto a = var("x1") + var("z2") * var("u");
  auto b = var("u") * var("z2") + var("x1");
  CHECK(a == b);
  CHECK(a.to_string() == b.to_string());
  CHECK(var("z10").variables() == std::vector<std::string>{"z10"});
  CHECK(var_name_less("z2", "z10"));
}

TEST_CASE("to_string") {
  auto t = var("t");
  auto x1 = var("x1"), x2 = var("x2");
  auto p = x1 * x1 + x2 * x2 + (1 - t) * x1 * x2;
  CHECK(p.to_string() == "-t*x1*x2+x1^2+x1*x2+x2^2");
  CHECK(LaurentPoly(BigRat(-3, 2)).to_string() == "-3/2");
  CHECK(var("z1", -2).to_string() == "z1^-2");
}

TEST_CASE("ratfunc normalize examples") {
  auto u = var("u");
  auto r = RatFunc::normalize(1 - u * u, 1 - u);
  CHECK(r.num() == 1 + u);
  CHECK(r.den() == LaurentPoly(1));
  auto z1 = var("z1"), z2 = var("z2");
  auto s = RatFunc::normalize(z1 * z1 - z2 * z2, z1 - z2);
  CHECK(s == RatFunc(z1 + z2));
  auto zero = RatFunc::normalize(LaurentPoly(), 1 - u);
  CHECK(zero.is_zero());
  CHECK(zero.den() == LaurentPoly(1));
  CHECK_THROWS_WITH(RatFunc::normalize(u, LaurentPoly()), "division by zero polynomial");
}

TEST_CASE("monomial content moves to the numerator") {
  auto u = var("u");
  auto r = RatFunc::normalize(LaurentPoly(1), u * u - u * u * u);
  CHECK(r.num() == var("u", -2).scaled(-1));
  CHECK(r.den() == u - 1);
}

TEST_CASE("gcd") {
  auto x = var("x"), y = var("y"), z = var("z");
  auto g = gcd((x + y) * (x - y) * z, (x + y) * z * z);
  CHECK(g == x + y);  // monomials are units
  CHECK(gcd(x * x + 1, x + 1) == LaurentPoly(1));
  auto a = (x * y + z + 1) * (x - 2 * y * z) * (y * y + x);
  auto b = (x * y + z + 1) * (x + z) * (y * y + x);
  auto gab = gcd(a, b);
  CHECK(exact_divide(gab, (x * y + z + 1) * (y * y + x)).has_value());
  CHECK(gab.total_degree() == 4);
}

TEST_CASE("exact division") {
  auto x = var("x"), y = var("y");
  auto q = exact_divide((x - y) * (x * x + y), x * x + y);
  REQUIRE(q);
  CHECK(*q == x - y);
  CHECK_FALSE(exact_divide(x * x + 1, x + 1).has_value());
  auto ql = exact_divide(var("x", -3) * (x + y), var("x", -1));
  REQUIRE(ql);
  CHECK(*ql == var("x", -2) * (x + y));
}

TEST_CASE("series examples") {
  auto X = var("X"), u = var("u");
  auto g = series_expand(RatFunc::normalize(1, 1 - X), "X", 3);
  for (int i = 0; i <= 3; ++i) CHECK(g.coeff(i) == LaurentPoly(1));
  auto h = series_expand(RatFunc::normalize(1 - u * X, 1 - X), "X", 2);
  CHECK(h.coeff(0) == LaurentPoly(1));
  CHECK(h.coeff(1) == 1 - u);
  CHECK(h.coeff(2) == 1 - u);
  auto one = series_expand(RatFunc(1), "X", 5);
  CHECK(one.coeff(0) == LaurentPoly(1));
  for (int i = 1; i <= 5; ++i) CHECK(one.coeff(i).is_zero());
  CHECK_THROWS_WITH(series_expand(RatFunc::normalize(1, X + X * X), "X", 3), "not expandable at X=0");
  CHECK_THROWS(series_expand(RatFunc::normalize(1, 1 + u + X), "X", 3));
}

TEST_CASE("specialize") {
  auto u = var("u"), z = var("z1");
  auto f = RatFunc::normalize(1 - u * z, 1 - z);
  CHECK(f.specialize({{"u", 2}, {"z1", 3}}) == BigRat(5, 2));
  CHECK_THROWS(f.specialize({{"u", 2}, {"z1", 1}}));
  CHECK_THROWS(f.specialize({{"u", 2}}));
}

TEST_CASE("Q(i) arithmetic") {
  GaussRat i = GaussRat::i();
  CHECK(i * i == GaussRat(-1));
  GaussRat a(BigRat(1, 2), 3);
  CHECK(a * a.inverse() == GaussRat(1));
  CHECK((a * a.conj()).im() == 0);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(11);
  const std::vector<std::string> vars{"u", "z1", "z2"};
  for (int it = 0; it < 60; ++it) {
    auto a = random_poly(rng, vars, 4, -2, 2);
    auto b = random_poly(rng, vars, 4, -2, 2);
    auto c = random_poly(rng, vars, 3, -2, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("normalize is canonical on random fractions") {
  std::mt19937_64 rng(12);
  const std::vector<std::string> vars{"u", "z1", "z2"};
  for (int it = 0; it < 40; ++it) {
    auto a = random_poly(rng, vars, 3, -1, 2);
    auto b = random_poly(rng, vars, 3, -1, 2);
    auto c = random_poly(rng, vars, 2, 0, 2);
    if (b.is_zero() || c.is_zero()) continue;
    auto f = RatFunc::normalize(a, b);
    CHECK(RatFunc::normalize(f.num(), f.den()) == f);
    CHECK(RatFunc::normalize(a * c, b * c) == f);
    auto d = random_poly(rng, vars, 3, -1, 2);
    auto e = random_poly(rng, vars, 3, -1, 2);
    if (e.is_zero()) continue;
    auto g = RatFunc::normalize(d, e);
    CHECK((f == g) == (a * e == d * b));
    CHECK(RatFunc::normalize(a * e, b * e) == f);
  }
}

TEST_CASE("field arithmetic on random fractions") {
  std::mt19937_64 rng(13);
  const std::vector<std::string> vars{"u", "z1"};
  for (int it = 0; it < 30; ++it) {
    auto f = RatFunc::normalize(random_poly(rng, vars, 2, -1, 2), random_poly(rng, vars, 2, 0, 2) + 7);
    auto g = RatFunc::normalize(random_poly(rng, vars, 2, -1, 2), random_poly(rng, vars, 2, 0, 2) + 5);
    auto h = RatFunc::normalize(random_poly(rng, vars, 2, -1, 2), random_poly(rng, vars, 2, 0, 2) + 3);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f - f).is_zero());
    if (!f.is_zero()) CHECK(f * f.inverse() == RatFunc(1));
    Bindings at{{"u", BigRat(2, 7)}, {"z1", BigRat(-3, 5)}};
    try {
      BigRat fv = f.specialize(at), gv = g.specialize(at);
      CHECK((f * g).specialize(at) == fv * gv);
      CHECK((f + g).specialize(at) == fv + gv);
    } catch (const MathError&) {
    }
  }
}

TEST_CASE("series_expand is multiplicative") {
  std::mt19937_64 rng(14);
  const std::vector<std::string> vars{"u", "X"};
  auto X = var("X");
  for (int it = 0; it < 20; ++it) {
    auto f = RatFunc::normalize(random_poly(rng, vars, 3, 0, 2), 1 + X * random_poly(rng, vars, 2, 0, 2));
    auto g = RatFunc::normalize(random_poly(rng, vars, 3, 0, 2), 1 - X * random_poly(rng, vars, 2, 0, 1));
    const int cap = 5;
    CHECK(series_expand(f * g, "X", cap) == series_expand(f, "X", cap) * series_expand(g, "X", cap));
    CHECK(series_expand(f + g, "X", cap) == series_expand(f, "X", cap) + series_expand(g, "X", cap));
  }
}
