#include <numeric>
#include <random>

#include "doctest.h"
#include "metacs/cocycle.hpp"

using namespace metacs;

namespace {

int sym(const BigRat& a, const BigRat& b, long p) { return hilbert2(PadicScalar(a, p), PadicScalar(b, p)); }

Torus torus_of(std::initializer_list<long> xs, long p) {
  Torus t;
  for (long x : xs) t.emplace_back(x, p);
  return t;
}

MetaMonomial signed_(int s, const MetaMonomial& m) { return s == 1 ? m : m.negated(); }

MonomialMatrix random_monomial(std::mt19937_64& rng, int n, long p) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  std::vector<BigRat> s;
  for (int i = 0; i < n; ++i) s.push_back(random_scalar(rng, p).value());
  return {std::move(s), WeylGL(std::move(images))};
}

}  // namespace

TEST_CASE("kubota") {
  const Mat2 id{1, 0, 0, 1}, J{0, -1, 1, 0};
  for (long p : {3L, 5L, 7L}) {
    CHECK(kubota(id, id, p) == 1);
    CHECK(kubota(J, J, p) == sym(-1, -1, p));
    std::mt19937_64 rng(p);
    for (int i = 0; i < 100; ++i) {
      BigRat a = random_scalar(rng, p).value(), b = random_scalar(rng, p).value();
      BigRat a2 = random_scalar(rng, p).value(), b2 = random_scalar(rng, p).value();
      CHECK(kubota({a, 0, 0, b}, {a2, 0, 0, b2}, p) == sym(a, b2, p));
      CHECK(sigma_block_diag({a, b}, {a2, b2}, p) == kubota({a, 0, 0, b}, {a2, 0, 0, b2}, p));
    }
  }
}

TEST_CASE("block compatibility collapses to the torus cocycle") {
  for (long p : {5L, 7L})
    for (int n : {1, 2, 3, 5}) {
      std::mt19937_64 rng(static_cast<unsigned long>(10 * p + n));
      for (int trial = 0; trial < 100; ++trial) {
        Torus t, t2;
        BlockDiag g, h;
        for (int i = 0; i < n; ++i) {
          t.push_back(random_scalar(rng, p));
          t2.push_back(random_scalar(rng, p));
          g.emplace_back(t.back().value());
          h.emplace_back(t2.back().value());
        }
        CHECK(sigma_block_diag(g, h, p) == sigma_torus(t, t2));
        if (n >= 2) {
          const int k = n / 2;
          BlockDiag a(g.begin(), g.begin() + k), b(g.begin() + k, g.end());
          BlockDiag a2(h.begin(), h.begin() + k), b2(h.begin() + k, h.end());
          CHECK(sigma_block(a, b, a2, b2, p) == sigma_torus(t, t2));
        }
      }
    }
  CHECK(sigma_block_diag({BigRat(1), BigRat(1)}, {BigRat(1), BigRat(1)}, 5) == 1);
}

TEST_CASE("torus and Weyl-torus signs") {
  const long p = 7;
  auto t = torus_of({3, 7}, p), t2 = torus_of({7, 5}, p);
  CHECK(sigma_torus(t, t2) == sym(3, 5, p));
  CHECK(sigma_torus(t, torus_of({1, 1}, p)) == 1);
  CHECK(sigma_weyl_torus(WeylGL::simple(1, 2), t) == sym(-7, 3, p));
  CHECK(sigma_weyl_torus(WeylGL::identity(2), t) == 1);
  // even valuations and square units give trivial symbols
  CHECK(sigma_weyl_torus(WeylGL::longest(3), torus_of({49, 4, 9 * 49}, p)) == 1);
}

TEST_CASE("canonical representatives do not depend on the reduced word") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : WeylGL::all(n)) {
      auto r = weyl_representative(w);
      CHECK(r == weyl_representative(w, DescentChoice::last));
      CHECK(r.perm == w);
    }
}

TEST_CASE("rank-one relations") {
  for (long p : {3L, 5L, 7L}) {
    auto s1 = MetaMonomial::weyl_lift(WeylGL::simple(1, 2), p);
    CHECK(mul(s1, s1) == MetaMonomial(sym(-1, -1, p), torus_of({-1, -1}, p), WeylGL::identity(2)));
    auto id = MetaMonomial::identity(4, p);
    std::mt19937_64 rng(p);
    auto m = random_meta(rng, 4, p);
    CHECK(mul(id, m) == m);
    CHECK(mul(m, id) == m);
  }
}

TEST_CASE("torus products and commutator") {
  for (long p : {5L, 7L, 11L}) {
    std::mt19937_64 rng(p * 3);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 2 + trial % 4;
      Torus t, t2;
      for (int i = 0; i < n; ++i) {
        t.push_back(random_scalar(rng, p));
        t2.push_back(random_scalar(rng, p));
      }
      auto a = MetaMonomial::torus_lift(t), b = MetaMonomial::torus_lift(t2);
      CHECK(mul(a, b) == signed_(sigma_torus(t, t2), MetaMonomial::torus_lift(torus_product(t, t2))));
      auto comm = mul(mul(a, b), inv(mul(b, a)));
      int expected = 1;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          expected *= hilbert2(t[static_cast<std::size_t>(i)], t2[static_cast<std::size_t>(j)]) *
                      hilbert2(t2[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)]);
      CHECK(comm == signed_(expected, MetaMonomial::identity(n, p)));
    }
  }
}

TEST_CASE("associativity, inverses and projection") {
  for (long p : {5L, 7L, 11L})
    for (int n : {2, 4, 6}) {
      std::mt19937_64 rng(static_cast<unsigned long>(p * 100 + n));
      for (int trial = 0; trial < 1000; ++trial) {
        auto a = random_meta(rng, n, p), b = random_meta(rng, n, p), c = random_meta(rng, n, p);
        const auto ab = mul(a, b);
        REQUIRE(mul(ab, c) == mul(a, mul(b, c)));
        CHECK(ab.projection() == a.projection() * b.projection());
        if (trial % 10 == 0) {
          CHECK(mul(a, inv(a)) == MetaMonomial::identity(n, p));
          CHECK(mul(inv(a), a) == MetaMonomial::identity(n, p));
        }
      }
    }
}

TEST_CASE("determinant twist is also associative") {
  const long p = 7;
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_meta(rng, 4, p), b = random_meta(rng, 4, p), c = random_meta(rng, 4, p);
    const auto t = CocycleTwist::det;
    CHECK(mul(mul(a, b, t), c, t) == mul(a, mul(b, c, t), t));
    CHECK(mul(a, inv(a, t), t) == MetaMonomial::identity(4, p));
  }
}

TEST_CASE("conjugation of torus elements") {
  for (long p : {5L, 7L}) {
    std::mt19937_64 rng(p + 1);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 2 + trial % 4;
      auto w = random_meta(rng, n, p).perm();
      Torus t;
      for (int i = 0; i < n; ++i) t.push_back(random_scalar(rng, p));
      auto sw = MetaMonomial::weyl_lift(w, p);
      auto st = MetaMonomial::torus_lift(t);
      auto moved = MetaMonomial::torus_lift(conjugate_torus(w, t));
      CHECK(mul(sw, st) == signed_(sigma_weyl_torus(w, t), mul(moved, sw)));

      // central elements: equal square entries
      auto x = random_scalar(rng, p);
      Torus z(static_cast<std::size_t>(n), x * x);
      auto g = section_s(random_monomial(rng, n, p), p);
      auto sz = MetaMonomial::torus_lift(z);
      CHECK(mul(mul(g, sz), inv(g)) == sz);
    }
  }
}

TEST_CASE("sections s and h") {
  const long p = 7;
  CHECK(section_s(MonomialMatrix::identity(4), p) == MetaMonomial::identity(4, p));
  CHECK_THROWS(c_of_h(MonomialMatrix::diagonal({1, 2, 3, 4})));
  std::mt19937_64 rng(11);
  for (int k = 1; k <= 3; ++k)
    for (int trial = 0; trial < 100; ++trial) {
      auto c = random_monomial(rng, k, p), c2 = random_monomial(rng, k, p);
      auto h = h_from_c(c), h2 = h_from_c(c2);
      CHECK(c_of_h(h) == c);
      CHECK(section_s(h, p).projection() == h);
      CHECK(section_h(h, p).projection() == h);
      const int det_sign = sym(c.det(), c2.det(), p);
      CHECK(section_h(h * h2, p) == signed_(det_sign, mul(section_h(h, p), section_h(h2, p))));
      CHECK(triangle(c * c2, p) == signed_(det_sign, mul(triangle(c, p), triangle(c2, p))));

      // H intersected with B_{n,*}: diagonal, even valuations
      std::vector<BigRat> d;
      for (int i = 0; i < k; ++i) {
        auto x = random_scalar(rng, p);
        d.push_back(x.value() * x.value() * (i % 2 == 0 ? 1 : 3));
      }
      auto hb = h_from_c(MonomialMatrix::diagonal(d));
      CHECK(section_h(hb, p) == section_s(hb, p));
    }
}
