#include "doctest.h"
#include "metacs/characters.hpp"
#include "support.hpp"

using namespace metacs;
using testing_support::var;

TEST_CASE("partitions") {
  CHECK_THROWS(Partition({1, 2}));
  Partition p({4, 2, 0});
  CHECK(p.is_even());
  CHECK(p.size() == 6);
  CHECK_FALSE(Partition({3, 2}).is_even());
  CHECK_FALSE(Partition({2, -2}).is_nonneg());
}

TEST_CASE("eval_a examples") {
  auto chi = SymplecticChar::symbolic(2);
  auto z1 = var("z1"), z2 = var("z2");
  CHECK(eval_a(chi, {1, 2}) == RatFunc(z1.pow(2) * z2.pow(-2)));
  CHECK(eval_a(chi, {1, 3}) == RatFunc(z1.pow(2) * z2.pow(2)));
  CHECK(eval_a(chi, {1, 4}) == RatFunc(z1.pow(4)));
  CHECK(eval_a(SymplecticChar::symbolic(1), {1, 2}) == RatFunc(z1.pow(4)));
  // mirror pairing (i,j) ~ (n-j+1, n-i+1)
  for (int k = 1; k <= 3; ++k) {
    auto c = SymplecticChar::symbolic(k);
    const int n = 2 * k;
    for (const auto& r : positive_roots_gl(n)) {
      CHECK(eval_a(c, r) == eval_a(c, {n - r.j + 1, n - r.i + 1}));
      CHECK(eval_a(c, r) * eval_a(c, r.negated()) == RatFunc(1));
    }
  }
}

TEST_CASE("half powers on long roots") {
  auto chi = SymplecticChar::symbolic(1);
  SpRoot l{SpKind::long_root, 1, 0};
  CHECK(eval_half_long(chi, l, -1) == RatFunc(var("z1", -2)));
  CHECK(eval_half_long(chi, l, -1).pow(2) == eval_a(chi.inverse(), {1, 2}));
  CHECK(eval_half_long(theta_char(1), l, 1) == RatFunc(var("u", 2)));
  CHECK_THROWS(eval_half_long(SymplecticChar::symbolic(2), {SpKind::short_minus, 1, 2}, 1));
  for (int k = 1; k <= 3; ++k) {
    auto c = SymplecticChar::symbolic(k);
    for (int i = 1; i <= k; ++i)
      CHECK(eval_half_long(c, {SpKind::long_root, i, 0}, 1).pow(2) == eval_a(c, {i, 2 * k + 1 - i}));
  }
}

TEST_CASE("torus values and modulus character") {
  auto chi = SymplecticChar::symbolic(2);
  CHECK(eval_torus(chi, Partition::zero(2)) == RatFunc(1));
  CHECK(delta_B_half(Partition::zero(2), 4) == LaurentPoly(1));
  CHECK(delta_B_half(Partition({2}), 2) == var("u", 4));
  CHECK(eval_torus(chi, Partition({2, 0})) == RatFunc(var("z1", 2)));
  CHECK_THROWS_WITH(eval_torus(chi, Partition({3, 1})), "t_lambda outside T_{n,*}");
  CHECK(delta_B_quarter(Partition({2, 2}), 4) == var("u", 8));
  CHECK(delta_B_quarter(Partition({4, 2}), 4).pow(2) == delta_B_half(Partition({4, 2}), 4));
}

TEST_CASE("Weyl action") {
  for (int k = 1; k <= 3; ++k) {
    auto chi = SymplecticChar::symbolic(k);
    auto all = WeylSp::all(k);
    CHECK(weyl_act(WeylSp::identity(k), chi) == chi);
    for (const auto& w : all) {
      auto wc = weyl_act(w, chi);
      // compatibility with the GL action and with roots
      CHECK(wc.gl() == chi.gl().act(embed_sp(w)));
      auto g = embed_sp(w).inverse();
      for (const auto& r : positive_roots_gl(2 * k)) CHECK(eval_a(wc, r) == eval_a(chi, g.apply(r)));
      for (const auto& v : all) CHECK(weyl_act(w, weyl_act(v, chi)) == weyl_act(w * v, chi));
    }
  }
  auto flip = weyl_act(WeylSp::simple(1, 1), SymplecticChar::symbolic(1));
  CHECK(flip.z(1) == var("z1", -1));
}

TEST_CASE("theta character") {
  CHECK(theta_char(1).z(1) == var("u"));
  CHECK(theta_char(2).z(1) == var("u", 3));
  CHECK(theta_char(2).z(2) == var("u"));
  for (int k = 1; k <= 3; ++k)
    for (int i = 1; i < 2 * k; ++i) CHECK(eval_a(theta_char(k), {i, i + 1}) == RatFunc(var("u", 4)));
}

TEST_CASE("half root product") {
  auto chi = SymplecticChar::symbolic(2);
  CHECK(half_root_product(chi) == RatFunc(var("z1", 4) * var("z2", 2)));
}

TEST_CASE("admissibility") {
  CHECK_THROWS_WITH(admissibility(SymplecticChar::symbolic(2)), "predicate requires specialization");
  auto generic = admissibility(SymplecticChar::numeric({BigRat(2, 3), BigRat(5, 7)}));
  CHECK(generic.regular);
  CHECK(generic.shalika_dim_le_1);
  REQUIRE(generic.tau);
  CHECK(generic.necessary_condition);
  // on the stored locus the forced tau reverses indices; for k = 1 it is the identity
  CHECK(*generic.tau == std::vector<int>{2, 1});
  auto one = admissibility(SymplecticChar::numeric({BigRat(3)}));
  CHECK(*one.tau == std::vector<int>{1});
  CHECK(one.necessary_condition);
  CHECK_FALSE(admissibility(SymplecticChar::numeric({BigRat(2), BigRat(2)})).regular);
}
