#include <set>

#include "doctest.h"
#include "metacs/weylroots.hpp"
#include "support.hpp"

using namespace metacs;

namespace {

WeylGL from_word(const std::vector<int>& word, int n) {
  WeylGL w = WeylGL::identity(n);
  for (int i : word) w = w * WeylGL::simple(i, n);
  return w;
}

WeylSp from_sp_word(const std::vector<int>& word, int k) {
  WeylSp w = WeylSp::identity(k);
  for (int i : word) w = w * WeylSp::simple(i, k);
  return w;
}

// Brute-force oracle: sign of w(j) - w(i) for i < j.
std::vector<GLRoot> inversion_oracle(const WeylGL& w) {
  std::vector<GLRoot> out;
  for (int i = 1; i <= w.n(); ++i)
    for (int j = 1; j <= w.n(); ++j)
      if (i < j && w(i) - w(j) > 0) out.push_back({i, j});
  return out;
}

}  // namespace

TEST_CASE("positive roots") {
  CHECK(positive_roots_gl(2) == std::vector<GLRoot>{{1, 2}});
  CHECK(positive_roots_gl(5).size() == 10);
  CHECK(positive_roots_sp(1) == std::vector<SpRoot>{{SpKind::long_root, 1, 0}});
  auto sp2 = positive_roots_sp(2);
  CHECK(sp2.size() == 4);
  std::set<SpRoot> expect{{SpKind::short_minus, 1, 2}, {SpKind::short_plus, 1, 2}, {SpKind::long_root, 1, 0},
                          {SpKind::long_root, 2, 0}};
  CHECK(std::set<SpRoot>(sp2.begin(), sp2.end()) == expect);
  for (int k = 1; k <= 4; ++k) CHECK(positive_roots_sp(k).size() == static_cast<std::size_t>(k * k));
}

TEST_CASE("inversion examples") {
  CHECK(inversions(WeylGL::identity(3)).empty());
  CHECK(inversions(WeylGL::longest(3)).size() == 3);
  auto w = WeylGL::simple(1, 3) * WeylGL::simple(2, 3);
  CHECK(inversions(w) == std::vector<GLRoot>{{1, 3}, {2, 3}});
  CHECK(inversions(w, InversionOf::w_inverse) == std::vector<GLRoot>{{1, 2}, {1, 3}});
  CHECK(inversions(w) == inversion_oracle(w));
}

TEST_CASE("inversions match oracle and length; reduced words") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : WeylGL::all(n)) {
      auto inv = inversions(w);
      CHECK(inv == inversion_oracle(w));
      CHECK(static_cast<int>(inv.size()) == w.length());
      for (auto choice : {DescentChoice::first, DescentChoice::last}) {
        auto word = w.reduced_word(choice);
        CHECK(static_cast<int>(word.size()) == w.length());
        CHECK(from_word(word, n) == w);
      }
    }
}

TEST_CASE("length additivity versus inversion sets, n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    auto all = WeylGL::all(n);
    for (const auto& w : all)
      for (const auto& v : all) {
        // l(wv) = l(w) + l(v) iff v maps no inversion-free... i.e. N(v) subset N(wv)
        bool additive = (w * v).length() == w.length() + v.length();
        auto inv_v = inversions(v);
        auto inv_wv = inversions(w * v);
        bool subset = std::includes(inv_wv.begin(), inv_wv.end(), inv_v.begin(), inv_v.end());
        CHECK(additive == subset);
      }
  }
}

TEST_CASE("Weyl group of Sp: order, embedding, lengths") {
  for (int k = 1; k <= 3; ++k) {
    auto all = WeylSp::all(k);
    int fact = 1;
    for (int a = 2; a <= k; ++a) fact *= a;
    CHECK(all.size() == static_cast<std::size_t>((1 << k) * fact));
    std::set<WeylGL> images;
    const int n = 2 * k;
    for (const auto& w : all) {
      auto g = embed_sp(w);
      images.insert(g);
      for (int a = 1; a <= n; ++a) CHECK(g(n + 1 - a) == n + 1 - g(a));
      for (auto choice : {DescentChoice::first, DescentChoice::last}) {
        auto word = w.reduced_word(choice);
        CHECK(static_cast<int>(word.size()) == sp_length(w));
        CHECK(from_sp_word(word, k) == w);
      }
      // inversion set of the GL image is closed under the mirror pairing
      auto inv = inversions(g);
      std::set<GLRoot> s(inv.begin(), inv.end());
      for (const auto& r : inv) CHECK(s.count({n - r.j + 1, n - r.i + 1}) == 1);
    }
    CHECK(images.size() == all.size());
    for (const auto& w : all)
      for (const auto& v : all) CHECK(embed_sp(w * v) == embed_sp(w) * embed_sp(v));
    CHECK(sp_length(WeylSp::longest(k)) == k * k);
  }
}

TEST_CASE("embedding examples") {
  CHECK(embed_sp(WeylSp::identity(2)) == WeylGL::identity(4));
  CHECK(embed_sp(WeylSp::simple(1, 1)) == WeylGL::simple(1, 2));
  CHECK(embed_sp(WeylSp::simple(2, 2)) == WeylGL::simple(2, 4));
  CHECK(embed_sp(WeylSp::simple(1, 2)) == WeylGL::simple(1, 4) * WeylGL::simple(3, 4));
}

TEST_CASE("GL to Sp roots") {
  CHECK(gl_to_sp({1, 2}, 2) == SpRoot{SpKind::short_minus, 1, 2});
  CHECK(gl_to_sp({1, 4}, 2) == SpRoot{SpKind::long_root, 1, 0});
  CHECK(gl_to_sp({3, 4}, 2) == SpRoot{SpKind::short_minus, 1, 2});
  CHECK(gl_to_sp({1, 3}, 2) == SpRoot{SpKind::short_plus, 1, 2});
  CHECK(gl_to_sp({2, 4}, 2) == SpRoot{SpKind::short_plus, 1, 2});
  for (int k = 1; k <= 3; ++k) {
    std::map<SpRoot, int> count;
    for (const auto& r : positive_roots_gl(2 * k)) ++count[gl_to_sp(r, k)];
    CHECK(count.size() == static_cast<std::size_t>(k * k));
    for (const auto& [r, c] : count) CHECK(c == (r.is_long() ? 1 : 2));
  }
  // Sp inversions are the images of GL inversions of the embedded element.
  for (int k = 1; k <= 3; ++k)
    for (const auto& w : WeylSp::all(k)) {
      std::set<SpRoot> via_gl;
      for (const auto& r : inversions(embed_sp(w))) via_gl.insert(gl_to_sp(r, k));
      auto inv = w.inversions();
      CHECK(via_gl == std::set<SpRoot>(inv.begin(), inv.end()));
    }
}

TEST_CASE("Poincare polynomial") {
  auto u4 = LaurentPoly::variable("u", 4);
  CHECK(poincare_Q(2) == 1 + u4);
  CHECK(poincare_Q(3) == 1 + u4.scaled(2) + u4.pow(2).scaled(2) + u4.pow(3));
  for (int n = 1; n <= 6; ++n) {
    LaurentPoly sum;
    for (const auto& w : WeylGL::all(n)) sum += u4.pow(w.length());
    CHECK(poincare_Q(n) == sum);
  }
}
