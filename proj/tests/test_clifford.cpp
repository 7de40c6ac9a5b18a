#include "doctest.h"
#include "metacs/clifford.hpp"

using namespace metacs;

TEST_CASE("basis order") {
  auto b = exterior_basis(3);
  std::vector<std::string> labels;
  for (auto s : b) labels.push_back(basis_label(s));
  CHECK(labels == std::vector<std::string>{"f{}", "f{1}", "f{2}", "f{3}", "f{1,2}", "f{1,3}", "f{2,3}", "f{1,2,3}"});
}

TEST_CASE("Clifford relations") {
  for (int k = 1; k <= 4; ++k) {
    const auto id = PinMatrix::identity(k);
    for (int a = 1; a <= 2 * k; ++a) {
      const auto ea = generator_matrix(a, k);
      CHECK(ea * ea == id);
      for (int b = a + 1; b <= 2 * k; ++b) {
        const auto eb = generator_matrix(b, k);
        CHECK(ea * eb + eb * ea == PinMatrix::zero(k));
      }
    }
    for (int i = 1; i <= k; ++i) {
      auto w = wedge_matrix(i, k), c = contraction_matrix(i, k);
      CHECK(w * c + c * w == id.scaled(GaussRat(4)));
    }
  }
  CHECK_THROWS(generator_matrix(3, 1));
  // wedge on the vacuum
  auto w = wedge_matrix(1, 1);
  CHECK(w.at(1, 0) == GaussRat(1));
}

TEST_CASE("monomial eigenvalues") {
  // k = 1: e1 e2 acts by 1/i on f{} and -1/i on f{1}
  auto m = monomial_action(1, 1, 1);
  CHECK(m.at(0, 0) == GaussRat(0, -1));
  CHECK(m.at(1, 1) == GaussRat(0, 1));
  CHECK(monomial_action(0, -1, 2) == PinMatrix::identity(2).scaled(GaussRat(-1)));
  for (int k = 1; k <= 3; ++k)
    for (IndexSet I = 0; I < (IndexSet{1} << k); ++I)
      for (int sign : {1, -1}) {
        auto closed = monomial_action(I, sign, k);
        CHECK(closed.is_diagonal());
        CHECK(closed == monomial_product(I, sign, k));
      }
}

TEST_CASE("gamma character") {
  CHECK(gamma_character(0, 1) == GaussRat(1));
  CHECK(gamma_character(1, 1) == GaussRat(0, -1));
  CHECK(gamma_character(3, 1) == GaussRat(-1));
  CHECK(gamma_character(7, -1) == GaussRat(0, -1));  // -(-i)^3
  CHECK(gamma_character(1, 1, GammaAtMinusOne::minus_i) == GaussRat(0, 1));
}

TEST_CASE("hom space is one-dimensional") {
  for (int k = 1; k <= 4; ++k) {
    auto h = hom_space(k);
    CHECK(h.dim == 1);
    CHECK(h.idempotent);
    CHECK(h.support == std::vector<IndexSet>{0});
    auto conj = hom_space(k, GammaAtMinusOne::minus_i);
    CHECK(conj.dim == 1);
    CHECK(conj.idempotent);
    CHECK(conj.support == std::vector<IndexSet>{(IndexSet{1} << k) - 1});
  }
  CHECK(hom_dim(3) == 1);
}
