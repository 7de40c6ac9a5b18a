#include <random>

#include "doctest.h"
#include "metacs/zetagj.hpp"
#include "support.hpp"

using namespace metacs;
using testing_support::var;

TEST_CASE("closed L-quotient") {
  const auto x1 = var("x1"), X = var("X");
  CHECK(l_quotient_closed(1) == RatFunc(1) / RatFunc(LaurentPoly(1) - x1.pow(2) * X.pow(2)));
  CHECK(l_quotient_closed(2).num().total_degree() == 8);  // one factor u^4 x1 x2 X^2
  CHECK(l_quotient_closed(3).den().total_degree() == 24);  // six factors of degree 4
}

TEST_CASE("zeta series") {
  const auto x1 = var("x1"), x2 = var("x2"), u4 = var("u", 4);
  auto s1 = zeta_series(SatakeParams::symbolic(1), 8);
  for (int d = 0; d <= 8; ++d) CHECK(s1.coeff(d) == (d % 2 == 0 ? x1.pow(d) : LaurentPoly(0)));
  auto s2 = zeta_series(SatakeParams::symbolic(2), 6);
  CHECK(s2.coeff(0) == LaurentPoly(1));
  CHECK(s2.coeff(2) == x1.pow(2) + x2.pow(2) + (LaurentPoly(1) - u4) * x1 * x2);
  for (int d = 1; d <= 6; d += 2) CHECK(s2.coeff(d).is_zero());
  CHECK(zeta_series(SatakeParams::symbolic(3), 4).coeff(0) == LaurentPoly(1));
}

TEST_CASE("series against the closed form") {
  for (auto [k, n] : {std::pair{1, 8}, std::pair{2, 8}, std::pair{3, 6}, std::pair{3, 8}}) {
    auto r = zeta_check(SatakeParams::symbolic(k), n);
    CHECK_MESSAGE(r.pass, r.witness);
  }
  CHECK(zeta_check(SatakeParams::symbolic(2), 6, Exec::parallel).pass);
  // numeric Satake values
  auto numeric = SatakeParams::numeric({BigRat(2), BigRat(-1, 3), BigRat(5, 7)});
  CHECK(zeta_check(numeric, 8).pass);
  auto sym = zeta_series(SatakeParams::symbolic(3), 6);
  auto num = zeta_series(numeric, 6);
  for (int d = 0; d <= 6; ++d)
    CHECK(sym.coeff(d).substitute({{"x1", LaurentPoly(BigRat(2))}, {"x2", LaurentPoly(BigRat(-1, 3))},
                                   {"x3", LaurentPoly(BigRat(5, 7))}}) == num.coeff(d));
}

TEST_CASE("zeta from Shalika values") {
  auto k1 = zeta_from_cs(SatakeParams::symbolic(1), 2);
  CHECK(k1.terms_polynomial);
  CHECK(k1.series.coeff(0) == LaurentPoly(1));
  CHECK(k1.series.coeff(2) == var("x1", 2));
  for (int k = 1; k <= 2; ++k) {
    auto r = zeta_from_cs(SatakeParams::symbolic(k), 6);
    CHECK_MESSAGE(r.terms_polynomial, r.witness);
    CHECK(r.series == zeta_series(SatakeParams::symbolic(k), 6));
  }
  auto numeric = SatakeParams::numeric({BigRat(3), BigRat(1, 2), BigRat(-2, 5)});
  auto r3 = zeta_from_cs(numeric, 6, Exec::parallel);
  CHECK(r3.terms_polynomial);
  CHECK(r3.series == zeta_series(numeric, 6));
}
