// Unramified zeta integral: truncated series, closed L-quotient, and the reconstruction from Shalika values.
#pragma once

#include <string>
#include <vector>

#include "metacs/exactalg.hpp"
#include "metacs/exec.hpp"

namespace metacs {

inline const std::string kZetaVar = "X";  // q^{-s}

struct SatakeParams {
  std::vector<LaurentPoly> x;
  static SatakeParams symbolic(int k);  // x1..xk
  static SatakeParams numeric(const std::vector<BigRat>& values);
  int k() const { return static_cast<int>(x.size()); }
};

// prod_{i<j}(1 - q^{-1} x_i x_j X^2) / prod_{i<=j}(1 - x_i x_j X^2)
RatFunc l_quotient_closed(const SatakeParams& params);
RatFunc l_quotient_closed(int k);

// sum over even lambda, |lambda| <= bound, of P_lambda(x; q^{-1}) X^{|lambda|}
TruncSeries zeta_series(const SatakeParams& params, int bound, Exec exec = Exec::serial);

struct ZetaReport {
  bool pass = false;
  std::string witness;  // first differing coefficient
};
ZetaReport zeta_check(const SatakeParams& params, int bound, Exec exec = Exec::serial);

// Cartan-cell sum: delta_{B_k}^{-1/2} P_lambda times the squared theta Shalika value, with the
// |det|^{-k/2} shift; every term must collapse to P_lambda X^{|lambda|}.
struct ZetaFromCS {
  TruncSeries series;
  bool terms_polynomial = false;
  std::string witness;  // lambda whose term did not cancel to a polynomial
};
ZetaFromCS zeta_from_cs(const SatakeParams& params, int bound, Exec exec = Exec::serial);

}  // namespace metacs
