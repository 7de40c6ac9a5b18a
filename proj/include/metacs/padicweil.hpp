// Odd-p scalars: Hilbert symbols, the Weil factor, and the two rank-one p-adic integrals.
#pragma once

#include <complex>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "metacs/exactalg.hpp"
#include "metacs/exec.hpp"

namespace metacs {

class PadicScalar {
 public:
  PadicScalar(BigRat value, long p);
  PadicScalar(long value, long p) : PadicScalar(BigRat(value), p) {}

  const BigRat& value() const { return value_; }
  long p() const { return p_; }
  int valuation() const { return valuation_; }
  BigRat unit() const;               // value / p^valuation
  long unit_residue(int level = 1) const;  // unit mod p^level, in [1, p^level)
  int unit_legendre() const;
  bool is_unit() const { return valuation_ == 0; }
  // F^{*2} O^*: even valuation
  bool in_square_times_units() const { return valuation_ % 2 == 0; }
  bool is_square() const { return valuation_ % 2 == 0 && unit_legendre() == 1; }

  friend PadicScalar operator*(const PadicScalar& a, const PadicScalar& b);
  friend PadicScalar operator/(const PadicScalar& a, const PadicScalar& b);
  PadicScalar operator-() const { return {-value_, p_}; }
  PadicScalar inverse() const { return {1 / value_, p_}; }
  friend bool operator==(const PadicScalar& a, const PadicScalar& b) { return a.p_ == b.p_ && a.value_ == b.value_; }
  std::string to_string() const { return value_.get_str(); }

 private:
  BigRat value_;
  long p_;
  int valuation_;
};

// p^v * m, v in [-3, 3], m = a/b with 1 <= |a|, b <= 50 prime to p.
PadicScalar random_scalar(std::mt19937_64& rng, long p);

// Fourth roots of unity, i^exponent.
struct Mu4 {
  int exponent = 0;
  static Mu4 from_sign(int s) { return {s == 1 ? 0 : 2}; }
  friend Mu4 operator*(Mu4 a, Mu4 b) { return {(a.exponent + b.exponent) % 4}; }
  Mu4 inverse() const { return {(4 - exponent) % 4}; }
  bool operator==(const Mu4& o) const { return exponent % 4 == o.exponent % 4; }
  GaussRat exact() const;
  std::complex<double> value() const;
  std::string to_string() const;
};

int legendre(long a, long p);
bool is_odd_prime(long p);

int hilbert2(const PadicScalar& a, const PadicScalar& b);
// Solvability of a x^2 + b y^2 = z^2 by primitive solutions modulo p^3.
int hilbert2_oracle(const PadicScalar& a, const PadicScalar& b);

// Number of pairs where the closed form and the oracle disagree.
std::size_t hilbert_sweep(const std::vector<std::pair<PadicScalar, PadicScalar>>& pairs, Exec exec);

// Sign in the exponent of the quadratic Gauss sum defining gamma(uniformizer).
enum class GaussConvention { minus, plus };
std::string to_string(GaussConvention c);

Mu4 gamma_uniformizer(long p, GaussConvention conv);  // memoized
Mu4 weil_gamma(const PadicScalar& a, GaussConvention conv);
// Independent evaluation straight from the Gauss sum with the unit folded in.
Mu4 weil_gamma_direct(const PadicScalar& a, GaussConvention conv);
Mu4 gamma_psi_a(const PadicScalar& a, const PadicScalar& x, GaussConvention conv);

struct GaussIntegralResult {
  std::complex<double> value;
  double expected = 0;
  double error = 0;
  bool pass = false;
};
// (1/p) sum_{x != 0 mod p} gamma(x / p) exp(-2 pi i x / p)
GaussIntegralResult normalized_gauss_integral(long p, GaussConvention conv);

struct ConventionChoice {
  GaussConvention convention;
  bool minus_passes;  // false means the conjugate convention was forced
};
ConventionChoice select_gauss_convention(const std::vector<long>& primes);

struct DoubleIntegralResult {
  BigRat stratified;
  BigRat closed_form;
  BigRat tail_bound;
  BigRat difference;  // closed_form - stratified
  bool strata_consistent = false;  // symbol factor and square-class indicator behave as expected
  bool pass = false;
};
DoubleIntegralResult rank_one_double_integral(long p, int M, const BigRat& s_diff);

// (-rho, p)(p, p)^{k-1}
int epsilon_rho_k(const PadicScalar& rho, int k);

}  // namespace metacs
