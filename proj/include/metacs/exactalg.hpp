// Exact Laurent polynomials, rational functions and truncated power series over Q.
#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace metacs {

using BigInt = mpz_class;
using BigRat = mpq_class;

struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string to_string(const BigRat& q);

class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(BigRat re, BigRat im = 0) : re_(std::move(re)), im_(std::move(im)) {}
  static GaussRat i() { return {0, 1}; }

  const BigRat& re() const { return re_; }
  const BigRat& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }

  GaussRat conj() const { return {re_, -im_}; }
  GaussRat inverse() const;

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re_, -a.im_}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) { return a * b.inverse(); }
  GaussRat& operator+=(const GaussRat& b) { return *this = *this + b; }
  GaussRat& operator*=(const GaussRat& b) { return *this = *this * b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  std::string to_string() const;

 private:
  BigRat re_{0};
  BigRat im_{0};
};

inline constexpr std::size_t kMaxVars = 16;
using Exponents = std::array<std::int32_t, kMaxVars>;

// Natural order on symbol names: alphabetic prefix, then numeric suffix (z2 < z10).
bool var_name_less(std::string_view a, std::string_view b);

using Bindings = std::map<std::string, BigRat>;

class LaurentPoly {
 public:
  struct Term {
    Exponents exp{};
    BigRat coeff;
  };

  LaurentPoly() = default;
  LaurentPoly(const BigRat& c);  // NOLINT: constants convert implicitly
  LaurentPoly(long c) : LaurentPoly(BigRat(c)) {}  // NOLINT

  static LaurentPoly variable(const std::string& name, int power = 1);
  static LaurentPoly monomial(const BigRat& c, const std::vector<std::pair<std::string, int>>& powers);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool has_variable(const std::string& v) const;
  BigRat constant_value() const;  // throws unless constant
  const BigRat& leading_coeff() const;

  int degree(const std::string& v) const;      // max exponent of v (0 if absent)
  int min_degree(const std::string& v) const;  // min exponent of v (0 if absent)
  int total_degree() const;
  // Coefficients of v^e, keyed by e; each value is free of v.
  std::map<int, LaurentPoly> coefficients_in(const std::string& v) const;
  // The monomial (coefficient 1) with componentwise-minimal exponents.
  LaurentPoly min_monomial() const;
  bool is_polynomial() const;  // all exponents >= 0

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
  LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }
  LaurentPoly scaled(const BigRat& c) const;
  // Negative powers only for monomials.
  LaurentPoly pow(int e) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  BigRat evaluate(const Bindings& at) const;
  // Replaces each bound symbol; replacements for negative exponents must be monomials.
  LaurentPoly substitute(const std::map<std::string, LaurentPoly>& repl) const;

  std::string to_string() const;

 private:
  friend class PolyBuilder;
  std::vector<std::string> vars_;
  std::vector<Term> terms_;  // descending graded-lex
  void canonicalize();
};

using Poly = LaurentPoly;

std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b);
// gcd up to units: no monomial content, leading coefficient 1 (0 if both are 0).
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const LaurentPoly& p) : num_(p), den_(1) {}  // NOLINT
  RatFunc(const BigRat& c) : num_(c), den_(1) {}       // NOLINT
  RatFunc(long c) : num_(c), den_(1) {}                // NOLINT

  static RatFunc normalize(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunc inverse() const;
  RatFunc pow(int e) const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_, Reduced{}); }
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  BigRat specialize(const Bindings& at) const;
  RatFunc substitute(const std::map<std::string, LaurentPoly>& repl) const;
  std::string to_string() const;

 private:
  struct Reduced {};
  RatFunc(LaurentPoly n, LaurentPoly d, Reduced) : num_(std::move(n)), den_(std::move(d)) {}
  LaurentPoly num_;
  LaurentPoly den_;
};

BigRat specialize(const RatFunc& f, const Bindings& at);

class TruncSeries {
 public:
  TruncSeries(std::string var, int cap);
  TruncSeries(std::string var, int cap, std::vector<LaurentPoly> coeffs);

  const std::string& var() const { return var_; }
  int cap() const { return cap_; }
  const LaurentPoly& coeff(int i) const;
  const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }
  void add_to(int i, const LaurentPoly& c);

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b);

  std::string to_string() const;

 private:
  std::string var_;
  int cap_;
  std::vector<LaurentPoly> coeffs_;  // size cap+1
};

TruncSeries series_expand(const RatFunc& f, const std::string& var, int cap);

}  // namespace metacs
