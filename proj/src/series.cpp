#include "poly_internal.hpp"

namespace metacs {

TruncSeries::TruncSeries(std::string var, int cap) : var_(std::move(var)), cap_(cap), coeffs_(cap + 1) {
  if (cap < 0) throw MathError("negative truncation order");
}

TruncSeries::TruncSeries(std::string var, int cap, std::vector<LaurentPoly> coeffs)
    : TruncSeries(std::move(var), cap) {
  for (std::size_t i = 0; i < coeffs.size() && i <= static_cast<std::size_t>(cap); ++i) {
    if (coeffs[i].has_variable(var_)) throw MathError("series coefficient depends on " + var_);
    coeffs_[i] = std::move(coeffs[i]);
  }
}

const LaurentPoly& TruncSeries::coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }

void TruncSeries::add_to(int i, const LaurentPoly& c) {
  if (i < 0) throw MathError("negative series index");
  if (i > cap_) return;
  coeffs_[static_cast<std::size_t>(i)] += c;
}

namespace {

void check_compatible(const TruncSeries& a, const TruncSeries& b) {
  if (a.var() != b.var() || a.cap() != b.cap()) throw MathError("incompatible series");
}

}  // namespace

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  check_compatible(a, b);
  TruncSeries r = a;
  for (int i = 0; i <= a.cap_; ++i) r.coeffs_[i] += b.coeffs_[i];
  return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  check_compatible(a, b);
  TruncSeries r = a;
  for (int i = 0; i <= a.cap_; ++i) r.coeffs_[i] -= b.coeffs_[i];
  return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  check_compatible(a, b);
  TruncSeries r(a.var_, a.cap_);
  for (int i = 0; i <= a.cap_; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= a.cap_; ++j)
      if (!b.coeffs_[j].is_zero()) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
  return a.var_ == b.var_ && a.cap_ == b.cap_ && a.coeffs_ == b.coeffs_;
}

std::string TruncSeries::to_string() const {
  std::string s;
  for (int i = 0; i <= cap_; ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + coeffs_[i].to_string() + ")";
    if (i > 0) s += "*" + var_ + "^" + std::to_string(i);
  }
  s += " + O(" + var_ + "^" + std::to_string(cap_ + 1) + ")";
  return s;
}

TruncSeries series_expand(const RatFunc& f, const std::string& var, int cap) {
  auto num = f.num().coefficients_in(var);
  auto den = f.den().coefficients_in(var);
  const int shift_den = den.begin()->first;
  const LaurentPoly& d0 = den.begin()->second;
  if (!d0.is_monomial()) throw MathError("not expandable at " + var + "=0");
  LaurentPoly inv0 = d0.pow(-1);
  int shift_num = num.empty() ? 0 : num.begin()->first;
  TruncSeries out(var, cap);
  if (num.empty()) return out;
  const int offset = shift_num - shift_den;
  if (offset < 0) throw MathError("not expandable at " + var + "=0");
  // Dense coefficient arrays after removing the lowest powers.
  std::vector<LaurentPoly> nd(static_cast<std::size_t>(cap + 1)), dd(static_cast<std::size_t>(cap + 1));
  for (const auto& [e, c] : num)
    if (e - shift_num <= cap) nd[static_cast<std::size_t>(e - shift_num)] = c;
  for (const auto& [e, c] : den)
    if (e - shift_den <= cap) dd[static_cast<std::size_t>(e - shift_den)] = c;
  // s = n / d term by term: s_j = inv0 * (n_j - sum_{i>=1} d_i s_{j-i})
  std::vector<LaurentPoly> s(static_cast<std::size_t>(cap + 1));
  for (int j = 0; j + offset <= cap; ++j) {
    LaurentPoly acc = nd[static_cast<std::size_t>(j)];
    for (int i = 1; i <= j; ++i)
      if (!dd[static_cast<std::size_t>(i)].is_zero() && !s[static_cast<std::size_t>(j - i)].is_zero())
        acc -= dd[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j - i)];
    s[static_cast<std::size_t>(j)] = acc * inv0;
    out.add_to(j + offset, s[static_cast<std::size_t>(j)]);
  }
  return out;
}

}  // namespace metacs
