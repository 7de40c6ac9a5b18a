#include "poly_internal.hpp"

namespace metacs {

namespace {

LaurentPoly divide_or_throw(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = exact_divide(a, b);
  if (!q) throw MathError("internal: inexact division");
  return *q;
}

}  // namespace

RatFunc RatFunc::normalize(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw MathError("division by zero polynomial");
  if (num.is_zero()) return RatFunc();
  // Move the monomial part of den into num, then cancel the gcd and make den monic.
  LaurentPoly md = den.min_monomial().pow(-1);
  LaurentPoly n = num * md, d = den * md;
  if (!d.is_monomial()) {
    LaurentPoly g = gcd(n, d);
    if (!g.is_constant()) {
      n = divide_or_throw(n, g);
      d = divide_or_throw(d, g);
    }
  }
  BigRat lc = d.leading_coeff();
  if (lc != 1) {
    n = n.scaled(1 / lc);
    d = d.scaled(1 / lc);
  }
  return RatFunc(std::move(n), std::move(d), Reduced{});
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw MathError("division by zero polynomial");
  return normalize(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  // Powers of coprime pairs stay coprime.
  return RatFunc(num_.pow(e), den_.pow(e), Reduced{});
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc::normalize(a.num_ + b.num_, a.den_);
  if (a.den_.is_constant() && b.den_.is_constant()) return RatFunc(a.num_ + b.num_, LaurentPoly(1), RatFunc::Reduced{});
  LaurentPoly g = gcd(a.den_, b.den_);
  if (g.is_constant()) {
    // Coprime denominators: the sum is already reduced.
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RatFunc::Reduced{});
  }
  LaurentPoly da = divide_or_throw(a.den_, g), db = divide_or_throw(b.den_, g);
  LaurentPoly n = a.num_ * db + b.num_ * da;
  if (n.is_zero()) return RatFunc();
  LaurentPoly d = da * b.den_;
  // Only factors of g can be shared with n.
  LaurentPoly h = gcd(n, g);
  if (!h.is_constant()) {
    n = divide_or_throw(n, h);
    d = divide_or_throw(d, h);
  }
  return RatFunc::normalize(n, d);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.den_.is_constant() && b.den_.is_constant()) return RatFunc(a.num_ * b.num_, LaurentPoly(1), RatFunc::Reduced{});
  LaurentPoly an = a.num_, bn = b.num_, ad = a.den_, bd = b.den_;
  LaurentPoly g1 = gcd(an, bd);
  if (!g1.is_constant()) {
    an = divide_or_throw(an, g1);
    bd = divide_or_throw(bd, g1);
  }
  LaurentPoly g2 = gcd(bn, ad);
  if (!g2.is_constant()) {
    bn = divide_or_throw(bn, g2);
    ad = divide_or_throw(ad, g2);
  }
  LaurentPoly d = ad * bd;
  LaurentPoly n = an * bn;
  BigRat lc = d.leading_coeff();
  if (lc != 1) {
    n = n.scaled(1 / lc);
    d = d.scaled(1 / lc);
  }
  return RatFunc(std::move(n), std::move(d), RatFunc::Reduced{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

BigRat RatFunc::specialize(const Bindings& at) const {
  BigRat d = den_.evaluate(at);
  if (sgn(d) == 0) throw MathError("pole at the point: denominator " + den_.to_string() + " vanishes");
  return num_.evaluate(at) / d;
}

BigRat specialize(const RatFunc& f, const Bindings& at) { return f.specialize(at); }

RatFunc RatFunc::substitute(const std::map<std::string, LaurentPoly>& repl) const {
  return normalize(num_.substitute(repl), den_.substitute(repl));
}

std::string RatFunc::to_string() const {
  if (den_.is_constant() && den_.constant_value() == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace metacs
