// Exact division and multivariate gcd over Q.
#include <algorithm>
#include <cstdint>

#include "poly_internal.hpp"

namespace metacs {

namespace {

using Term = LaurentPoly::Term;

LaurentPoly monic(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  return p.scaled(1 / p.leading_coeff());
}

// Polynomial division with remainder zero required; b has lt dividing everything it must.
std::optional<LaurentPoly> divide_polynomial(const LaurentPoly& a, const LaurentPoly& b) {
  auto vars = PolyBuilder::union_vars(a.variables(), b.variables());
  const std::size_t n = vars.size();
  auto r = PolyBuilder::lift(a, vars);
  auto bt = PolyBuilder::lift(b, vars);
  const Term lead = bt.front();
  BigRat inv_lead = 1 / lead.coeff;
  std::vector<Term> quot;
  std::vector<Term> next;
  while (!r.empty()) {
    Term q;
    for (std::size_t i = 0; i < n; ++i) {
      q.exp[i] = r.front().exp[i] - lead.exp[i];
      if (q.exp[i] < 0) return std::nullopt;
    }
    q.coeff = r.front().coeff * inv_lead;
    // r -= q * b, merging two descending lists
    next.clear();
    next.reserve(r.size() + bt.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < bt.size()) {
      Term s;
      int c;
      if (j < bt.size()) {
        for (std::size_t k = 0; k < n; ++k) s.exp[k] = bt[j].exp[k] + q.exp[k];
        c = i == r.size() ? 1 : grlex_cmp(r[i].exp, s.exp, n);
      } else {
        c = -1;
      }
      if (c < 0) {
        next.push_back(std::move(r[i++]));
      } else if (c > 0) {
        s.coeff = -(q.coeff * bt[j++].coeff);
        next.push_back(std::move(s));
      } else {
        BigRat v = r[i].coeff - q.coeff * bt[j].coeff;
        if (sgn(v) != 0) next.push_back({r[i].exp, v});
        ++i;
        ++j;
      }
    }
    std::swap(r, next);
    quot.push_back(std::move(q));
  }
  return PolyBuilder::make(std::move(vars), std::move(quot));
}

LaurentPoly mono_inverse(const LaurentPoly& m) { return m.pow(-1); }

// ---- modular coprimality certificate ----

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t s = lo + hi;
  if (s >= kPrime) s -= kPrime;
  return s;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kPrime - 2); }

std::optional<std::uint64_t> rat_mod(const BigRat& q) {
  std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), kPrime);
  std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
  if (den == 0) return std::nullopt;
  return mulmod(num, invmod(den));
}

using UPolyMod = std::vector<std::uint64_t>;  // index = degree

void trim(UPolyMod& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::size_t ugcd_degree(UPolyMod a, UPolyMod b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    std::uint64_t inv = invmod(b.back());
    while (a.size() >= b.size()) {
      std::uint64_t f = mulmod(a.back(), inv);
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        std::uint64_t t = mulmod(f, b[i]);
        a[i + shift] = a[i + shift] >= t ? a[i + shift] - t : a[i + shift] + kPrime - t;
      }
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

struct SplitMix {
  std::uint64_t s;
  std::uint64_t next() {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

// Image of p in F_P[x] after binding every other symbol to pt; nullopt on bad reduction.
std::optional<UPolyMod> univariate_image(const LaurentPoly& p, const std::string& x,
                                         const std::map<std::string, std::uint64_t>& pt) {
  const auto& vars = p.variables();
  std::size_t xi = vars.size();
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == x) xi = i;
  UPolyMod out(static_cast<std::size_t>(p.degree(x)) + 1, 0);
  for (const auto& t : p.terms()) {
    auto c = rat_mod(t.coeff);
    if (!c) return std::nullopt;
    std::uint64_t v = *c;
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (i != xi && t.exp[i] != 0) v = mulmod(v, powmod(pt.at(vars[i]), static_cast<std::uint64_t>(t.exp[i])));
    auto& slot = out[static_cast<std::size_t>(xi < vars.size() ? t.exp[xi] : 0)];
    slot += v;
    if (slot >= kPrime) slot -= kPrime;
  }
  return out;
}

// True only if gcd(a,b) is certainly constant. a, b polynomials without monomial content.
bool certified_coprime(const LaurentPoly& a, const LaurentPoly& b) {
  std::vector<std::string> common;
  for (const auto& v : a.variables())
    if (b.has_variable(v)) common.push_back(v);
  SplitMix rng{0x5eed1234abcdULL};
  for (const auto& x : common) {
    bool done = false;
    for (int attempt = 0; attempt < 3 && !done; ++attempt) {
      std::map<std::string, std::uint64_t> pt;
      for (const auto& v : PolyBuilder::union_vars(a.variables(), b.variables()))
        if (v != x) pt[v] = 2 + rng.next() % (kPrime - 3);
      auto ia = univariate_image(a, x, pt);
      auto ib = univariate_image(b, x, pt);
      if (!ia || !ib) return false;
      if (ia->back() == 0 || ib->back() == 0) continue;  // leading coefficient vanished
      if (ugcd_degree(*ia, *ib) != 0) return false;
      done = true;
    }
    if (!done) return false;
  }
  return true;
}

// ---- recursive primitive PRS ----

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly content_in(const LaurentPoly& p, const std::string& x) {
  LaurentPoly g;
  for (const auto& [e, c] : p.coefficients_in(x)) {
    g = poly_gcd(g, c);
    if (g.is_constant()) return LaurentPoly(1);
  }
  return g;
}

LaurentPoly exact_or_throw(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = divide_polynomial(a, b);
  if (!q) throw MathError("internal: inexact division in gcd");
  return *q;
}

LaurentPoly leading_in(const LaurentPoly& p, const std::string& x, int& deg) {
  auto cs = p.coefficients_in(x);
  deg = cs.rbegin()->first;
  return cs.rbegin()->second;
}

LaurentPoly primitive_prs(LaurentPoly a, LaurentPoly b, const std::string& x) {
  if (a.degree(x) < b.degree(x)) std::swap(a, b);
  const LaurentPoly xv = LaurentPoly::variable(x);
  while (true) {
    int db = 0;
    LaurentPoly lb = leading_in(b, x, db);
    LaurentPoly r = a;
    while (!r.is_zero() && r.degree(x) >= db) {
      int dr = 0;
      LaurentPoly lr = leading_in(r, x, dr);
      r = lb * r - lr * xv.pow(dr - db) * b;
    }
    if (r.is_zero()) return monic(b);
    if (r.degree(x) == 0) return LaurentPoly(1);
    a = std::move(b);
    b = monic(exact_or_throw(r, content_in(r, x)));
  }
}

LaurentPoly gcd_no_monomial(const LaurentPoly& a0, const LaurentPoly& b0) {
  if (a0.is_constant() || b0.is_constant()) return LaurentPoly(1);
  LaurentPoly a = monic(a0), b = monic(b0);
  if (a == b) return a;
  if (a.total_degree() < b.total_degree()) std::swap(a, b);
  if (divide_polynomial(a, b)) return b;
  if (certified_coprime(a, b)) return LaurentPoly(1);
  for (const auto& v : a.variables())
    if (!b.has_variable(v)) return poly_gcd(content_in(a, v), b);
  for (const auto& v : b.variables())
    if (!a.has_variable(v)) return poly_gcd(a, content_in(b, v));
  // Main variable: smallest combined degree.
  std::string x = a.variables().front();
  int best = a.degree(x) + b.degree(x);
  for (const auto& v : a.variables()) {
    int d = a.degree(v) + b.degree(v);
    if (d < best) {
      best = d;
      x = v;
    }
  }
  LaurentPoly ca = content_in(a, x), cb = content_in(b, x);
  LaurentPoly c = poly_gcd(ca, cb);
  LaurentPoly pa = exact_or_throw(a, ca), pb = exact_or_throw(b, cb);
  return monic(c * primitive_prs(pa, pb, x));
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  LaurentPoly ma = a.min_monomial(), mb = b.min_monomial();
  LaurentPoly m = (ma + mb).min_monomial();
  LaurentPoly a0 = a * mono_inverse(ma), b0 = b * mono_inverse(mb);
  return m * gcd_no_monomial(a0, b0);
}

}  // namespace

std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw MathError("division by zero polynomial");
  if (a.is_zero()) return LaurentPoly();
  if (b.is_monomial()) return a * b.pow(-1);
  LaurentPoly ma = a.min_monomial(), mb = b.min_monomial();
  auto q = divide_polynomial(a * mono_inverse(ma), b * mono_inverse(mb));
  if (!q) return std::nullopt;
  return *q * ma * mono_inverse(mb);
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return monic(b * mono_inverse(b.min_monomial()));
  if (b.is_zero()) return monic(a * mono_inverse(a.min_monomial()));
  return gcd_no_monomial(a * mono_inverse(a.min_monomial()), b * mono_inverse(b.min_monomial()));
}

}  // namespace metacs
