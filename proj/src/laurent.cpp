#include <algorithm>
#include <cctype>
#include <sstream>

#include "poly_internal.hpp"

namespace metacs {

std::string to_string(const BigRat& q) { return q.get_str(); }

GaussRat GaussRat::inverse() const {
  BigRat norm = re_ * re_ + im_ * im_;
  if (sgn(norm) == 0) throw MathError("division by zero in Q(i)");
  return {re_ / norm, -im_ / norm};
}

std::string GaussRat::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string s = sgn(re_) == 0 ? "" : re_.get_str();
  if (sgn(im_) > 0 && !s.empty()) s += "+";
  if (im_ == 1) s += "i";
  else if (im_ == -1) s += "-i";
  else s += im_.get_str() + "*i";
  return s;
}

bool var_name_less(std::string_view a, std::string_view b) {
  auto split = [](std::string_view s) {
    std::size_t k = s.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
    return std::pair{s.substr(0, k), s.substr(k)};
  };
  auto [pa, na] = split(a);
  auto [pb, nb] = split(b);
  if (pa != pb) return pa < pb;
  if (na.size() != nb.size()) return na.size() < nb.size();
  return na < nb;
}

int grlex_cmp(const Exponents& a, const Exponents& b, std::size_t n) {
  long da = 0, db = 0;
  for (std::size_t i = 0; i < n; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? -1 : 1;
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  return 0;
}

namespace {

std::size_t index_of(const std::vector<std::string>& vars, const std::string& v) {
  auto it = std::lower_bound(vars.begin(), vars.end(), v,
                             [](const std::string& x, const std::string& y) { return var_name_less(x, y); });
  if (it == vars.end() || *it != v) return vars.size();
  return static_cast<std::size_t>(it - vars.begin());
}

}  // namespace

std::vector<std::string> PolyBuilder::union_vars(const std::vector<std::string>& a,
                                                 const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                 [](const std::string& x, const std::string& y) { return var_name_less(x, y); });
  if (out.size() > kMaxVars) throw MathError("too many variables");
  return out;
}

std::vector<LaurentPoly::Term> PolyBuilder::lift(const LaurentPoly& p, const std::vector<std::string>& vars) {
  if (p.vars_ == vars) return p.terms_;
  std::vector<std::size_t> map(p.vars_.size());
  for (std::size_t i = 0; i < p.vars_.size(); ++i) map[i] = index_of(vars, p.vars_[i]);
  std::vector<LaurentPoly::Term> out;
  out.reserve(p.terms_.size());
  for (const auto& t : p.terms_) {
    LaurentPoly::Term nt;
    nt.coeff = t.coeff;
    for (std::size_t i = 0; i < map.size(); ++i) nt.exp[map[i]] = t.exp[i];
    out.push_back(std::move(nt));
  }
  return out;
}

LaurentPoly PolyBuilder::make(std::vector<std::string> vars, std::vector<LaurentPoly::Term> terms) {
  LaurentPoly p;
  p.vars_ = std::move(vars);
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

void LaurentPoly::canonicalize() {
  const std::size_t n = vars_.size();
  std::sort(terms_.begin(), terms_.end(),
            [n](const Term& a, const Term& b) { return grlex_cmp(a.exp, b.exp, n) < 0; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && grlex_cmp(merged.back().exp, t.exp, n) == 0) {
      merged.back().coeff += t.coeff;
    } else {
      if (!merged.empty() && sgn(merged.back().coeff) == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && sgn(merged.back().coeff) == 0) merged.pop_back();
  terms_ = std::move(merged);
  // Drop symbols that no longer occur.
  std::vector<bool> used(n, false);
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < n; ++i)
      if (t.exp[i] != 0) used[i] = true;
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
  std::vector<std::string> kept;
  std::vector<std::size_t> keep_idx;
  for (std::size_t i = 0; i < n; ++i)
    if (used[i]) {
      kept.push_back(vars_[i]);
      keep_idx.push_back(i);
    }
  for (auto& t : terms_) {
    Exponents e{};
    for (std::size_t j = 0; j < keep_idx.size(); ++j) e[j] = t.exp[keep_idx[j]];
    t.exp = e;
  }
  vars_ = std::move(kept);
}

LaurentPoly::LaurentPoly(const BigRat& c) {
  if (sgn(c) != 0) terms_.push_back(Term{Exponents{}, c});
}

LaurentPoly LaurentPoly::variable(const std::string& name, int power) {
  return monomial(1, {{name, power}});
}

LaurentPoly LaurentPoly::monomial(const BigRat& c, const std::vector<std::pair<std::string, int>>& powers) {
  std::vector<std::string> vars;
  for (const auto& [v, e] : powers) vars = PolyBuilder::union_vars(vars, {v});
  Term t;
  t.coeff = c;
  for (const auto& [v, e] : powers) t.exp[index_of(vars, v)] += e;
  return PolyBuilder::make(std::move(vars), {t});
}

bool LaurentPoly::has_variable(const std::string& v) const { return index_of(vars_, v) < vars_.size(); }

BigRat LaurentPoly::constant_value() const {
  if (!is_constant()) throw MathError("polynomial is not constant: " + to_string());
  return terms_.empty() ? BigRat(0) : terms_.front().coeff;
}

const BigRat& LaurentPoly::leading_coeff() const {
  if (terms_.empty()) throw MathError("leading coefficient of zero polynomial");
  return terms_.front().coeff;
}

int LaurentPoly::degree(const std::string& v) const {
  auto i = index_of(vars_, v);
  if (i >= vars_.size()) return 0;
  int d = terms_.front().exp[i];
  for (const auto& t : terms_) d = std::max(d, t.exp[i]);
  return d;
}

int LaurentPoly::min_degree(const std::string& v) const {
  auto i = index_of(vars_, v);
  if (i >= vars_.size()) return 0;
  int d = terms_.front().exp[i];
  for (const auto& t : terms_) d = std::min(d, t.exp[i]);
  return d;
}

int LaurentPoly::total_degree() const {
  if (terms_.empty()) return 0;
  int d = 0;
  for (std::size_t i = 0; i < vars_.size(); ++i) d += terms_.front().exp[i];
  return d;
}

std::map<int, LaurentPoly> LaurentPoly::coefficients_in(const std::string& v) const {
  std::map<int, LaurentPoly> out;
  auto idx = index_of(vars_, v);
  if (idx >= vars_.size()) {
    if (!is_zero()) out.emplace(0, *this);
    return out;
  }
  std::map<int, std::vector<Term>> buckets;
  for (const auto& t : terms_) {
    Term nt = t;
    nt.exp[idx] = 0;
    buckets[t.exp[idx]].push_back(std::move(nt));
  }
  for (auto& [e, ts] : buckets) out.emplace(e, PolyBuilder::make(vars_, std::move(ts)));
  return out;
}

LaurentPoly LaurentPoly::min_monomial() const {
  if (terms_.empty()) return LaurentPoly(1);
  Term m;
  m.coeff = 1;
  m.exp = terms_.front().exp;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < vars_.size(); ++i) m.exp[i] = std::min(m.exp[i], t.exp[i]);
  return PolyBuilder::make(vars_, {m});
}

bool LaurentPoly::is_polynomial() const {
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (t.exp[i] < 0) return false;
  return true;
}

namespace {

LaurentPoly add_impl(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
  auto vars = PolyBuilder::union_vars(a.variables(), b.variables());
  auto ta = PolyBuilder::lift(a, vars);
  auto tb = PolyBuilder::lift(b, vars);
  const std::size_t n = vars.size();
  std::vector<LaurentPoly::Term> out;
  out.reserve(ta.size() + tb.size());
  std::size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    int c = i == ta.size() ? 1 : j == tb.size() ? -1 : grlex_cmp(ta[i].exp, tb[j].exp, n);
    if (c < 0) {
      out.push_back(std::move(ta[i++]));
    } else if (c > 0) {
      out.push_back(std::move(tb[j++]));
      if (subtract) out.back().coeff = -out.back().coeff;
    } else {
      BigRat s = subtract ? BigRat(ta[i].coeff - tb[j].coeff) : BigRat(ta[i].coeff + tb[j].coeff);
      if (sgn(s) != 0) out.push_back({ta[i].exp, s});
      ++i;
      ++j;
    }
  }
  return PolyBuilder::make(std::move(vars), std::move(out));
}

}  // namespace

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  return add_impl(a, b, false);
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) return a;
  return add_impl(a, b, true);
}

LaurentPoly operator-(const LaurentPoly& a) { return a.scaled(-1); }

LaurentPoly LaurentPoly::scaled(const BigRat& c) const {
  if (sgn(c) == 0) return {};
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) return b.scaled(a.terms_.front().coeff);
  if (b.is_constant()) return a.scaled(b.terms_.front().coeff);
  auto vars = PolyBuilder::union_vars(a.vars_, b.vars_);
  auto ta = PolyBuilder::lift(a, vars);
  auto tb = PolyBuilder::lift(b, vars);
  const std::size_t n = vars.size();
  std::vector<LaurentPoly::Term> out;
  out.reserve(ta.size() * tb.size());
  for (const auto& x : ta)
    for (const auto& y : tb) {
      LaurentPoly::Term t;
      for (std::size_t i = 0; i < n; ++i) t.exp[i] = x.exp[i] + y.exp[i];
      t.coeff = x.coeff * y.coeff;
      out.push_back(std::move(t));
    }
  return PolyBuilder::make(std::move(vars), std::move(out));
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) {
    if (!is_monomial()) throw MathError("negative power of a non-monomial");
    Term t = terms_.front();
    t.coeff = 1 / t.coeff;
    for (std::size_t i = 0; i < vars_.size(); ++i) t.exp[i] = -t.exp[i];
    return PolyBuilder::make(vars_, {t}).pow(-e);
  }
  LaurentPoly result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
  const std::size_t n = a.vars_.size();
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
    if (grlex_cmp(a.terms_[i].exp, b.terms_[i].exp, n) != 0) return false;
  }
  return true;
}

namespace {

BigRat rat_pow(const BigRat& x, int e) {
  if (e < 0) {
    if (sgn(x) == 0) throw MathError("zero raised to a negative power");
    return rat_pow(1 / BigRat(x), -e);
  }
  BigRat r = 1, b = x;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

}  // namespace

BigRat LaurentPoly::evaluate(const Bindings& at) const {
  std::vector<const BigRat*> vals(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = at.find(vars_[i]);
    if (it == at.end()) throw MathError("unbound symbol " + vars_[i]);
    vals[i] = &it->second;
  }
  BigRat sum = 0;
  for (const auto& t : terms_) {
    BigRat v = t.coeff;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (t.exp[i] != 0) v *= rat_pow(*vals[i], t.exp[i]);
    sum += v;
  }
  return sum;
}

LaurentPoly LaurentPoly::substitute(const std::map<std::string, LaurentPoly>& repl) const {
  std::vector<const LaurentPoly*> r(vars_.size(), nullptr);
  bool any = false;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = repl.find(vars_[i]);
    if (it != repl.end()) {
      r[i] = &it->second;
      any = true;
    }
  }
  if (!any) return *this;
  std::map<std::pair<std::size_t, int>, LaurentPoly> cache;
  auto power = [&](std::size_t i, int e) -> const LaurentPoly& {
    auto key = std::pair{i, e};
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, r[i]->pow(e)).first;
    return it->second;
  };
  LaurentPoly sum;
  for (const auto& t : terms_) {
    Term rest = t;
    LaurentPoly factor(1);
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (r[i] && t.exp[i] != 0) {
        factor *= power(i, t.exp[i]);
        rest.exp[i] = 0;
      }
    sum += PolyBuilder::make(vars_, {rest}) * factor;
  }
  return sum;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (t.exp[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (t.exp[i] != 1) mono += "^" + std::to_string(t.exp[i]);
    }
    BigRat c = t.coeff;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? "-" : "+");
    }
    first = false;
    if (mono.empty()) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << mono;
    }
  }
  return os.str();
}

}  // namespace metacs
