#include "metacs/hallittlewood.hpp"

#include <algorithm>
#include <map>

namespace metacs {

std::string x_var(int i) { return "x" + std::to_string(i); }

namespace {

std::vector<int> padded(const Partition& lambda, int k) {
  if (k < 1) throw MathError("k must be positive");
  if (!lambda.is_nonneg()) throw MathError("partition has negative parts");
  std::vector<int> out(static_cast<std::size_t>(k), 0);
  for (int i = 1; i <= lambda.length(); ++i) {
    if (i > k) {
      if (lambda[i] != 0) throw MathError("too many parts");
      continue;
    }
    out[static_cast<std::size_t>(i - 1)] = lambda[i];
  }
  return out;
}

LaurentPoly x_monomial(const std::vector<int>& exps) {
  std::vector<std::pair<std::string, int>> powers;
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] != 0) powers.emplace_back(x_var(static_cast<int>(i) + 1), exps[i]);
  return LaurentPoly::monomial(1, powers);
}

LaurentPoly permute_vars(const LaurentPoly& f, const WeylGL& w) {
  std::map<std::string, LaurentPoly> repl;
  for (int a = 1; a <= w.n(); ++a) repl.emplace(x_var(a), LaurentPoly::variable(x_var(w(a))));
  return f.substitute(repl);
}

int perm_sign(const WeylGL& w) { return w.length() % 2 == 0 ? 1 : -1; }

LaurentPoly vandermonde(int k) {
  LaurentPoly v = 1;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) v *= LaurentPoly::variable(x_var(i)) - LaurentPoly::variable(x_var(j));
  return v;
}

LaurentPoly divide_or_throw(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = exact_divide(a, b);
  if (!q) throw MathError("symmetrization left a remainder");
  return *q;
}

// coefficient of x^exps, as a polynomial in the remaining variables
LaurentPoly x_coefficient(LaurentPoly f, const std::vector<int>& exps) {
  for (std::size_t i = 0; i < exps.size(); ++i) {
    auto parts = f.coefficients_in(x_var(static_cast<int>(i) + 1));
    auto it = parts.find(exps[i]);
    if (it == parts.end()) return 0;
    f = it->second;
  }
  return f;
}

}  // namespace

LaurentPoly hl_P(const Partition& lambda, int k, const std::optional<LaurentPoly>& t_value, Exec exec) {
  const std::vector<int> parts = padded(lambda, k);
  const LaurentPoly t = LaurentPoly::variable(kHLParam);
  LaurentPoly base = x_monomial(parts);
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) base *= LaurentPoly::variable(x_var(i)) - t * LaurentPoly::variable(x_var(j));

  const auto perms = WeylGL::all(k);
  const auto images = map_indices<LaurentPoly>(exec, perms.size(), [&](std::size_t i) {
    return permute_vars(base, perms[i]).scaled(perm_sign(perms[i]));
  });
  LaurentPoly sum;
  for (const auto& term : images) sum += term;
  LaurentPoly result = divide_or_throw(sum, vandermonde(k));

  // v_lambda(t) = prod over multiplicities m of [1]_t [2]_t ... [m]_t
  std::map<int, int> mult;
  for (int x : parts) ++mult[x];
  for (const auto& [part, m] : mult)
    for (int j = 2; j <= m; ++j) {
      LaurentPoly qint = 0;
      for (int e = 0; e < j; ++e) qint += t.pow(e);
      result = divide_or_throw(result, qint);
    }
  if (t_value) result = result.substitute({{kHLParam, *t_value}});
  return result;
}

LaurentPoly monomial_symmetric(const Partition& lambda, int k) {
  std::vector<int> exps = padded(lambda, k);
  std::sort(exps.begin(), exps.end());
  LaurentPoly out;
  do out += x_monomial(exps);
  while (std::next_permutation(exps.begin(), exps.end()));
  return out;
}

LaurentPoly schur_bialternant(const Partition& lambda, int k) {
  const std::vector<int> parts = padded(lambda, k);
  auto alternant = [&](auto exponent_of) {
    LaurentPoly det;
    for (const auto& w : WeylGL::all(k)) {
      std::vector<int> exps(static_cast<std::size_t>(k));
      for (int i = 1; i <= k; ++i) exps[static_cast<std::size_t>(i - 1)] = exponent_of(w(i));
      det += x_monomial(exps).scaled(perm_sign(w));
    }
    return det;
  };
  const LaurentPoly num = alternant([&](int j) { return parts[static_cast<std::size_t>(j - 1)] + k - j; });
  const LaurentPoly den = alternant([&](int j) { return k - j; });
  return divide_or_throw(num, den);
}

bool is_symmetric(const LaurentPoly& f, int k) {
  for (int i = 1; i < k; ++i)
    if (permute_vars(f, WeylGL::simple(i, k)) != f) return false;
  return true;
}

HLSpecializationReport hl_specialization_checks(const Partition& lambda, int k) {
  HLSpecializationReport r;
  const LaurentPoly p = hl_P(lambda, k);
  r.symmetric = is_symmetric(p, k);
  r.unit_leading = x_coefficient(p, padded(lambda, k)) == LaurentPoly(1);
  r.schur_at_zero = p.substitute({{kHLParam, LaurentPoly(0)}}) == schur_bialternant(lambda, k);
  r.monomial_at_one = p.substitute({{kHLParam, LaurentPoly(1)}}) == monomial_symmetric(lambda, k);
  return r;
}

std::vector<Partition> even_partitions(int k, int bound) {
  if (bound < 0) throw MathError("bound must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int max_part, int budget) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.emplace_back(cur);
      return;
    }
    for (int part = 0; part <= std::min(max_part, budget); part += 2) {
      cur.push_back(part);
      self(self, part, budget - part);
      cur.pop_back();
    }
  };
  rec(rec, bound, bound);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() < b.parts();
  });
  return out;
}

HLSumReport hl_sum_identity_check(int k, int bound, Exec exec) {
  const std::string grade = "T";
  const LaurentPoly t = LaurentPoly::variable(kHLParam);
  TruncSeries product(grade, bound, {LaurentPoly(1)});
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) {
      const LaurentPoly xx = LaurentPoly::variable(x_var(i)) * LaurentPoly::variable(x_var(j));
      TruncSeries geometric(grade, bound);
      for (int m = 0; 2 * m <= bound; ++m) geometric.add_to(2 * m, xx.pow(m));
      product = product * geometric;
      if (i < j) product = product * TruncSeries(grade, bound, {LaurentPoly(1), LaurentPoly(0), -t * xx});
    }

  const auto parts = even_partitions(k, bound);
  const auto polys = map_indices<LaurentPoly>(exec, parts.size(), [&](std::size_t i) { return hl_P(parts[i], k); });
  std::vector<LaurentPoly> by_degree(static_cast<std::size_t>(bound) + 1);
  for (std::size_t i = 0; i < parts.size(); ++i) by_degree[static_cast<std::size_t>(parts[i].size())] += polys[i];

  HLSumReport r;
  r.pass = true;
  for (int d = 0; d <= bound; ++d) {
    const LaurentPoly diff = by_degree[static_cast<std::size_t>(d)] - product.coeff(d);
    if (!diff.is_zero()) {
      r.pass = false;
      r.witness = "degree " + std::to_string(d) + ": " + diff.to_string();
      break;
    }
    r.degree_checked = d;
  }
  return r;
}

}  // namespace metacs
