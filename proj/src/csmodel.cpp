#include "metacs/csmodel.hpp"

namespace metacs {

namespace {

const LaurentPoly& q_inv() {
  static const LaurentPoly v = LaurentPoly::variable("u", 4);
  return v;
}

const LaurentPoly& q_inv_half() {
  static const LaurentPoly v = LaurentPoly::variable("u", 2);
  return v;
}

std::string root_string(const GLRoot& a) { return "(" + std::to_string(a.i) + "," + std::to_string(a.j) + ")"; }

SpRoot simple_sp_root(int i, int k) {
  return i < k ? SpRoot{SpKind::short_minus, i, i + 1} : SpRoot{SpKind::long_root, k, 0};
}

RatFunc c_from_value(const RatFunc& x, const GLRoot& alpha) {
  const RatFunc den = RatFunc(1) - x;
  if (den.is_zero()) throw MathError("non-regular character at " + root_string(alpha));
  return (RatFunc(1) - RatFunc(q_inv()) * x) / den;
}

void require_rank(const CSInput& in, const Partition& lambda) {
  if (lambda.length() != in.k()) throw MathError("lambda must have k entries");
  if (in.eps != 1 && in.eps != -1) throw MathError("eps must be +1 or -1");
}

RatFunc beta_of(const SymplecticChar& eta, int eps) {
  const int k = eta.k();
  RatFunc b = half_root_product(eta).inverse();
  for (const auto& alpha : positive_roots_sp(k)) {
    if (alpha.is_long())
      b *= RatFunc(1) - RatFunc(q_inv_half().scaled(eps)) * eval_half_long(eta, alpha, 1);
    else
      b *= RatFunc(1) - RatFunc(q_inv()) * eval_a(eta, sp_to_gl(alpha, k));
  }
  return b;
}

}  // namespace

RatFunc c_alpha(const TorusChar& chi, const GLRoot& alpha) { return c_from_value(chi.eval_a(alpha), alpha); }

RatFunc c_alpha(const SymplecticChar& chi, const GLRoot& alpha) { return c_from_value(eval_a(chi, alpha), alpha); }

RatFunc c_w(const TorusChar& chi, const WeylGL& w) {
  RatFunc out = 1;
  for (const auto& alpha : inversions(w)) out *= c_alpha(chi, alpha);
  return out;
}

RatFunc c_w(const SymplecticChar& chi, const WeylGL& w) {
  RatFunc out = 1;
  for (const auto& alpha : inversions(w)) out *= c_alpha(chi, alpha);
  return out;
}

GLRoot sp_to_gl(const SpRoot& alpha, int k) {
  const int n = 2 * k;
  switch (alpha.kind) {
    case SpKind::short_minus: return {alpha.i, alpha.j};
    case SpKind::short_plus: return {alpha.i, n + 1 - alpha.j};
    default: return {alpha.i, n + 1 - alpha.i};
  }
}

RatFunc y_alpha(const CSInput& in, const SpRoot& alpha) {
  if (!alpha.is_long()) {
    const GLRoot r = sp_to_gl(alpha, in.k());
    return c_alpha(in.eta, r) * c_alpha(in.eta.inverse(), r);
  }
  // x = eta^{1/2}(a_alpha)
  const RatFunc x = eval_half_long(in.eta, alpha, 1);
  const RatFunc e(q_inv_half().scaled(in.eps));
  const RatFunc den = RatFunc(1) - x.pow(-2);
  if (den.is_zero()) throw MathError("non-regular character at " + alpha.to_string());
  return (RatFunc(1) + e * x) * (RatFunc(1) - e / x) / den;
}

RatFunc A_w(const CSInput& in, const WeylSp& w) {
  RatFunc out = 1;
  for (const auto& alpha : w.inversions()) out *= y_alpha(in, alpha);
  return out;
}

RatFunc A_w_by_word(const CSInput& in, const WeylSp& w, DescentChoice choice) {
  const int k = in.k();
  const auto word = w.reduced_word(choice);
  RatFunc out = 1;
  WeylSp suffix = WeylSp::identity(k);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const CSInput moved{weyl_act(suffix, in.eta), in.eps};
    out *= y_alpha(moved, simple_sp_root(*it, k));
    suffix = WeylSp::simple(*it, k) * suffix;
  }
  return out;
}

RatFunc a_rank_one_closed_form(const CSInput& in, int i) {
  const int k = in.k();
  if (i < 1 || i > k) throw MathError("generator index out of range");
  const GLRoot r{i, i + 1};
  const SymplecticChar chi = in.eta.inverse();
  if (i == k) {
    const RatFunc half = eval_half_long(in.eta, simple_sp_root(k, k), 1);
    return c_alpha(chi, r) - RatFunc(q_inv()) + RatFunc(q_inv_half().scaled(in.eps)) * half;
  }
  const RatFunc q(q_inv());
  const RatFunc chi_inv_a = eval_a(in.eta, r);
  const RatFunc c_minus_one = c_alpha(chi, r) - RatFunc(1);
  return -(c_minus_one * c_minus_one) + RatFunc(1) - q + q * q +
         (RatFunc(1) - q) * (RatFunc(1) - q) * chi_inv_a / (RatFunc(1) - chi_inv_a);
}

RatFunc beta(const CSInput& in) { return beta_of(in.eta, in.eps); }

std::vector<RatFunc> cs_expanded_terms(const CSInput& in, const Partition& lambda, Exec exec) {
  require_rank(in, lambda);
  const int k = in.k();
  const auto weyl = WeylSp::all(k);
  const auto gl_roots = positive_roots_gl(2 * k);
  return map_indices<RatFunc>(exec, weyl.size(), [&](std::size_t idx) {
    const WeylSp& w = weyl[idx];
    const WeylGL g = embed_sp(w);
    RatFunc term = A_w(in, w);
    if (term.is_zero()) return term;
    for (const auto& alpha : gl_roots)
      if (g.apply(alpha).positive()) term *= c_alpha(in.eta, alpha);
    return term * eval_torus(weyl_act(w, in.eta).inverse(), lambda);
  });
}

RatFunc cs_value_expanded(const CSInput& in, const Partition& lambda, Exec exec) {
  require_rank(in, lambda);
  if (!lambda.is_even()) return 0;
  RatFunc sum = 0;
  for (const auto& t : cs_expanded_terms(in, lambda, exec)) sum += t;
  return sum * RatFunc(delta_B_half(lambda, 2 * in.k())) / RatFunc(poincare_Q(2 * in.k()));
}

RatFunc cs_value_compact(const CSInput& in, const Partition& lambda, Exec exec) {
  require_rank(in, lambda);
  if (!lambda.is_even()) return 0;
  const int k = in.k();
  const RatFunc b = beta(in);
  if (b.is_zero()) throw MathError("beta vanishes identically");
  const auto weyl = WeylSp::all(k);
  const auto terms = map_indices<RatFunc>(exec, weyl.size(), [&](std::size_t idx) {
    const SymplecticChar moved = weyl_act(weyl[idx], in.eta);
    RatFunc t = beta_of(moved, in.eps) * eval_torus(moved.inverse(), lambda);
    return sp_length(weyl[idx]) % 2 == 0 ? t : -t;
  });
  RatFunc sum = 0;
  for (const auto& t : terms) sum += t;
  const RatFunc prefactor = c_w(in.eta, WeylGL::longest(2 * k)) / b;
  return prefactor * sum * RatFunc(delta_B_half(lambda, 2 * k)) / RatFunc(poincare_Q(2 * k));
}

ThetaReport theta_normalized_value(int k, const Partition& lambda) {
  const CSInput in{theta_char(k), 1};
  require_rank(in, lambda);
  ThetaReport r;
  if (!lambda.is_even()) {
    r.ratio = cs_value_expanded(in, lambda);
    r.expected = 0;
    r.pass = r.ratio.is_zero();
    return r;
  }
  const auto weyl = WeylSp::all(k);
  const auto terms = cs_expanded_terms(in, lambda);
  for (std::size_t i = 0; i < weyl.size(); ++i)
    if (!weyl[i].is_identity() && !terms[i].is_zero()) r.survivors.push_back(weyl[i].to_string());
  r.ratio = cs_value_expanded(in, lambda) / cs_value_expanded(in, Partition::zero(k));
  r.expected = delta_B_quarter(lambda, 2 * k);
  r.pass = r.survivors.empty() && r.ratio == RatFunc(r.expected);
  return r;
}

}  // namespace metacs
