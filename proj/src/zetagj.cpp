#include "metacs/zetagj.hpp"

#include <map>

#include "metacs/csmodel.hpp"
#include "metacs/hallittlewood.hpp"

namespace metacs {

namespace {

const LaurentPoly& q_inv() {
  static const LaurentPoly v = LaurentPoly::variable("u", 4);
  return v;
}

LaurentPoly hl_at(const Partition& lambda, const SatakeParams& params) {
  std::map<std::string, LaurentPoly> repl;
  for (int i = 1; i <= params.k(); ++i) repl.emplace(x_var(i), params.x[static_cast<std::size_t>(i - 1)]);
  return hl_P(lambda, params.k(), q_inv()).substitute(repl);
}

void require_params(const SatakeParams& params, int bound) {
  if (params.k() < 1) throw MathError("at least one Satake parameter required");
  if (bound < 0) throw MathError("bound must be nonnegative");
}

}  // namespace

SatakeParams SatakeParams::symbolic(int k) {
  SatakeParams p;
  for (int i = 1; i <= k; ++i) p.x.push_back(LaurentPoly::variable(x_var(i)));
  return p;
}

SatakeParams SatakeParams::numeric(const std::vector<BigRat>& values) {
  SatakeParams p;
  for (const auto& v : values) {
    if (sgn(v) == 0) throw MathError("Satake parameters must be nonzero");
    p.x.emplace_back(v);
  }
  return p;
}

RatFunc l_quotient_closed(const SatakeParams& params) {
  const LaurentPoly X2 = LaurentPoly::variable(kZetaVar, 2);
  LaurentPoly num = 1, den = 1;
  for (int i = 0; i < params.k(); ++i)
    for (int j = i; j < params.k(); ++j) {
      const LaurentPoly xx = params.x[static_cast<std::size_t>(i)] * params.x[static_cast<std::size_t>(j)] * X2;
      den *= LaurentPoly(1) - xx;
      if (i < j) num *= LaurentPoly(1) - q_inv() * xx;
    }
  return RatFunc::normalize(num, den);
}

RatFunc l_quotient_closed(int k) { return l_quotient_closed(SatakeParams::symbolic(k)); }

TruncSeries zeta_series(const SatakeParams& params, int bound, Exec exec) {
  require_params(params, bound);
  const auto parts = even_partitions(params.k(), bound);
  const auto polys = map_indices<LaurentPoly>(exec, parts.size(), [&](std::size_t i) { return hl_at(parts[i], params); });
  TruncSeries out(kZetaVar, bound);
  for (std::size_t i = 0; i < parts.size(); ++i) out.add_to(parts[i].size(), polys[i]);
  return out;
}

ZetaReport zeta_check(const SatakeParams& params, int bound, Exec exec) {
  const TruncSeries lhs = zeta_series(params, bound, exec);
  const TruncSeries rhs = series_expand(l_quotient_closed(params), kZetaVar, bound);
  ZetaReport r;
  r.pass = true;
  for (int d = 0; d <= bound; ++d) {
    const LaurentPoly diff = lhs.coeff(d) - rhs.coeff(d);
    if (!diff.is_zero()) {
      r.pass = false;
      r.witness = "X^" + std::to_string(d) + ": " + diff.to_string();
      break;
    }
  }
  return r;
}

ZetaFromCS zeta_from_cs(const SatakeParams& params, int bound, Exec exec) {
  require_params(params, bound);
  const int k = params.k();
  const auto parts = even_partitions(k, bound);
  const auto terms = map_indices<RatFunc>(exec, parts.size(), [&](std::size_t i) {
    const Partition& lam = parts[i];
    const RatFunc shalika = theta_normalized_value(k, lam).ratio;
    // vol * f = delta_{B_k}^{-1/2} P_lambda; |det|^{-k/2} = u^{-2k|lambda|}
    const RatFunc shift(LaurentPoly::variable("u", -2 * k * lam.size()));
    return RatFunc(hl_at(lam, params)) / RatFunc(delta_B_half(lam, k)) * shalika * shalika * shift;
  });
  ZetaFromCS r{TruncSeries(kZetaVar, bound), true, {}};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!terms[i].is_polynomial()) {
      if (r.terms_polynomial) r.witness = parts[i].to_string();
      r.terms_polynomial = false;
      continue;
    }
    r.series.add_to(parts[i].size(), terms[i].num().scaled(1 / terms[i].den().constant_value()));
  }
  return r;
}

}  // namespace metacs
