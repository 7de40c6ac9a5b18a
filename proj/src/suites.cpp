#include "metacs/suites.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "metacs/clifford.hpp"
#include "metacs/cocycle.hpp"
#include "metacs/csmodel.hpp"
#include "metacs/hallittlewood.hpp"
#include "metacs/padicweil.hpp"
#include "metacs/zetagj.hpp"

namespace metacs {

using nlohmann::json;

namespace {

using Rng = std::mt19937_64;

struct Outcome {
  bool pass = true;
  std::string witness;

  // Keeps the first failure.
  void expect(bool ok, const std::string& what) {
    if (ok || !pass) return;
    pass = false;
    witness = what;
  }
};

struct Job {
  std::string check;
  json params;
  std::function<Outcome()> run;
};

// Independent stream per job, so results do not depend on scheduling.
Rng stream(std::uint64_t seed, std::initializer_list<std::uint64_t> tag) {
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  for (auto t : tag) words.push_back(static_cast<std::uint32_t>(t));
  std::seed_seq seq(words.begin(), words.end());
  return Rng(seq);
}

std::vector<int> range_or(const std::optional<int>& only, std::vector<int> defaults) {
  return only ? std::vector<int>{*only} : defaults;
}

std::vector<long> primes_or(const std::optional<long>& only, std::vector<long> defaults) {
  return only ? std::vector<long>{*only} : defaults;
}

json with_p(json params, long p) {
  params["p"] = p;
  if (p == 3) params["small_residue_field"] = true;
  return params;
}

std::string lambda_str(const Partition& lam) { return lam.to_string(); }

// All partitions with at most k parts (padded to k) and |lambda| <= bound.
std::vector<Partition> partitions_upto(int k, int bound) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int max_part, int budget) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.emplace_back(cur);
      return;
    }
    for (int part = 0; part <= std::min(max_part, budget); ++part) {
      cur.push_back(part);
      self(self, part, budget - part);
      cur.pop_back();
    }
  };
  rec(rec, bound, bound);
  std::sort(out.begin(), out.end());
  return out;
}

MonomialMatrix random_monomial(Rng& rng, int n, long p) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  std::vector<BigRat> s;
  for (int i = 0; i < n; ++i) s.push_back(random_scalar(rng, p).value());
  return {std::move(s), WeylGL(std::move(images))};
}

BigRat random_rational(Rng& rng) {
  std::uniform_int_distribution<int> num(2, 30), den(1, 9);
  BigRat x(num(rng), den(rng));
  x.canonicalize();
  return x;
}

MetaMonomial signed_meta(int s, const MetaMonomial& m) { return s == 1 ? m : m.negated(); }

// ---- hl

void hl_jobs(const SuiteOptions& o, std::vector<Job>& jobs) {
  const int bound = o.trunc.value_or(10);
  for (int k : range_or(o.k, {1, 2, 3})) {
    jobs.push_back({"hl.sum_identity", {{"k", k}, {"trunc", bound}}, [=] {
                      Outcome out;
                      auto r = hl_sum_identity_check(k, bound);
                      out.expect(r.pass, r.witness);
                      return out;
                    }});
    jobs.push_back({"hl.specializations", {{"k", k}, {"max_norm", 5}}, [=] {
                      Outcome out;
                      for (const auto& lam : partitions_upto(k, 5))
                        out.expect(hl_specialization_checks(lam, k).pass(), lambda_str(lam));
                      return out;
                    }});
  }
}

// ---- zeta

void zeta_jobs(const SuiteOptions& o, std::vector<Job>& jobs) {
  const int bound = o.trunc.value_or(8);
  const std::uint64_t seed = o.seed;
  for (int k : range_or(o.k, {1, 2, 3})) {
    jobs.push_back({"zeta.series_vs_closed", {{"k", k}, {"trunc", bound}}, [=] {
                      Outcome out;
                      auto r = zeta_check(SatakeParams::symbolic(k), bound);
                      out.expect(r.pass, r.witness);
                      return out;
                    }});
    const int cs_bound = std::min(bound, 6);
    const bool symbolic = k <= 2;
    jobs.push_back({"zeta.from_cs",
                    {{"k", k}, {"trunc", cs_bound}, {"mode", symbolic ? "symbolic" : "numeric"}},
                    [=] {
                      Outcome out;
                      SatakeParams params = SatakeParams::symbolic(k);
                      if (!symbolic) {
                        Rng rng = stream(seed, {2, static_cast<std::uint64_t>(k)});
                        std::vector<BigRat> xs;
                        for (int i = 0; i < k; ++i) xs.push_back(random_rational(rng) * (i % 2 == 0 ? 1 : -1));
                        params = SatakeParams::numeric(xs);
                      }
                      auto r = zeta_from_cs(params, cs_bound);
                      out.expect(r.terms_polynomial, "term did not cancel: " + r.witness);
                      const auto direct = zeta_series(params, cs_bound);
                      for (int d = 0; d <= cs_bound; ++d)
                        out.expect(r.series.coeff(d) == direct.coeff(d), "X^" + std::to_string(d));
                      return out;
                    }});
  }
}

// ---- cs

SymplecticChar random_symplectic(Rng& rng, int k) {
  std::vector<BigRat> z;
  for (int i = 0; i < k; ++i) z.push_back(random_rational(rng) * (i + 1) + i);
  return SymplecticChar::numeric(z);
}

void cs_jobs(const SuiteOptions& o, std::vector<Job>& jobs) {
  const int norm = o.max_norm.value_or(6);
  const std::uint64_t seed = o.seed;
  for (int k : range_or(o.k, {1, 2, 3})) {
    if (k <= 2) {
      for (int eps : {1, -1})
        jobs.push_back({"cs.compact_vs_expanded", {{"k", k}, {"eps", eps}, {"max_norm", norm}, {"mode", "symbolic"}},
                        [=] {
                          Outcome out;
                          CSInput in{SymplecticChar::symbolic(k), eps};
                          for (const auto& lam : even_partitions(k, norm))
                            out.expect(cs_value_expanded(in, lam) == cs_value_compact(in, lam), lambda_str(lam));
                          return out;
                        }});
    } else {
      const int trials = o.trials.value_or(20);
      jobs.push_back({"cs.compact_vs_expanded", {{"k", k}, {"trials", trials}, {"max_norm", norm}, {"mode", "numeric"}},
                      [=] {
                        Outcome out;
                        Rng rng = stream(seed, {3, static_cast<std::uint64_t>(k)});
                        const auto lams = even_partitions(k, norm);
                        std::uniform_int_distribution<std::size_t> pick(0, lams.size() - 1);
                        for (int t = 0; t < trials; ++t) {
                          CSInput in{random_symplectic(rng, k), t % 2 == 0 ? 1 : -1};
                          const auto& lam = lams[pick(rng)];
                          out.expect(cs_value_expanded(in, lam) == cs_value_compact(in, lam),
                                     "trial " + std::to_string(t) + " lambda " + lambda_str(lam));
                        }
                        return out;
                      }});
    }
    jobs.push_back({"cs.rank_one_A", {{"k", k}}, [=] {
                      Outcome out;
                      for (int eps : {1, -1}) {
                        CSInput in{SymplecticChar::symbolic(k), eps};
                        for (int i = 1; i <= k; ++i) {
                          const auto s = WeylSp::simple(i, k);
                          const RatFunc closed = a_rank_one_closed_form(in, i);
                          RatFunc y = 1;
                          for (const auto& a : s.inversions()) y *= y_alpha(in, a);
                          out.expect(closed == y && closed == A_w(in, s),
                                     "eps " + std::to_string(eps) + " s_" + std::to_string(i));
                        }
                      }
                      return out;
                    }});
  }

  for (int n : range_or(o.n, {2, 3, 4, 6})) {
    const bool exhaustive = n <= 4;
    const int trials = o.trials.value_or(200);
    json params{{"n", n}, {"mode", exhaustive ? "symbolic" : "numeric"}};
    if (!exhaustive) params["trials"] = trials;
    jobs.push_back({"cs.gk_multiplicativity", params, [=] {
                      Outcome out;
                      const auto all = WeylGL::all(n);
                      auto check = [&](const TorusChar& chi, const WeylGL& w, const WeylGL& w2) {
                        out.expect(c_w(chi.act(w), w2) * c_w(chi, w) == c_w(chi, w2 * w),
                                   "w=" + w.to_string() + " w'=" + w2.to_string());
                      };
                      if (exhaustive) {
                        const auto chi = TorusChar::symbolic(n);
                        for (const auto& w : all)
                          for (const auto& w2 : all)
                            if ((w2 * w).length() == w2.length() + w.length()) check(chi, w, w2);
                        return out;
                      }
                      Rng rng = stream(seed, {6, static_cast<std::uint64_t>(n)});
                      std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
                      std::uniform_int_distribution<int> num(2, 40);
                      for (int done = 0; done < trials;) {
                        const auto& w = all[pick(rng)];
                        const auto& w2 = all[pick(rng)];
                        if ((w2 * w).length() != w2.length() + w.length()) continue;
                        std::vector<LaurentPoly> c;
                        for (int a = 0; a < n; ++a) c.emplace_back(BigRat(num(rng) * 101 + a, 7 + a));
                        check(TorusChar(c), w, w2);
                        ++done;
                      }
                      return out;
                    }});
  }
}

// ---- theta

void theta_jobs(const SuiteOptions& o, std::vector<Job>& jobs) {
  const int norm = o.max_norm.value_or(8);
  for (int k : range_or(o.k, {1, 2, 3})) {
    jobs.push_back({"theta.normalized_value", {{"k", k}, {"max_norm", norm}}, [=] {
                      Outcome out;
                      for (const auto& lam : even_partitions(k, norm)) {
                        auto r = theta_normalized_value(k, lam);
                        out.expect(r.survivors.empty(), lambda_str(lam) + " survivors present");
                        out.expect(r.pass, lambda_str(lam) + " ratio " + r.ratio.to_string() + " expected " +
                                               r.expected.to_string());
                      }
                      return out;
                    }});
    const int odd_norm = std::min(norm, 5);
    jobs.push_back({"theta.vanishing_off_even", {{"k", k}, {"max_norm", odd_norm}}, [=] {
                      Outcome out;
                      const CSInput in{theta_char(k), 1};
                      for (const auto& lam : partitions_upto(k, odd_norm))
                        if (!lam.is_even()) out.expect(cs_value_expanded(in, lam).is_zero(), lambda_str(lam));
                      return out;
                    }});
  }
}

// ---- cocycle

void cocycle_jobs(const SuiteOptions& o, std::vector<Job>& jobs) {
  const int trials = o.trials.value_or(1000);
  const std::uint64_t seed = o.seed;
  const auto primes = primes_or(o.p, {5, 7, 11});
  for (long p : primes)
    for (int n : range_or(o.n, {2, 4, 6}))
      jobs.push_back({"cocycle.associativity", with_p({{"n", n}, {"trials", trials}}, p), [=] {
                        Outcome out;
                        Rng rng = stream(seed, {8, static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(n)});
                        for (int t = 0; t < trials && out.pass; ++t) {
                          auto a = random_meta(rng, n, p), b = random_meta(rng, n, p), c = random_meta(rng, n, p);
                          const auto ab = mul(a, b);
                          out.expect(mul(ab, c) == mul(a, mul(b, c)),
                                     a.to_string() + " | " + b.to_string() + " | " + c.to_string());
                          out.expect(ab.projection() == a.projection() * b.projection(), "projection " + a.to_string());
                          out.expect(mul(a, inv(a)) == MetaMonomial::identity(n, p), "inverse " + a.to_string());
                        }
                        return out;
                      }});

  for (long p : primes) {
    jobs.push_back({"cocycle.commutator", with_p({{"trials", 200}}, p), [=] {
                      Outcome out;
                      Rng rng = stream(seed, {9, static_cast<std::uint64_t>(p)});
                      for (int t = 0; t < 200; ++t) {
                        const int n = 2 + t % 5;
                        Torus a, b;
                        for (int i = 0; i < n; ++i) {
                          a.push_back(random_scalar(rng, p));
                          b.push_back(random_scalar(rng, p));
                        }
                        const auto sa = MetaMonomial::torus_lift(a), sb = MetaMonomial::torus_lift(b);
                        int expected = 1;
                        for (std::size_t i = 0; i < a.size(); ++i)
                          for (std::size_t j = i + 1; j < a.size(); ++j)
                            expected *= hilbert2(a[i], b[j]) * hilbert2(b[i], a[j]);
                        out.expect(mul(mul(sa, sb), inv(mul(sb, sa))) == signed_meta(expected, MetaMonomial::identity(n, p)),
                                   "trial " + std::to_string(t));
                      }
                      return out;
                    }});
    jobs.push_back({"cocycle.block_torus_kubota", with_p({{"trials", 200}}, p), [=] {
                      Outcome out;
                      Rng rng = stream(seed, {10, static_cast<std::uint64_t>(p)});
                      for (int t = 0; t < 200; ++t) {
                        const int n = 2 + t % 5;
                        Torus a, b;
                        BlockDiag g, h;
                        for (int i = 0; i < n; ++i) {
                          a.push_back(random_scalar(rng, p));
                          b.push_back(random_scalar(rng, p));
                          g.emplace_back(a.back().value());
                          h.emplace_back(b.back().value());
                        }
                        const int torus = sigma_torus(a, b);
                        out.expect(sigma_block_diag(g, h, p) == torus, "block diagonal, trial " + std::to_string(t));
                        const auto mid = static_cast<std::ptrdiff_t>(n / 2);
                        out.expect(sigma_block(BlockDiag(g.begin(), g.begin() + mid), BlockDiag(g.begin() + mid, g.end()),
                                               BlockDiag(h.begin(), h.begin() + mid), BlockDiag(h.begin() + mid, h.end()),
                                               p) == torus,
                                   "block compatibility, trial " + std::to_string(t));
                        const Mat2 x{a[0].value(), 0, 0, a[1].value()}, y{b[0].value(), 0, 0, b[1].value()};
                        out.expect(kubota(x, y, p) == hilbert2(a[0], b[1]), "kubota, trial " + std::to_string(t));
                        // moving the torus through a Weyl lift
                        const auto w = random_meta(rng, n, p).perm();
                        const auto sw = MetaMonomial::weyl_lift(w, p), st = MetaMonomial::torus_lift(a);
                        out.expect(mul(sw, st) == signed_meta(sigma_weyl_torus(w, a),
                                                              mul(MetaMonomial::torus_lift(conjugate_torus(w, a)), sw)),
                                   "weyl-torus, trial " + std::to_string(t));
                      }
                      return out;
                    }});
    for (int k : o.n ? (*o.n % 2 == 0 ? std::vector<int>{*o.n / 2} : std::vector<int>{}) : std::vector<int>{1, 2, 3}) {
      auto sections = [=](int which) {
        Outcome out;
        Rng rng = stream(seed, {11, static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(k),
                                static_cast<std::uint64_t>(which)});
        for (int t = 0; t < 100; ++t) {
          const auto c = random_monomial(rng, k, p), c2 = random_monomial(rng, k, p);
          const int det_sign = hilbert2(PadicScalar(c.det(), p), PadicScalar(c2.det(), p));
          const std::string at = "c=" + c.to_string() + " c'=" + c2.to_string();
          if (which == 0) {
            const auto h = h_from_c(c), h2 = h_from_c(c2);
            out.expect(section_h(h * h2, p) == signed_meta(det_sign, mul(section_h(h, p), section_h(h2, p))), at);
          } else if (which == 1) {
            std::vector<BigRat> d;
            for (int i = 0; i < k; ++i) {
              const auto x = random_scalar(rng, p);
              d.push_back(x.value() * x.value() * c.scale[static_cast<std::size_t>(i)]);
            }
            // H meets B_{n,*} in the diagonal elements with even valuations
            for (auto& e : d)
              if (PadicScalar(e, p).valuation() % 2 != 0) e *= p;
            const auto hb = h_from_c(MonomialMatrix::diagonal(d));
            out.expect(section_h(hb, p) == section_s(hb, p), hb.to_string());
          } else {
            out.expect(triangle(c * c2, p) == signed_meta(det_sign, mul(triangle(c, p), triangle(c2, p))), at);
          }
        }
        return out;
      };
      const json params = with_p({{"k", k}, {"trials", 100}}, p);
      jobs.push_back({"cocycle.h_twisted_splitting", params, [=] { return sections(0); }});
      jobs.push_back({"cocycle.h_equals_s_on_HB", params, [=] { return sections(1); }});
      jobs.push_back({"cocycle.triangle", params, [=] { return sections(2); }});
    }
  }
}

// ---- hilbert

void hilbert_jobs(const SuiteOptions& o, std::vector<Job>& jobs) {
  const int trials = o.trials.value_or(500);
  const std::uint64_t seed = o.seed;
  for (long p : primes_or(o.p, {3, 5, 7, 13}))
    jobs.push_back({"hilbert.oracle", with_p({{"pairs", trials}}, p), [=] {
                      Outcome out;
                      Rng rng = stream(seed, {12, static_cast<std::uint64_t>(p)});
                      std::vector<std::pair<PadicScalar, PadicScalar>> pairs;
                      for (int i = 0; i < trials; ++i) {
                        auto a = random_scalar(rng, p);
                        pairs.emplace_back(a, random_scalar(rng, p));
                      }
                      for (const auto& [a, b] : pairs)
                        out.expect(hilbert2(a, b) == hilbert2_oracle(a, b), "(" + a.to_string() + ", " + b.to_string() + ")");
                      return out;
                    }});
}

// ---- weil

std::string mu4_or_dash(const Mu4& m) { return m.to_string(); }

void weil_jobs(const SuiteOptions& o, std::vector<Job>& jobs) {
  const std::vector<long> all_primes{3, 5, 7, 11, 13};
  const auto conv = select_gauss_convention(all_primes).convention;
  const int trials = o.trials.value_or(200);
  const std::uint64_t seed = o.seed;
  for (long p : primes_or(o.p, all_primes)) {
    const json base = with_p({{"convention", to_string(conv)}}, p);
    json ident = base;
    ident["trials"] = trials;
    jobs.push_back({"weil.factor_identities", ident, [=] {
                      Outcome out;
                      Rng rng = stream(seed, {13, static_cast<std::uint64_t>(p)});
                      const PadicScalar pi(p, p);
                      out.expect(gamma_uniformizer(p, conv) * gamma_uniformizer(p, conv) ==
                                     Mu4::from_sign(hilbert2(pi, pi)),
                                 "gamma(p)^2 = " + mu4_or_dash(gamma_uniformizer(p, conv) * gamma_uniformizer(p, conv)));
                      for (int t = 0; t < trials; ++t) {
                        auto x = random_scalar(rng, p), y = random_scalar(rng, p), a = random_scalar(rng, p);
                        const std::string at = "x=" + x.to_string() + " y=" + y.to_string() + " a=" + a.to_string();
                        out.expect(weil_gamma(x * y, conv) ==
                                       weil_gamma(x, conv) * weil_gamma(y, conv) * Mu4::from_sign(hilbert2(x, y)),
                                   "product " + at);
                        out.expect(weil_gamma(x * x, conv) == Mu4{0}, "square " + at);
                        out.expect(weil_gamma(x, conv) == weil_gamma_direct(x, conv), "gauss sum " + at);
                        out.expect(gamma_psi_a(a, x, conv) == Mu4::from_sign(hilbert2(a, x)) * weil_gamma(x, conv),
                                   "twist " + at);
                      }
                      return out;
                    }});
    jobs.push_back({"weil.normalized_gauss_integral", base, [=] {
                      Outcome out;
                      auto r = normalized_gauss_integral(p, conv);
                      std::ostringstream w;
                      w.precision(12);
                      w << "value " << r.value.real() << (r.value.imag() < 0 ? "" : "+") << r.value.imag()
                        << "i expected " << r.expected;
                      out.expect(r.pass && r.error < 1e-9, w.str());
                      return out;
                    }});
    jobs.push_back({"weil.epsilon", with_p({{"max_k", 4}}, p), [=] {
                      Outcome out;
                      for (int k = 1; k <= 4; ++k)
                        out.expect(epsilon_rho_k(PadicScalar(k % 2 == 0 ? 1 : -1, p), k) == 1, "k=" + std::to_string(k));
                      return out;
                    }});
  }
  for (long p : primes_or(o.p, {3, 5}))
    for (const BigRat& s : {BigRat(1, 2), BigRat(1), BigRat(2)})
      jobs.push_back({"weil.double_integral", with_p({{"M", 6}, {"s_diff", s.get_str()}}, p), [=] {
                        Outcome out;
                        auto r = rank_one_double_integral(p, 6, s);
                        out.expect(r.strata_consistent, "strata inconsistent");
                        out.expect(r.pass, "difference " + r.difference.get_str() + " exceeds tail bound " +
                                               r.tail_bound.get_str());
                        return out;
                      }});
}

// ---- clifford

void clifford_jobs(const SuiteOptions& o, std::vector<Job>& jobs) {
  for (int k : range_or(o.k, {1, 2, 3, 4}))
    jobs.push_back({"clifford.relations", {{"k", k}}, [=] {
                      Outcome out;
                      const auto id = PinMatrix::identity(k);
                      for (int a = 1; a <= 2 * k; ++a) {
                        const auto ea = generator_matrix(a, k);
                        out.expect(ea * ea == id, "e" + std::to_string(a) + "^2");
                        for (int b = a + 1; b <= 2 * k; ++b) {
                          const auto eb = generator_matrix(b, k);
                          out.expect(ea * eb + eb * ea == PinMatrix::zero(k),
                                     "e" + std::to_string(a) + " e" + std::to_string(b));
                        }
                      }
                      return out;
                    }});
  for (int k : range_or(o.k, {1, 2, 3})) {
    jobs.push_back({"clifford.eigenvalues", {{"k", k}}, [=] {
                      Outcome out;
                      for (IndexSet I = 0; I < (IndexSet{1} << k); ++I)
                        for (int sign : {1, -1}) {
                          const auto closed = monomial_action(I, sign, k);
                          out.expect(closed.is_diagonal() && closed == monomial_product(I, sign, k),
                                     basis_label(I) + " sign " + std::to_string(sign));
                        }
                      return out;
                    }});
    for (auto conv : {GammaAtMinusOne::plus_i, GammaAtMinusOne::minus_i}) {
      const bool plus = conv == GammaAtMinusOne::plus_i;
      jobs.push_back({"clifford.hom_dim", {{"k", k}, {"gamma_minus_one", plus ? "+i" : "-i"}}, [=] {
                        Outcome out;
                        const auto h = hom_space(k, conv);
                        out.expect(h.dim == 1, "dim " + std::to_string(h.dim));
                        out.expect(h.idempotent, "projector not idempotent");
                        const IndexSet expected = plus ? 0 : (IndexSet{1} << k) - 1;
                        out.expect(h.support == std::vector<IndexSet>{expected}, "support differs");
                        return out;
                      }});
    }
  }
}

using JobBuilder = void (*)(const SuiteOptions&, std::vector<Job>&);

const std::vector<std::pair<std::string, JobBuilder>>& builders() {
  static const std::vector<std::pair<std::string, JobBuilder>> table{
      {"hl", hl_jobs},         {"zeta", zeta_jobs},       {"cs", cs_jobs},
      {"theta", theta_jobs},   {"cocycle", cocycle_jobs}, {"hilbert", hilbert_jobs},
      {"weil", weil_jobs},     {"clifford", clifford_jobs},
  };
  return table;
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    default: return "error";
  }
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : builders()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<Report> run_suite(const std::string& suite, const SuiteOptions& opts) {
  std::vector<Job> jobs;
  bool found = false;
  for (const auto& [name, build] : builders())
    if (suite == "all" || suite == name) {
      build(opts, jobs);
      found = true;
    }
  if (!found) throw std::invalid_argument("unknown suite: " + suite);

  auto reports = map_indices<Report>(opts.exec, jobs.size(), [&](std::size_t i) {
    const Job& job = jobs[i];
    Report r;
    r.check = job.check;
    r.params = job.params;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome out = job.run();
      r.status = out.pass ? Status::pass : Status::fail;
      if (!out.pass) r.witness = out.witness;
    } catch (const std::exception& e) {
      r.status = Status::error;
      r.witness = e.what();
    }
    if (opts.timings)
      r.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return r;
  });
  std::sort(reports.begin(), reports.end(), [](const Report& a, const Report& b) {
    if (a.check != b.check) return a.check < b.check;
    return a.params.dump() < b.params.dump();
  });
  return reports;
}

json to_json(const Report& r) {
  return json{{"check", r.check},
              {"params", r.params},
              {"status", to_string(r.status)},
              {"witness", r.witness ? json(*r.witness) : json(nullptr)},
              {"duration_ms", r.duration_ms}};
}

std::string render_json(const std::string& command, std::uint64_t seed, const std::vector<Report>& reports) {
  json doc{{"version", kVersion}, {"command", command}, {"seed", seed}, {"reports", json::array()}};
  for (const auto& r : reports) doc["reports"].push_back(to_json(r));
  return doc.dump(2) + "\n";
}

std::string render_csv(const std::vector<Report>& reports) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
  };
  std::string out = "check,params,status,witness,duration_ms\n";
  for (const auto& r : reports)
    out += r.check + "," + quote(r.params.dump()) + "," + to_string(r.status) + "," + quote(r.witness.value_or("")) +
           "," + std::to_string(r.duration_ms) + "\n";
  return out;
}

std::string render_text(const std::vector<Report>& reports) {
  std::string out;
  for (const auto& r : reports) {
    out += to_string(r.status) + " " + r.check + " " + r.params.dump();
    if (r.witness) out += "  witness: " + *r.witness;
    out += "\n";
  }
  return out;
}

}  // namespace metacs
