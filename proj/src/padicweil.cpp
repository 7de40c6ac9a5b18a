#include "metacs/padicweil.hpp"

#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <shared_mutex>

namespace metacs {

bool is_odd_prime(long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

namespace {

void require_odd(long p) {
  if (p == 2) throw MathError("odd residue characteristic required");
  if (!is_odd_prime(p)) throw MathError("p must be an odd prime");
}

int remove_p(mpz_class& x, long p) {
  mpz_class pp = p;
  return static_cast<int>(mpz_remove(x.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t()));
}

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

PadicScalar::PadicScalar(BigRat value, long p) : value_(std::move(value)), p_(p) {
  require_odd(p);
  if (sgn(value_) == 0) throw MathError("p-adic scalar must be nonzero");
  mpz_class num = value_.get_num(), den = value_.get_den();
  valuation_ = remove_p(num, p) - remove_p(den, p);
}

BigRat PadicScalar::unit() const {
  BigRat u = value_;
  mpz_class pp = p_;
  mpz_class pw;
  mpz_pow_ui(pw.get_mpz_t(), pp.get_mpz_t(), static_cast<unsigned long>(std::abs(valuation_)));
  if (valuation_ > 0) u /= BigRat(pw);
  else u *= BigRat(pw);
  return u;
}

long PadicScalar::unit_residue(int level) const {
  BigRat u = unit();
  mpz_class m = ipow(p_, level);
  mpz_class num = u.get_num(), den = u.get_den(), inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  mpz_class r = num * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  return r.get_si();
}

int PadicScalar::unit_legendre() const { return legendre(unit_residue(1), p_); }

PadicScalar operator*(const PadicScalar& a, const PadicScalar& b) {
  if (a.p_ != b.p_) throw MathError("mismatched primes");
  return {a.value_ * b.value_, a.p_};
}

PadicScalar operator/(const PadicScalar& a, const PadicScalar& b) {
  if (a.p_ != b.p_) throw MathError("mismatched primes");
  return {a.value_ / b.value_, a.p_};
}

PadicScalar random_scalar(std::mt19937_64& rng, long p) {
  std::uniform_int_distribution<int> val(-3, 3);
  std::uniform_int_distribution<long> mag(1, 50);
  std::bernoulli_distribution neg(0.5);
  auto draw_unit = [&] {
    long m;
    do m = mag(rng);
    while (m % p == 0);
    return m;
  };
  long a = draw_unit(), b = draw_unit();
  if (neg(rng)) a = -a;
  BigRat v(a, b);
  v.canonicalize();
  int e = val(rng);
  mpz_class pw;
  mpz_class pp = p;
  mpz_pow_ui(pw.get_mpz_t(), pp.get_mpz_t(), static_cast<unsigned long>(std::abs(e)));
  if (e > 0) v *= BigRat(pw);
  else v /= BigRat(pw);
  return {v, p};
}

GaussRat Mu4::exact() const {
  switch (exponent % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

std::complex<double> Mu4::value() const {
  auto e = exact();
  return {e.re().get_d(), e.im().get_d()};
}

std::string Mu4::to_string() const { return exact().to_string(); }

int legendre(long a, long p) {
  long r = mod(a, p);
  if (r == 0) return 0;
  // Euler's criterion
  long result = 1, base = r, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

int hilbert2(const PadicScalar& a, const PadicScalar& b) {
  if (a.p() != b.p()) throw MathError("mismatched primes");
  const long p = a.p();
  const int alpha = a.valuation(), beta = b.valuation();
  int s = 1;
  if ((static_cast<long>(alpha) * beta % 2 != 0) && ((p - 1) / 2) % 2 != 0) s = -s;
  if (beta % 2 != 0) s *= a.unit_legendre();
  if (alpha % 2 != 0) s *= b.unit_legendre();
  return s;
}

namespace {

// a x^2 + b y^2 = z^2 modulo p^3, a = p^alpha U, b = p^beta W with alpha, beta in {0,1}.
struct ConicSearch {
  long p, m3, A, B;
  bool eq_holds(long x, long y, long z, long m) const {
    __int128 v = static_cast<__int128>(A) * x * x + static_cast<__int128>(B) * y * y - static_cast<__int128>(z) * z;
    return v % m == 0;
  }
  // fixed: index of the coordinate pinned to 1; zero_first: coordinates whose first digit must vanish.
  bool dfs(std::array<long, 3> c, int level, int fixed, const std::array<bool, 3>& zero_first) const {
    if (level == 3) return true;
    const long pl = ipow(p, level), next = pl * p;
    std::array<int, 3> range{};
    for (int i = 0; i < 3; ++i) range[i] = (i == fixed || (level == 0 && zero_first[i])) ? 1 : static_cast<int>(p);
    for (int d0 = 0; d0 < range[0]; ++d0)
      for (int d1 = 0; d1 < range[1]; ++d1)
        for (int d2 = 0; d2 < range[2]; ++d2) {
          std::array<long, 3> nc{c[0] + d0 * pl, c[1] + d1 * pl, c[2] + d2 * pl};
          if (eq_holds(nc[0], nc[1], nc[2], next) && dfs(nc, level + 1, fixed, zero_first)) return true;
        }
    return false;
  }
};

}  // namespace

int hilbert2_oracle(const PadicScalar& a, const PadicScalar& b) {
  if (a.p() != b.p()) throw MathError("mismatched primes");
  const long p = a.p();
  const long m3 = ipow(p, 3);
  auto coeff = [&](const PadicScalar& s) {
    long u = s.unit_residue(3);
    return mod((s.valuation() % 2 != 0 ? p : 1) * u, m3);
  };
  ConicSearch cs{p, m3, coeff(a), coeff(b)};
  // Primitive solutions, scaled so the first unit coordinate is 1.
  if (cs.dfs({1, 0, 0}, 0, 0, {false, false, false})) return 1;
  if (cs.dfs({0, 1, 0}, 0, 1, {true, false, false})) return 1;
  if (cs.dfs({0, 0, 1}, 0, 2, {true, true, false})) return 1;
  return -1;
}

std::size_t hilbert_sweep(const std::vector<std::pair<PadicScalar, PadicScalar>>& pairs, Exec exec) {
  auto bad = map_indices<int>(exec, pairs.size(), [&](std::size_t i) {
    return hilbert2(pairs[i].first, pairs[i].second) != hilbert2_oracle(pairs[i].first, pairs[i].second) ? 1 : 0;
  });
  std::size_t n = 0;
  for (int b : bad) n += static_cast<std::size_t>(b);
  return n;
}

std::string to_string(GaussConvention c) { return c == GaussConvention::minus ? "minus" : "plus"; }

namespace {

Mu4 round_to_mu4(std::complex<double> v) {
  Mu4 best{0};
  double dist = 1e9;
  for (int e = 0; e < 4; ++e) {
    double d = std::abs(v - Mu4{e}.value());
    if (d < dist) {
      dist = d;
      best = Mu4{e};
    }
  }
  if (dist > 1e-6) throw MathError("normalized Gauss sum is not a fourth root of unity");
  return best;
}

// p^{-1/2} sum_x exp(sign 2 pi i u x^2 / p)
std::complex<double> normalized_gauss_sum(long p, long u, GaussConvention conv) {
  const double sign = conv == GaussConvention::minus ? -1.0 : 1.0;
  std::complex<double> s = 0;
  for (long x = 0; x < p; ++x) {
    double phase = sign * 2.0 * std::numbers::pi * static_cast<double>(mod(u * x % p * x, p)) / static_cast<double>(p);
    s += std::polar(1.0, phase);
  }
  return s / std::sqrt(static_cast<double>(p));
}

}  // namespace

Mu4 gamma_uniformizer(long p, GaussConvention conv) {
  static std::shared_mutex mutex;
  static std::map<std::pair<long, GaussConvention>, Mu4> cache;
  const auto key = std::pair{p, conv};
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  require_odd(p);
  Mu4 g = round_to_mu4(normalized_gauss_sum(p, 1, conv));
  std::unique_lock lock(mutex);
  cache.emplace(key, g);
  return g;
}

Mu4 weil_gamma(const PadicScalar& a, GaussConvention conv) {
  const int v = a.valuation();
  Mu4 g{0};
  if (v % 2 != 0) g = gamma_uniformizer(a.p(), conv);
  if (v % 2 != 0 && a.unit_legendre() == -1) g = g * Mu4{2};
  return g;
}

Mu4 weil_gamma_direct(const PadicScalar& a, GaussConvention conv) {
  if (a.valuation() % 2 == 0) return Mu4{0};
  return round_to_mu4(normalized_gauss_sum(a.p(), a.unit_residue(1), conv));
}

Mu4 gamma_psi_a(const PadicScalar& a, const PadicScalar& x, GaussConvention conv) {
  return Mu4::from_sign(hilbert2(a, x)) * weil_gamma(x, conv);
}

GaussIntegralResult normalized_gauss_integral(long p, GaussConvention conv) {
  require_odd(p);
  std::complex<double> s = 0;
  for (long x = 1; x < p; ++x) {
    Mu4 g = weil_gamma(PadicScalar(BigRat(x, p), p), conv);
    s += g.value() * std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(x) / static_cast<double>(p));
  }
  GaussIntegralResult r;
  r.value = s / static_cast<double>(p);
  r.expected = 1.0 / std::sqrt(static_cast<double>(p));
  r.error = std::abs(r.value - r.expected);
  r.pass = r.error < 1e-9;
  return r;
}

ConventionChoice select_gauss_convention(const std::vector<long>& primes) {
  bool minus_ok = true;
  for (long p : primes)
    if (!normalized_gauss_integral(p, GaussConvention::minus).pass) minus_ok = false;
  return {minus_ok ? GaussConvention::minus : GaussConvention::plus, minus_ok};
}

DoubleIntegralResult rank_one_double_integral(long p, int M, const BigRat& s_diff) {
  require_odd(p);
  if (sgn(s_diff) <= 0) throw MathError("divergent parameter: s_diff must be positive");
  if (M < 0) throw MathError("precision level must be nonnegative");
  BigRat twice = 2 * s_diff;
  if (twice.get_den() != 1) throw MathError("2*s_diff must be an integer");
  const BigRat q(p);
  const BigRat qi = 1 / q;
  // Z = q^{-2 s_diff}
  BigRat Z = 1;
  for (long e = 0; e < twice.get_num().get_si(); ++e) Z *= qi;

  DoubleIntegralResult r;
  r.strata_consistent = true;
  // z2 in pO (any z1), then z1 in pO with z2 a unit: 1 - z1 z2 is a square unit and the symbol is trivial.
  for (long z1 = 0; z1 < p; ++z1)
    for (long z2 = 0; z2 < p * p; z2 += p) {
      PadicScalar w(BigRat(1 - z1 * z2), p);
      if (!w.is_square()) r.strata_consistent = false;
      if (z1 != 0 && hilbert2(PadicScalar(-z1, p), w) != 1) r.strata_consistent = false;
    }
  const BigRat piece1 = qi;
  const BigRat piece2 = qi * (1 - qi);
  // Units: strata l = v(1 - z); only even l survive the square-class indicator.
  BigRat inner = 0;
  for (int l = 0; l <= 2 * M; ++l) {
    BigRat mu;
    const long modulus_exp = l + 1;
    if (ipow(p, static_cast<int>(modulus_exp)) <= 200000) {
      const long m = ipow(p, static_cast<int>(modulus_exp));
      long count = 0;
      for (long z = 1; z < m; ++z) {
        if (z % p == 0) continue;
        long d = mod(1 - z, m);
        int v = 0;
        if (d == 0) v = static_cast<int>(modulus_exp);
        else
          for (long t = d; t % p == 0; t /= p) ++v;
        if (v == l) ++count;
      }
      mu = BigRat(count, m);
      mu.canonicalize();
    } else {
      mu = l == 0 ? BigRat(1 - 2 * qi) : BigRat(1 - qi);
      for (int e = 0; e < l; ++e) mu *= qi;
    }
    // representatives 1 - z = p^l w
    for (long w = 1; w < p && l <= 12; ++w) {
      BigRat pl = 1;
      for (int e = 0; e < l; ++e) pl *= q;
      PadicScalar one_minus(pl * w, p);
      bool indicator = one_minus.in_square_times_units();
      if (indicator != (l % 2 == 0)) r.strata_consistent = false;
      if (indicator)
        for (long z1 = 1; z1 < p; ++z1)
          if (hilbert2(PadicScalar(-z1, p), one_minus) != 1) r.strata_consistent = false;
    }
    if (l % 2 != 0) continue;
    // |1-z|^{s'-1} = q^l Z^{l/2}
    BigRat term = mu;
    for (int e = 0; e < l; ++e) term *= q;
    for (int e = 0; e < l / 2; ++e) term *= Z;
    inner += term;
  }
  r.stratified = piece1 + piece2 + (1 - qi) * inner;
  r.closed_form = 1 - qi + qi * qi + (1 - qi) * (1 - qi) * Z / (1 - Z);
  BigRat zpow = 1;
  for (int e = 0; e <= M; ++e) zpow *= Z;
  r.tail_bound = (1 - qi) * (1 - qi) * zpow / (1 - Z);
  r.difference = r.closed_form - r.stratified;
  r.pass = r.strata_consistent && abs(r.difference) <= r.tail_bound && sgn(r.difference) >= 0;
  return r;
}

int epsilon_rho_k(const PadicScalar& rho, int k) {
  const PadicScalar pi(rho.p(), rho.p());
  int s = hilbert2(-rho, pi);
  if (k >= 2 && (k - 1) % 2 != 0) s *= hilbert2(pi, pi);
  return s;
}

}  // namespace metacs
