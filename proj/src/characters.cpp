#include "metacs/characters.hpp"

#include <algorithm>

namespace metacs {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] > parts_[i - 1]) throw MathError("partition must be weakly decreasing");
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

bool Partition::is_nonneg() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p >= 0; });
}

bool Partition::is_even() const {
  return is_nonneg() && std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 0; });
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
  return s;
}

// ---- TorusChar ----

TorusChar::TorusChar(std::vector<LaurentPoly> coords) : coords_(std::move(coords)) {
  for (const auto& c : coords_)
    if (!c.is_monomial()) throw MathError("character values must be invertible monomials");
}

TorusChar TorusChar::symbolic(int n, const std::string& prefix) {
  std::vector<LaurentPoly> c;
  for (int a = 1; a <= n; ++a) c.push_back(LaurentPoly::variable(prefix + std::to_string(a)));
  return TorusChar(std::move(c));
}

RatFunc TorusChar::eval_a(const GLRoot& alpha) const {
  return RatFunc(coord(alpha.i).pow(2) * coord(alpha.j).pow(-2));
}

TorusChar TorusChar::inverse() const {
  std::vector<LaurentPoly> c;
  for (const auto& x : coords_) c.push_back(x.pow(-1));
  return TorusChar(std::move(c));
}

TorusChar TorusChar::act(const WeylGL& w) const {
  if (w.n() != n()) throw MathError("Weyl group size mismatch");
  std::vector<LaurentPoly> c(coords_.size());
  for (int a = 1; a <= n(); ++a) c[static_cast<std::size_t>(w(a) - 1)] = coord(a);
  return TorusChar(std::move(c));
}

// ---- SymplecticChar ----

SymplecticChar::SymplecticChar(std::vector<LaurentPoly> z, CharMode mode) : z_(std::move(z)), mode_(mode) {
  for (const auto& c : z_)
    if (!c.is_monomial()) throw MathError("character values must be invertible monomials");
}

SymplecticChar SymplecticChar::symbolic(int k) {
  std::vector<LaurentPoly> z;
  for (int i = 1; i <= k; ++i) z.push_back(LaurentPoly::variable("z" + std::to_string(i)));
  return SymplecticChar(std::move(z), CharMode::symbolic);
}

SymplecticChar SymplecticChar::specialized(std::vector<LaurentPoly> z) {
  return SymplecticChar(std::move(z), CharMode::specialized);
}

SymplecticChar SymplecticChar::numeric(const std::vector<BigRat>& z) {
  std::vector<LaurentPoly> v(z.begin(), z.end());
  return SymplecticChar(std::move(v), CharMode::specialized);
}

bool SymplecticChar::is_numeric() const {
  return std::all_of(z_.begin(), z_.end(), [](const LaurentPoly& c) { return c.is_constant(); });
}

LaurentPoly SymplecticChar::gl_coord(int a) const {
  const int n = 2 * k();
  if (a < 1 || a > n) throw MathError("coordinate out of range");
  return a <= k() ? z(a) : z(n + 1 - a).pow(-1);
}

TorusChar SymplecticChar::gl() const {
  std::vector<LaurentPoly> c;
  for (int a = 1; a <= 2 * k(); ++a) c.push_back(gl_coord(a));
  return TorusChar(std::move(c));
}

SymplecticChar SymplecticChar::inverse() const {
  std::vector<LaurentPoly> z;
  for (const auto& c : z_) z.push_back(c.pow(-1));
  return SymplecticChar(std::move(z), mode_);
}

RatFunc eval_a(const SymplecticChar& chi, const GLRoot& alpha) {
  return RatFunc(chi.gl_coord(alpha.i).pow(2) * chi.gl_coord(alpha.j).pow(-2));
}

RatFunc eval_half_long(const SymplecticChar& chi, const SpRoot& alpha, int sign) {
  if (!alpha.is_long()) throw MathError("half powers are defined only on long roots");
  if (sign != 1 && sign != -1) throw MathError("sign must be +-1");
  return RatFunc(chi.z(alpha.i).pow(2 * sign));
}

RatFunc half_root_product(const SymplecticChar& chi) {
  LaurentPoly r(1);
  for (int i = 1; i <= chi.k(); ++i) r *= chi.z(i).pow(2 * (chi.k() + 1 - i));
  return RatFunc(r);
}

RatFunc eval_torus(const SymplecticChar& chi, const Partition& lambda) {
  if (lambda.length() != chi.k()) throw MathError("partition length must equal the rank");
  if (!lambda.is_even()) throw MathError("t_lambda outside T_{n,*}");
  LaurentPoly r(1);
  for (int i = 1; i <= chi.k(); ++i) r *= chi.z(i).pow(lambda[i]);
  return RatFunc(r);
}

LaurentPoly delta_B_half(const Partition& lambda, int n) {
  int e = 0;
  for (int i = 1; i <= lambda.length(); ++i) e += 2 * lambda[i] * (n + 1 - 2 * i);
  return LaurentPoly::variable("u", e);
}

LaurentPoly delta_B_quarter(const Partition& lambda, int n) {
  int e = 0;
  for (int i = 1; i <= lambda.length(); ++i) e += lambda[i] * (n + 1 - 2 * i);
  return LaurentPoly::variable("u", e);
}

SymplecticChar weyl_act(const WeylSp& w, const SymplecticChar& chi) {
  if (w.k() != chi.k()) throw MathError("rank mismatch");
  std::vector<LaurentPoly> z(static_cast<std::size_t>(chi.k()));
  for (int a = 1; a <= chi.k(); ++a) z[static_cast<std::size_t>(w.perm(a) - 1)] = chi.z(a).pow(w.sign(a));
  return SymplecticChar::specialized(std::move(z));
}

SymplecticChar theta_char(int k) {
  const int n = 2 * k;
  std::vector<LaurentPoly> z;
  for (int i = 1; i <= k; ++i) z.push_back(LaurentPoly::variable("u", n + 1 - 2 * i));
  return SymplecticChar::specialized(std::move(z));
}

AdmissibilityReport admissibility(const SymplecticChar& chi) {
  if (!chi.is_numeric()) throw MathError("predicate requires specialization");
  const int k = chi.k(), n = 2 * k;
  auto c = [&](int a) { return chi.gl_coord(a).constant_value(); };
  // chi(t_{i,j}) at x = uniformizer: c_i^2 c_j^2
  auto t_val = [&](int i, int j) { return BigRat(c(i) * c(i) * c(j) * c(j)); };
  AdmissibilityReport rep;
  rep.regular = true;
  for (const auto& r : positive_roots_gl(n))
    if (c(r.i) * c(r.i) == c(r.j) * c(r.j)) rep.regular = false;
  bool cond1 = true;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      if (t_val(i, j) == 1) cond1 = false;
  // Permutations tau with chi(t_{i,k+j}) != 1 whenever j != tau(i); prefer one meeting the necessary condition.
  std::vector<int> tau(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) tau[static_cast<std::size_t>(i)] = i + 1;
  do {
    bool ok = true;
    for (int i = 1; i <= k && ok; ++i)
      for (int j = 1; j <= k && ok; ++j)
        if (j != tau[static_cast<std::size_t>(i - 1)] && t_val(i, k + j) == 1) ok = false;
    if (!ok) continue;
    bool nec = true;
    for (int i = 1; i <= k; ++i)
      if (t_val(i, k + tau[static_cast<std::size_t>(i - 1)]) != 1) nec = false;
    if (!rep.tau || (nec && !rep.necessary_condition)) {
      rep.tau = tau;
      rep.necessary_condition = nec;
    }
  } while (std::next_permutation(tau.begin(), tau.end()));
  rep.shalika_dim_le_1 = cond1 && rep.tau.has_value();
  return rep;
}

}  // namespace metacs
