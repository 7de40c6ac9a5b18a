#include "metacs/weylroots.hpp"

#include <algorithm>
#include <numeric>

namespace metacs {

std::string SpRoot::to_string() const {
  const std::string a = "e" + std::to_string(i);
  switch (kind) {
    case SpKind::short_minus: return a + "-e" + std::to_string(j);
    case SpKind::short_plus: return a + "+e" + std::to_string(j);
    case SpKind::long_root: return "2" + a;
  }
  return {};
}

// ---- GL ----

WeylGL::WeylGL(std::vector<int> images) : images_(std::move(images)) {
  std::vector<int> sorted = images_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t a = 0; a < sorted.size(); ++a)
    if (sorted[a] != static_cast<int>(a) + 1) throw MathError("not a permutation");
}

WeylGL WeylGL::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  return WeylGL(std::move(img));
}

WeylGL WeylGL::simple(int i, int n) {
  if (i < 1 || i >= n) throw MathError("simple reflection index out of range");
  auto w = identity(n);
  std::swap(w.images_[static_cast<std::size_t>(i - 1)], w.images_[static_cast<std::size_t>(i)]);
  return w;
}

WeylGL WeylGL::longest(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int a = 1; a <= n; ++a) img[static_cast<std::size_t>(a - 1)] = n + 1 - a;
  return WeylGL(std::move(img));
}

std::vector<WeylGL> WeylGL::all(int n) {
  std::vector<WeylGL> out;
  auto w = identity(n).images_;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

WeylGL WeylGL::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t a = 0; a < images_.size(); ++a) inv[static_cast<std::size_t>(images_[a] - 1)] = static_cast<int>(a) + 1;
  return WeylGL(std::move(inv));
}

int WeylGL::length() const {
  int l = 0;
  for (std::size_t a = 0; a < images_.size(); ++a)
    for (std::size_t b = a + 1; b < images_.size(); ++b)
      if (images_[a] > images_[b]) ++l;
  return l;
}

bool WeylGL::is_identity() const {
  for (std::size_t a = 0; a < images_.size(); ++a)
    if (images_[a] != static_cast<int>(a) + 1) return false;
  return true;
}

std::vector<int> WeylGL::reduced_word(DescentChoice choice) const {
  std::vector<int> word;
  std::vector<int> img = images_;
  const int n = static_cast<int>(img.size());
  while (true) {
    int pick = 0;
    for (int i = 1; i < n; ++i)
      if (img[static_cast<std::size_t>(i - 1)] > img[static_cast<std::size_t>(i)]) {
        pick = i;
        if (choice == DescentChoice::first) break;
      }
    if (pick == 0) break;
    // w = (w s) s
    std::swap(img[static_cast<std::size_t>(pick - 1)], img[static_cast<std::size_t>(pick)]);
    word.push_back(pick);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

WeylGL operator*(const WeylGL& a, const WeylGL& b) {
  if (a.n() != b.n()) throw MathError("Weyl group size mismatch");
  std::vector<int> img(b.images_.size());
  for (std::size_t x = 0; x < img.size(); ++x) img[x] = a(b.images_[x]);
  return WeylGL(std::move(img));
}

std::string WeylGL::to_string() const {
  std::string s = "[";
  for (std::size_t a = 0; a < images_.size(); ++a) s += (a ? "," : "") + std::to_string(images_[a]);
  return s + "]";
}

std::vector<GLRoot> inversions(const WeylGL& w, InversionOf which) {
  const WeylGL v = which == InversionOf::w ? w : w.inverse();
  std::vector<GLRoot> out;
  for (int i = 1; i <= v.n(); ++i)
    for (int j = i + 1; j <= v.n(); ++j)
      if (v(i) > v(j)) out.push_back({i, j});
  return out;
}

std::vector<GLRoot> positive_roots_gl(int n) {
  std::vector<GLRoot> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
  return out;
}

std::vector<SpRoot> positive_roots_sp(int k) {
  std::vector<SpRoot> out;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) out.push_back({SpKind::short_minus, i, j});
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) out.push_back({SpKind::short_plus, i, j});
  for (int i = 1; i <= k; ++i) out.push_back({SpKind::long_root, i, 0});
  return out;
}

// ---- Sp ----

namespace {

std::vector<int> coefficients(const SpRoot& r, int k) {
  std::vector<int> c(static_cast<std::size_t>(k), 0);
  auto at = [&](int a) -> int& { return c[static_cast<std::size_t>(a - 1)]; };
  switch (r.kind) {
    case SpKind::short_minus: at(r.i) = 1; at(r.j) = -1; break;
    case SpKind::short_plus: at(r.i) = 1; at(r.j) = 1; break;
    case SpKind::long_root: at(r.i) = 2; break;
  }
  return c;
}

// Coefficient vector of a root (assumed positive) back to SpRoot.
SpRoot from_coefficients(const std::vector<int>& c) {
  std::vector<int> nz;
  for (std::size_t a = 0; a < c.size(); ++a)
    if (c[a] != 0) nz.push_back(static_cast<int>(a) + 1);
  if (nz.size() == 1) return {SpKind::long_root, nz[0], 0};
  const int ci = c[static_cast<std::size_t>(nz[0] - 1)], cj = c[static_cast<std::size_t>(nz[1] - 1)];
  return {ci == cj ? SpKind::short_plus : SpKind::short_minus, nz[0], nz[1]};
}

}  // namespace

WeylSp::WeylSp(std::vector<int> perm, std::vector<int> signs) : perm_(std::move(perm)), signs_(std::move(signs)) {
  if (perm_.size() != signs_.size()) throw MathError("signed permutation size mismatch");
  WeylGL check(perm_);
  for (int s : signs_)
    if (s != 1 && s != -1) throw MathError("signs must be +-1");
}

WeylSp WeylSp::identity(int k) {
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 1);
  return WeylSp(p, std::vector<int>(static_cast<std::size_t>(k), 1));
}

WeylSp WeylSp::simple(int i, int k) {
  if (i < 1 || i > k) throw MathError("simple reflection index out of range");
  auto w = identity(k);
  if (i < k) std::swap(w.perm_[static_cast<std::size_t>(i - 1)], w.perm_[static_cast<std::size_t>(i)]);
  else w.signs_[static_cast<std::size_t>(k - 1)] = -1;
  return w;
}

WeylSp WeylSp::longest(int k) {
  auto w = identity(k);
  std::fill(w.signs_.begin(), w.signs_.end(), -1);
  return w;
}

std::vector<WeylSp> WeylSp::all(int k) {
  std::vector<WeylSp> out;
  for (const auto& p : WeylGL::all(k))
    for (int mask = 0; mask < (1 << k); ++mask) {
      std::vector<int> s(static_cast<std::size_t>(k));
      for (int a = 0; a < k; ++a) s[static_cast<std::size_t>(a)] = (mask >> a) & 1 ? -1 : 1;
      out.emplace_back(p.images(), s);
    }
  return out;
}

WeylSp WeylSp::inverse() const {
  std::vector<int> p(perm_.size()), s(perm_.size());
  for (std::size_t a = 0; a < perm_.size(); ++a) {
    auto b = static_cast<std::size_t>(perm_[a] - 1);
    p[b] = static_cast<int>(a) + 1;
    s[b] = signs_[a];
  }
  return WeylSp(p, s);
}

bool WeylSp::is_identity() const {
  for (std::size_t a = 0; a < perm_.size(); ++a)
    if (perm_[a] != static_cast<int>(a) + 1 || signs_[a] != 1) return false;
  return true;
}

std::pair<SpRoot, bool> WeylSp::apply(const SpRoot& r) const {
  auto c = coefficients(r, k());
  std::vector<int> d(c.size(), 0);
  for (std::size_t a = 0; a < c.size(); ++a) d[static_cast<std::size_t>(perm_[a] - 1)] += signs_[a] * c[a];
  bool positive = true;
  for (int x : d)
    if (x != 0) {
      positive = x > 0;
      break;
    }
  if (!positive)
    for (int& x : d) x = -x;
  return {from_coefficients(d), positive};
}

std::vector<SpRoot> WeylSp::inversions() const {
  std::vector<SpRoot> out;
  for (const auto& r : positive_roots_sp(k()))
    if (!apply(r).second) out.push_back(r);
  return out;
}

std::vector<int> WeylSp::reduced_word(DescentChoice choice) const {
  std::vector<int> word;
  WeylSp w = *this;
  const int kk = k();
  auto simple_root = [kk](int i) {
    return i < kk ? SpRoot{SpKind::short_minus, i, i + 1} : SpRoot{SpKind::long_root, kk, 0};
  };
  while (true) {
    int pick = 0;
    for (int i = 1; i <= kk; ++i)
      if (!w.apply(simple_root(i)).second) {
        pick = i;
        if (choice == DescentChoice::first) break;
      }
    if (pick == 0) break;
    w = w * simple(pick, kk);
    word.push_back(pick);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

WeylSp operator*(const WeylSp& a, const WeylSp& b) {
  if (a.k() != b.k()) throw MathError("Weyl group size mismatch");
  std::vector<int> p(b.perm_.size()), s(b.perm_.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    p[x] = a.perm(b.perm_[x]);
    s[x] = b.signs_[x] * a.sign(b.perm_[x]);
  }
  return WeylSp(p, s);
}

std::string WeylSp::to_string() const {
  std::string s = "[";
  for (std::size_t a = 0; a < perm_.size(); ++a)
    s += (a ? "," : "") + std::string(signs_[a] < 0 ? "-" : "") + std::to_string(perm_[a]);
  return s + "]";
}

int sp_length(const WeylSp& w) { return w.length(); }

WeylGL embed_sp(const WeylSp& w) {
  const int k = w.k(), n = 2 * k;
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int a = 1; a <= k; ++a) {
    int b = w.perm(a);
    int image = w.sign(a) > 0 ? b : n + 1 - b;
    img[static_cast<std::size_t>(a - 1)] = image;
    img[static_cast<std::size_t>(n - a)] = n + 1 - image;
  }
  return WeylGL(std::move(img));
}

SpRoot gl_to_sp(const GLRoot& alpha, int k) {
  const int n = 2 * k;
  if (!alpha.positive() || alpha.j > n) throw MathError("gl_to_sp expects a positive GL(2k) root");
  // GL index a -> signed basis vector: a <= k gives +e_a, a > k gives -e_{n+1-a}.
  auto idx = [&](int a) { return a <= k ? a : n + 1 - a; };
  auto sgn_of = [&](int a) { return a <= k ? 1 : -1; };
  std::vector<int> c(static_cast<std::size_t>(k), 0);
  c[static_cast<std::size_t>(idx(alpha.i) - 1)] += sgn_of(alpha.i);
  c[static_cast<std::size_t>(idx(alpha.j) - 1)] -= sgn_of(alpha.j);
  return from_coefficients(c);
}

LaurentPoly poincare_Q(int n) {
  const LaurentPoly q = LaurentPoly::variable("u", 4);
  LaurentPoly result(1);
  for (int i = 1; i <= n; ++i) {
    LaurentPoly sum, term(1);
    for (int j = 0; j < i; ++j) {
      sum += term;
      term *= q;
    }
    result *= sum;
  }
  return result;
}

}  // namespace metacs
