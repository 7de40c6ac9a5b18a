#include "metacs/cocycle.hpp"

#include <algorithm>
#include <numeric>

namespace metacs {

namespace {

int sym(const BigRat& a, const BigRat& b, long p) { return hilbert2(PadicScalar(a, p), PadicScalar(b, p)); }

BigRat lower_entry(const Mat2& g) { return sgn(g.c) != 0 ? g.c : g.d; }

BigRat block_det(const Block& b) {
  return std::visit([](const auto& x) -> BigRat {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Mat2>) return x.det();
    else return x;
  }, b);
}

BigRat diag_det(const BlockDiag& g) {
  BigRat d = 1;
  for (const auto& b : g) d *= block_det(b);
  return d;
}

int sigma_single(const Block& g, const Block& h, long p) {
  if (g.index() != h.index()) throw MathError("block shapes differ");
  if (const auto* m = std::get_if<Mat2>(&g)) return kubota(*m, std::get<Mat2>(h), p);
  return 1;  // GL(1)
}

int perm_sign(const WeylGL& w) { return w.length() % 2 == 0 ? 1 : -1; }

Torus ones(int n, long p) { return Torus(static_cast<std::size_t>(n), PadicScalar(1, p)); }

// s(rep(s_i))^2 = kappa * s(h_i), h_i = -1 at i, i+1.
int rank_one_square_sign(int i, int n, long p) {
  BlockDiag g;
  for (int a = 1; a < i; ++a) g.emplace_back(BigRat(1));
  g.emplace_back(Mat2{0, -1, 1, 0});
  for (int a = i + 2; a <= n; ++a) g.emplace_back(BigRat(1));
  return sigma_block_diag(g, g, p);
}

}  // namespace

int kubota(const Mat2& g, const Mat2& h, long p) {
  if (sgn(g.det()) == 0 || sgn(h.det()) == 0) throw MathError("singular matrix");
  const BigRat x = lower_entry(g * h);
  return sym(x / lower_entry(g), x / (lower_entry(h) * g.det()), p);
}

int sigma_block(const BlockDiag& a, const BlockDiag& b, const BlockDiag& a2, const BlockDiag& b2, long p) {
  return sigma_block_diag(a, a2, p) * sigma_block_diag(b, b2, p) * sym(diag_det(a), diag_det(b2), p);
}

int sigma_block_diag(const BlockDiag& g, const BlockDiag& h, long p) {
  if (g.size() != h.size()) throw MathError("block shapes differ");
  if (g.empty()) return 1;
  if (g.size() == 1) return sigma_single(g[0], h[0], p);
  const BlockDiag g0{g[0]}, h0{h[0]}, g1(g.begin() + 1, g.end()), h1(h.begin() + 1, h.end());
  return sigma_block(g0, g1, h0, h1, p);
}

int sigma_torus(const Torus& t, const Torus& t2) {
  if (t.size() != t2.size()) throw MathError("torus sizes differ");
  int s = 1;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) s *= hilbert2(t[i], t2[j]);
  return s;
}

int sigma_weyl_torus(const WeylGL& w, const Torus& t) {
  int s = 1;
  for (const auto& r : inversions(w))
    s *= hilbert2(-t[static_cast<std::size_t>(r.j - 1)], t[static_cast<std::size_t>(r.i - 1)]);
  return s;
}

Torus conjugate_torus(const WeylGL& w, const Torus& t) {
  Torus out = t;
  for (int a = 1; a <= w.n(); ++a) out[static_cast<std::size_t>(w(a) - 1)] = t[static_cast<std::size_t>(a - 1)];
  return out;
}

Torus torus_product(const Torus& a, const Torus& b) {
  Torus out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] * b[i]);
  return out;
}

Torus torus_inverse(const Torus& t) {
  Torus out;
  out.reserve(t.size());
  for (const auto& x : t) out.push_back(x.inverse());
  return out;
}

MonomialMatrix MonomialMatrix::identity(int n) {
  return {std::vector<BigRat>(static_cast<std::size_t>(n), BigRat(1)), WeylGL::identity(n)};
}

MonomialMatrix MonomialMatrix::diagonal(std::vector<BigRat> d) {
  const int n = static_cast<int>(d.size());
  return {std::move(d), WeylGL::identity(n)};
}

BigRat MonomialMatrix::det() const {
  BigRat d = perm_sign(perm);
  for (const auto& x : scale) d *= x;
  return d;
}

BigRat MonomialMatrix::entry(int row, int col) const {
  return perm(col) == row ? scale[static_cast<std::size_t>(row - 1)] : BigRat(0);
}

MonomialMatrix MonomialMatrix::inverse() const {
  const WeylGL wi = perm.inverse();
  std::vector<BigRat> s(scale.size());
  for (int r = 1; r <= n(); ++r) s[static_cast<std::size_t>(wi(r) - 1)] = 1 / scale[static_cast<std::size_t>(r - 1)];
  return {std::move(s), wi};
}

MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.n() != b.n()) throw MathError("size mismatch");
  const WeylGL ai = a.perm.inverse();
  std::vector<BigRat> s(a.scale.size());
  for (int r = 1; r <= a.n(); ++r)
    s[static_cast<std::size_t>(r - 1)] = a.scale[static_cast<std::size_t>(r - 1)] * b.scale[static_cast<std::size_t>(ai(r) - 1)];
  return {std::move(s), a.perm * b.perm};
}

std::string MonomialMatrix::to_string() const {
  std::string out = "diag(";
  for (std::size_t i = 0; i < scale.size(); ++i) out += (i ? "," : "") + scale[i].get_str();
  return out + ")*" + perm.to_string();
}

MonomialMatrix weyl_representative(const WeylGL& w, DescentChoice choice) {
  const int n = w.n();
  MonomialMatrix m = MonomialMatrix::identity(n);
  for (int i : w.reduced_word(choice)) {
    MonomialMatrix si = MonomialMatrix::identity(n);
    si.perm = WeylGL::simple(i, n);
    si.scale[static_cast<std::size_t>(i - 1)] = -1;
    m = m * si;
  }
  return m;
}

MetaMonomial::MetaMonomial(int eps, Torus torus, WeylGL perm) : eps_(eps), torus_(std::move(torus)), perm_(std::move(perm)) {
  if (eps_ != 1 && eps_ != -1) throw MathError("eps must be +1 or -1");
  if (torus_.empty() || static_cast<int>(torus_.size()) != perm_.n()) throw MathError("torus and permutation sizes differ");
  for (const auto& x : torus_)
    if (x.p() != torus_.front().p()) throw MathError("mismatched primes");
}

MetaMonomial MetaMonomial::identity(int n, long p) { return {1, ones(n, p), WeylGL::identity(n)}; }

MetaMonomial MetaMonomial::torus_lift(Torus t) {
  const int n = static_cast<int>(t.size());
  return {1, std::move(t), WeylGL::identity(n)};
}

MetaMonomial MetaMonomial::weyl_lift(const WeylGL& w, long p) { return {1, ones(w.n(), p), w}; }

MonomialMatrix MetaMonomial::projection() const {
  MonomialMatrix m = weyl_representative(perm_);
  for (std::size_t r = 0; r < torus_.size(); ++r) m.scale[r] *= torus_[r].value();
  return m;
}

std::string MetaMonomial::to_string() const {
  std::string out = eps_ == 1 ? "s(diag(" : "-s(diag(";
  for (std::size_t i = 0; i < torus_.size(); ++i) out += (i ? "," : "") + torus_[i].to_string();
  return out + "))*s(" + perm_.to_string() + ")";
}

MetaMonomial mul(const MetaMonomial& a, const MetaMonomial& b, CocycleTwist twist) {
  if (a.n() != b.n()) throw MathError("size mismatch");
  if (a.p() != b.p()) throw MathError("mismatched primes");
  const int n = a.n();
  const long p = a.p();
  // s(t1) s(w1) s(t2) s(w2) = sign * s(t1 . w1 t2 w1^{-1}) s(w1) s(w2)
  const Torus moved = conjugate_torus(a.perm(), b.torus());
  int eps = a.eps() * b.eps() * sigma_weyl_torus(a.perm(), b.torus()) * sigma_torus(a.torus(), moved);
  Torus torus = torus_product(a.torus(), moved);

  // s(w1) s(w2) = sign * s(tau) s(w1 w2), one simple factor of w2 at a time.
  int sign = 1;
  Torus tau = ones(n, p);
  WeylGL w = a.perm();
  for (int i : b.perm().reduced_word()) {
    const WeylGL ws = w * WeylGL::simple(i, n);
    if (ws.length() > w.length()) {
      w = ws;
      continue;
    }
    Torus h = ones(n, p);
    h[static_cast<std::size_t>(i - 1)] = PadicScalar(-1, p);
    h[static_cast<std::size_t>(i)] = PadicScalar(-1, p);
    const Torus hc = conjugate_torus(ws, h);
    sign *= rank_one_square_sign(i, n, p) * sigma_weyl_torus(ws, h) * sigma_torus(tau, hc);
    tau = torus_product(tau, hc);
    w = ws;
  }
  eps *= sign * sigma_torus(torus, tau);
  torus = torus_product(torus, tau);
  if (twist == CocycleTwist::det) eps *= sym(a.projection().det(), b.projection().det(), p);
  return {eps, std::move(torus), w};
}

MetaMonomial inv(const MetaMonomial& m, CocycleTwist twist) {
  const long p = m.p();
  const MetaMonomial back = MetaMonomial::weyl_lift(m.perm().inverse(), p);
  const MetaMonomial y = mul(m, back, twist);  // eps * s(tau)
  const MetaMonomial z = MetaMonomial::torus_lift(torus_inverse(y.torus()));
  const MetaMonomial unit = mul(MetaMonomial::torus_lift(y.torus()), z, twist);
  const MetaMonomial y_inv(y.eps() * unit.eps(), z.torus(), z.perm());
  return mul(back, y_inv, twist);
}

MetaMonomial random_meta(std::mt19937_64& rng, int n, long p) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  Torus t;
  for (int i = 0; i < n; ++i) t.push_back(random_scalar(rng, p));
  std::bernoulli_distribution flip(0.5);
  return {flip(rng) ? -1 : 1, std::move(t), WeylGL(std::move(images))};
}

MetaMonomial section_s(const MonomialMatrix& g, long p) {
  const MonomialMatrix rep = weyl_representative(g.perm);
  Torus t;
  for (std::size_t r = 0; r < g.scale.size(); ++r) t.emplace_back(g.scale[r] / rep.scale[r], p);
  return {1, std::move(t), g.perm};
}

MonomialMatrix omega(int k) {
  std::vector<int> images;
  for (int a = 1; a <= k; ++a) images.push_back(2 * k + 1 - a);
  for (int a = k + 1; a <= 2 * k; ++a) images.push_back(a - k);
  return {std::vector<BigRat>(static_cast<std::size_t>(2 * k), BigRat(1)), WeylGL(std::move(images))};
}

namespace {

MonomialMatrix block_diag(const MonomialMatrix& x, const MonomialMatrix& y) {
  const int k = x.n();
  std::vector<int> images;
  for (int a = 1; a <= k; ++a) images.push_back(x.perm(a));
  for (int a = 1; a <= y.n(); ++a) images.push_back(k + y.perm(a));
  std::vector<BigRat> s = x.scale;
  s.insert(s.end(), y.scale.begin(), y.scale.end());
  return {std::move(s), WeylGL(std::move(images))};
}

}  // namespace

MonomialMatrix h_from_c(const MonomialMatrix& c) {
  const MonomialMatrix J{std::vector<BigRat>(c.scale.size(), BigRat(1)), WeylGL::longest(c.n())};
  return block_diag(c, J * c * J);
}

MonomialMatrix c_of_h(const MonomialMatrix& h) {
  if (h.n() % 2 != 0) throw MathError("H lives in GL(2k)");
  const int k = h.n() / 2;
  const MonomialMatrix w = omega(k);
  const MonomialMatrix m = w.inverse() * h * w;
  std::vector<int> images;
  std::vector<BigRat> s;
  for (int a = 1; a <= k; ++a) {
    if (m.perm(a) > k || m.perm(a + k) != m.perm(a) + k ||
        m.scale[static_cast<std::size_t>(m.perm(a) - 1)] != m.scale[static_cast<std::size_t>(m.perm(a) + k - 1)])
      throw MathError("not a monomial element of H");
    images.push_back(m.perm(a));
  }
  for (int r = 1; r <= k; ++r) s.push_back(m.scale[static_cast<std::size_t>(r - 1)]);
  return {std::move(s), WeylGL(std::move(images))};
}

MetaMonomial triangle(const MonomialMatrix& c, long p) { return section_s(block_diag(c, c), p); }

MetaMonomial section_h(const MonomialMatrix& h, long p) {
  const MonomialMatrix c = c_of_h(h);
  const MetaMonomial w = section_s(omega(c.n()), p);
  return mul(mul(w, triangle(c, p)), inv(w));
}

}  // namespace metacs
