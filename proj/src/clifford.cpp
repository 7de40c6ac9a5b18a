#include "metacs/clifford.hpp"

#include <algorithm>
#include <bit>

namespace metacs {

namespace {

void require_k(int k) {
  if (k < 0 || k > 8) throw MathError("k out of range");
}

int index_of(IndexSet s, int k) {
  static thread_local std::vector<std::vector<int>> cache;
  if (cache.size() <= static_cast<std::size_t>(k)) cache.resize(static_cast<std::size_t>(k) + 1);
  auto& idx = cache[static_cast<std::size_t>(k)];
  if (idx.empty()) {
    idx.assign(static_cast<std::size_t>(1) << k, 0);
    const auto basis = exterior_basis(k);
    for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = static_cast<int>(i);
  }
  return idx[s];
}

IndexSet bit(int i) { return IndexSet{1} << (i - 1); }

// (-1)^{#{j in s : j < i}}
int order_sign(IndexSet s, int i) { return std::popcount(s & (bit(i) - 1)) % 2 == 0 ? 1 : -1; }

}  // namespace

std::vector<IndexSet> exterior_basis(int k) {
  require_k(k);
  std::vector<IndexSet> out;
  for (IndexSet s = 0; s < (IndexSet{1} << k); ++s) out.push_back(s);
  auto elements = [](IndexSet s) {
    std::vector<int> e;
    for (int i = 1; s >> (i - 1); ++i)
      if (s & bit(i)) e.push_back(i);
    return e;
  };
  std::sort(out.begin(), out.end(), [&](IndexSet a, IndexSet b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    return elements(a) < elements(b);
  });
  return out;
}

std::string basis_label(IndexSet s) {
  std::string out = "f{";
  bool first = true;
  for (int i = 1; s >> (i - 1); ++i)
    if (s & bit(i)) {
      out += (first ? "" : ",") + std::to_string(i);
      first = false;
    }
  return out + "}";
}

PinMatrix::PinMatrix(int k, std::vector<GaussRat> entries) : k_(k), entries_(std::move(entries)) {
  require_k(k);
  if (entries_.size() != static_cast<std::size_t>(dim()) * static_cast<std::size_t>(dim()))
    throw MathError("entry count does not match 2^k x 2^k");
}

PinMatrix PinMatrix::zero(int k) {
  require_k(k);
  const std::size_t d = std::size_t{1} << k;
  return {k, std::vector<GaussRat>(d * d)};
}

PinMatrix PinMatrix::identity(int k) {
  PinMatrix m = zero(k);
  for (int i = 0; i < m.dim(); ++i) m.at(i, i) = GaussRat(1);
  return m;
}

bool PinMatrix::is_diagonal() const {
  for (int r = 0; r < dim(); ++r)
    for (int c = 0; c < dim(); ++c)
      if (r != c && !at(r, c).is_zero()) return false;
  return true;
}

int PinMatrix::rank() const {
  std::vector<GaussRat> m = entries_;
  const int d = dim();
  auto el = [&](int r, int c) -> GaussRat& { return m[static_cast<std::size_t>(r * d + c)]; };
  int rank = 0;
  for (int col = 0; col < d && rank < d; ++col) {
    int pivot = -1;
    for (int r = rank; r < d; ++r)
      if (!el(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int c = 0; c < d; ++c) std::swap(el(pivot, c), el(rank, c));
    const GaussRat inv = el(rank, col).inverse();
    for (int r = rank + 1; r < d; ++r) {
      if (el(r, col).is_zero()) continue;
      const GaussRat f = el(r, col) * inv;
      for (int c = col; c < d; ++c) el(r, c) = el(r, c) - f * el(rank, c);
    }
    ++rank;
  }
  return rank;
}

PinMatrix operator+(const PinMatrix& a, const PinMatrix& b) {
  if (a.k_ != b.k_) throw MathError("size mismatch");
  PinMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

PinMatrix operator-(const PinMatrix& a, const PinMatrix& b) { return a + b.scaled(GaussRat(-1)); }

PinMatrix operator*(const PinMatrix& a, const PinMatrix& b) {
  if (a.k_ != b.k_) throw MathError("size mismatch");
  PinMatrix out = PinMatrix::zero(a.k_);
  const int d = a.dim();
  for (int r = 0; r < d; ++r)
    for (int m = 0; m < d; ++m) {
      if (a.at(r, m).is_zero()) continue;
      for (int c = 0; c < d; ++c)
        if (!b.at(m, c).is_zero()) out.at(r, c) += a.at(r, m) * b.at(m, c);
    }
  return out;
}

PinMatrix PinMatrix::scaled(const GaussRat& c) const {
  PinMatrix out = *this;
  for (auto& e : out.entries_) e = e * c;
  return out;
}

std::string PinMatrix::to_string() const {
  std::string out = "[";
  for (int r = 0; r < dim(); ++r) {
    out += r ? "; " : "";
    for (int c = 0; c < dim(); ++c) out += (c ? ", " : "") + at(r, c).to_string();
  }
  return out + "]";
}

PinMatrix wedge_matrix(int i, int k) {
  if (i < 1 || i > k) throw MathError("index out of range");
  PinMatrix m = PinMatrix::zero(k);
  for (IndexSet s : exterior_basis(k))
    if (!(s & bit(i))) m.at(index_of(s | bit(i), k), index_of(s, k)) = GaussRat(order_sign(s, i));
  return m;
}

PinMatrix contraction_matrix(int i, int k) {
  if (i < 1 || i > k) throw MathError("index out of range");
  PinMatrix m = PinMatrix::zero(k);
  // 2 (f'_i | f_i) = 4
  for (IndexSet s : exterior_basis(k))
    if (s & bit(i)) m.at(index_of(s & ~bit(i), k), index_of(s, k)) = GaussRat(4 * order_sign(s, i));
  return m;
}

PinMatrix generator_matrix(int j, int k) {
  if (j < 1 || j > 2 * k) throw MathError("index out of range");
  if (j <= k) return (wedge_matrix(j, k) + contraction_matrix(j, k)).scaled(GaussRat(BigRat(1, 2)));
  const int i = j - k;
  // 1/(2i) = -i/2
  return (wedge_matrix(i, k) - contraction_matrix(i, k)).scaled(GaussRat(0, BigRat(-1, 2)));
}

PinMatrix monomial_action(IndexSet I, int sign, int k) {
  PinMatrix m = PinMatrix::zero(k);
  const int r = std::popcount(I);
  GaussRat base{sign};
  for (int t = 0; t < r; ++t) base *= GaussRat(0, -1);
  for (IndexSet s : exterior_basis(k)) {
    const int idx = index_of(s, k);
    m.at(idx, idx) = std::popcount(s & I) % 2 == 0 ? base : -base;
  }
  return m;
}

PinMatrix monomial_product(IndexSet I, int sign, int k) {
  PinMatrix m = PinMatrix::identity(k).scaled(GaussRat(sign));
  for (int i = 1; i <= k; ++i)
    if (I & bit(i)) m = m * generator_matrix(i, k) * generator_matrix(i + k, k);
  return m;
}

GaussRat gamma_character(IndexSet I, int sign, GammaAtMinusOne conv) {
  const int r = std::popcount(I);
  // sign * (-1)^{r + r(r-1)/2} gamma((-1)^r)
  GaussRat g{sign * (((r + r * (r - 1) / 2) % 2 == 0) ? 1 : -1)};
  if (r % 2 != 0) g *= conv == GammaAtMinusOne::plus_i ? GaussRat(0, 1) : GaussRat(0, -1);
  return g;
}

HomSpace hom_space(int k, GammaAtMinusOne conv) {
  PinMatrix sum = PinMatrix::zero(k);
  int order = 0;
  for (IndexSet I = 0; I < (IndexSet{1} << k); ++I)
    for (int sign : {1, -1}) {
      sum = sum + monomial_product(I, sign, k).scaled(gamma_character(I, sign, conv).inverse());
      ++order;
    }
  HomSpace h;
  h.projector = sum.scaled(GaussRat(BigRat(1, order)));
  h.dim = h.projector.rank();
  h.idempotent = h.projector * h.projector == h.projector;
  for (IndexSet s : exterior_basis(k)) {
    const int idx = index_of(s, k);
    if (!h.projector.at(idx, idx).is_zero()) h.support.push_back(s);
  }
  return h;
}

int hom_dim(int k, GammaAtMinusOne conv) { return hom_space(k, conv).dim; }

}  // namespace metacs
