// The metaplectic double cover of GL(n) restricted to monomial matrices.
#pragma once

#include <random>
#include <string>
#include <variant>
#include <vector>

#include "metacs/padicweil.hpp"
#include "metacs/weylroots.hpp"

namespace metacs {

// (a b; c d)
struct Mat2 {
  BigRat a, b, c, d;
  BigRat det() const { return a * d - b * c; }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
};

int kubota(const Mat2& g, const Mat2& h, long p);

// Block-diagonal matrix: 1x1 entries and 2x2 blocks.
using Block = std::variant<BigRat, Mat2>;
using BlockDiag = std::vector<Block>;

// sigma(diag(a, b), diag(a', b')) = sigma(a, a') sigma(b, b') (det a, det b')
int sigma_block(const BlockDiag& a, const BlockDiag& b, const BlockDiag& a2, const BlockDiag& b2, long p);
int sigma_block_diag(const BlockDiag& g, const BlockDiag& h, long p);

using Torus = std::vector<PadicScalar>;

int sigma_torus(const Torus& t, const Torus& t2);
// Sign of s(w) s(t) s(w)^{-1} = sign * s(wtw^{-1}).
int sigma_weyl_torus(const WeylGL& w, const Torus& t);
// (w t w^{-1})_{w(a)} = t_a
Torus conjugate_torus(const WeylGL& w, const Torus& t);
Torus torus_product(const Torus& a, const Torus& b);
Torus torus_inverse(const Torus& t);

// g e_a = scale[w(a)] e_{w(a)}, i.e. diag(scale) times the permutation matrix of w.
struct MonomialMatrix {
  std::vector<BigRat> scale;
  WeylGL perm;

  static MonomialMatrix identity(int n);
  static MonomialMatrix diagonal(std::vector<BigRat> d);
  int n() const { return perm.n(); }
  BigRat det() const;
  BigRat entry(int row, int col) const;
  MonomialMatrix inverse() const;
  friend MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b);
  bool operator==(const MonomialMatrix&) const = default;
  std::string to_string() const;
};

// Product of the embedded (0 -1; 1 0) along a reduced word of w.
MonomialMatrix weyl_representative(const WeylGL& w, DescentChoice choice = DescentChoice::first);

enum class CocycleTwist { none, det };

// eps * s(t) * s(rep(w)).
class MetaMonomial {
 public:
  MetaMonomial(int eps, Torus torus, WeylGL perm);
  static MetaMonomial identity(int n, long p);
  static MetaMonomial torus_lift(Torus t);
  static MetaMonomial weyl_lift(const WeylGL& w, long p);

  int eps() const { return eps_; }
  const Torus& torus() const { return torus_; }
  const WeylGL& perm() const { return perm_; }
  int n() const { return perm_.n(); }
  long p() const { return torus_.front().p(); }
  MetaMonomial negated() const { return {-eps_, torus_, perm_}; }
  MonomialMatrix projection() const;
  bool operator==(const MetaMonomial&) const = default;
  std::string to_string() const;

 private:
  int eps_;
  Torus torus_;
  WeylGL perm_;
};

MetaMonomial mul(const MetaMonomial& a, const MetaMonomial& b, CocycleTwist twist = CocycleTwist::none);
MetaMonomial inv(const MetaMonomial& m, CocycleTwist twist = CocycleTwist::none);

MetaMonomial random_meta(std::mt19937_64& rng, int n, long p);

// s(g) for a monomial g, written as s(t) s(rep(w)).
MetaMonomial section_s(const MonomialMatrix& g, long p);
// (0 I_k; J_k 0)
MonomialMatrix omega(int k);
// diag(c, J c J), the monomial elements of H.
MonomialMatrix h_from_c(const MonomialMatrix& c);
// c with omega^{-1} h omega = diag(c, c); throws if h is not a monomial element of H.
MonomialMatrix c_of_h(const MonomialMatrix& h);
MetaMonomial section_h(const MonomialMatrix& h, long p);
// s(diag(c, c))
MetaMonomial triangle(const MonomialMatrix& c, long p);

}  // namespace metacs
