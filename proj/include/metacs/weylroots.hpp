// Root systems and Weyl groups of GL(n) and Sp(k), with the embedding W(Sp_k) -> S_{2k}.
#pragma once

#include <compare>
#include <string>
#include <vector>

#include "metacs/exactalg.hpp"

namespace metacs {

// Root e_i - e_j of GL(n), 1-based indices.
struct GLRoot {
  int i = 1;
  int j = 2;
  bool positive() const { return i < j; }
  GLRoot negated() const { return {j, i}; }
  auto operator<=>(const GLRoot&) const = default;
};

enum class SpKind { short_minus, short_plus, long_root };

// e_i - e_j (i<j), e_i + e_j (i<j) or 2e_i; always a positive root.
struct SpRoot {
  SpKind kind = SpKind::long_root;
  int i = 1;
  int j = 0;
  bool is_long() const { return kind == SpKind::long_root; }
  auto operator<=>(const SpRoot&) const = default;
  std::string to_string() const;
};

enum class DescentChoice { first, last };

class WeylGL {
 public:
  explicit WeylGL(std::vector<int> images);  // images[a-1] = w(a)
  static WeylGL identity(int n);
  static WeylGL simple(int i, int n);  // transposition (i, i+1)
  static WeylGL longest(int n);
  static std::vector<WeylGL> all(int n);  // lexicographic order of image vectors

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int a) const { return images_[static_cast<std::size_t>(a - 1)]; }
  const std::vector<int>& images() const { return images_; }
  GLRoot apply(const GLRoot& r) const { return {(*this)(r.i), (*this)(r.j)}; }
  WeylGL inverse() const;
  int length() const;
  bool is_identity() const;
  // Simple indices i_1..i_l with w = s_{i_1} ... s_{i_l}.
  std::vector<int> reduced_word(DescentChoice choice = DescentChoice::first) const;

  friend WeylGL operator*(const WeylGL& a, const WeylGL& b);  // (ab)(x) = a(b(x))
  auto operator<=>(const WeylGL&) const = default;
  std::string to_string() const;

 private:
  std::vector<int> images_;
};

enum class InversionOf { w, w_inverse };

// {alpha > 0 : w alpha < 0} (or the same for w^{-1}), sorted.
std::vector<GLRoot> inversions(const WeylGL& w, InversionOf which = InversionOf::w);
std::vector<GLRoot> positive_roots_gl(int n);
std::vector<SpRoot> positive_roots_sp(int k);

// Signed permutation: e_a -> sign[a] * e_{perm[a]}.
class WeylSp {
 public:
  WeylSp(std::vector<int> perm, std::vector<int> signs);
  static WeylSp identity(int k);
  // i < k: swap e_i, e_{i+1}; i = k: e_k -> -e_k.
  static WeylSp simple(int i, int k);
  static WeylSp longest(int k);  // e_a -> -e_a
  static std::vector<WeylSp> all(int k);

  int k() const { return static_cast<int>(perm_.size()); }
  int perm(int a) const { return perm_[static_cast<std::size_t>(a - 1)]; }
  int sign(int a) const { return signs_[static_cast<std::size_t>(a - 1)]; }
  WeylSp inverse() const;
  bool is_identity() const;
  // Image of a positive root: the positive root up to sign, and whether the image is positive.
  std::pair<SpRoot, bool> apply(const SpRoot& r) const;
  std::vector<SpRoot> inversions() const;
  int length() const { return static_cast<int>(inversions().size()); }
  std::vector<int> reduced_word(DescentChoice choice = DescentChoice::first) const;

  friend WeylSp operator*(const WeylSp& a, const WeylSp& b);
  auto operator<=>(const WeylSp&) const = default;
  std::string to_string() const;

 private:
  std::vector<int> perm_;
  std::vector<int> signs_;
};

int sp_length(const WeylSp& w);
WeylGL embed_sp(const WeylSp& w);
SpRoot gl_to_sp(const GLRoot& alpha, int k);  // alpha positive, n = 2k

// sum_{w in S_n} u^{4 l(w)}
LaurentPoly poincare_Q(int n);

}  // namespace metacs
