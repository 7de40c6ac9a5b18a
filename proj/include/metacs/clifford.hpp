// The pin representation of the Clifford algebra C(2k) on the exterior algebra of a maximal isotropic subspace.
#pragma once

#include <string>
#include <vector>

#include "metacs/exactalg.hpp"

namespace metacs {

// Subset I of {1..k} as a bit mask (bit i-1 for i).
using IndexSet = unsigned;

// Basis {f_I} ordered by (|I|, lexicographic I).
std::vector<IndexSet> exterior_basis(int k);
std::string basis_label(IndexSet s);  // "f{}" / "f{1,3}"

class PinMatrix {
 public:
  PinMatrix(int k, std::vector<GaussRat> entries);
  static PinMatrix identity(int k);
  static PinMatrix zero(int k);

  int k() const { return k_; }
  int dim() const { return 1 << k_; }
  const GaussRat& at(int r, int c) const { return entries_[static_cast<std::size_t>(r * dim() + c)]; }
  GaussRat& at(int r, int c) { return entries_[static_cast<std::size_t>(r * dim() + c)]; }
  bool is_diagonal() const;
  int rank() const;

  friend PinMatrix operator+(const PinMatrix& a, const PinMatrix& b);
  friend PinMatrix operator-(const PinMatrix& a, const PinMatrix& b);
  friend PinMatrix operator*(const PinMatrix& a, const PinMatrix& b);
  PinMatrix scaled(const GaussRat& c) const;
  friend bool operator==(const PinMatrix& a, const PinMatrix& b) { return a.k_ == b.k_ && a.entries_ == b.entries_; }
  std::string to_string() const;

 private:
  int k_;
  std::vector<GaussRat> entries_;
};

// f_i = e_i + i e_{i+k} acts by wedge; f'_i = e_i - i e_{i+k} by contraction with (f'_i | f_j) = 2 delta_ij, times 2.
PinMatrix wedge_matrix(int i, int k);
PinMatrix contraction_matrix(int i, int k);
// e_j, 1 <= j <= 2k
PinMatrix generator_matrix(int j, int k);

// sign * prod_{i in I} e_i e_{i+k}: closed-form diagonal action
PinMatrix monomial_action(IndexSet I, int sign, int k);
// same element as a product of generator matrices
PinMatrix monomial_product(IndexSet I, int sign, int k);

enum class GammaAtMinusOne { plus_i, minus_i };

// gamma(sign * prod_{i in I} e_i e_{i+k})
GaussRat gamma_character(IndexSet I, int sign, GammaAtMinusOne conv = GammaAtMinusOne::plus_i);

struct HomSpace {
  int dim = 0;
  PinMatrix projector = PinMatrix::zero(0);
  bool idempotent = false;
  std::vector<IndexSet> support;  // basis vectors fixed by the projector
};
// (1/|G|) sum_g gamma(g)^{-1} sigma(g) over the 2^{k+1} signed monomials
HomSpace hom_space(int k, GammaAtMinusOne conv = GammaAtMinusOne::plus_i);
int hom_dim(int k, GammaAtMinusOne conv = GammaAtMinusOne::plus_i);

}  // namespace metacs
