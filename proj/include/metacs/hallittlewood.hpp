// Hall-Littlewood polynomials P_lambda(x_1..x_k; t) and the even-partition summation identity.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "metacs/characters.hpp"
#include "metacs/exec.hpp"

namespace metacs {

inline const std::string kHLParam = "t";

std::string x_var(int i);  // "x<i>"

// Symmetrization over S_k with the Vandermonde and v_lambda(t) cleared by exact division.
// Parameter is the symbol t unless `t_value` is given.
LaurentPoly hl_P(const Partition& lambda, int k, const std::optional<LaurentPoly>& t_value = std::nullopt,
                 Exec exec = Exec::serial);

LaurentPoly monomial_symmetric(const Partition& lambda, int k);
// det(x_i^{lambda_j + k - j}) / det(x_i^{k - j})
LaurentPoly schur_bialternant(const Partition& lambda, int k);
bool is_symmetric(const LaurentPoly& f, int k);

struct HLSpecializationReport {
  bool symmetric = false;
  bool unit_leading = false;  // coefficient 1 on x^lambda
  bool schur_at_zero = false;
  bool monomial_at_one = false;
  bool pass() const { return symmetric && unit_leading && schur_at_zero && monomial_at_one; }
};
HLSpecializationReport hl_specialization_checks(const Partition& lambda, int k);

// Partitions with even parts, at most k of them, |lambda| <= bound; ordered by size, then lexicographically.
std::vector<Partition> even_partitions(int k, int bound);

struct HLSumReport {
  bool pass = false;
  int degree_checked = 0;
  std::string witness;  // first failing degree and the difference
};
// Sum over even lambda with |lambda| <= bound of P_lambda(x; t) against
// prod_{i<j}(1 - t x_i x_j) / prod_{i<=j}(1 - x_i x_j) truncated to x-degree <= bound.
HLSumReport hl_sum_identity_check(int k, int bound, Exec exec = Exec::serial);

}  // namespace metacs
