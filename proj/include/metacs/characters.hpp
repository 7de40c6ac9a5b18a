// Unramified characters: evaluations on a_alpha, torus elements t_lambda, Weyl action.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "metacs/exactalg.hpp"
#include "metacs/weylroots.hpp"

namespace metacs {

// Weakly decreasing integer vector.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);
  static Partition zero(int k) { return Partition(std::vector<int>(static_cast<std::size_t>(k), 0)); }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i - 1)]; }  // 1-based
  int size() const;  // |lambda|
  bool is_nonneg() const;
  bool is_even() const;  // in 2Z^k_+
  auto operator<=>(const Partition&) const = default;
  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

// Character of the GL(n) torus given by coordinate values c_a = q^{-s_a} (single-term polynomials).
class TorusChar {
 public:
  explicit TorusChar(std::vector<LaurentPoly> coords);
  static TorusChar symbolic(int n, const std::string& prefix = "y");

  int n() const { return static_cast<int>(coords_.size()); }
  const LaurentPoly& coord(int a) const { return coords_[static_cast<std::size_t>(a - 1)]; }
  RatFunc eval_a(const GLRoot& alpha) const;  // c_i^2 c_j^{-2}
  TorusChar inverse() const;
  TorusChar act(const WeylGL& w) const;  // t -> chi(w^{-1} t w)
  bool operator==(const TorusChar&) const = default;

 private:
  std::vector<LaurentPoly> coords_;
};

enum class CharMode { symbolic, specialized };

// Character on the symplectic locus s_{n+1-a} = -s_a, stored on z_1..z_k.
class SymplecticChar {
 public:
  static SymplecticChar symbolic(int k);  // z_i free symbols "z1".."zk"
  static SymplecticChar specialized(std::vector<LaurentPoly> z);
  static SymplecticChar numeric(const std::vector<BigRat>& z);

  int k() const { return static_cast<int>(z_.size()); }
  CharMode mode() const { return mode_; }
  const LaurentPoly& z(int i) const { return z_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<LaurentPoly>& values() const { return z_; }
  bool is_numeric() const;  // every z_i a rational constant
  LaurentPoly gl_coord(int a) const;  // GL(2k) coordinate a
  TorusChar gl() const;
  SymplecticChar inverse() const;
  bool operator==(const SymplecticChar& o) const { return z_ == o.z_; }

 private:
  SymplecticChar(std::vector<LaurentPoly> z, CharMode mode);
  std::vector<LaurentPoly> z_;
  CharMode mode_;
};

RatFunc eval_a(const SymplecticChar& chi, const GLRoot& alpha);
// chi^{sign/2}(a_alpha) for a long root alpha = 2e_i: z_i^{2 sign}.
RatFunc eval_half_long(const SymplecticChar& chi, const SpRoot& alpha, int sign);
// prod over positive Sp roots of chi^{1/2}(a_alpha) = prod_i z_i^{2(k+1-i)}; defined as a whole product.
RatFunc half_root_product(const SymplecticChar& chi);
// chi(s(t_lambda)) = prod z_i^{lambda_i}; lambda must be even.
RatFunc eval_torus(const SymplecticChar& chi, const Partition& lambda);
// delta_{B_n}^{1/2}(t_lambda) = prod u^{2 lambda_i (n+1-2i)}
LaurentPoly delta_B_half(const Partition& lambda, int n);
// delta_{B_n}^{1/4}(t_lambda) = prod u^{lambda_i (n+1-2i)}
LaurentPoly delta_B_quarter(const Partition& lambda, int n);

SymplecticChar weyl_act(const WeylSp& w, const SymplecticChar& chi);
// z_i = u^{n+1-2i}, n = 2k
SymplecticChar theta_char(int k);

struct AdmissibilityReport {
  bool regular = false;
  bool shalika_dim_le_1 = false;
  std::optional<std::vector<int>> tau;  // tau(i) for i = 1..k
  bool necessary_condition = false;
};

AdmissibilityReport admissibility(const SymplecticChar& chi);

}  // namespace metacs
