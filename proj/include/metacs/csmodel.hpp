// Casselman-Shalika values of the unramified metaplectic Shalika functional.
//
// Variable convention: `eta` is the inducing character of the principal series I(eta) on which the
// functional is evaluated; the c-functions below are evaluated at eta and the Weyl-sum torus values at
// eta^{-1}. The theta specialization passes the theta character itself as eta.
#pragma once

#include <string>
#include <vector>

#include "metacs/characters.hpp"
#include "metacs/exec.hpp"

namespace metacs {

struct CSInput {
  SymplecticChar eta;
  int eps = 1;
  int k() const { return eta.k(); }
};

// (1 - q^{-1} chi(a)) / (1 - chi(a))
RatFunc c_alpha(const TorusChar& chi, const GLRoot& alpha);
RatFunc c_alpha(const SymplecticChar& chi, const GLRoot& alpha);
// product over {alpha > 0 : w alpha < 0}
RatFunc c_w(const TorusChar& chi, const WeylGL& w);
RatFunc c_w(const SymplecticChar& chi, const WeylGL& w);

// Positive GL(2k) root representing a positive Sp(k) root.
GLRoot sp_to_gl(const SpRoot& alpha, int k);

RatFunc y_alpha(const CSInput& in, const SpRoot& alpha);
// product of y over the Sp inversions of w
RatFunc A_w(const CSInput& in, const WeylSp& w);
// product of rank-one factors along a reduced word
RatFunc A_w_by_word(const CSInput& in, const WeylSp& w, DescentChoice choice);
// closed form of the rank-one coefficient for the simple reflection s_i (i = k is the long one)
RatFunc a_rank_one_closed_form(const CSInput& in, int i);

RatFunc beta(const CSInput& in);
// Weyl sum with c-functions and y-factors
RatFunc cs_value_expanded(const CSInput& in, const Partition& lambda, Exec exec = Exec::serial);
// Weyl sum of beta(w eta), alternating in the Sp length
RatFunc cs_value_compact(const CSInput& in, const Partition& lambda, Exec exec = Exec::serial);
// Individual summands of the expanded form, in WeylSp::all order.
std::vector<RatFunc> cs_expanded_terms(const CSInput& in, const Partition& lambda, Exec exec = Exec::serial);

struct ThetaReport {
  RatFunc ratio;              // value(lambda) / value(0)
  LaurentPoly expected;       // delta^{1/4}(t_lambda), or 0 off the even lattice
  std::vector<std::string> survivors;  // w != e whose term is nonzero
  bool pass = false;
};
ThetaReport theta_normalized_value(int k, const Partition& lambda);

}  // namespace metacs
