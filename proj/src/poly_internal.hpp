#pragma once

#include "metacs/exactalg.hpp"

namespace metacs {

class PolyBuilder {
 public:
  static LaurentPoly make(std::vector<std::string> vars, std::vector<LaurentPoly::Term> terms);
  // Rewrites p over a superset of its variables (both lists in canonical order).
  static std::vector<LaurentPoly::Term> lift(const LaurentPoly& p, const std::vector<std::string>& vars);
  static std::vector<std::string> union_vars(const std::vector<std::string>& a, const std::vector<std::string>& b);
  static const std::vector<std::string>& vars(const LaurentPoly& p) { return p.vars_; }
  static const std::vector<LaurentPoly::Term>& terms(const LaurentPoly& p) { return p.terms_; }
};

// Descending graded-lex comparison over the first n slots.
int grlex_cmp(const Exponents& a, const Exponents& b, std::size_t n);

}  // namespace metacs
