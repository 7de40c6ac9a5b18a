#pragma once

#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "metacs/exactalg.hpp"

namespace doctest {
template <>
struct StringMaker<metacs::LaurentPoly> {
  static String convert(const metacs::LaurentPoly& p) { return p.to_string().c_str(); }
};
template <>
struct StringMaker<metacs::RatFunc> {
  static String convert(const metacs::RatFunc& f) { return f.to_string().c_str(); }
};
template <>
struct StringMaker<metacs::BigRat> {
  static String convert(const metacs::BigRat& q) { return q.get_str().c_str(); }
};
}  // namespace doctest

namespace testing_support {

inline metacs::LaurentPoly var(const std::string& name, int power = 1) {
  return metacs::LaurentPoly::variable(name, power);
}

inline metacs::LaurentPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, int terms,
                                       int min_exp, int max_exp) {
  std::uniform_int_distribution<int> e(min_exp, max_exp);
  std::uniform_int_distribution<int> c(-5, 5);
  metacs::LaurentPoly p;
  for (int i = 0; i < terms; ++i) {
    std::vector<std::pair<std::string, int>> pw;
    for (const auto& v : vars) pw.emplace_back(v, e(rng));
    p += metacs::LaurentPoly::monomial(c(rng), pw);
  }
  return p;
}

}  // namespace testing_support
