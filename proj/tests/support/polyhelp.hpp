#pragma once

#include "parteq/ratpoly.hpp"

#include <random>

namespace polyhelp {

inline parteq::RatPoly random_poly(std::mt19937_64& rng, int degree, long span = 9, bool rational = true) {
  std::vector<parteq::Rat> c;
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, rational ? 4 : 1);
  for (int i = 0; i <= degree; ++i) {
    parteq::Rat q(num(rng), den(rng));
    q.canonicalize();
    c.push_back(q);
  }
  if (c.back() == 0) c.back() = 1;
  return parteq::RatPoly(c);
}

// (x - r) with integer r
inline parteq::RatPoly lin(long a, long b) { return parteq::RatPoly::linear(a, b); }

}  // namespace polyhelp
