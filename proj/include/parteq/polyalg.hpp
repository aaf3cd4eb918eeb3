#pragma once

#include "parteq/bipoly.hpp"
#include "parteq/ratpoly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace parteq {

// Unique polynomial of degree <= d through the points; extra points are checked.
RatPoly interpolate(const std::vector<std::pair<Rat, Rat>>& points, int d);
// Same, for values at x0, x0+1, ... (integer forward differences).
RatPoly interpolate_consecutive(const Int& x0, const std::vector<Int>& values, int d);

struct SquarefreeDecomposition {
  Rat content;                                     // leading coefficient of f
  std::vector<std::pair<RatPoly, unsigned>> factors;  // monic, pairwise coprime, squarefree
};

// content * prod factor^mult == f (Yun).
SquarefreeDecomposition squarefree_decompose(const RatPoly& f);

// g with g^2 == f and positive leading coefficient.
std::optional<RatPoly> perfect_square_root(const RatPoly& f);

Rat resultant(const RatPoly& f, const RatPoly& g);
// Resultant in m, coefficients in Q[n].
RatPoly resultant_m(const BiPoly& f, const BiPoly& g);

// Sylvester-resultant route; degree must be 2..4.
Rat discriminant(const RatPoly& f);
RatPoly discriminant(const BiPoly& f, Var var);
// Explicit formulas for degrees 2 and 3.
Rat discriminant_closed_form(const RatPoly& f);
RatPoly discriminant_closed_form(const BiPoly& f, Var var);

// Distinct rational roots, ascending.
std::vector<Rat> rational_roots(const RatPoly& f);

struct UnivariateFactorization {
  Rat lead;
  std::vector<std::pair<RatPoly, unsigned>> factors;  // monic, irreducible when complete
  bool complete = true;
};

// Factorisation over Q for degree <= 4 pieces (linear factors plus quadratic splits of quartics).
UnivariateFactorization factor_small(const RatPoly& f);

// All monic divisors of the given degree assembled from the factorisation.
std::vector<RatPoly> monic_divisors(const UnivariateFactorization& fac, int degree);

}  // namespace parteq
