#pragma once

#include "parteq/bipoly.hpp"

#include <vector>

namespace parteq {

struct BiFactor {
  BiPoly factor;  // monic in m, or monic in n when free of m
  unsigned multiplicity = 1;
};

struct BiFactorization {
  Rat constant;  // F == constant * prod factor^multiplicity
  std::vector<BiFactor> factors;
  // True when every probe factorisation was complete and each reported factor was searched
  // for linear and quadratic subfactors. This is not a proof of irreducibility.
  bool search_exhausted = true;
};

// Factors of degree 1 or 2 in m with coefficients in Q[n], found by factoring F(m, n0) at
// n0 = 0..probes-1, interpolating candidate coefficients in n and confirming by exact division.
BiFactorization bifactor_search(const BiPoly& f, unsigned probes = 6);

// Product of the factorisation, for round-trip checks.
BiPoly expand(const BiFactorization& fac);

// True when F(m, n) != 0 mod p for every residue pair. F needs integer coefficients
// (clear denominators with primitive_integer first); p must be a prime <= 97.
bool no_solutions_mod_p(const BiPoly& f, unsigned p);

}  // namespace parteq
