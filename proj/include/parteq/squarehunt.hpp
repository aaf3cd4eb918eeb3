#pragma once

#include "parteq/bigint.hpp"
#include "parteq/partset.hpp"
#include "parteq/ratpoly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace parteq {

// x in 1..x_max with P_A(x) = y^2, ascending.
std::vector<std::pair<Int, Int>> square_value_search(const PartSet& set, std::uint64_t x_max);

// P_A(L n + i) = g(n)^2 with g in Q[n].
struct SquarePieceRecord {
  PartSet set;
  std::uint64_t modulus = 1;
  std::uint64_t residue = 0;
  RatPoly root;           // positive leading coefficient
  bool integral = false;  // g in Z[n]
  bool split = false;     // integral and a product of linear factors over Z
};

enum class SquareConvention { rational, integral, split };
const char* convention_name(SquareConvention c);
bool counts_under(const SquarePieceRecord& r, SquareConvention c);

// Worker count: PARTEQ_THREADS if set, else the hardware concurrency.
unsigned default_parallelism();

// Every (A, i) with #A = k, max A <= max_part and a square piece, sorted by A then i.
// Zero pieces (gcd(A) > 1) are not squares.
std::vector<SquarePieceRecord> census_square_pieces(std::uint64_t k, std::uint64_t max_part,
                                                    unsigned threads = default_parallelism());

// Sets and residue lists of the records that count under the convention.
std::map<PartSet, std::vector<std::uint64_t>> census_table(const std::vector<SquarePieceRecord>& records,
                                                           SquareConvention convention);

// piece = c g(n)^2 (alpha n + beta), with g monic, alpha > 0 and gcd(alpha, beta) = 1.
struct LinearShape {
  Rat c;
  RatPoly g;
  Int alpha, beta;
};
std::optional<LinearShape> square_times_linear_shape(const RatPoly& piece);

struct SquareTimesLinearRecord {
  PartSet set;
  std::uint64_t modulus = 1;
  std::uint64_t residue = 0;
  RatPoly piece;
  LinearShape shape;
  std::uint64_t bound = 0;          // n searched in 0..bound
  std::vector<Int> square_values;   // n with P_A(L n + i) a square (bounded)
};

inline constexpr std::uint64_t kDefaultSquareBound = 10'000;

std::vector<SquareTimesLinearRecord> census_square_times_linear(std::uint64_t k, std::uint64_t max_part,
                                                                std::uint64_t bound = kDefaultSquareBound,
                                                                unsigned threads = default_parallelism());

struct SevenReport {
  bool factorization_95 = false;
  bool factorization_226 = false;
  std::vector<Int> n_values;                // smallest n >= 0 with (36n+13)(40n+13) a square
  std::vector<std::pair<Int, Int>> points;  // (x, y) with y^2 = P_A(x)
  std::vector<bool> by_dp;                  // point checked against a DP table (else via the pieces)
  std::uint64_t bound_226 = 0;
  std::vector<Int> squares_226;             // n <= bound_226 with (36n+23)(40n+27) a square
  std::vector<std::string> transcript;
  bool passed() const;
};

// A = {1,2,4,5,8,9,10}: factorisations at 95 and 226 mod 360 and the square values they give.
// Throws VerificationFailed when a point disagrees with its DP value.
SevenReport verify_seven_example(std::size_t count = 3, std::uint64_t bound_226 = 100'000);

}  // namespace parteq
