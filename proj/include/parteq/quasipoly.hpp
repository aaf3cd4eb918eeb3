#pragma once

#include "parteq/partcount.hpp"
#include "parteq/ratpoly.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

namespace parteq {

struct QuasiPoly {
  PartSet set;
  std::uint64_t modulus = 1;
  std::vector<RatPoly> pieces;      // pieces[i](n) = P_A(modulus*n + i)
  std::vector<bool> empty_residue;  // piece identically zero

  Int evaluate(const Int& x) const;
  // Same function at a modulus that is a multiple of this one.
  QuasiPoly refine(std::uint64_t new_modulus) const;
};

// L^(k-1) / ((k-1)! prod a), the leading coefficient of every L_A-piece when gcd(A) = 1.
Rat leading_coefficient_law(const PartSet& set);

// Certified L_A-pieces of one part set, built lazily from a single DP table.
// Also evaluates P_A at arguments far beyond the table through those pieces.
class PieceSource {
 public:
  explicit PieceSource(PartSet set);

  const PartSet& set() const noexcept { return set_; }
  std::uint64_t modulus() const noexcept { return set_.lcm(); }

  // P_A(L*n + r) for all n >= 0; interpolated on |A| points and checked on 3|A| more.
  RatPoly piece(std::uint64_t r);
  // Exact P_A(x): table lookup when x is in range, otherwise the residue piece.
  Int value(const Int& x);
  // Table lookup only; grows the table on demand.
  Int table_value(std::uint64_t x);
  std::uint64_t table_limit();
  // Samples P_A(M*n + r), n = n0 .. n0+count-1, with n0 the first n having M*n + r >= max(A).
  std::vector<Int> samples(std::uint64_t M, std::uint64_t r, std::size_t count, std::uint64_t& n0);

  // Largest argument value() answers from the table (bigger ones use pieces).
  static constexpr std::uint64_t kTableCap = 4'000'000;

 private:
  void ensure(std::uint64_t limit);

  PartSet set_;
  std::mutex mu_;
  std::unique_ptr<PartitionTable> table_;
  std::unordered_map<std::uint64_t, RatPoly> cache_;
};

// Shared, process-wide source for a set (bounded cache).
std::shared_ptr<PieceSource> piece_source(const PartSet& set);

QuasiPoly decompose(const PartSet& set);

// P_A(M*n + r) as a polynomial in n, or nullopt (NotPolynomial). Pieces at moduli that are not
// multiples of L_A are certified by gluing against the L_A-pieces symbolically.
std::optional<RatPoly> try_piece(const PartSet& set, std::uint64_t M, std::uint64_t r);

enum class FormulaVariant { corrected, printed };

// Theorem 4.1 closed form for A = {1,2,a} at modulus 2a.
QuasiPoly closed_form_12a(std::uint64_t a, FormulaVariant variant = FormulaVariant::corrected);

}  // namespace parteq
