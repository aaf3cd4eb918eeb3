#pragma once

#include "parteq/bigint.hpp"
#include "parteq/partset.hpp"
#include "parteq/simd/kernels.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace parteq {

// Limbs needed for P_A(n), n <= limit, from P_A(N) <= prod_a (N/a + 1).
std::size_t limbs_for(const PartSet& set, std::size_t limit);

inline constexpr std::size_t kDefaultTableBudgetBytes = std::size_t{4} << 30;

// Exact values P_A(0..limit) of the coin-problem DP, stored as limb planes.
class PartitionTable {
 public:
  PartitionTable(const PartSet& set, std::size_t limit, simd::Isa isa,
                 std::size_t budget_bytes = kDefaultTableBudgetBytes);
  PartitionTable(const PartSet& set, std::size_t limit)
      : PartitionTable(set, limit, simd::active_isa()) {}

  const PartSet& set() const noexcept { return set_; }
  std::size_t limit() const noexcept { return limit_; }
  std::size_t limbs() const noexcept { return limbs_; }

  Int value(std::size_t n) const;
  std::vector<Int> values() const;
  std::uint64_t low_limb(std::size_t n) const { return planes_[n]; }
  const std::uint64_t* plane(std::size_t k) const { return planes_.data() + k * len(); }
  const std::vector<std::uint64_t>& raw_planes() const noexcept { return planes_; }

  bool is_zero(std::size_t n) const;
  bool equal_at(std::size_t n, const PartitionTable& other, std::size_t m) const;
  std::size_t hash_at(std::size_t n) const;

  // One flag per entry; 0 rules a perfect square out.
  std::vector<std::uint8_t> square_candidates() const;

 private:
  std::size_t len() const noexcept { return limit_ + 1; }
  std::uint64_t limb(std::size_t n, std::size_t k) const { return planes_[k * len() + n]; }
  std::size_t top_limb(std::size_t n) const;

  PartSet set_;
  std::size_t limit_;
  std::size_t limbs_;
  std::vector<std::uint64_t> planes_;
};

// P_A(0..N) as big integers.
std::vector<Int> count_table(const PartSet& set, std::size_t N);

// Closed form for two coprime parts (Popoviciu); throws HypothesisViolated otherwise.
Int sertoz_count(std::uint64_t a1, std::uint64_t a2, const Int& n);

}  // namespace parteq
