#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

// Data-parallel kernels with a scalar reference and vector variants picked at runtime.
namespace parteq::simd {

enum class Isa { scalar, avx2, neon };

const char* isa_name(Isa isa);
std::optional<Isa> parse_isa(std::string_view name);
bool isa_available(Isa isa);
Isa best_isa();

// Best available ISA, unless narrowed by set_isa_override or PARTEQ_SIMD=scalar|avx2|neon.
Isa active_isa();
void set_isa_override(std::optional<Isa> isa);

// One coin-problem pass: v[n] += v[n - part] for part <= n < len, in increasing n.
// Values are little-endian multi-limb integers stored as limb planes; plane k holds
// limb k of every entry at planes[k * len + n]. The caller guarantees no overflow
// out of the top limb.
void coin_accumulate(Isa isa, std::uint64_t* planes, std::size_t limbs, std::size_t len,
                     std::size_t part);
void coin_accumulate(std::uint64_t* planes, std::size_t limbs, std::size_t len, std::size_t part);

// flags[i] = 1 when low[i] mod 64 is a square residue mod 64, else 0.
// A perfect square always passes, whatever its width, since only the low limb matters.
void square_residue_filter(Isa isa, const std::uint64_t* low, std::size_t len, std::uint8_t* flags);
void square_residue_filter(const std::uint64_t* low, std::size_t len, std::uint8_t* flags);

inline constexpr std::uint64_t square_residues_mod64() {
  std::uint64_t mask = 0;
  for (std::uint64_t r = 0; r < 64; ++r) mask |= std::uint64_t{1} << ((r * r) % 64);
  return mask;
}

}  // namespace parteq::simd
