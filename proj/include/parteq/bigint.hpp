#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace parteq {

using Int = mpz_class;
using Rat = mpq_class;

Int int_from_u64(std::uint64_t v);
Int parse_int(std::string_view text);
Rat parse_rat(std::string_view text);

// "num/den" with den > 0, always both parts.
std::string rat_to_fraction(const Rat& q);
std::string to_string(const Int& z);
std::string to_string(const Rat& q);

bool is_integer(const Rat& q);
bool is_square(const Int& z);
// Exact square root of a nonnegative perfect square.
std::optional<Int> exact_sqrt(const Int& z);
std::optional<Rat> exact_sqrt(const Rat& q);
Int isqrt(const Int& z);

// Squarefree part of a nonzero integer, sign carried: z = sqfree * s^2.
Int squarefree_part(const Int& z);

Int lcm(const Int& a, const Int& b);
Int gcd(const Int& a, const Int& b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

// floor and ceiling division for b > 0.
Int floor_div(const Int& a, const Int& b);
Int mod_floor(const Int& a, const Int& b);

}  // namespace parteq
