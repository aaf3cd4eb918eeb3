#include "kernels_impl.hpp"

#include "parteq/simd/kernels.hpp"

namespace parteq::simd::detail {

void coin_scalar(std::uint64_t* planes, std::size_t limbs, std::size_t len, std::size_t part,
                 std::size_t begin) {
  if (begin < part) begin = part;
  if (limbs == 1) {
    for (std::size_t n = begin; n < len; ++n) planes[n] += planes[n - part];
    return;
  }
  for (std::size_t n = begin; n < len; ++n) {
    std::uint64_t carry = 0;
    for (std::size_t k = 0; k < limbs; ++k) {
      std::uint64_t* p = planes + k * len;
      std::uint64_t x = p[n];
      std::uint64_t s = x + p[n - part];
      std::uint64_t c1 = s < x;
      std::uint64_t s2 = s + carry;
      std::uint64_t c2 = s2 < s;
      p[n] = s2;
      carry = c1 | c2;
    }
  }
}

void square_filter_scalar(const std::uint64_t* low, std::size_t begin, std::size_t len,
                          std::uint8_t* flags) {
  constexpr std::uint64_t table = square_residues_mod64();
  for (std::size_t i = begin; i < len; ++i) flags[i] = (table >> (low[i] & 63)) & 1;
}

}  // namespace parteq::simd::detail
