#if defined(__aarch64__)

#include <arm_neon.h>

#include "kernels_impl.hpp"

#include "parteq/simd/kernels.hpp"

namespace parteq::simd::detail {

void coin_neon(std::uint64_t* planes, std::size_t limbs, std::size_t len, std::size_t part) {
  if (part < 2) {
    coin_scalar(planes, limbs, len, part, part);
    return;
  }
  std::size_t n = part;
  if (limbs == 1) {
    for (; n + 2 <= len; n += 2) {
      vst1q_u64(planes + n, vaddq_u64(vld1q_u64(planes + n), vld1q_u64(planes + n - part)));
    }
  } else {
    for (; n + 2 <= len; n += 2) {
      uint64x2_t carry = vdupq_n_u64(0);
      for (std::size_t k = 0; k < limbs; ++k) {
        std::uint64_t* p = planes + k * len;
        uint64x2_t x = vld1q_u64(p + n);
        uint64x2_t s = vaddq_u64(x, vld1q_u64(p + n - part));
        uint64x2_t c1 = vcltq_u64(s, x);
        uint64x2_t s2 = vsubq_u64(s, carry);
        uint64x2_t c2 = vandq_u64(vceqzq_u64(s2), carry);
        vst1q_u64(p + n, s2);
        carry = vorrq_u64(c1, c2);
      }
    }
  }
  coin_scalar(planes, limbs, len, part, n);
}

void square_filter_neon(const std::uint64_t* low, std::size_t len, std::uint8_t* flags) {
  const uint64x2_t table = vdupq_n_u64(square_residues_mod64());
  const uint64x2_t low6 = vdupq_n_u64(63);
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    int64x2_t shift = vnegq_s64(vreinterpretq_s64_u64(vandq_u64(vld1q_u64(low + i), low6)));
    uint64x2_t bit = vandq_u64(vshlq_u64(table, shift), vdupq_n_u64(1));
    flags[i] = static_cast<std::uint8_t>(vgetq_lane_u64(bit, 0));
    flags[i + 1] = static_cast<std::uint8_t>(vgetq_lane_u64(bit, 1));
  }
  square_filter_scalar(low, i, len, flags);
}

}  // namespace parteq::simd::detail

#endif
