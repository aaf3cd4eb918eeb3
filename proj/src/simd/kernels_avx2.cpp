#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include "kernels_impl.hpp"

#include "parteq/simd/kernels.hpp"

namespace parteq::simd::detail {

__attribute__((target("avx2")))
void coin_avx2(std::uint64_t* planes, std::size_t limbs, std::size_t len, std::size_t part) {
  // Lanes n..n+3 read n-part..n-part+3, all final once part >= 4.
  if (part < 4) {
    coin_scalar(planes, limbs, len, part, part);
    return;
  }
  std::size_t n = part;
  if (limbs == 1) {
    for (; n + 4 <= len; n += 4) {
      __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(planes + n));
      __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(planes + n - part));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(planes + n), _mm256_add_epi64(x, y));
    }
  } else {
    const __m256i sign = _mm256_set1_epi64x(static_cast<long long>(0x8000000000000000ULL));
    const __m256i zero = _mm256_setzero_si256();
    for (; n + 4 <= len; n += 4) {
      __m256i carry = zero;  // all-ones lanes carry one
      for (std::size_t k = 0; k < limbs; ++k) {
        std::uint64_t* p = planes + k * len;
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + n));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + n - part));
        __m256i s = _mm256_add_epi64(x, y);
        // unsigned x > s via the sign-flipped signed compare
        __m256i c1 = _mm256_cmpgt_epi64(_mm256_xor_si256(x, sign), _mm256_xor_si256(s, sign));
        __m256i s2 = _mm256_sub_epi64(s, carry);
        __m256i c2 = _mm256_and_si256(_mm256_cmpeq_epi64(s2, zero), carry);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(p + n), s2);
        carry = _mm256_or_si256(c1, c2);
      }
    }
  }
  coin_scalar(planes, limbs, len, part, n);
}

__attribute__((target("avx2")))
void square_filter_avx2(const std::uint64_t* low, std::size_t len, std::uint8_t* flags) {
  const __m256i table = _mm256_set1_epi64x(static_cast<long long>(square_residues_mod64()));
  const __m256i low6 = _mm256_set1_epi64x(63);
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(low + i));
    __m256i bit = _mm256_and_si256(_mm256_srlv_epi64(table, _mm256_and_si256(v, low6)),
                                   _mm256_set1_epi64x(1));
    int mask = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_sub_epi64(zero, bit)));
    flags[i] = mask & 1;
    flags[i + 1] = (mask >> 1) & 1;
    flags[i + 2] = (mask >> 2) & 1;
    flags[i + 3] = (mask >> 3) & 1;
  }
  square_filter_scalar(low, i, len, flags);
}

}  // namespace parteq::simd::detail

#endif
