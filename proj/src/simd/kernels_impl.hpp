#pragma once

#include <cstddef>
#include <cstdint>

namespace parteq::simd::detail {

void coin_scalar(std::uint64_t* planes, std::size_t limbs, std::size_t len, std::size_t part,
                 std::size_t begin);
void square_filter_scalar(const std::uint64_t* low, std::size_t begin, std::size_t len,
                          std::uint8_t* flags);

#if defined(__x86_64__) || defined(__i386__)
void coin_avx2(std::uint64_t* planes, std::size_t limbs, std::size_t len, std::size_t part);
void square_filter_avx2(const std::uint64_t* low, std::size_t len, std::uint8_t* flags);
#endif

#if defined(__aarch64__)
void coin_neon(std::uint64_t* planes, std::size_t limbs, std::size_t len, std::size_t part);
void square_filter_neon(const std::uint64_t* low, std::size_t len, std::uint8_t* flags);
#endif

}  // namespace parteq::simd::detail
