#include <doctest.h>

#include "parteq/partcount.hpp"
#include "parteq/simd/kernels.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace parteq;

namespace {

std::vector<simd::Isa> vector_isas() {
  std::vector<simd::Isa> out;
  for (auto isa : {simd::Isa::avx2, simd::Isa::neon}) {
    if (simd::isa_available(isa)) out.push_back(isa);
  }
  return out;
}

}  // namespace

TEST_CASE("coin kernel: vector variants match scalar on random limb data") {
  std::mt19937_64 rng(2024);
  for (auto isa : vector_isas()) {
    CAPTURE(simd::isa_name(isa));
    for (std::size_t limbs : {1u, 2u, 3u, 5u}) {
      for (std::size_t part : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 13u, 64u}) {
        for (std::size_t len : {0u, 1u, 4u, 9u, 31u, 100u, 257u}) {
          std::vector<std::uint64_t> a(limbs * len);
          for (auto& x : a) {
            // bias towards values that force carries between limbs
            auto r = rng();
            x = (r & 3) == 0 ? ~std::uint64_t{0} - (r >> 60) : r;
          }
          // keep the top limb small so no overflow leaves the value
          for (std::size_t n = 0; n < len; ++n) a[(limbs - 1) * len + n] &= 0xffff;
          auto b = a;
          simd::coin_accumulate(simd::Isa::scalar, a.data(), limbs, len, part);
          simd::coin_accumulate(isa, b.data(), limbs, len, part);
          REQUIRE(a == b);
        }
      }
    }
  }
}

TEST_CASE("square filter: vector variants match scalar and never reject squares") {
  std::mt19937_64 rng(99);
  std::vector<std::uint64_t> v(1003);
  for (auto& x : v) x = rng();
  for (std::size_t i = 0; i < 200; ++i) v[i] = i * i;
  std::vector<std::uint8_t> ref(v.size());
  simd::square_residue_filter(simd::Isa::scalar, v.data(), v.size(), ref.data());
  for (std::size_t i = 0; i < 200; ++i) CHECK(ref[i] == 1);
  for (std::size_t i = 0; i < v.size(); ++i) {
    bool residue = false;
    for (std::uint64_t r = 0; r < 64; ++r) residue = residue || (r * r) % 64 == v[i] % 64;
    REQUIRE(ref[i] == static_cast<std::uint8_t>(residue));
  }
  for (auto isa : vector_isas()) {
    std::vector<std::uint8_t> out(v.size());
    simd::square_residue_filter(isa, v.data(), v.size(), out.data());
    CHECK(out == ref);
  }
}

TEST_CASE("tables built with every ISA are identical") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    PartSet set(oracle::random_parts(rng, 2 + rng() % 5, 20));
    PartitionTable scalar(set, 5000, simd::Isa::scalar);
    for (auto isa : vector_isas()) {
      PartitionTable vec(set, 5000, isa);
      REQUIRE(vec.raw_planes() == scalar.raw_planes());
    }
  }
}

TEST_CASE("override selects the scalar path") {
  simd::set_isa_override(simd::Isa::scalar);
  CHECK(simd::active_isa() == simd::Isa::scalar);
  simd::set_isa_override(std::nullopt);
  CHECK(simd::active_isa() == simd::best_isa());
}
