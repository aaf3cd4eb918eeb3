#include <doctest.h>

#include "parteq/error.hpp"
#include "parteq/partcount.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <random>

using namespace parteq;

TEST_CASE("PartSet canonicalises and rejects bad input") {
  PartSet a{3, 1, 2};
  CHECK(a.parts() == std::vector<std::uint64_t>{1, 2, 3});
  CHECK(a.lcm() == 6);
  CHECK(a.gcd() == 1);
  CHECK(PartSet{4, 6}.gcd() == 2);
  CHECK(PartSet::parse("{1, 2, 8,10,15}") == PartSet{1, 2, 8, 10, 15});
  CHECK_THROWS_AS(PartSet(std::vector<std::uint64_t>{}), Error);
  CHECK_THROWS_AS((PartSet{1, 1}), Error);
  CHECK_THROWS_AS((PartSet{0, 2}), Error);
  CHECK_THROWS_AS(PartSet::parse("1,x"), Error);
}

TEST_CASE("count_table examples") {
  CHECK(count_table(PartSet{1, 2, 3}, 4)[4] == oracle::count_partitions({1, 2, 3}, 4));
  CHECK(count_table(PartSet{1, 2, 3}, 4)[4] == 4);
  CHECK(count_table(PartSet{5, 7}, 0)[0] == 1);
  CHECK(count_table(PartSet{1, 2, 3}, 49)[49] == 225);
  CHECK(count_table(PartSet{2, 3}, 18)[18] == oracle::count_two(2, 3, 18));
}

TEST_CASE("count_table agrees with recursive enumeration") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto parts = oracle::random_parts(rng, 1 + rng() % 5, 12);
    PartSet set(parts);
    auto table = count_table(set, 60);
    for (std::uint64_t n = 0; n <= 60; ++n) {
      REQUIRE(table[n] == oracle::count_partitions(set.parts(), n));
    }
  }
}

TEST_CASE("table invariants") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto parts = oracle::random_parts(rng, 2 + rng() % 4, 15);
    PartSet set(parts);
    PartitionTable t(set, 400);
    CHECK(t.value(0) == 1);
    for (std::size_t n = 0; n <= 400; ++n) {
      if (n % set.gcd() != 0) CHECK(t.is_zero(n));
    }
    // dropping the largest part gives the coin recurrence
    auto rest = set.parts();
    std::uint64_t a = rest.back();
    rest.pop_back();
    std::vector<Int> smaller = rest.empty() ? std::vector<Int>(401, 0) : count_table(PartSet(rest), 400);
    if (rest.empty()) smaller[0] = 1;
    for (std::size_t n = a; n <= 400; ++n) REQUIRE(t.value(n) == smaller[n] + t.value(n - a));
    // order independence
    std::shuffle(parts.begin(), parts.end(), rng);
    CHECK(count_table(PartSet(parts), 400) == t.values());
  }
}

TEST_CASE("scaling identity P_{1,pa2..}(pn) = P_{1,a2..}(n)") {
  std::mt19937_64 rng(5);
  for (std::uint64_t p : {2u, 3u}) {
    for (int trial = 0; trial < 10; ++trial) {
      auto tail = oracle::random_parts(rng, 1 + rng() % 3, 9);
      std::vector<std::uint64_t> b{1}, a{1};
      for (auto x : tail) {
        if (x == 1) continue;
        b.push_back(x);
        a.push_back(p * x);
      }
      auto tb = count_table(PartSet(b), 200);
      auto ta = count_table(PartSet(a), 200 * p);
      for (std::size_t n = 0; n <= 200; ++n) REQUIRE(ta[p * n] == tb[n]);
    }
  }
}

TEST_CASE("multi-limb tables stay exact") {
  PartSet set{1, 2, 3, 4, 5, 6, 7};
  PartitionTable t(set, 20000);
  CHECK(t.limbs() >= 2);
  auto ref = oracle::knapsack(set.parts(), 20000);
  for (std::size_t n = 0; n <= 20000; n += 97) REQUIRE(t.value(n) == ref[n]);
  CHECK(t.value(20000) == ref[20000]);
}

TEST_CASE("sertoz_count") {
  CHECK(sertoz_count(2, 3, 18) == 4);
  CHECK(sertoz_count(2, 3, 1) == 0);
  CHECK(sertoz_count(3, 5, 15) == oracle::count_two(3, 5, 15));
  CHECK(sertoz_count(3, 5, 15) == 2);
  CHECK_THROWS_AS(sertoz_count(4, 6, 10), Error);
  for (std::uint64_t a = 1; a <= 9; ++a) {
    for (std::uint64_t b = a + 1; b <= 11; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (long n = 0; n <= 150; ++n) {
        Int s = sertoz_count(a, b, Int(n));
        REQUIRE(s == oracle::count_two(static_cast<long>(a), static_cast<long>(b), n));
        // |P - n/(ab)| <= 1
        Rat gap = Rat(s) - Rat(n, static_cast<long>(a * b));
        REQUIRE(abs(gap) <= 1);
      }
    }
  }
}

TEST_CASE("budget is enforced") {
  CHECK_THROWS_AS(PartitionTable(PartSet{1, 2}, 1000000, simd::Isa::scalar, 1000), Error);
}
