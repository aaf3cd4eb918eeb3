#include <doctest.h>

#include "parteq/error.hpp"
#include "parteq/pellconic.hpp"
#include "parteq/quasipoly.hpp"
#include "parteq/squarehunt.hpp"
#include "support/oracles.hpp"

#include <set>

using namespace parteq;
using oracle::knapsack;

namespace {

std::set<std::pair<long, long>> as_set(const std::vector<std::pair<Int, Int>>& v) {
  std::set<std::pair<long, long>> out;
  for (const auto& [x, y] : v) out.insert({x.get_si(), y.get_si()});
  return out;
}

}  // namespace

TEST_CASE("square_value_search") {
  CHECK(as_set(square_value_search(PartSet{1, 2, 3, 4, 5}, 100'000)) ==
        std::set<std::pair<long, long>>{{1, 1}, {2027, 77129}});

  auto ones = square_value_search(PartSet{1}, 10);
  REQUIRE(ones.size() == 10);
  for (std::size_t k = 0; k < 10; ++k) CHECK(ones[k] == std::pair<Int, Int>(k + 1, 1));

  auto p3 = square_value_search(PartSet{1, 2, 3}, 2000);
  CHECK(as_set(p3).count({4, 2}));
  // oracle: scan the knapsack table
  auto table = knapsack({1, 2, 3}, 2000);
  std::set<std::pair<long, long>> expect;
  for (long x = 1; x <= 2000; ++x)
    if (auto r = exact_sqrt(table[x])) expect.insert({x, r->get_si()});
  CHECK(as_set(p3) == expect);
}

TEST_CASE("square_value_search contains the Pell and polynomial square families") {
  const std::uint64_t xmax = 200'000;
  auto p3 = as_set(square_value_search(PartSet{1, 2, 3}, xmax));
  for (const auto& pt : family_from_theorem("sq_P3_i4").take(4))
    if (pt.x <= xmax) CHECK(p3.count({pt.x.get_si(), pt.y.get_si()}));
  auto p4 = as_set(square_value_search(PartSet{1, 2, 3, 4}, xmax));
  std::size_t seen = 0;
  for (const auto& pt : family_from_theorem("sq_P4_i1").take(10)) {
    if (pt.x > xmax) continue;
    ++seen;
    CHECK(p4.count({pt.x.get_si(), pt.y.get_si()}));
  }
  CHECK(seen >= 3);
}

TEST_CASE("census of square pieces") {
  CHECK(census_square_pieces(2, 3).empty());
  CHECK_THROWS_AS(census_square_pieces(1, 3), Error);

  auto rec = census_square_pieces(5, 15, 2);
  for (std::size_t k = 1; k < rec.size(); ++k) {
    const auto &a = rec[k - 1], &b = rec[k];
    CHECK((a.set < b.set || (a.set == b.set && a.residue < b.residue)));
  }
  for (const auto& r : rec) {
    RatPoly piece = try_piece(r.set, r.modulus, r.residue).value();
    CHECK(r.root * r.root == piece);
    CHECK(r.root.leading() > 0);
    auto table = knapsack(r.set.parts(), 10 * r.modulus + r.residue);
    for (std::uint64_t n = 0; n <= 10; ++n) {
      Rat g = r.root.eval(n);
      CHECK(Rat(table[r.modulus * n + r.residue]) == g * g);
    }
  }

  auto table = census_table(rec, SquareConvention::split);
  const PartSet A{1, 2, 8, 10, 15};
  REQUIRE(table.count(A));
  CHECK(table[A] == std::vector<std::uint64_t>{1, 11, 41, 43, 73, 83, 91, 113});
  for (const auto& r : rec)
    if (r.set == A && r.residue == 1)
      CHECK(r.root == RatPoly::linear(4, 1) * RatPoly::linear(15, 1));

  // the counts of the three conventions nest
  std::size_t nr = 0, ni = 0, ns = 0;
  for (const auto& r : rec) {
    nr += counts_under(r, SquareConvention::rational);
    ni += counts_under(r, SquareConvention::integral);
    ns += counts_under(r, SquareConvention::split);
    if (r.split) CHECK(r.integral);
  }
  CHECK(nr >= ni);
  CHECK(ni >= ns);

  // output does not depend on the worker count
  auto one = census_square_pieces(5, 11, 1), three = census_square_pieces(5, 11, 3);
  REQUIRE(one.size() == three.size());
  for (std::size_t k = 0; k < one.size(); ++k) {
    CHECK(one[k].set == three[k].set);
    CHECK(one[k].residue == three[k].residue);
    CHECK(one[k].root == three[k].root);
  }
}

TEST_CASE("square times linear") {
  auto shape = square_times_linear_shape(try_piece(PartSet{1, 2, 3, 4}, 12, 6).value());
  REQUIRE(shape);
  CHECK(shape->c == 3);
  CHECK(shape->g == RatPoly::linear(1, 1));
  CHECK(shape->alpha == 4);
  CHECK(shape->beta == 3);

  // a pure square has no linear part
  CHECK_FALSE(square_times_linear_shape(try_piece(PartSet{1, 2, 8, 10, 15}, 120, 1).value()));

  auto recs = census_square_times_linear(6, 10, 300);
  CHECK(!recs.empty());
  for (const auto& r : recs) {
    const auto& s = r.shape;
    CHECK(s.c * s.g * s.g * RatPoly::linear(Rat(s.alpha), Rat(s.beta)) == r.piece);
    CHECK(r.piece == try_piece(r.set, r.modulus, r.residue).value());
    std::vector<Int> direct;
    for (long n = 0; n <= 300; ++n) {
      Rat v = r.piece.eval(n);
      if (is_integer(v) && is_square(v.get_num())) direct.push_back(n);
    }
    CHECK(direct == r.square_values);
  }
}

TEST_CASE("seven-element example") {
  auto rep = verify_seven_example(3, 20'000);
  CHECK(rep.factorization_95);
  CHECK(rep.factorization_226);
  REQUIRE(rep.n_values.size() == 3);
  CHECK(rep.n_values == std::vector<Int>{0, 494, 712842});
  CHECK(rep.points[0] == std::pair<Int, Int>(95, 325));
  CHECK(knapsack({1, 2, 4, 5, 8, 9, 10}, 95)[95] == 325 * 325);
  CHECK(rep.by_dp[0]);
  CHECK(rep.by_dp[1]);
  CHECK_FALSE(rep.by_dp[2]);
  CHECK(rep.squares_226.empty());
  CHECK(rep.passed());
}

TEST_CASE("PARTEQ_THREADS sets the default worker count") {
  setenv("PARTEQ_THREADS", "3", 1);
  CHECK(default_parallelism() == 3);
  setenv("PARTEQ_THREADS", "zero", 1);
  CHECK(default_parallelism() >= 1);
  unsetenv("PARTEQ_THREADS");
}
