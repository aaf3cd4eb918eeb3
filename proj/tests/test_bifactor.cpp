#include <doctest.h>

#include "parteq/bifactor.hpp"
#include "parteq/error.hpp"
#include "parteq/quasipoly.hpp"

#include <random>

using namespace parteq;

namespace {

// sum c[i][j] m^i n^j
BiPoly bi(std::vector<std::vector<long>> c) {
  std::vector<RatPoly> v;
  for (auto& row : c) {
    std::vector<Rat> r(row.begin(), row.end());
    v.emplace_back(r);
  }
  return BiPoly(v);
}

BiPoly equal_value_poly(const PartSet& a, std::uint64_t ma, std::uint64_t ia, const PartSet& b,
                        std::uint64_t mb, std::uint64_t ib) {
  return BiPoly::difference(*try_piece(a, ma, ia), *try_piece(b, mb, ib));
}

bool has_factor(const BiFactorization& fac, const BiPoly& expected) {
  for (const auto& f : fac.factors) {
    if (same_up_to_constant(f.factor, expected)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("BiPoly basics") {
  BiPoly f = bi({{0, 0, -1}, {}, {1}});  // m^2 - n^2
  CHECK(f.degree_m() == 2);
  CHECK(f.degree_n() == 2);
  CHECK(f(Rat(3), Rat(2)) == 5);
  CHECK(f.to_string() == "m^2-n^2");
  CHECK(f.swapped() == bi({{0, 0, 1}, {}, {-1}}));
  BiPoly g = bi({{0, -1}, {1}});  // m - n
  auto q = exact_divide(f, g);
  REQUIRE(q);
  CHECK(*q == bi({{0, 1}, {1}}));
  CHECK_FALSE(exact_divide(f, bi({{0, -2}, {1}})));
  CHECK(f.substitute(RatPoly{0, 2}, RatPoly{0, 1}) == RatPoly{0, 0, 3});
}

TEST_CASE("bifactor_search on m^2 - n^2") {
  BiPoly f = bi({{0, 0, -1}, {}, {1}});
  auto fac = bifactor_search(f);
  REQUIRE(fac.factors.size() == 2);
  CHECK(expand(fac) == f);
  CHECK(has_factor(fac, bi({{0, -1}, {1}})));
  CHECK(has_factor(fac, bi({{0, 1}, {1}})));
}

TEST_CASE("bifactor_search: h example") {
  BiPoly F = equal_value_poly(PartSet{1, 2, 3, 4, 6}, 12, 1, PartSet{1, 2, 4, 5, 10}, 20, 1);
  BiPoly h1 = bi({{5, 12, 10}, {9}, {6}});
  BiPoly h2 = bi({{0, -12, -10}, {9}, {6}});
  CHECK(F == (h1 * h2).scaled(Rat(1, 6)));
  auto fac = bifactor_search(F);
  CHECK(expand(fac) == F);
  CHECK(fac.factors.size() == 2);
  CHECK(has_factor(fac, h1));
  CHECK(has_factor(fac, h2));
}

TEST_CASE("bifactor_search: f example") {
  BiPoly F = equal_value_poly(PartSet{1, 2, 4, 5, 6}, 60, 22, PartSet{1, 4, 6, 9, 10}, 180, 111);
  BiPoly f1 = bi({{259, 630, 450}, {155}, {150}});
  BiPoly f2 = bi({{-36, -126, -90}, {31}, {30}});
  auto fac = bifactor_search(F);
  CHECK(expand(fac) == F);
  CHECK(fac.factors.size() == 2);
  CHECK(has_factor(fac, f1));
  CHECK(has_factor(fac, f2));
  CHECK(no_solutions_mod_p(f1, 5));
  CHECK_FALSE(no_solutions_mod_p(f2, 5));
}

TEST_CASE("bifactor_search: g example") {
  BiPoly F = equal_value_poly(PartSet{1, 2, 4, 6, 10}, 60, 17, PartSet{1, 2, 5, 6, 8}, 120, 17);
  BiPoly g1 = bi({{0, -2}, {1}});
  BiPoly g2 = bi({{14, 30}, {15}});
  BiPoly g3 = bi({{31, 140, 300}, {70}, {75}});
  auto fac = bifactor_search(F);
  CHECK(expand(fac) == F);
  CHECK(fac.factors.size() == 3);
  CHECK(has_factor(fac, g1));
  CHECK(has_factor(fac, g2));
  CHECK(has_factor(fac, g3));
  CHECK(no_solutions_mod_p(g2, 5));
  CHECK(no_solutions_mod_p(g3, 5));
  CHECK_FALSE(no_solutions_mod_p(g1, 5));
}

TEST_CASE("no_solutions_mod_p argument checks") {
  CHECK_THROWS_WITH_AS(no_solutions_mod_p(bi({{1}, {Rat(1, 2).get_num().get_si()}}).scaled(Rat(1, 3)), 5),
                       doctest::Contains("NonIntegerCoefficients"), Error);
  CHECK_THROWS_AS(no_solutions_mod_p(bi({{1}}), 6), Error);
  CHECK_THROWS_AS(no_solutions_mod_p(bi({{1}}), 101), Error);
  // m^2 + 1 has no root mod 3; the n-free constant 1 has none anywhere
  CHECK(no_solutions_mod_p(bi({{1}, {}, {1}}), 3));
  CHECK_FALSE(no_solutions_mod_p(bi({{1}, {}, {1}}), 5));
}

TEST_CASE("degenerate inputs use univariate factoring") {
  BiPoly f = bi({{-6, 1, 1}});  // n^2 + n - 6
  auto fac = bifactor_search(f);
  CHECK(expand(fac) == f);
  CHECK(fac.factors.size() == 2);
  BiPoly g = bi({{-4}, {}, {1}});  // m^2 - 4
  CHECK(bifactor_search(g).factors.size() == 2);
  CHECK_THROWS_AS(bifactor_search(BiPoly()), Error);
}

TEST_CASE("bifactor_search always multiplies back") {
  std::mt19937_64 rng(8);
  auto rnd = [&](int span) { return static_cast<long>(rng() % (2 * span + 1)) - span; };
  for (int t = 0; t < 30; ++t) {
    BiPoly a = bi({{rnd(5), rnd(3)}, {1 + std::abs(rnd(3))}});
    BiPoly b = bi({{rnd(5), rnd(3), rnd(2)}, {rnd(4)}, {1 + std::abs(rnd(2))}});
    BiPoly c = bi({{rnd(9), rnd(2)}, {rnd(2), 1}, {2}});
    BiPoly f = a * b * c;
    auto fac = bifactor_search(f);
    REQUIRE(expand(fac) == f);
    CHECK(fac.factors.size() >= 3);
  }
}
