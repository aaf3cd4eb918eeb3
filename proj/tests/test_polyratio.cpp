#include <doctest.h>

#include "parteq/error.hpp"
#include "parteq/partcount.hpp"
#include "parteq/polyalg.hpp"
#include "support/polyhelp.hpp"

#include <random>

using namespace parteq;
using polyhelp::lin;

TEST_CASE("arith examples") {
  RatPoly p{1, 3, 3};
  CHECK(p(Rat(0)) == 1);
  CHECK((lin(1, 1) * lin(3, 1))(Rat(8)) == 225);
  CHECK(RatPoly{0, 0, 1}.compose_linear(2, 1) == RatPoly{1, 4, 4});
  CHECK((RatPoly{1, 1} + RatPoly{-1, -1}).is_zero());
  CHECK(RatPoly{1, 2, 3}.derivative() == RatPoly{2, 6});
  CHECK(RatPoly{Rat(1, 2), 0, Rat(3, 4)}.content() == Rat(1, 4));
  CHECK(RatPoly{1, 3, 3}.to_string() == "3n^2+3n+1");
  CHECK(RatPoly{Rat(-1, 2), 0, 1}.to_string('m') == "m^2-1/2");
}

TEST_CASE("divmod reconstructs") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    auto a = polyhelp::random_poly(rng, 6);
    auto b = polyhelp::random_poly(rng, 1 + static_cast<int>(rng() % 4));
    auto [q, r] = a.divmod(b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("interpolate") {
  // values of P_{1,2,3}(6n) from the DP oracle
  auto t = count_table(PartSet{1, 2, 3}, 12);
  RatPoly p = interpolate({{0, Rat(t[0])}, {1, Rat(t[6])}, {2, Rat(t[12])}}, 2);
  CHECK(p == RatPoly{1, 3, 3});
  CHECK(interpolate({{0, Rat(5, 3)}}, 0) == RatPoly::constant(Rat(5, 3)));
  CHECK_THROWS_WITH_AS(interpolate({{0, 0}, {1, 1}, {2, 4}, {3, 10}}, 2), doctest::Contains("InconsistentPoints"),
                       Error);
  CHECK_THROWS_WITH_AS(interpolate({{0, 0}, {0, 1}}, 1), doctest::Contains("DuplicateAbscissa"), Error);

  std::mt19937_64 rng(2);
  for (int t2 = 0; t2 < 60; ++t2) {
    int d = static_cast<int>(rng() % 7);
    auto f = polyhelp::random_poly(rng, d);
    std::vector<std::pair<Rat, Rat>> pts;
    for (int x = -3; x <= d + 2; ++x) pts.emplace_back(Rat(x, 2), f(Rat(x, 2)));
    REQUIRE(interpolate(pts, d) == f);
    std::vector<Int> vals;
    auto g = f * Rat(Int(f.denominator_lcm()));
    for (int x = 5; x < 5 + d + 6; ++x) vals.push_back(g(Rat(x)).get_num());
    REQUIRE(interpolate_consecutive(5, vals, d) == g);
  }
}

TEST_CASE("squarefree_decompose") {
  RatPoly g = RatPoly{108} * lin(1, 1) * pow(lin(2, 1), 2);
  auto sq = squarefree_decompose(g);
  CHECK(sq.content == 432);
  REQUIRE(sq.factors.size() == 2);
  CHECK(sq.factors[0].first == lin(1, 1));
  CHECK(sq.factors[0].second == 1);
  CHECK(sq.factors[1].first == RatPoly{Rat(1, 2), 1});
  CHECK(sq.factors[1].second == 2);

  auto sq2 = squarefree_decompose(pow(lin(4, 1) * lin(15, 1), 2));
  REQUIRE(sq2.factors.size() == 1);
  CHECK(sq2.factors[0].second == 2);

  auto sq3 = squarefree_decompose(RatPoly{0, 1});
  REQUIRE(sq3.factors.size() == 1);
  CHECK(sq3.factors[0].first == RatPoly{0, 1});
  CHECK(sq3.factors[0].second == 1);
  CHECK_THROWS_AS(squarefree_decompose(RatPoly()), Error);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    RatPoly f = RatPoly::constant(Rat(static_cast<long>(1 + rng() % 7), 3));
    for (int k = 0; k < 3; ++k) f *= pow(polyhelp::random_poly(rng, 1 + static_cast<int>(rng() % 2)), 1 + rng() % 3);
    auto d = squarefree_decompose(f);
    RatPoly back = RatPoly::constant(d.content);
    for (const auto& [p, e] : d.factors) {
      CHECK(p.leading() == 1);
      back *= pow(p, e);
    }
    REQUIRE(back == f);
    for (std::size_t i = 0; i < d.factors.size(); ++i) {
      CHECK(gcd(d.factors[i].first, d.factors[i].first.derivative()).degree() == 0);
      for (std::size_t j = i + 1; j < d.factors.size(); ++j) {
        REQUIRE(gcd(d.factors[i].first, d.factors[j].first).degree() == 0);
      }
    }
  }
}

TEST_CASE("perfect_square_root") {
  CHECK(*perfect_square_root(pow(lin(4, 1) * lin(15, 1), 2)) == lin(4, 1) * lin(15, 1));
  CHECK(*perfect_square_root(RatPoly{1, 6, 9}) == lin(3, 1));
  CHECK_FALSE(perfect_square_root(RatPoly{1, 3, 3}));
  CHECK_FALSE(perfect_square_root(RatPoly{-1, 0, -1}));
  std::mt19937_64 rng(4);
  for (int t = 0; t < 60; ++t) {
    auto g = polyhelp::random_poly(rng, static_cast<int>(rng() % 5));
    auto r = perfect_square_root(g * g);
    REQUIRE(r);
    CHECK((*r == g || *r == -g));
    CHECK(r->leading() > 0);
  }
}

TEST_CASE("discriminants") {
  // m^2 + b(n) m + c(n) with b = n+1, c = 2n
  BiPoly f({RatPoly{0, 2}, RatPoly{1, 1}, RatPoly{1}});
  CHECK(discriminant(f, Var::m) == RatPoly{1, 1} * RatPoly{1, 1} - RatPoly{0, 8});
  CHECK(discriminant(RatPoly{1, 0, 1}) == -4);
  CHECK(discriminant(RatPoly{108} * lin(1, 1) * pow(lin(2, 1), 2)) == 0);
  CHECK_THROWS_AS(discriminant(RatPoly{1, 1}), Error);
  CHECK_THROWS_AS(discriminant(RatPoly{1, 0, 0, 0, 0, 1}), Error);

  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    int d = 2 + static_cast<int>(rng() % 2);
    auto f = polyhelp::random_poly(rng, d);
    REQUIRE(discriminant(f) == discriminant_closed_form(f));
    // product of squared root differences for split polynomials
    std::vector<long> roots;
    RatPoly g = RatPoly::constant(Rat(static_cast<long>(1 + rng() % 5)));
    for (int i = 0; i < 4; ++i) {
      roots.push_back(static_cast<long>(rng() % 11) - 5);
      g *= lin(1, -roots.back());
    }
    Rat expect = g.leading() * g.leading() * g.leading() * g.leading() * g.leading() * g.leading();
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) expect *= (roots[i] - roots[j]) * (roots[i] - roots[j]);
    }
    REQUIRE(discriminant(g) == expect);
  }
  for (int t = 0; t < 30; ++t) {
    std::vector<RatPoly> cs;
    int d = 2 + static_cast<int>(rng() % 2);
    for (int i = 0; i <= d; ++i) cs.push_back(polyhelp::random_poly(rng, static_cast<int>(rng() % 3)));
    BiPoly f(cs);
    REQUIRE(discriminant(f, Var::m) == discriminant_closed_form(f, Var::m));
    for (long n0 = -2; n0 <= 2; ++n0) {
      RatPoly slice = f.at_n(n0);
      if (slice.degree() == d) REQUIRE(discriminant(f, Var::m)(Rat(n0)) == discriminant(slice));
    }
  }
}

TEST_CASE("rational roots and small factorisation") {
  CHECK(rational_roots(lin(2, 1) * lin(3, -2) * RatPoly{1, 0, 1}) == std::vector<Rat>{Rat(-1, 2), Rat(2, 3)});
  CHECK(rational_roots(RatPoly{1, 0, 1}).empty());
  CHECK(rational_roots(pow(lin(1, -100003), 3)) == std::vector<Rat>{100003});
  std::mt19937_64 rng(6);
  for (int t = 0; t < 40; ++t) {
    RatPoly q1{static_cast<long>(rng() % 7) + 2, static_cast<long>(rng() % 5), 1};  // no real roots when b^2 < 4c
    if (q1.coeff(1) * q1.coeff(1) - 4 * q1.coeff(0) >= 0) continue;
    RatPoly q2{static_cast<long>(rng() % 5) + 3, -1, 2};
    RatPoly f = RatPoly{Rat(3, 2)} * q1 * q2 * lin(5, -3);
    auto fac = factor_small(f);
    REQUIRE(fac.complete);
    RatPoly back = RatPoly::constant(fac.lead);
    for (const auto& [p, e] : fac.factors) back *= pow(p, e);
    REQUIRE(back == f);
    CHECK(fac.factors.size() == 3);
  }
  // quartic splitting into two irrational-root quadratics
  RatPoly quartic = RatPoly{-2, 0, 1} * RatPoly{-3, 0, 1};
  auto fac = factor_small(quartic);
  CHECK(fac.factors.size() == 2);
  auto divs = monic_divisors(factor_small(lin(1, 1) * lin(1, 2) * lin(1, 3)), 2);
  CHECK(divs.size() == 3);
}
