#include <doctest.h>

#include "parteq/diopheq.hpp"
#include "parteq/error.hpp"
#include "parteq/polyalg.hpp"
#include "support/oracles.hpp"

#include <map>
#include <random>
#include <set>

using namespace parteq;
using oracle::knapsack;

namespace {

const PartSet P3{1, 2, 3};
const PartSet P4{1, 2, 3, 4};
const PartSet P5{1, 2, 3, 4, 5};

using Pairs = std::set<std::pair<long, long>>;

Pairs pairs_of(const std::vector<SolutionCertificate>& certs) {
  Pairs out;
  for (const auto& c : certs) out.insert({c.x.get_si(), c.y.get_si()});
  return out;
}

// naive join over knapsack tables
Pairs oracle_pairs(const PartSet& a, const PartSet& b, std::size_t xm, std::size_t ym) {
  auto va = knapsack(a.parts(), xm), vb = knapsack(b.parts(), ym);
  std::multimap<Int, long> idx;
  for (std::size_t y = 1; y <= ym; ++y) idx.emplace(vb[y], y);
  Pairs out;
  for (std::size_t x = 1; x <= xm; ++x) {
    auto [lo, hi] = idx.equal_range(va[x]);
    for (auto it = lo; it != hi; ++it) out.insert({static_cast<long>(x), it->second});
  }
  return out;
}

ResidueSubproblem pa4_sub(std::uint64_t a, std::uint64_t i, std::uint64_t j) {
  return make_subproblem(PartSet{1, 2, a}, 2 * a, i, P4, 12, j);
}

}  // namespace

TEST_CASE("coarse pieces and subproblem counts") {
  auto p4 = coarse_pieces(P4);
  REQUIRE(p4.size() == 9);
  for (const auto& pc : p4) CHECK(pc.modulus == (pc.residue % 2 ? 6u : 12u));
  CHECK(coarse_pieces(P3).size() == 6);
  CHECK(coarse_pieces(P5).size() == 60);

  CHECK(enumerate_subproblems(P3, P4).size() == 54);
  CHECK(enumerate_subproblems(P3, P5).size() == 360);
  auto one = enumerate_subproblems(PartSet{1}, PartSet{1});
  REQUIRE(one.size() == 1);
  CHECK(one[0].F.is_zero());

  // every piece matches the oracle on its class
  for (const PartSet& s : {P3, P4, PartSet{2, 3, 7}}) {
    auto table = knapsack(s.parts(), 400);
    for (const auto& pc : coarse_pieces(s)) {
      for (std::uint64_t n = 0; pc.modulus * n + pc.residue <= 400; ++n)
        CHECK(pc.poly.eval(n) == Rat(table[pc.modulus * n + pc.residue]));
    }
  }
}

TEST_CASE("make_subproblem checks its arguments") {
  CHECK_THROWS_AS(make_subproblem(P3, 6, 6, P4, 12, 0), Error);
  try {
    make_subproblem(P3, 4, 1, P4, 12, 0);
    FAIL("expected NotPolynomial");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPolynomial);
  }
  auto s = make_subproblem(P3, 6, 1, P4, 6, 3);
  CHECK(s.label() == "P_{1,2,3}(6m+1) = P_{1,2,3,4}(6n+3)");
  CHECK(s.F == BiPoly::difference(s.p, s.q));
}

TEST_CASE("brute force: P3 = P5 gives the 16 listed pairs") {
  auto certs = brute_force_search(P3, P5, 20000, 1000);
  const Pairs listed = {{1, 1},    {2, 2},    {3, 3},    {5, 4},    {6, 5},    {8, 6},
                        {16, 10},  {18, 11},  {26, 14},  {45, 20},  {174, 45}, {217, 51},
                        {457, 77}, {468, 78}, {701, 97}, {10093, 388}};
  CHECK(pairs_of(certs) == listed);
  REQUIRE(certs.size() == 16);
  CHECK(certs.back().x == 10093);
  CHECK(certs.back().y == 388);
  for (std::size_t k = 1; k < certs.size(); ++k) CHECK(certs[k - 1].value <= certs[k].value);
  for (const auto& c : certs) {
    CHECK(c.verified);
    CHECK(reverify(c, P3, P5));
  }
  CHECK(pairs_of(certs) == oracle_pairs(P3, P5, 20000, 1000));
}

TEST_CASE("brute force: P3 = P4 contains the large points") {
  auto certs = brute_force_search(P3, P4, 40000, 3000);
  std::map<std::pair<long, long>, Int> val;
  for (const auto& c : certs) val[{c.x.get_si(), c.y.get_si()}] = c.value;
  REQUIRE(val.count({49, 27}));
  CHECK(val[{49, 27}] == 225);
  REQUIRE(val.count({39199, 2637}));
  CHECK(val[{39199, 2637}] == Int("128066400"));
  Pairs small;
  for (const auto& [xy, v] : val)
    if (xy.first <= 4000 && xy.second <= 300) small.insert(xy);
  CHECK(small == oracle_pairs(P3, P4, 4000, 300));
}

TEST_CASE("brute force: equal sets give the diagonal; ordering ties by x") {
  PartSet A{1, 2, 5};
  auto certs = brute_force_search(A, A, 200, 200);
  auto got = pairs_of(certs);
  for (long n = 1; n <= 200; ++n) CHECK(got.count({n, n}));
  CHECK(got == oracle_pairs(A, A, 200, 200));
  for (std::size_t k = 1; k < certs.size(); ++k) {
    const auto &l = certs[k - 1], &r = certs[k];
    CHECK((l.value < r.value || (l.value == r.value && (l.x < r.x || (l.x == r.x && l.y < r.y)))));
  }
}

TEST_CASE("reverify rejects tampered certificates") {
  auto certs = brute_force_search(P3, P4, 100, 100);
  REQUIRE(!certs.empty());
  auto c = certs.front();
  CHECK(reverify(c, P3, P4));
  c.y += 1;
  CHECK_FALSE(reverify(c, P3, P4));
  c = certs.front();
  c.value += 1;
  CHECK_FALSE(reverify(c, P3, P4));
}

TEST_CASE("union of subproblem solutions equals brute force (P3 vs P4, x <= 5000)") {
  Pairs uni;
  for (const auto& sub : enumerate_subproblems(P3, P4))
    for (const auto& [x, y] : search_subproblem(sub, 5000, 1000)) {
      CHECK(mpz_class(x - sub.i) % sub.ma == 0);
      uni.insert({x.get_si(), y.get_si()});
    }
  CHECK(uni == pairs_of(brute_force_search(P3, P4, 5000, 1000)));
}

TEST_CASE("detect_family: a = 4s, i = 2s-2, j = 3 has the cubic family") {
  for (long s = 1; s <= 5; ++s) {
    CAPTURE(s);
    auto sub = pa4_sub(4 * s, 2 * s - 2, 3);
    auto fams = detect_family(sub);
    REQUIRE(!fams.empty());
    for (const auto& f : fams) {
      CHECK(f.verified);
      CHECK(f.kind == CertificateKind::poly_family);
      CHECK(reverify(f, sub.a, sub.b));
    }
    // the closed form x = 2(36 s^2 u^3 - 6 s u - s - 1), y = 9(4 s u^2 - 1), u odd, lies on a family
    for (long u = 1; u <= 9; u += 2) {
      Int x = 2 * (36 * s * s * u * u * u - 6 * s * u - s - 1), y = 9 * (4 * s * u * u - 1);
      bool on = false;
      for (const auto& f : fams) {
        for (const Rat& t : rational_roots(f.y_of - RatPoly::constant(Rat(y))))
          on = on || (is_integer(t) && f.x_of(t) == Rat(x));
      }
      CAPTURE(u);
      CHECK(on);
    }
  }
}

TEST_CASE("detect_family: no family where none exists") {
  CHECK(detect_family(pa4_sub(9, 0, 3)).empty());
  // a = 4s + 2: only finitely many solutions, so no subproblem may carry a family
  for (std::uint64_t s = 1; s <= 12; ++s) {
    const std::uint64_t a = 4 * s + 2;
    std::size_t found = 0;
    for (std::uint64_t i = 0; i < 2 * a; ++i)
      for (std::uint64_t j = 0; j < 12; ++j) found += detect_family(pa4_sub(a, i, j)).size();
    CAPTURE(a);
    CHECK(found == 0);
  }
}

TEST_CASE("detect_family: identical quadratics give m = n") {
  auto sub = make_subproblem(P3, 6, 1, P3, 6, 1);
  auto fams = detect_family(sub);
  REQUIRE(fams.size() == 1);
  CHECK(fams[0].x_of == fams[0].y_of);
  CHECK(fams[0].verified);
  // non-quadratic p: nothing to do
  CHECK(detect_family(make_subproblem(P4, 12, 0, P4, 12, 0)).empty());
}

TEST_CASE("discriminant pipeline vanishes along i = 2s-2, j = 3") {
  for (std::uint64_t s = 1; s <= 20; ++s) {
    CAPTURE(s);
    CHECK(discriminant_pipeline(pa4_sub(4 * s, 2 * s - 2, 3)) == 0);
  }
  // a genuine elliptic curve
  CHECK(discriminant_pipeline(make_subproblem(P3, 6, 1, P4, 6, 3)) != 0);
}

TEST_CASE("reduce_to_curve: P3(6m+1) = P4(6n+3)") {
  auto sub = make_subproblem(P3, 6, 1, P4, 6, 3);
  auto model = reduce_to_curve(sub);
  CHECK(model.kind == CurveModel::Kind::weierstrass);
  CHECK(model.a4 == -108);
  CHECK(model.a6 == 1728);
  CHECK(model.X_of == (RatPoly{24, 18}));
  CHECK(model.Y_of == (RatPoly{72, 108}));
  CHECK(curve_round_trip(model, sub));
  CHECK(model.to_string() == "Y^2 = X^3-108X+1728");

  auto pts = bounded_curve_points(model, 10'000);
  std::set<long> xs;
  for (const auto& [X, Y] : pts) {
    xs.insert(X.get_si());
    CHECK(Rat(Y * Y) == model.f.eval(X));
  }
  CHECK(xs == std::set<long>{-12, -3, -2, 6, 16, 22, 78, 96, 7926});
  CHECK(pts.size() == 18);
  auto sols = curve_points_to_solutions(model, sub, pts);
  CHECK(sols == std::vector<std::pair<Int, Int>>{{49, 27}, {39199, 2637}});
}

TEST_CASE("reduce_to_curve: round trip for all 54 P3/P4 subproblems") {
  for (const auto& sub : enumerate_subproblems(P3, P4)) {
    CAPTURE(sub.label());
    auto model = reduce_to_curve(sub);
    CHECK(curve_round_trip(model, sub));
    CHECK(model.f.has_integer_coeffs());
    CHECK(model.X_of.has_integer_coeffs());
    CHECK(model.Y_of.has_integer_coeffs());
  }
}

TEST_CASE("reduce_to_curve: degenerate and quartic models") {
  auto cube = CurveModel::weierstrass(0, 0);
  std::set<std::pair<long, long>> pts;
  for (const auto& [X, Y] : bounded_curve_points(cube, 100)) pts.insert({X.get_si(), Y.get_si()});
  std::set<std::pair<long, long>> expect;
  for (long t = 0; t * t <= 100; ++t) {
    expect.insert({t * t, t * t * t});
    expect.insert({t * t, -t * t * t});
  }
  CHECK(pts == expect);

  // P3 at (6m+1) against P5 at (60n+1): quartic
  auto sub = make_subproblem(P3, 6, 1, P5, 60, 1);
  auto model = reduce_to_curve(sub);
  CHECK(model.kind == CurveModel::Kind::quartic);
  CHECK(model.f.degree() == 4);
  CHECK(curve_round_trip(model, sub));
  auto sols = curve_points_to_solutions(model, sub, bounded_curve_points(model, 2000));
  Pairs box;
  for (const auto& [x, y] : sols)
    if (x >= 1 && x <= 20000 && y <= 1000) box.insert({x.get_si(), y.get_si()});
  Pairs brute;
  for (const auto& xy : oracle_pairs(P3, P5, 20000, 1000))
    if (xy.first % 6 == 1 && xy.second % 60 == 1) brute.insert(xy);
  CHECK(box == brute);
  CHECK(box.count({1, 1}));

  CHECK_THROWS_AS(reduce_to_curve(make_subproblem(P3, 6, 1, P3, 6, 2)), Error);
  CHECK_THROWS_AS(bounded_curve_points(model, 0), Error);
}

TEST_CASE("reduce_to_curve: a completed square needs no scaling") {
  ResidueSubproblem sub = make_subproblem(P3, 6, 1, P5, 60, 1);
  sub.p = RatPoly{1, 2, 1};        // (m+1)^2
  sub.q = RatPoly{1, 3, 0, 0, 2};  // 2n^4 + 3n + 1
  sub.F = BiPoly::difference(sub.p, sub.q);
  auto model = reduce_to_curve(sub);
  CHECK(model.kind == CurveModel::Kind::quartic);
  CHECK(model.Y_of == (RatPoly{1, 1}));
  CHECK(model.X_of == (RatPoly{0, 1}));
  CHECK(model.f == sub.q);
  CHECK(model.multiplier == 1);
  CHECK(curve_round_trip(model, sub));
}

TEST_CASE("a1a2_construct") {
  RatPoly y2{0, 0, 1}, y2p1{1, 0, 1}, y3{0, 0, 0, 1};
  auto c = a1a2_construct(PartSet{2, 3}, y2, 2);
  CHECK(c.x == 18);
  CHECK(c.value == 4);
  CHECK(c.verified);
  CHECK(knapsack({2, 3}, 18)[18] == 4);

  auto d = a1a2_construct(PartSet{3, 5}, y2p1, 3);
  CHECK(d.x == 135);
  CHECK(d.value == 10);
  CHECK(reverify(d, PartSet{3, 5}, PartSet()));

  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code([&] { a1a2_construct(PartSet{2, 3}, y2, 1); }) == ErrorCode::HypothesisViolated);
  CHECK(code([&] { a1a2_construct(PartSet{2, 4}, y2, 3); }) == ErrorCode::HypothesisViolated);
  CHECK(code([&] { a1a2_construct(PartSet{2, 3, 5}, y2, 3); }) == ErrorCode::WrongArity);

  std::mt19937_64 rng(7);
  for (int k = 0; k < 20; ++k) {
    std::uint64_t a1 = 1 + rng() % 12, a2 = 1 + rng() % 12;
    if (a1 == a2 || std::gcd(a1, a2) != 1) continue;
    PartSet A{a1, a2};
    Int m = 2 + rng() % 5;
    for (const auto& f : {y2, y2p1, y3}) {
      auto cert = a1a2_construct(A, f, m);
      auto table = knapsack(A.parts(), cert.x.get_ui());
      CHECK(table[cert.x.get_ui()] == cert.value);
    }
  }
}

TEST_CASE("family registry (reduced ranges)") {
  RegistryOptions opt;
  opt.p3p4_t_max = 40;
  opt.specb_k_max = 4;
  opt.thm6_k_max = 2;
  opt.pell_elements = 4;
  auto rep = verify_family_registry("*", opt);
  std::map<std::string, std::size_t> seen;
  for (const auto& c : rep.checks) {
    CAPTURE(c.entry);
    CAPTURE(c.params);
    CHECK(c.passed);
    CHECK(c.points > 0);
    ++seen[c.entry];
  }
  CHECK(rep.all_passed());
  for (const auto& info : family_registry()) CHECK(seen.count(info.key));
  for (auto key : {"specb_case1", "specb_case2", "specb_case3", "specb_case4", "p3p4_table"}) CHECK(seen.count(key));

  auto errata = [&](const std::string& key) {
    std::size_t n = 0;
    for (const auto& c : rep.checks)
      if (c.entry == key && !c.erratum.empty()) ++n;
    return n;
  };
  for (const auto& info : family_registry()) {
    CAPTURE(info.key);
    if (info.printed_differs) CHECK(errata(info.key) > 0);
    else CHECK(errata(info.key) == 0);
  }
  CHECK(errata("specb_case1") == 0);
  CHECK(errata("specb_case2") == 1);
  CHECK(errata("specb_case3") == 0);
  CHECK(errata("specb_case4") == 1);
  CHECK(errata("p3p4_table") == 1);

  for (const auto& c : rep.checks)
    if (c.entry.rfind("p3p4_I", 0) == 0 || c.entry.rfind("pa4", 0) == 0 || c.entry.rfind("thm6", 0) == 0) {
      CAPTURE(c.entry);
      CHECK(c.symbolic);
    }

  auto only = verify_family_registry("specb_*", opt);
  CHECK(only.checks.size() == 4);
}

TEST_CASE("solve_equal_values") {
  SolveOptions opt;
  opt.x_max = 2000;
  opt.y_max = 500;
  opt.families = true;
  opt.curves = true;
  opt.x_bound = 2000;
  auto rep = solve_equal_values(P3, P4, opt);
  CHECK(rep.subproblems == 54);
  std::size_t fams = 0;
  for (const auto& c : rep.certificates) {
    CHECK(c.verified);
    CHECK(reverify(c, P3, P4));
    if (c.kind == CertificateKind::poly_family) ++fams;
  }
  CHECK(fams == 4);
  CHECK(rep.inconclusive.size() == 50);
}

TEST_CASE("reducibility sweep guards") {
  CHECK_THROWS_AS(reducibility_sweep(4, 1), Error);
  CHECK(reducibility_sweep(5, 0).empty());
}
