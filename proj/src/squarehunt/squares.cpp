#include "parteq/error.hpp"
#include "parteq/partcount.hpp"
#include "parteq/pellconic.hpp"
#include "parteq/quasipoly.hpp"
#include "parteq/squarehunt.hpp"

namespace parteq {

std::vector<std::pair<Int, Int>> square_value_search(const PartSet& set, std::uint64_t x_max) {
  PartitionTable table(set, x_max);
  auto flags = table.square_candidates();
  std::vector<std::pair<Int, Int>> out;
  for (std::uint64_t x = 1; x <= x_max; ++x) {
    if (!flags[x]) continue;
    if (auto r = exact_sqrt(table.value(x))) out.push_back({int_from_u64(x), *r});
  }
  return out;
}

bool SevenReport::passed() const {
  return factorization_95 && factorization_226 && n_values.size() >= 3 && n_values[0] == 0 && n_values[1] == 494 &&
         n_values[2] == 712842 && points.size() == n_values.size() && squares_226.empty();
}

SevenReport verify_seven_example(std::size_t count, std::uint64_t bound_226) {
  const PartSet A{1, 2, 4, 5, 8, 9, 10};
  const std::uint64_t L = A.lcm();
  auto lin = [](long a, long b) { return RatPoly::linear(a, b); };
  SevenReport rep;
  rep.bound_226 = bound_226;

  RatPoly p95 = try_piece(A, L, 95).value();
  RatPoly f95 = Rat(25) * lin(3, 1) * lin(3, 1) * lin(18, 5) * lin(18, 5) * lin(36, 13) * lin(40, 13);
  rep.factorization_95 = p95 == f95;
  RatPoly p226 = try_piece(A, L, 226).value();
  RatPoly f226 = Rat(25) * lin(3, 2) * lin(3, 2) * lin(18, 13) * lin(18, 13) * lin(36, 23) * lin(40, 27);
  rep.factorization_226 = p226 == f226;
  rep.transcript.push_back("P_A(360n+95) " + std::string(rep.factorization_95 ? "=" : "!=") +
                           " 25(3n+1)^2(18n+5)^2(36n+13)(40n+13)");
  rep.transcript.push_back("P_A(360n+226) " + std::string(rep.factorization_226 ? "=" : "!=") +
                           " 25(3n+2)^2(18n+13)^2(36n+23)(40n+27)");

  // w^2 = (36n+13)(40n+13) as a conic
  ConicProblem cp{RatPoly{0, 0, 1}, lin(36, 13) * lin(40, 13)};
  auto res = solve_conic(cp, count);
  auto src = piece_source(A);
  for (const auto& s : res.solutions) {
    rep.n_values.push_back(s.n);
    Int x = Int(L) * s.n + 95;
    // y = 5 (3n+1)(18n+5) w
    Int y = 5 * (3 * s.n + 1) * (18 * s.n + 5) * s.m;
    bool dp = x <= Int(PieceSource::kTableCap);
    Int v = dp ? src->table_value(x.get_ui()) : p95.eval(s.n).get_num();
    if (v != y * y)
      throw Error(ErrorCode::VerificationFailed, "P_A(" + to_string(x) + ") = " + to_string(v) + " is not " +
                                                     to_string(y) + "^2");
    rep.points.push_back({x, y});
    rep.by_dp.push_back(dp);
    rep.transcript.push_back("n = " + to_string(s.n) + ": P_A(" + to_string(x) + ") = " + to_string(y) + "^2 (" +
                             (dp ? "DP" : "factorisation") + ")");
  }

  for (std::uint64_t n = 0; n <= bound_226; ++n) {
    Int v = Int(36 * n + 23) * Int(40 * n + 27);
    if (is_square(v)) rep.squares_226.push_back(int_from_u64(n));
  }
  rep.transcript.push_back(std::to_string(rep.squares_226.size()) + " n <= " + std::to_string(bound_226) +
                           " make (36n+23)(40n+27) a square (bounded)");
  return rep;
}

}  // namespace parteq
