#include "parteq/error.hpp"
#include "parteq/pellconic.hpp"

#include <algorithm>
#include <memory>
#include <set>

namespace parteq {

namespace {

using Cands = std::vector<std::pair<Rat, Rat>>;

Int need(const FamilyParams& params, const std::string& key, const char* name) {
  auto it = params.find(name);
  if (it == params.end())
    throw Error(ErrorCode::InvalidArgument, key + " needs parameter " + name);
  return it->second;
}

void hypothesis(bool ok, const std::string& key, const std::string& what) {
  if (!ok) throw Error(ErrorCode::HypothesisViolated, key + ": " + what);
}

std::uint64_t part(const Int& v, const std::string& key) {
  hypothesis(v >= 1 && v <= 1'000'000, key, "part " + to_string(v) + " out of range");
  return v.get_ui();
}

PellSolution pell_at(const Int& D, std::uint64_t k) {
  PellStream s(D);
  PellSolution out = s.next();
  for (std::uint64_t i = 1; i < k; ++i) out = s.next();
  return out;
}

// all four sign choices of (u, v)
template <class F>
Cands signed_variants(const PellSolution& sol, F f) {
  Cands out;
  for (int su : {1, -1})
    for (int sv : {1, -1}) out.push_back(f(Int(su * sol.u), Int(sv * sol.v)));
  return out;
}

Rat Q(const Int& z) { return Rat(z); }

std::uint64_t step_of(const FamilyPolyForm& f, std::uint64_t k) { return f.step * (k - 1) + f.start; }

RatPoly C(const Int& z) { return RatPoly::constant(Rat(z)); }
const RatPoly T{0, 1};  // the family parameter

const PartSet kP3{1, 2, 3};
const PartSet kP4{1, 2, 3, 4};

}  // namespace

Family::Family(std::string key, FamilyKind kind, PartSet a, PartSet b, std::string description,
               Candidates candidates)
    : key_(std::move(key)),
      kind_(kind),
      a_(std::move(a)),
      b_(std::move(b)),
      description_(std::move(description)),
      candidates_(std::move(candidates)) {}

std::vector<FamilyPoint> Family::element(std::uint64_t k) const {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "stream elements start at 1");
  std::set<std::pair<Int, Int>> seen;
  std::vector<FamilyPoint> out;
  std::string rejected;
  for (const auto& [xr, yr] : candidates_(k)) {
    if (!is_integer(xr) || !is_integer(yr)) {
      if (rejected.empty()) rejected = "non-integral (" + to_string(xr) + ", " + to_string(yr) + ")";
      continue;
    }
    Int x = xr.get_num(), y = yr.get_num();
    if (kind_ == FamilyKind::square && y < 0) y = -y;
    if (x < 0 || y < 0) continue;
    if (!seen.insert({x, y}).second) continue;
    Int vx = piece_source(a_)->value(x);
    Int expect = kind_ == FamilyKind::square ? Int(y * y) : piece_source(b_)->value(y);
    if (vx == expect) {
      out.push_back({k, x, y, vx});
    } else if (rejected.empty()) {
      rejected = "(" + to_string(x) + ", " + to_string(y) + "): " + to_string(vx) +
                 " != " + to_string(expect);
    }
  }
  if (out.empty())
    throw Error(ErrorCode::VerificationFailed,
                key_ + " element " + std::to_string(k) + " has no verified point; " +
                    (rejected.empty() ? "no nonnegative candidate" : rejected));
  std::sort(out.begin(), out.end(),
            [](const FamilyPoint& l, const FamilyPoint& r) { return std::tie(l.x, l.y) < std::tie(r.x, r.y); });
  return out;
}

std::vector<FamilyPoint> Family::take(std::size_t count) const {
  std::vector<FamilyPoint> out;
  for (std::uint64_t k = 1; k <= count; ++k) {
    auto e = element(k);
    out.insert(out.end(), e.begin(), e.end());
  }
  return out;
}

const std::vector<FamilyInfo>& family_registry() {
  static const std::vector<FamilyInfo> reg = {
      {"sq_P3_i4", {}, "y^2 = P_{1,2,3}(6n+4): n = u^2-1, y = uv, v^2 - 3u^2 = 1"},
      {"sq_P4_i1", {}, "y^2 = P_{1,2,3,4}(6n+3): n = 6u^2-2, y = 3u(6u^2-1), u >= 1"},
      {"sq_12a_pell", {"a"},
       "y^2 = P_{1,2,a}(2an), a nonsquare, c = floor(a/2): n = (c+2)v^2-2uv, y = (c+2)uv-2u^2+1, "
       "u^2 - a v^2 = 1",
       true},
      {"sq_12a_even_square", {"t"}, "a = 4t^2: P_{1,2,a}(8t^2 n + 2t^2-2) = (t(2n+1))^2, n >= 1"},
      {"sq_12a_odd_square", {"t"},
       "a = (2t+1)^2 (c = 2t(t+1)): P_{1,2,a}(2an + 2t^2-2) = ((2t+1)n+t)^2, n >= 1", true},
      {"pa4_4s", {"s"}, "P_{1,2,4s}(2(36s^2u^3-6su-s-1)) = P_{1,2,3,4}(9(4su^2-1)), u odd"},
      {"pa4_4s1", {"s"}, "a = 4s+1: P_{1,2,a}((9a^2u^3-3au-4(s+1))/2) = P_{1,2,3,4}(9au^2-7), u odd",
       true},
      {"pa4_4s3", {"s"},
       "a = 4s+3: P_{1,2,a}((9a^2u^3+3au-2(2s+3))/2) = P_{1,2,3,4}(3(3au^2-1)), u odd", true},
      {"12a12b", {"a", "b"},
       "4 | a < b, a = 2s, b = 2t, st nonsquare: P_{1,2,a}(4sn) = P_{1,2,b}(4tm) along the orbit of "
       "(0,0) on the conic t(4sn+s+2)^2 - s(4tm+t+2)^2 = t(s+2)^2 - s(t+2)^2",
       true},
      {"p3p4_I_3_1", {}, "P_3(6x+3) = P_4(6y+3): x = (t-1)(2t^2+2t+1), y = 2(t-1)(t+1)"},
      {"p3p4_I_3_2", {}, "P_3(6x+3) = P_4(6y+5): x = 2t^3+t-1, y = 2t^2-1"},
      {"p3p4_II_0_0", {}, "P_3(6x) = P_4(12y): x = (t-1)(2t^2-t+1), y = (t-1)t", true},
      {"p3p4_II_3_4", {}, "P_3(6x+3) = P_4(12y+8): x = 2t^3+3t^2+t-1, y = t^2+t-1"},
      {"thm6_case1", {"k"},
       "a = 6k+1, b = 4a: P_{1,2,a}(2am+11k) = P_{1,2,3,4,b}(3bn+3(8k-1)), "
       "m = 3(6k+1)n^2+2(9k+1)n+4k-1",
       true},
      {"thm6_case2", {"k"},
       "a = 6k+5, b = 4a: P_{1,2,a}(2am+7k+4) = P_{1,2,3,4,b}(3bn+24k+13), "
       "m = 3(6k+5)n^2+2(9k+7)n+2(2k+1)",
       true},
      {"thm6_case3", {"k"},
       "a = 2(6k+1), b = 4a: P_{1,2,a}(2am+14k) = P_{1,2,3,4,b}(3bn+48k+1), m = 6(6k+1)n^2+(36k+5)n+8k"},
      {"thm6_case4", {"k"},
       "a = 2(6k+5), b = 4a: P_{1,2,a}(2am+2(11k+8)) = P_{1,2,3,4,b}(3bn+3(16k+11)), "
       "m = 6(6k+5)n^2+(36k+29)n+8k+5"},
  };
  return reg;
}

Family family_from_theorem(const std::string& key, const FamilyParams& params, FormulaVariant variant) {
  const bool printed = variant == FormulaVariant::printed;
  auto info = std::find_if(family_registry().begin(), family_registry().end(),
                           [&](const FamilyInfo& f) { return f.key == key; });
  if (info == family_registry().end()) throw Error(ErrorCode::UnknownFamily, key);
  std::string desc = info->statement;
  if (printed && info->printed_differs) desc += " [printed form]";

  auto square = [&](PartSet a, Family::Candidates c) {
    return Family(key, FamilyKind::square, a, a, desc, std::move(c));
  };
  auto equal = [&](PartSet a, PartSet b, Family::Candidates c) {
    return Family(key, FamilyKind::equal_value, std::move(a), std::move(b), desc, std::move(c));
  };
  // candidates read off the closed form
  auto poly = [&](FamilyKind kind, PartSet a, PartSet b, RatPoly x_of, RatPoly y_of, std::uint64_t step,
                  std::uint64_t start) {
    FamilyPolyForm form{std::move(x_of), std::move(y_of), step, start};
    Family f(key, kind, std::move(a), std::move(b), desc, [form](std::uint64_t k) {
      Int t = int_from_u64(step_of(form, k));
      return Cands{{form.x_of.eval(t), form.y_of.eval(t)}};
    });
    return f.with_poly_form(form);
  };

  if (key == "sq_P3_i4") {
    return square(kP3, [](std::uint64_t k) {
      // ours: U^2 - 3V^2 = 1, so the stated (u, v) is (V, U)
      return signed_variants(pell_at(3, k), [](const Int& U, const Int& V) {
        Int n = V * V - 1;
        return std::pair{Q(6 * n + 4), Q(U * V)};
      });
    });
  }
  if (key == "sq_P4_i1") {
    RatPoly n = 6 * T * T - C(2);
    return poly(FamilyKind::square, kP4, kP4, 6 * n + C(3), 3 * T * (6 * T * T - C(1)), 1, 1);
  }
  if (key == "sq_12a_pell") {
    Int a = need(params, key, "a");
    hypothesis(a >= 3 && !is_square(a), key, "needs a >= 3 nonsquare");
    std::uint64_t av = part(a, key);
    Int c = a / 2;
    return square(PartSet{1, 2, av}, [a, c, printed](std::uint64_t k) {
      return signed_variants(pell_at(a, k), [&](const Int& u, const Int& v) {
        Int n = (c + 2) * v * v - 2 * u * v;
        Int y = (c + 2) * u * v - 2 * u * u + (printed ? 0 : 1);
        return std::pair{Q(2 * a * n), Q(y)};
      });
    });
  }
  if (key == "sq_12a_even_square") {
    Int t = need(params, key, "t");
    hypothesis(t >= 1, key, "needs t >= 1");
    PartSet A{1, 2, part(4 * t * t, key)};
    return poly(FamilyKind::square, A, A, Rat(8 * t * t) * T + C(2 * t * t - 2), Rat(t) * (2 * T + C(1)), 1, 1);
  }
  if (key == "sq_12a_odd_square") {
    Int t = need(params, key, "t");
    hypothesis(t >= 1, key, "needs t >= 1");
    // printed c = 2t(2t+1) would mean a = 2c+1
    Int a = printed ? Int(4 * t * (2 * t + 1) + 1) : Int((2 * t + 1) * (2 * t + 1));
    PartSet A{1, 2, part(a, key)};
    return poly(FamilyKind::square, A, A, Rat(2 * (2 * t + 1) * (2 * t + 1)) * T + C(2 * t * t - 2),
                Rat(2 * t + 1) * T + C(t), 1, 1);
  }
  if (key == "pa4_4s" || key == "pa4_4s1" || key == "pa4_4s3") {
    Int s = need(params, key, "s");
    int kind = key == "pa4_4s" ? 0 : key == "pa4_4s1" ? 1 : 3;
    hypothesis(kind == 3 ? s >= 0 : s >= 1, key, kind == 3 ? "needs s >= 0" : "needs s >= 1");
    Int a = 4 * s + kind;
    RatPoly u2 = T * T, u3 = u2 * T;
    RatPoly x, y;
    if (kind == 0) {
      x = 2 * (Rat(36 * s * s) * u3 - Rat(6 * s) * T - C(s + 1));
      y = 9 * (Rat(4 * s) * u2 - C(1));
    } else if (kind == 1) {
      x = Rat(1, 2) * (Rat(9 * a * a) * u3 - Rat(3 * a) * T - C(4 * (s + 1)));
      y = Rat(printed ? Int(9 * s + 4) : Int(9 * a)) * u2 - C(7);
    } else {
      x = Rat(1, 2) * (Rat(9 * a * a) * u3 + Rat((printed ? 1 : 3) * a) * T - C(2 * (2 * s + 3)));
      y = printed ? 3 * (Rat(a) * u2 - C(1)) : 3 * (Rat(3 * a) * u2 - C(1));
    }
    // u odd
    return poly(FamilyKind::equal_value, PartSet{1, 2, part(a, key)}, kP4, x, y, 2, 1);
  }
  if (key == "12a12b") {
    Int a = need(params, key, "a"), b = need(params, key, "b");
    hypothesis(a >= 4 && a < b && a % 4 == 0 && b % 4 == 0, key, "needs 4 | a, 4 | b, a < b");
    Int s = a / 2, t = b / 2;
    PartSet A{1, 2, part(a, key)}, B{1, 2, part(b, key)};
    if (printed) {
      hypothesis(!is_square(s), key, "printed form needs a/2 nonsquare");
      return equal(A, B, [s, t](std::uint64_t k) {
        // v^2 - s u^2 = 1: ours (U, V) with U^2 - s V^2 = 1 gives v = U, u = V
        return signed_variants(pell_at(s, k), [&](const Int& U, const Int& V) {
          Rat m = Rat(s + 2, 2) * Q(V * U) - Rat(t + 2, 2) * Q(U * U);
          Rat n = Rat(s + 2, 2) * Q(V * V) - Rat(t + 2, 2) * Q(V * U);
          return std::pair{Rat(4 * s) * n, Rat(4 * t) * m};
        });
      });
    }
    hypothesis(!is_square(s * t), key, "needs st nonsquare");
    ConicProblem cp{*try_piece(A, Int(4 * s).get_ui(), 0), *try_piece(B, Int(4 * t).get_ui(), 0)};
    auto cache = std::make_shared<std::vector<ConicSolution>>();
    return equal(A, B, [cp, cache, s, t](std::uint64_t k) {
      // index 0 is the trivial (0, 0)
      if (cache->size() <= k) *cache = solve_conic(cp, std::max<std::size_t>(k + 1, 2 * cache->size())).solutions;
      const auto& sol = (*cache)[k];
      return Cands{{Q(4 * s * sol.m), Q(4 * t * sol.n)}};
    });
  }
  if (key.rfind("p3p4_", 0) == 0) {
    // type I: (6x+i, 6y+2j+1); type II: (6x+i, 12y+2j)
    RatPoly x, y, X, Y;
    if (key == "p3p4_I_3_1") {
      x = (T - C(1)) * (2 * T * T + 2 * T + C(1)), y = 2 * (T - C(1)) * (T + C(1));
      X = 6 * x + C(3), Y = 6 * y + C(3);
    } else if (key == "p3p4_I_3_2") {
      x = 2 * T * T * T + T - C(1), y = 2 * T * T - C(1);
      X = 6 * x + C(3), Y = 6 * y + C(5);
    } else if (key == "p3p4_II_0_0") {
      x = (T - C(1)) * (2 * T * T - T + C(1)), y = Rat(printed ? 2 : 1) * (T - C(1)) * T;
      X = 6 * x, Y = 12 * y;
    } else {
      x = 2 * T * T * T + 3 * T * T + T - C(1), y = T * T + T - C(1);
      X = 6 * x + C(3), Y = 12 * y + C(8);
    }
    return poly(FamilyKind::equal_value, kP3, kP4, X, Y, 1, 1);
  }
  if (key.rfind("thm6_case", 0) == 0) {
    Int kk = need(params, key, "k");
    hypothesis(kk >= 1, key, "needs k >= 1");
    int c = key.back() - '0';
    Int a, b, i, j;
    RatPoly m;
    switch (c) {
      case 1:
        a = 6 * kk + 1, i = 11 * kk, b = 4 * a, j = 3 * (8 * kk - 1);
        m = printed ? Rat(3 * (6 * kk + 5)) * T * T + Rat(2 * (9 * kk + 7)) * T + C(4 * kk - 1)
                    : Rat(3 * (6 * kk + 1)) * T * T + Rat(2 * (9 * kk + 1)) * T + C(4 * kk - 1);
        break;
      case 2:
        a = 6 * kk + 5, i = 7 * kk + 4, b = printed ? Int(4 * (6 * kk + 4)) : Int(4 * a), j = 24 * kk + 13;
        m = Rat(3 * (6 * kk + 5)) * T * T + Rat(2 * (9 * kk + 7)) * T + C(2 * (2 * kk + 1));
        break;
      case 3:
        a = 2 * (6 * kk + 1), i = 14 * kk, b = 4 * a, j = 48 * kk + 1;
        m = Rat(6 * (6 * kk + 1)) * T * T + Rat(36 * kk + 5) * T + C(8 * kk);
        break;
      default:
        a = 2 * (6 * kk + 5), i = 2 * (11 * kk + 8), b = 4 * a, j = 3 * (16 * kk + 11);
        m = Rat(6 * (6 * kk + 5)) * T * T + Rat(36 * kk + 29) * T + C(8 * kk + 5);
        break;
    }
    PartSet A{1, 2, part(a, key)}, B{1, 2, 3, 4, part(b, key)};
    // n runs from 0
    return poly(FamilyKind::equal_value, A, B, Rat(2 * a) * m + C(i), Rat(3 * b) * T + C(j), 1, 0);
  }
  throw Error(ErrorCode::UnknownFamily, key);
}

}  // namespace parteq
