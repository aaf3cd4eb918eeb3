#include "parteq/error.hpp"
#include "parteq/pellconic.hpp"

#include <algorithm>
#include <set>

namespace parteq {

namespace {

struct Quadratic {
  Int a, b, c;
};

Quadratic integer_quadratic(const RatPoly& p, const char* side) {
  if (p.degree() != 2)
    throw Error(ErrorCode::InvalidArgument, std::string(side) + " must be quadratic, got " + p.to_string());
  if (!p.has_integer_coeffs())
    throw Error(ErrorCode::NonIntegerCoefficients, std::string(side) + " = " + p.to_string());
  return {p.coeff(2).get_num(), p.coeff(1).get_num(), p.coeff(0).get_num()};
}

using Point = std::pair<Int, Int>;

// (X + Y sqrt D)(x + y sqrt D)
Point mul(const Point& P, const Int& x, const Int& y, const Int& D) {
  return {x * P.first + D * y * P.second, y * P.first + x * P.second};
}

Int abs_int(const Int& z) { return z < 0 ? Int(-z) : z; }

}  // namespace

std::pair<Int, Int> ConicResult::to_xy(const ConicSolution& s) const {
  return {a2 * (2 * a1 * s.m + b1), 2 * a2 * s.n + b2};
}

std::optional<ConicSolution> ConicResult::from_xy(const Int& X, const Int& Y) const {
  if (mod_floor(X, a2) != 0) return std::nullopt;
  Int u = X / a2 - b1;
  Int v = Y - b2;
  if (mod_floor(u, 2 * a1) != 0 || mod_floor(v, 2 * a2) != 0) return std::nullopt;
  ConicSolution s{u / (2 * a1), v / (2 * a2)};
  if (s.m < 0 || s.n < 0) return std::nullopt;
  return s;
}

std::optional<ConicSolution> ConicResult::apply(const ConicSolution& s) const {
  auto P = mul(to_xy(s), automorphism.x, automorphism.y, D);
  return from_xy(P.first, P.second);
}

ConicResult solve_conic(const ConicProblem& problem, std::size_t count, const Int& search_bound) {
  if (count == 0) throw Error(ErrorCode::InvalidArgument, "solve_conic needs count >= 1");
  Quadratic p = integer_quadratic(problem.p, "p");
  Quadratic q = integer_quadratic(problem.q, "q");
  if (p.a < 0) {
    p = {-p.a, -p.b, -p.c};
    q = {-q.a, -q.b, -q.c};
  }

  ConicResult res;
  res.a1 = p.a;
  res.b1 = p.b;
  res.a2 = q.a;
  res.b2 = q.b;
  res.D = p.a * q.a;
  if (res.D <= 0 || is_square(res.D))
    throw Error(ErrorCode::NotHyperbolic, "D = " + to_string(res.D) + " after completing squares");
  const Int& D = res.D;
  Int K = q.a * p.b * p.b - p.a * q.b * q.b - 4 * p.a * q.a * (p.c - q.c);
  res.N = q.a * K;
  const Int& N = res.N;
  PellSolution eps = pell_fundamental(D);

  // Representatives of every orbit: Nagell's bound on Y in the fundamental domain.
  std::set<Point> variants;
  if (N == 0) {
    variants.insert({0, 0});
    res.base_complete = true;
  } else {
    Int den = 2 * (N > 0 ? Int(eps.u + 1) : Int(eps.u - 1));
    Int nagell = isqrt(eps.v * eps.v * abs_int(N) / den) + 1;
    res.base_complete = nagell <= search_bound;
    Int limit = std::min(nagell, search_bound);
    Int r = N;  // N + D Y^2
    for (Int Y = 0; Y <= limit; ++Y) {
      if (r >= 0) {
        if (auto X = exact_sqrt(r)) {
          for (int sx : {1, -1})
            for (int sy : {1, -1}) variants.insert({sx * *X, sy * Y});
        }
      }
      r += D * (2 * Y + 1);
    }
  }
  if (variants.empty())
    throw Error(ErrorCode::NoSolutionFound,
                std::string("no representative of X^2 - D Y^2 = N") +
                    (res.base_complete ? "" : " within the search bound (inconclusive)"));

  // Smallest power of the unit that is the identity mod 2 a1 a2; it preserves the back-map.
  Int M = 2 * p.a * q.a;
  Int ex = mod_floor(eps.u, M), ey = mod_floor(eps.v, M);
  std::vector<Point> powers{{1, 0}};
  {
    Point cur{ex, ey};
    while (!(mod_floor(cur.first, M) == 1 && mod_floor(cur.second, M) == 0)) {
      powers.push_back({mod_floor(cur.first, M), mod_floor(cur.second, M)});
      cur = mul(cur, ex, ey, D);
    }
  }
  res.automorphism.power = powers.size();
  {
    Point e{1, 0};
    for (std::size_t i = 0; i < powers.size(); ++i) e = mul(e, eps.u, eps.v, D);
    res.automorphism.x = e.first;
    res.automorphism.y = e.second;
  }

  auto residue_ok = [&](const Int& X, const Int& Y) {
    return mod_floor(X - q.a * p.b, M) == 0 && mod_floor(Y - q.b, 2 * q.a) == 0;
  };
  if (N == 0) {
    // X = Y = 0 is the only point and it is fixed by every unit
    auto s = res.from_xy(0, 0);
    if (!s) throw Error(ErrorCode::NoSolutionFound, "the only point X = Y = 0 does not map back");
    res.solutions.push_back(*s);
    return res;
  }

  // Along an orbit X + sqrt(D) Y = xi eps^k, so only orbits with xi > 0 have a tail in the
  // positive quadrant, and that tail runs through every residue of the period. Such an orbit
  // with an admissible residue yields infinitely many solutions; everything else is confined
  // to a box around the origin.
  auto xi_positive = [&](const Point& v) {
    if (v.first >= 0 && v.second >= 0) return true;
    if (v.first <= 0 && v.second <= 0) return false;
    return v.first > 0 ? N > 0 : N < 0;
  };
  bool productive = false;
  for (const auto& v : variants) {
    if (!xi_positive(v)) continue;
    for (const auto& w : powers) {
      Point P = mul({mod_floor(v.first, M), mod_floor(v.second, M)}, w.first, w.second, D);
      if (residue_ok(P.first, P.second)) {
        productive = true;
        break;
      }
    }
    if (productive) break;
  }

  // X >= a2 b1 and Y >= b2 on the far side of xi = 0 keeps |X| below this
  Int T = abs_int(q.a * p.b) + (isqrt(D) + 1) * abs_int(q.b) + 1;
  T = std::max(T, Int(1 << 20));
  for (const auto& v : variants) T = std::max(T, Int(4 * abs_int(v.first)));
  const Int inv_y = -eps.v;
  for (;;) {
    std::set<ConicSolution> found;
    for (const auto& v : variants) {
      for (bool forward : {true, false}) {
        Point cur = v;
        Int prev = abs_int(cur.first);
        for (int step = 0;; ++step) {
          Int ax = abs_int(cur.first);
          if (ax <= T) {
            if (auto s = res.from_xy(cur.first, cur.second)) found.insert(*s);
          } else if (step > 0 && ax > prev) {
            break;
          }
          prev = ax;
          cur = mul(cur, eps.u, forward ? eps.v : inv_y, D);
        }
      }
    }
    // every point with |X| <= T was seen, hence every solution with m <= mcut
    Int mcut = floor_div(T / q.a - p.b, 2 * p.a);
    std::vector<ConicSolution> sols;
    for (const auto& s : found)
      if (s.m <= mcut) sols.push_back(s);
    if (sols.size() >= count || !productive) {
      if (sols.size() > count) sols.resize(count);
      res.solutions = std::move(sols);
      break;
    }
    T = T * T;
  }
  if (res.solutions.empty())
    throw Error(ErrorCode::NoSolutionFound,
                std::string("no orbit meets the congruences for m, n >= 0") +
                    (res.base_complete ? "" : " (base search incomplete, inconclusive)"));

  for (const auto& s : res.solutions) {
    Rat lhs = problem.p.eval(s.m), rhs = problem.q.eval(s.n);
    if (lhs != rhs)
      throw Error(ErrorCode::VerificationFailed,
                  "(" + to_string(s.m) + ", " + to_string(s.n) + ") does not satisfy p(m) = q(n)");
  }
  return res;
}

}  // namespace parteq
