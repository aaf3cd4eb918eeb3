#include "parteq/diopheq.hpp"
#include "parteq/error.hpp"

#include <algorithm>
#include <set>

namespace parteq {

namespace {

Int coeff_gcd(const RatPoly& f) {
  Int g = 0;
  for (const auto& c : f.coeffs()) g = gcd(g, Int(c.get_num()));
  return g;
}

std::vector<Int> prime_factors(Int n) {
  std::vector<Int> out;
  if (n < 0) n = -n;
  for (Int p = 2; p * p <= n; ++p) {
    if (mod_floor(n, p) != 0) continue;
    out.push_back(p);
    while (mod_floor(n, p) == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool divisible(const Int& z, const Int& d) { return mod_floor(z, d) == 0; }

}  // namespace

CurveModel CurveModel::weierstrass(const Int& a4, const Int& a6) {
  CurveModel c;
  c.kind = Kind::weierstrass;
  c.a4 = a4;
  c.a6 = a6;
  c.f = RatPoly{Rat(a6), Rat(a4), 0, 1};
  c.X_of = RatPoly{0, 1};
  c.Y_of = RatPoly{0, 1};
  c.multiplier = 1;
  return c;
}

std::string CurveModel::to_string() const { return "Y^2 = " + f.to_string('X'); }

CurveModel reduce_to_curve(const ResidueSubproblem& sub) {
  if (sub.p.degree() != 2)
    throw Error(ErrorCode::DegreeUnsupported, "p must be quadratic, got degree " + std::to_string(sub.p.degree()));
  const int dq = sub.q.degree();
  if (dq != 3 && dq != 4)
    throw Error(ErrorCode::DegreeUnsupported, "q must have degree 3 or 4, got " + std::to_string(dq));
  const Rat p2 = sub.p.coeff(2), p1 = sub.p.coeff(1), p0 = sub.p.coeff(0);
  // W = 2 p2 m + p1 has W^2 = R(n) on the subproblem
  RatPoly W{p1, Rat(2 * p2)};
  RatPoly R = Rat(4 * p2) * sub.q + RatPoly::constant(p1 * p1 - 4 * p2 * p0);
  Int d = W.denominator_lcm();
  while (!(R * Rat(d * d)).has_integer_coeffs()) d += W.denominator_lcm();
  RatPoly Y0 = W * Rat(d);
  RatPoly R0 = R * Rat(d * d);
  {
    // drop a common g from W (g^2 from R): p = (m+1)^2 needs no scaling at all
    for (Int k = coeff_gcd(Y0); k > 1; --k) {
      if (divisible(coeff_gcd(Y0), k) && divisible(coeff_gcd(R0), k * k)) {
        Y0 = Y0 * Rat(1, k);
        R0 = R0 * Rat(1, k * k);
        break;
      }
    }
  }

  CurveModel c;
  if (dq == 4) {
    c.kind = CurveModel::Kind::quartic;
    c.f = R0;
    c.X_of = RatPoly{0, 1};
    c.Y_of = Y0;
  } else {
    const Int r3 = R0.coeff(3).get_num(), r2 = R0.coeff(2).get_num(), r1 = R0.coeff(1).get_num(),
              r0 = R0.coeff(0).get_num();
    Int a4 = 81 * r1 * r3 - 27 * r2 * r2;
    Int a6 = 54 * r2 * r2 * r2 - 243 * r1 * r2 * r3 + 729 * r0 * r3 * r3;
    RatPoly X{Rat(3 * r2), Rat(9 * r3)};
    RatPoly Y = Y0 * Rat(27 * r3);
    // shrink by u while (X, Y) -> (X/u^2, Y/u^3) keeps everything integral
    for (bool again = true; again;) {
      again = false;
      for (const Int& u : prime_factors(coeff_gcd(X))) {
        Int u2 = u * u, u3 = u2 * u;
        if (!divisible(coeff_gcd(X), u2) || !divisible(coeff_gcd(Y), u3)) continue;
        if (!divisible(a4, u2 * u2) || !divisible(a6, u3 * u3)) continue;
        X = X * Rat(1, u2);
        Y = Y * Rat(1, u3);
        a4 /= u2 * u2;
        a6 /= u3 * u3;
        again = true;
      }
    }
    c = CurveModel::weierstrass(a4, a6);
    c.X_of = X;
    c.Y_of = Y;
  }
  Rat kappa = c.Y_of.coeff(1) / (2 * p2);
  c.multiplier = kappa * kappa * 4 * p2;
  if (!curve_round_trip(c, sub))
    throw Error(ErrorCode::VerificationFailed, "curve model does not reproduce " + sub.label());
  return c;
}

bool curve_round_trip(const CurveModel& model, const ResidueSubproblem& sub) {
  if (model.kind == CurveModel::Kind::weierstrass && !(model.f == RatPoly{Rat(model.a6), Rat(model.a4), 0, 1}))
    return false;
  BiPoly lhs = BiPoly::in_m(model.Y_of * model.Y_of) - BiPoly::in_n(model.f.compose(model.X_of));
  return lhs == sub.F.scaled(model.multiplier);
}

std::vector<std::pair<Int, Int>> bounded_curve_points(const CurveModel& model, std::uint64_t x_bound) {
  if (x_bound < 1) throw Error(ErrorCode::InvalidArgument, "X bound must be >= 1");
  if (!model.f.has_integer_coeffs()) throw Error(ErrorCode::NonIntegerCoefficients, model.to_string());
  std::vector<Int> f;
  for (const auto& c : model.f.coeffs()) f.push_back(c.get_num());
  std::vector<std::pair<Int, Int>> out;
  const Int B = int_from_u64(x_bound);
  Int v;
  for (Int X = -B; X <= B; ++X) {
    v = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) v = v * X + *it;
    if (v < 0) continue;
    Int r;
    if (!mpz_perfect_square_p(v.get_mpz_t())) continue;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    if (r != 0) out.push_back({X, -r});
    out.push_back({X, r});
  }
  return out;
}

std::vector<std::pair<Int, Int>> curve_points_to_solutions(const CurveModel& model, const ResidueSubproblem& sub,
                                                          const std::vector<std::pair<Int, Int>>& points) {
  std::set<std::pair<Int, Int>> found;
  if (model.X_of.degree() != 1 || model.Y_of.degree() != 1) return {};
  for (const auto& [X, Y] : points) {
    Rat n = (Rat(X) - model.X_of.coeff(0)) / model.X_of.coeff(1);
    Rat m = (Rat(Y) - model.Y_of.coeff(0)) / model.Y_of.coeff(1);
    if (!is_integer(n) || !is_integer(m) || n < 0 || m < 0) continue;
    if (sub.p.eval(m.get_num()) != sub.q.eval(n.get_num())) continue;
    found.insert({sub.x_of(m.get_num()), sub.y_of(n.get_num())});
  }
  return {found.begin(), found.end()};
}

}  // namespace parteq
