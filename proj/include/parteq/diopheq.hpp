#pragma once

#include "parteq/bifactor.hpp"
#include "parteq/bipoly.hpp"
#include "parteq/partset.hpp"
#include "parteq/pellconic.hpp"
#include "parteq/ratpoly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace parteq {

// P_A(modulus*n + residue) == poly(n) for all n >= 0.
struct PieceRef {
  std::uint64_t modulus = 1;
  std::uint64_t residue = 0;
  RatPoly poly;
};

// Pieces at the coarsest certified moduli: every divisor of L_A is tried, smallest first, and a
// residue class is taken whenever try_piece certifies it and it is not yet covered.
std::vector<PieceRef> coarse_pieces(const PartSet& set);

// P_A(ma*m + i) = P_B(mb*n + j)
struct ResidueSubproblem {
  PartSet a;
  PartSet b;
  std::uint64_t ma = 1, mb = 1, i = 0, j = 0;
  RatPoly p;  // in m
  RatPoly q;  // in n
  BiPoly F;   // p(m) - q(n)

  std::string label() const;
  Int x_of(const Int& m) const { return Int(ma) * m + i; }
  Int y_of(const Int& n) const { return Int(mb) * n + j; }
};

// Throws NotPolynomial when either side is not a polynomial on its class.
ResidueSubproblem make_subproblem(const PartSet& a, std::uint64_t ma, std::uint64_t i, const PartSet& b,
                                  std::uint64_t mb, std::uint64_t j);
std::vector<ResidueSubproblem> enumerate_subproblems(const PartSet& a, const PartSet& b);

enum class CertificateKind { point, poly_family, pell_family };
const char* certificate_kind_name(CertificateKind kind);

struct SolutionCertificate {
  std::string equation;
  CertificateKind kind = CertificateKind::point;
  // point: P_A(x) = P_B(y) = value (or P_A(x) = value = f(y) for a1a2 constructions)
  Int x, y, value;
  // poly_family: x = x_of(s), y = y_of(s) for integers s >= s_min
  RatPoly x_of, y_of;
  Int s_min;
  std::string parameter;  // how s relates to the subproblem variables
  // pell_family: conic data and the first solutions in (x, y)
  std::string pell;
  std::vector<std::pair<Int, Int>> pell_points;
  bool verified = false;
  std::vector<std::string> transcript;
};

// Checks the payload again with fresh evaluations (table or quasi-polynomial pieces).
bool reverify(const SolutionCertificate& cert, const PartSet& a, const PartSet& b);

// Pairs 1 <= x <= x_max, 1 <= y <= y_max with P_A(x) = P_B(y), ordered by value then x then y.
std::vector<SolutionCertificate> brute_force_search(const PartSet& a, const PartSet& b, std::uint64_t x_max,
                                                    std::uint64_t y_max);

// Points of one subproblem with x <= x_max, y <= y_max, from the pieces alone; (x, y) ascending.
std::vector<std::pair<Int, Int>> search_subproblem(const ResidueSubproblem& sub, std::uint64_t x_max,
                                                   std::uint64_t y_max);

// Polynomial families of a subproblem with quadratic p, via Disc_m(F).
std::vector<SolutionCertificate> detect_family(const ResidueSubproblem& sub);

// Disc_n(Disc_m(F)); zero is necessary for infinitely many solutions when deg q = 3.
Rat discriminant_pipeline(const ResidueSubproblem& sub);

struct CurveModel {
  enum class Kind { weierstrass, quartic };
  Kind kind = Kind::weierstrass;
  Int a4, a6;    // Y^2 = X^3 + a4 X + a6 when weierstrass
  RatPoly f;     // Y^2 = f(X), always set
  RatPoly X_of;  // X as a polynomial in n (the q variable)
  RatPoly Y_of;  // Y as a polynomial in m (the p variable)
  Rat multiplier;  // Y_of(m)^2 - f(X_of(n)) == multiplier * (p(m) - q(n))

  static CurveModel weierstrass(const Int& a4, const Int& a6);
  std::string to_string() const;
};

CurveModel reduce_to_curve(const ResidueSubproblem& sub);
// Checks the declared identity for the subproblem symbolically.
bool curve_round_trip(const CurveModel& model, const ResidueSubproblem& sub);

inline constexpr std::uint64_t kDefaultCurveBound = 100'000;

// Integer points with |X| <= bound (bounded, not a completeness proof), ascending in X then Y.
std::vector<std::pair<Int, Int>> bounded_curve_points(const CurveModel& model, std::uint64_t x_bound);
// Curve points pulled back to (x, y) of the subproblem with m, n >= 0.
std::vector<std::pair<Int, Int>> curve_points_to_solutions(const CurveModel& model, const ResidueSubproblem& sub,
                                                          const std::vector<std::pair<Int, Int>>& points);

// P_A(a1 a2 (f(m) - 1)) = f(m) for coprime A = {a1, a2}.
SolutionCertificate a1a2_construct(const PartSet& a, const RatPoly& f, const Int& m);

struct RegistryCheck {
  std::string entry;
  std::string params;
  bool passed = false;
  bool symbolic = false;       // identity also checked as polynomials
  std::size_t points = 0;      // DP-checked instances
  std::string erratum;         // printed form that fails, if any
  std::vector<std::string> transcript;
};

struct RegistryOptions {
  std::uint64_t p3p4_t_max = 1000;
  std::uint64_t specb_k_max = 50;
  std::uint64_t thm6_k_max = 10;
  std::uint64_t pell_elements = 10;
  std::uint64_t poly_points = 25;
};

struct RegistryReport {
  std::vector<RegistryCheck> checks;
  bool all_passed() const;
};

// Entries whose key matches the glob pattern.
RegistryReport verify_family_registry(const std::string& pattern = "*", const RegistryOptions& options = {});

struct SolveOptions {
  std::uint64_t x_max = 0;  // brute force when both bounds are set
  std::uint64_t y_max = 0;
  bool families = false;
  bool curves = false;
  std::uint64_t x_bound = kDefaultCurveBound;
};

struct SolveReport {
  std::size_t subproblems = 0;
  std::vector<SolutionCertificate> certificates;
  std::vector<std::string> inconclusive;  // subproblems left to bounded search
  std::vector<std::string> notes;
};

SolveReport solve_equal_values(const PartSet& a, const PartSet& b, const SolveOptions& options);

// 5-element pairs (A, B) with parts <= max_part whose residue subproblems factor; slow.
struct ReducibleCase {
  ResidueSubproblem sub;
  BiFactorization factors;
};
std::vector<ReducibleCase> reducibility_sweep(std::uint64_t max_part, std::size_t limit);

}  // namespace parteq
