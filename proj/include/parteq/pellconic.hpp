#pragma once

#include "parteq/bigint.hpp"
#include "parteq/partset.hpp"
#include "parteq/quasipoly.hpp"
#include "parteq/ratpoly.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace parteq {

// A solution of u^2 - D v^2 = 1.
struct PellSolution {
  Int u;
  Int v;
  friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

PellSolution pell_fundamental(const Int& D);

// Positive solutions of u^2 - D v^2 = 1 in increasing order, starting at the fundamental one.
class PellStream {
 public:
  explicit PellStream(Int D);
  const Int& D() const noexcept { return d_; }
  const PellSolution& fundamental() const noexcept { return fund_; }
  PellSolution next();

 private:
  Int d_;
  PellSolution fund_;
  std::optional<PellSolution> cur_;
};

std::vector<PellSolution> pell_take(const Int& D, std::size_t k);

// p(m) = q(n) with integer quadratics p, q.
struct ConicProblem {
  RatPoly p;
  RatPoly q;
};

struct ConicSolution {
  Int m;
  Int n;
  friend std::strong_ordering operator<=>(const ConicSolution&, const ConicSolution&) = default;
};

// (X, Y) -> (x X + D y Y, y X + x Y): a power of the fundamental unit that preserves the
// congruences tying X, Y back to m, n.
struct ConicAutomorphism {
  Int x;
  Int y;
  std::uint64_t power = 1;
};

struct ConicResult {
  // X^2 - D Y^2 = N with X = a2 (2 a1 m + b1), Y = 2 a2 n + b2 (p = a1 m^2 + b1 m + c1, q likewise).
  Int D;
  Int N;
  std::vector<ConicSolution> solutions;  // ascending, m, n >= 0
  ConicAutomorphism automorphism;
  // The base search covered the whole fundamental domain (Nagell bound <= search bound).
  bool base_complete = false;

  Int a1, b1, a2, b2;

  std::pair<Int, Int> to_xy(const ConicSolution& s) const;
  std::optional<ConicSolution> from_xy(const Int& X, const Int& Y) const;
  // Image under the automorphism, when it maps back to nonnegative integers.
  std::optional<ConicSolution> apply(const ConicSolution& s) const;
};

inline constexpr std::uint64_t kDefaultConicBound = 1'000'000;

ConicResult solve_conic(const ConicProblem& problem, std::size_t count,
                        const Int& search_bound = Int(kDefaultConicBound));

enum class FamilyKind { square, equal_value };

// Square families: value(x) = y^2 with y >= 0. Equal-value families: P_A(x) = P_B(y).
struct FamilyPoint {
  std::uint64_t element = 0;
  Int x;
  Int y;
  Int value;
};

using FamilyParams = std::map<std::string, Int>;

struct FamilyInfo {
  std::string key;
  std::vector<std::string> params;
  std::string statement;
  bool printed_differs = false;  // the printed formula fails and a corrected one is used
};

const std::vector<FamilyInfo>& family_registry();

// Closed form of a polynomial family: element k has parameter t = step*(k-1) + start and
// arguments x_of(t), y_of(t) (y_of is the square root for square families).
struct FamilyPolyForm {
  RatPoly x_of;
  RatPoly y_of;
  std::uint64_t step = 1;
  std::uint64_t start = 1;
};

class Family {
 public:
  using Candidates = std::function<std::vector<std::pair<Rat, Rat>>(std::uint64_t)>;

  Family(std::string key, FamilyKind kind, PartSet a, PartSet b, std::string description,
         Candidates candidates);

  const std::string& key() const noexcept { return key_; }
  FamilyKind kind() const noexcept { return kind_; }
  const PartSet& a() const noexcept { return a_; }
  const PartSet& b() const noexcept { return b_; }
  const std::string& description() const noexcept { return description_; }
  const std::optional<FamilyPolyForm>& poly_form() const noexcept { return poly_form_; }
  Family& with_poly_form(FamilyPolyForm form) {
    poly_form_ = std::move(form);
    return *this;
  }

  // Verified points of stream element k >= 1. Sign variants that fail are dropped;
  // VerificationFailed when nothing survives.
  std::vector<FamilyPoint> element(std::uint64_t k) const;
  std::vector<FamilyPoint> take(std::size_t count) const;

 private:
  std::string key_;
  FamilyKind kind_;
  PartSet a_;
  PartSet b_;
  std::string description_;
  Candidates candidates_;
  std::optional<FamilyPolyForm> poly_form_;
};

Family family_from_theorem(const std::string& key, const FamilyParams& params = {},
                           FormulaVariant variant = FormulaVariant::corrected);

}  // namespace parteq
