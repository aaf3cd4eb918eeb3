#pragma once

#include "parteq/bigint.hpp"

#include <string>
#include <utility>
#include <vector>

namespace parteq {

// Univariate polynomial over Q; coeffs_[i] multiplies x^i, no trailing zeros.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);
  RatPoly(std::initializer_list<Rat> coeffs) : RatPoly(std::vector<Rat>(coeffs)) {}

  static RatPoly constant(const Rat& c);
  static RatPoly monomial(const Rat& c, std::size_t degree);
  static RatPoly linear(const Rat& slope, const Rat& offset);  // slope*x + offset

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }
  Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }
  Rat leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

  Rat operator()(const Rat& x) const;
  Rat eval(const Int& x) const { return (*this)(Rat(x)); }

  RatPoly derivative() const;
  RatPoly compose_linear(const Rat& a, const Rat& b) const;  // p(a x + b)
  RatPoly compose(const RatPoly& inner) const;               // p(inner(x))
  std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const;
  RatPoly monic() const;
  // Positive rational c with p/c primitive with integer coefficients (sign of leading kept).
  Rat content() const;
  RatPoly primitive() const { return *this * Rat(1 / content()); }
  bool has_integer_coeffs() const;
  Int denominator_lcm() const;

  std::string to_string(char var = 'n') const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const RatPoly& o);
  RatPoly& operator*=(const Rat& c);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
  friend RatPoly operator*(RatPoly a, const Rat& c) { return a *= c; }
  friend RatPoly operator*(const Rat& c, RatPoly a) { return a *= c; }
  friend RatPoly operator-(RatPoly a);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

RatPoly pow(const RatPoly& p, unsigned e);
RatPoly gcd(RatPoly a, RatPoly b);  // monic, gcd(0,0) = 0
// Exact quotient; throws InvalidArgument when d does not divide p.
RatPoly exact_div(const RatPoly& p, const RatPoly& d);
bool divides(const RatPoly& d, const RatPoly& p);

}  // namespace parteq
