#pragma once

#include "parteq/ratpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace parteq {

enum class Var { m, n };

// Polynomial in m and n over Q, stored as sum_k c_k(n) m^k.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<RatPoly> by_m);

  static BiPoly constant(const Rat& c);
  static BiPoly in_m(const RatPoly& p);  // p(m)
  static BiPoly in_n(const RatPoly& q);  // q(n)
  // p(m) - q(n)
  static BiPoly difference(const RatPoly& p, const RatPoly& q) { return in_m(p) - in_n(q); }

  bool is_zero() const noexcept { return by_m_.empty(); }
  int degree_m() const noexcept { return static_cast<int>(by_m_.size()) - 1; }
  int degree_n() const;
  int total_degree() const;
  const std::vector<RatPoly>& by_m() const noexcept { return by_m_; }
  RatPoly coeff_m(std::size_t k) const { return k < by_m_.size() ? by_m_[k] : RatPoly(); }
  Rat coeff(std::size_t i, std::size_t j) const { return coeff_m(i).coeff(j); }  // m^i n^j

  Rat operator()(const Rat& m, const Rat& n) const;
  RatPoly at_n(const Rat& n) const;  // polynomial in m
  RatPoly at_m(const Rat& m) const;  // polynomial in n
  // F(m_of(u), n_of(u)) as a polynomial in u
  RatPoly substitute(const RatPoly& m_of, const RatPoly& n_of) const;

  BiPoly swapped() const;  // exchange m and n
  BiPoly scaled(const Rat& c) const;
  bool has_integer_coeffs() const;
  Int denominator_lcm() const;
  // Positive multiple with coprime integer coefficients.
  BiPoly primitive_integer() const;

  std::string to_string() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.by_m_ == b.by_m_; }

 private:
  void trim();
  std::vector<RatPoly> by_m_;
};

// Exact quotient num/den, or nullopt when den does not divide num.
std::optional<BiPoly> exact_divide(const BiPoly& num, const BiPoly& den);

// a == c * b for some nonzero rational c.
bool same_up_to_constant(const BiPoly& a, const BiPoly& b);

}  // namespace parteq
