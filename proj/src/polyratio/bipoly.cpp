#include "parteq/bipoly.hpp"

#include "parteq/error.hpp"

#include <algorithm>

namespace parteq {

BiPoly::BiPoly(std::vector<RatPoly> by_m) : by_m_(std::move(by_m)) { trim(); }

void BiPoly::trim() {
  while (!by_m_.empty() && by_m_.back().is_zero()) by_m_.pop_back();
}

BiPoly BiPoly::constant(const Rat& c) { return BiPoly({RatPoly::constant(c)}); }

BiPoly BiPoly::in_m(const RatPoly& p) {
  std::vector<RatPoly> v;
  for (const auto& c : p.coeffs()) v.push_back(RatPoly::constant(c));
  return BiPoly(std::move(v));
}

BiPoly BiPoly::in_n(const RatPoly& q) { return BiPoly({q}); }

int BiPoly::degree_n() const {
  int d = -1;
  for (const auto& c : by_m_) d = std::max(d, c.degree());
  return d;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (std::size_t k = 0; k < by_m_.size(); ++k) {
    if (!by_m_[k].is_zero()) d = std::max(d, static_cast<int>(k) + by_m_[k].degree());
  }
  return d;
}

Rat BiPoly::operator()(const Rat& m, const Rat& n) const { return at_n(n)(m); }

RatPoly BiPoly::at_n(const Rat& n) const {
  std::vector<Rat> v;
  v.reserve(by_m_.size());
  for (const auto& c : by_m_) v.push_back(c(n));
  return RatPoly(std::move(v));
}

RatPoly BiPoly::at_m(const Rat& m) const {
  RatPoly acc;
  for (auto it = by_m_.rbegin(); it != by_m_.rend(); ++it) {
    acc *= m;
    acc += *it;
  }
  return acc;
}

RatPoly BiPoly::substitute(const RatPoly& m_of, const RatPoly& n_of) const {
  RatPoly acc;
  for (auto it = by_m_.rbegin(); it != by_m_.rend(); ++it) {
    acc *= m_of;
    acc += it->compose(n_of);
  }
  return acc;
}

BiPoly BiPoly::swapped() const {
  int dn = degree_n();
  if (dn < 0) return {};
  std::vector<std::vector<Rat>> cols(static_cast<std::size_t>(dn) + 1,
                                     std::vector<Rat>(by_m_.size()));
  for (std::size_t i = 0; i < by_m_.size(); ++i) {
    for (std::size_t j = 0; j < by_m_[i].coeffs().size(); ++j) cols[j][i] = by_m_[i].coeffs()[j];
  }
  std::vector<RatPoly> out;
  for (auto& c : cols) out.emplace_back(std::move(c));
  return BiPoly(std::move(out));
}

BiPoly BiPoly::scaled(const Rat& c) const {
  std::vector<RatPoly> v = by_m_;
  for (auto& p : v) p *= c;
  return BiPoly(std::move(v));
}

bool BiPoly::has_integer_coeffs() const {
  return std::all_of(by_m_.begin(), by_m_.end(), [](const RatPoly& p) { return p.has_integer_coeffs(); });
}

Int BiPoly::denominator_lcm() const {
  Int d = 1;
  for (const auto& p : by_m_) d = lcm(d, p.denominator_lcm());
  return d;
}

BiPoly BiPoly::primitive_integer() const {
  if (is_zero()) return {};
  Int num = 0, den = 1;
  for (const auto& p : by_m_) {
    for (const auto& c : p.coeffs()) {
      num = gcd(num, Int(c.get_num()));
      den = lcm(den, Int(c.get_den()));
    }
  }
  return scaled(Rat(den, num));
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = by_m_.size(); i-- > 0;) {
    const auto& cs = by_m_[i].coeffs();
    for (std::size_t j = cs.size(); j-- > 0;) {
      const Rat& c = cs[j];
      if (c == 0) continue;
      Rat mag = abs(c);
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? "-" : "+";
      }
      bool has_var = i > 0 || j > 0;
      if (!(mag == 1 && has_var)) {
        std::string s = mag.get_str();
        out += (mag.get_den() != 1 && has_var) ? "(" + s + ")" : s;
      }
      if (i > 0) out += i > 1 ? "m^" + std::to_string(i) : "m";
      if (j > 0) out += j > 1 ? "n^" + std::to_string(j) : "n";
    }
  }
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.by_m_.size() > by_m_.size()) by_m_.resize(o.by_m_.size());
  for (std::size_t i = 0; i < o.by_m_.size(); ++i) by_m_[i] += o.by_m_[i];
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (o.by_m_.size() > by_m_.size()) by_m_.resize(o.by_m_.size());
  for (std::size_t i = 0; i < o.by_m_.size(); ++i) by_m_[i] -= o.by_m_[i];
  trim();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<RatPoly> v(a.by_m_.size() + b.by_m_.size() - 1);
  for (std::size_t i = 0; i < a.by_m_.size(); ++i) {
    for (std::size_t j = 0; j < b.by_m_.size(); ++j) v[i + j] += a.by_m_[i] * b.by_m_[j];
  }
  return BiPoly(std::move(v));
}

std::optional<BiPoly> exact_divide(const BiPoly& num, const BiPoly& den) {
  if (den.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  if (num.is_zero()) return BiPoly();
  int dd = den.degree_m();
  if (num.degree_m() < dd) return std::nullopt;
  std::vector<RatPoly> rem = num.by_m();
  std::vector<RatPoly> quot(rem.size() - static_cast<std::size_t>(dd));
  const RatPoly& lead = den.by_m().back();
  for (std::size_t i = quot.size(); i-- > 0;) {
    const RatPoly& top = rem[i + static_cast<std::size_t>(dd)];
    if (top.is_zero()) continue;
    auto [q, r] = top.divmod(lead);
    if (!r.is_zero()) return std::nullopt;
    quot[i] = q;
    for (std::size_t j = 0; j <= static_cast<std::size_t>(dd); ++j) rem[i + j] -= q * den.by_m()[j];
  }
  for (const auto& r : rem) {
    if (!r.is_zero()) return std::nullopt;
  }
  return BiPoly(std::move(quot));
}

bool same_up_to_constant(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  Rat ca = a.by_m().back().leading();
  Rat cb = b.by_m().back().leading();
  return a.scaled(cb) == b.scaled(ca);
}

}  // namespace parteq
