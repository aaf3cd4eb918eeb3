#include "parteq/ratpoly.hpp"

#include "parteq/error.hpp"

namespace parteq {

RatPoly::RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RatPoly RatPoly::constant(const Rat& c) { return RatPoly(std::vector<Rat>{c}); }

RatPoly RatPoly::monomial(const Rat& c, std::size_t degree) {
  std::vector<Rat> v(degree + 1);
  v[degree] = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::linear(const Rat& slope, const Rat& offset) {
  return RatPoly(std::vector<Rat>{offset, slope});
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat RatPoly::operator()(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return RatPoly(std::move(v));
}

RatPoly RatPoly::compose_linear(const Rat& a, const Rat& b) const {
  return compose(linear(a, b));
}

RatPoly RatPoly::compose(const RatPoly& inner) const {
  RatPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += constant(*it);
  }
  return acc;
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& d) const {
  if (d.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  std::vector<Rat> rem = coeffs_;
  if (degree() < d.degree()) return {RatPoly(), *this};
  std::vector<Rat> quot(coeffs_.size() - d.coeffs_.size() + 1);
  const Rat lead = d.leading();
  for (std::size_t i = quot.size(); i-- > 0;) {
    Rat c = rem[i + d.coeffs_.size() - 1] / lead;
    quot[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < d.coeffs_.size(); ++j) rem[i + j] -= c * d.coeffs_[j];
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  return *this * Rat(1 / leading());
}

Rat RatPoly::content() const {
  if (is_zero()) return 1;
  Int num = 0, den = 1;
  for (const auto& c : coeffs_) {
    num = parteq::gcd(num, Int(c.get_num()));
    den = parteq::lcm(den, Int(c.get_den()));
  }
  Rat out(num, den);
  out.canonicalize();
  return leading() < 0 ? Rat(-out) : out;
}

bool RatPoly::has_integer_coeffs() const {
  for (const auto& c : coeffs_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

Int RatPoly::denominator_lcm() const {
  Int den = 1;
  for (const auto& c : coeffs_) den = parteq::lcm(den, Int(c.get_den()));
  return den;
}

std::string RatPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rat& c = coeffs_[k];
    if (c == 0) continue;
    Rat mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? "-" : "+";
    }
    bool unit = mag == 1 && k > 0;
    if (!unit) {
      std::string m = mag.get_str();
      out += (mag.get_den() != 1 && k > 0) ? "(" + m + ")" : m;
    }
    if (k > 0) {
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rat> v(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(v);
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rat& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

RatPoly operator-(RatPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

RatPoly pow(const RatPoly& p, unsigned e) {
  RatPoly acc = RatPoly::constant(1);
  RatPoly base = p;
  while (e) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RatPoly exact_div(const RatPoly& p, const RatPoly& d) {
  auto [q, r] = p.divmod(d);
  if (!r.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division is not exact");
  return q;
}

bool divides(const RatPoly& d, const RatPoly& p) { return p.divmod(d).second.is_zero(); }

}  // namespace parteq
