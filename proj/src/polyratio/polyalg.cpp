#include "parteq/polyalg.hpp"

#include "parteq/error.hpp"

#include <algorithm>
#include <set>

namespace parteq {

RatPoly interpolate(const std::vector<std::pair<Rat, Rat>>& points, int d) {
  if (d < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  auto n = static_cast<std::size_t>(d) + 1;
  if (points.size() < n) {
    throw Error(ErrorCode::InvalidArgument, "need at least " + std::to_string(n) + " points");
  }
  {
    std::vector<Rat> xs;
    for (const auto& p : points) xs.push_back(p.first);
    std::sort(xs.begin(), xs.end());
    if (std::adjacent_find(xs.begin(), xs.end()) != xs.end()) {
      throw Error(ErrorCode::DuplicateAbscissa, "repeated abscissa");
    }
  }
  // Newton divided differences on the first d+1 points.
  std::vector<Rat> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
    }
  }
  RatPoly p = RatPoly::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    p *= RatPoly::linear(1, -points[i].first);
    p += RatPoly::constant(dd[i]);
  }
  for (std::size_t i = n; i < points.size(); ++i) {
    if (p(points[i].first) != points[i].second) {
      throw Error(ErrorCode::InconsistentPoints,
                  "point " + std::to_string(i) + " disagrees with the degree-" + std::to_string(d) +
                      " interpolant");
    }
  }
  return p;
}

RatPoly interpolate_consecutive(const Int& x0, const std::vector<Int>& values, int d) {
  if (d < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  auto n = static_cast<std::size_t>(d) + 1;
  if (values.size() < n) {
    throw Error(ErrorCode::InvalidArgument, "need at least " + std::to_string(n) + " points");
  }
  // Differences of order > d over all values must vanish.
  std::vector<Int> diff = values;
  std::vector<Int> lead;  // Delta^k v_0
  for (std::size_t k = 0; k < diff.size(); ++k) {
    lead.push_back(diff[0]);
    if (k > static_cast<std::size_t>(d) && diff[0] != 0) {
      throw Error(ErrorCode::InconsistentPoints, "values are not a degree-" + std::to_string(d) + " polynomial");
    }
    for (std::size_t i = 0; i + 1 < diff.size() - k; ++i) diff[i] = diff[i + 1] - diff[i];
  }
  for (std::size_t k = n; k < lead.size(); ++k) {
    if (lead[k] != 0) {
      throw Error(ErrorCode::InconsistentPoints, "values are not a degree-" + std::to_string(d) + " polynomial");
    }
  }
  // sum_k lead_k * binom(t, k), t = x - x0
  RatPoly acc;
  RatPoly basis = RatPoly::constant(1);
  for (std::size_t k = 0; k < n; ++k) {
    acc += basis * Rat(lead[k]);
    basis *= RatPoly::linear(Rat(1, static_cast<unsigned long>(k + 1)),
                             Rat(-static_cast<long>(k), static_cast<unsigned long>(k + 1)));
  }
  return acc.compose_linear(1, Rat(-x0));
}

SquarefreeDecomposition squarefree_decompose(const RatPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree decomposition of zero");
  SquarefreeDecomposition out{f.leading(), {}};
  if (f.degree() == 0) return out;
  RatPoly g = f.monic();
  RatPoly a = gcd(g, g.derivative());
  RatPoly b = exact_div(g, a);
  RatPoly c = exact_div(g.derivative(), a);
  RatPoly d = c - b.derivative();
  for (unsigned i = 1; b.degree() > 0; ++i) {
    RatPoly ai = gcd(b, d);
    RatPoly bn = exact_div(b, ai);
    RatPoly cn = exact_div(d, ai);
    if (ai.degree() > 0) out.factors.emplace_back(ai, i);
    b = bn;
    d = cn - b.derivative();
  }
  return out;
}

std::optional<RatPoly> perfect_square_root(const RatPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "square root of zero");
  auto sq = squarefree_decompose(f);
  if (sq.content < 0) return std::nullopt;
  auto lc_root = exact_sqrt(sq.content);
  if (!lc_root) return std::nullopt;
  RatPoly g = RatPoly::constant(*lc_root);
  for (const auto& [factor, mult] : sq.factors) {
    if (mult % 2 != 0) return std::nullopt;
    g *= pow(factor, mult / 2);
  }
  return g;
}

namespace {

bool elem_zero(const Rat& x) { return x == 0; }
bool elem_zero(const RatPoly& x) { return x.is_zero(); }
Rat elem_div(const Rat& a, const Rat& b) { return a / b; }
RatPoly elem_div(const RatPoly& a, const RatPoly& b) { return exact_div(a, b); }
template <class R> R elem_one();
template <> Rat elem_one<Rat>() { return 1; }
template <> RatPoly elem_one<RatPoly>() { return RatPoly::constant(1); }

// Fraction-free Gaussian elimination (Bareiss); every division is exact.
template <class R>
R bareiss_det(std::vector<std::vector<R>> a) {
  const std::size_t n = a.size();
  if (n == 0) return elem_one<R>();
  R prev = elem_one<R>();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (elem_zero(a[k][k])) {
      std::size_t r = k + 1;
      while (r < n && elem_zero(a[r][k])) ++r;
      if (r == n) return R();
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = elem_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      }
      a[i][k] = R();
    }
    prev = a[k][k];
  }
  R det = a[n - 1][n - 1];
  return negate ? R(R() - det) : det;
}

// Coefficient vectors low to high, both with nonzero top entry.
template <class R>
R sylvester_resultant(const std::vector<R>& f, const std::vector<R>& g) {
  const std::size_t d = f.size() - 1, e = g.size() - 1;
  const std::size_t n = d + e;
  if (n == 0) return elem_one<R>();
  std::vector<std::vector<R>> m(n, std::vector<R>(n));
  for (std::size_t i = 0; i < e; ++i) {
    for (std::size_t k = 0; k <= d; ++k) m[i][i + k] = f[d - k];
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k <= e; ++k) m[e + i][i + k] = g[e - k];
  }
  return bareiss_det(std::move(m));
}

template <class R>
std::vector<R> derivative_coeffs(const std::vector<R>& f) {
  std::vector<R> out;
  for (std::size_t k = 1; k < f.size(); ++k) out.push_back(f[k] * Rat(static_cast<unsigned long>(k)));
  return out;
}

template <class R>
R discriminant_generic(const std::vector<R>& f) {
  const std::size_t d = f.size() - 1;
  R res = sylvester_resultant(f, derivative_coeffs(f));
  R disc = elem_div(res, f.back());
  return (d * (d - 1) / 2) % 2 == 1 ? R(R() - disc) : disc;
}

template <class R>
R closed_form_generic(const std::vector<R>& f) {
  if (f.size() == 3) {
    const R &c = f[0], &b = f[1], &a = f[2];
    return b * b - a * c * Rat(4);
  }
  const R &d = f[0], &c = f[1], &b = f[2], &a = f[3];
  return b * b * c * c - a * c * c * c * Rat(4) - b * b * b * d * Rat(4) - a * a * d * d * Rat(27) +
         a * b * c * d * Rat(18);
}

std::vector<RatPoly> coeffs_in(const BiPoly& f, Var var) {
  return var == Var::m ? f.by_m() : f.swapped().by_m();
}

void check_disc_degree(int d) {
  if (d < 2 || d > 4) {
    throw Error(ErrorCode::DegreeUnsupported, "discriminant supports degree 2..4, got " + std::to_string(d));
  }
}

}  // namespace

Rat resultant(const RatPoly& f, const RatPoly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  return sylvester_resultant(f.coeffs(), g.coeffs());
}

RatPoly resultant_m(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  return sylvester_resultant(f.by_m(), g.by_m());
}

Rat discriminant(const RatPoly& f) {
  check_disc_degree(f.degree());
  return discriminant_generic(f.coeffs());
}

RatPoly discriminant(const BiPoly& f, Var var) {
  auto c = coeffs_in(f, var);
  check_disc_degree(static_cast<int>(c.size()) - 1);
  return discriminant_generic(c);
}

Rat discriminant_closed_form(const RatPoly& f) {
  if (f.degree() != 2 && f.degree() != 3) {
    throw Error(ErrorCode::DegreeUnsupported, "closed form covers degrees 2 and 3");
  }
  return closed_form_generic(f.coeffs());
}

RatPoly discriminant_closed_form(const BiPoly& f, Var var) {
  auto c = coeffs_in(f, var);
  if (c.size() != 3 && c.size() != 4) {
    throw Error(ErrorCode::DegreeUnsupported, "closed form covers degrees 2 and 3");
  }
  return closed_form_generic(c);
}

namespace {

int sign_of(const Rat& x) { return sgn(x); }

struct SturmChain {
  std::vector<RatPoly> seq;

  explicit SturmChain(const RatPoly& p) {
    seq.push_back(p);
    seq.push_back(p.derivative());
    while (!seq.back().is_zero()) {
      RatPoly r = seq[seq.size() - 2].divmod(seq.back()).second;
      if (r.is_zero()) break;
      seq.push_back(-r);
    }
    if (seq.back().is_zero()) seq.pop_back();
  }

  int variations(const Rat& x) const {
    int count = 0, last = 0;
    for (const auto& p : seq) {
      int s = sign_of(p(x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }
};

// Integer roots of a monic integer polynomial h inside [lo, hi].
void integer_roots(const RatPoly& h, const SturmChain& chain, const Int& lo, const Int& hi,
                   std::vector<Int>& out) {
  Rat half(1, 2);
  int count = chain.variations(Rat(lo) - half) - chain.variations(Rat(hi) + half);
  if (count == 0) return;
  if (lo == hi) {
    if (h(Rat(lo)) == 0) out.push_back(lo);
    return;
  }
  Int mid = floor_div(lo + hi, 2);
  integer_roots(h, chain, lo, mid, out);
  integer_roots(h, chain, Int(mid + 1), hi, out);
}

}  // namespace

std::vector<Rat> rational_roots(const RatPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  if (f.degree() == 0) return {};
  RatPoly s = exact_div(f, gcd(f, f.derivative())).primitive();
  const int d = s.degree();
  Int a = s.leading().get_num();
  // h(z) = a^(d-1) s(z/a) is monic with integer coefficients; roots of s are h-roots / a.
  std::vector<Rat> hc(static_cast<std::size_t>(d) + 1);
  Int apow = 1;
  for (int k = d - 1; k >= 0; --k) {
    hc[static_cast<std::size_t>(k)] = s.coeff(static_cast<std::size_t>(k)) * apow;
    apow *= a;
  }
  hc[static_cast<std::size_t>(d)] = 1;
  RatPoly h(hc);
  Int bound = 1;
  for (int k = 0; k < d; ++k) bound = std::max(bound, Int(abs(h.coeff(static_cast<std::size_t>(k)).get_num()) + 1));
  SturmChain chain(h);
  std::vector<Int> roots;
  integer_roots(h, chain, Int(-bound), bound, roots);
  std::vector<Rat> out;
  for (const auto& r : roots) {
    Rat q(r, a);
    q.canonicalize();
    out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Split a monic quartic without rational roots into two rational quadratics, if possible.
std::optional<std::pair<RatPoly, RatPoly>> split_quartic(const RatPoly& f) {
  const Rat a = f.coeff(3), b = f.coeff(2), c = f.coeff(1), d = f.coeff(0);
  // roots y = q1 + q2 over the three pairings of roots
  RatPoly resolvent({-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, Rat(1)});
  for (const Rat& y : rational_roots(resolvent)) {
    auto dq = exact_sqrt(Rat(y * y - 4 * d));
    auto dp = exact_sqrt(Rat(a * a - 4 * (b - y)));
    if (!dq || !dp) continue;
    Rat q1 = (y + *dq) / 2, q2 = (y - *dq) / 2;
    Rat p1 = (a + *dp) / 2, p2 = (a - *dp) / 2;
    for (int swap = 0; swap < 2; ++swap) {
      RatPoly g({q1, p1, Rat(1)}), h({q2, p2, Rat(1)});
      if (g * h == f) return std::make_pair(g, h);
      std::swap(p1, p2);
    }
  }
  return std::nullopt;
}

}  // namespace

UnivariateFactorization factor_small(const RatPoly& f) {
  auto sq = squarefree_decompose(f);
  UnivariateFactorization out{sq.content, {}, true};
  for (const auto& [part, mult] : sq.factors) {
    RatPoly rest = part;
    for (const Rat& r : rational_roots(part)) {
      RatPoly lin = RatPoly::linear(1, -r);
      out.factors.emplace_back(lin, mult);
      rest = exact_div(rest, lin);
    }
    if (rest.degree() <= 0) continue;
    if (rest.degree() == 4) {
      if (auto split = split_quartic(rest)) {
        out.factors.emplace_back(split->first, mult);
        out.factors.emplace_back(split->second, mult);
        continue;
      }
    }
    if (rest.degree() > 4) out.complete = false;
    out.factors.emplace_back(rest, mult);
  }
  return out;
}

std::vector<RatPoly> monic_divisors(const UnivariateFactorization& fac, int degree) {
  std::vector<RatPoly> out;
  std::vector<unsigned> use(fac.factors.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, int remaining, RatPoly acc) -> void {
    if (remaining == 0) {
      if (std::find(out.begin(), out.end(), acc) == out.end()) out.push_back(acc);
      return;
    }
    if (i == fac.factors.size()) return;
    const auto& [p, mult] = fac.factors[i];
    RatPoly cur = acc;
    for (unsigned e = 0; e <= mult && static_cast<int>(e) * p.degree() <= remaining; ++e) {
      self(self, i + 1, remaining - static_cast<int>(e) * p.degree(), cur);
      cur *= p;
    }
  };
  rec(rec, 0, degree, RatPoly::constant(1));
  return out;
}

}  // namespace parteq
