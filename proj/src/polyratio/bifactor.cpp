#include "parteq/bifactor.hpp"

#include "parteq/error.hpp"
#include "parteq/polyalg.hpp"

#include <algorithm>
#include <map>

namespace parteq {

namespace {

constexpr std::size_t kMaxTuples = 200000;

struct SearchState {
  unsigned probes;
  bool exhausted = true;
};

RatPoly content_n(const BiPoly& f) {
  RatPoly g;
  for (const auto& c : f.by_m()) g = gcd(g, c);
  return g;
}

BiPoly divide_by_n_poly(const BiPoly& f, const RatPoly& q) {
  std::vector<RatPoly> v;
  for (const auto& c : f.by_m()) v.push_back(exact_div(c, q));
  return BiPoly(std::move(v));
}

// A monic-in-m factor of degree e, or an empty BiPoly.
BiPoly find_factor(const BiPoly& g, int e, SearchState& st) {
  const int dm = g.degree_m();
  std::vector<Rat> abscissas;
  std::vector<std::vector<RatPoly>> cands;
  for (unsigned k = 0; k < st.probes; ++k) {
    Rat n0(static_cast<long>(k));
    RatPoly slice = g.at_n(n0);
    if (slice.degree() != dm) continue;
    auto fac = factor_small(slice);
    if (!fac.complete) st.exhausted = false;
    abscissas.push_back(n0);
    cands.push_back(monic_divisors(fac, e));
  }
  const std::size_t np = abscissas.size();
  if (np < 2) {
    st.exhausted = false;
    return {};
  }
  for (std::size_t t = 0; t + 2 <= np; ++t) {
    const std::size_t fixed = t + 1;
    std::size_t tuples = 1;
    for (std::size_t k = 0; k < fixed; ++k) {
      if (cands[k].empty()) return {};
      tuples = std::min(kMaxTuples + 1, tuples * cands[k].size());
    }
    if (tuples > kMaxTuples) {
      st.exhausted = false;
      break;
    }
    std::vector<std::size_t> idx(fixed, 0);
    for (std::size_t count = 0; count < tuples; ++count) {
      std::vector<RatPoly> coeff_polys;
      for (int j = 0; j < e; ++j) {
        std::vector<std::pair<Rat, Rat>> pts;
        for (std::size_t k = 0; k < fixed; ++k) {
          pts.emplace_back(abscissas[k], cands[k][idx[k]].coeff(static_cast<std::size_t>(j)));
        }
        coeff_polys.push_back(interpolate(pts, static_cast<int>(t)));
      }
      coeff_polys.push_back(RatPoly::constant(1));
      BiPoly h(coeff_polys);
      bool consistent = true;
      for (std::size_t k = fixed; k < np && consistent; ++k) {
        RatPoly at = h.at_n(abscissas[k]);
        consistent = std::find(cands[k].begin(), cands[k].end(), at) != cands[k].end();
      }
      if (consistent && exact_divide(g, h)) return h;
      for (std::size_t k = 0; k < fixed; ++k) {
        if (++idx[k] < cands[k].size()) break;
        idx[k] = 0;
      }
    }
  }
  return {};
}

void split_monic(const BiPoly& g, SearchState& st, std::vector<BiPoly>& out) {
  const int dm = g.degree_m();
  if (dm <= 1) {
    out.push_back(g);
    return;
  }
  for (int e = 1; e <= dm / 2; ++e) {
    BiPoly h = find_factor(g, e, st);
    if (!h.is_zero()) {
      split_monic(h, st, out);
      split_monic(*exact_divide(g, h), st, out);
      return;
    }
  }
  out.push_back(g);
}

void add_univariate_n(const RatPoly& q, BiFactorization& out) {
  auto fac = factor_small(q);
  out.constant *= fac.lead;
  if (!fac.complete) out.search_exhausted = false;
  for (const auto& [p, mult] : fac.factors) out.factors.push_back({BiPoly::in_n(p), mult});
}

void add_univariate_m(const RatPoly& p, BiFactorization& out) {
  auto fac = factor_small(p);
  out.constant *= fac.lead;
  if (!fac.complete) out.search_exhausted = false;
  for (const auto& [q, mult] : fac.factors) out.factors.push_back({BiPoly::in_m(q), mult});
}

}  // namespace

BiFactorization bifactor_search(const BiPoly& f, unsigned probes) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factoring the zero polynomial");
  if (probes < 2) throw Error(ErrorCode::InvalidArgument, "need at least two probes");
  BiFactorization out{Rat(1), {}, true};
  if (f.degree_m() == 0) {
    add_univariate_n(f.coeff_m(0), out);
    return out;
  }
  if (f.degree_n() == 0) {
    add_univariate_m(f.at_n(0), out);
    return out;
  }

  BiPoly g = f;
  RatPoly cn = content_n(g);
  if (cn.degree() > 0) {
    add_univariate_n(cn, out);
    g = divide_by_n_poly(g, cn);
  }
  RatPoly cm = content_n(g.swapped());
  if (cm.degree() > 0) {
    add_univariate_m(cm, out);
    g = divide_by_n_poly(g.swapped(), cm).swapped();
  }

  SearchState st{probes};
  std::vector<BiPoly> pieces;
  const RatPoly& lead_m = g.by_m().back();
  const RatPoly& lead_n = g.swapped().by_m().back();
  if (g.degree_m() == 0 || g.degree_n() == 0) {
    pieces.push_back(g);
  } else if (lead_m.degree() == 0) {
    out.constant *= lead_m.leading();
    split_monic(g.scaled(1 / lead_m.leading()), st, pieces);
  } else if (lead_n.degree() == 0) {
    out.constant *= lead_n.leading();
    std::vector<BiPoly> swapped;
    split_monic(g.swapped().scaled(1 / lead_n.leading()), st, swapped);
    for (auto& p : swapped) pieces.push_back(p.swapped());
  } else {
    st.exhausted = false;
    pieces.push_back(g);
  }
  for (auto& p : pieces) {
    auto it = std::find_if(out.factors.begin(), out.factors.end(),
                           [&](const BiFactor& bf) { return bf.factor == p; });
    if (it != out.factors.end()) {
      ++it->multiplicity;
    } else {
      out.factors.push_back({p, 1});
    }
  }
  std::stable_sort(out.factors.begin(), out.factors.end(), [](const BiFactor& a, const BiFactor& b) {
    if (a.factor.total_degree() != b.factor.total_degree()) {
      return a.factor.total_degree() < b.factor.total_degree();
    }
    return a.factor.to_string() < b.factor.to_string();
  });
  out.search_exhausted = out.search_exhausted && st.exhausted;
  return out;
}

BiPoly expand(const BiFactorization& fac) {
  BiPoly acc = BiPoly::constant(fac.constant);
  for (const auto& f : fac.factors) {
    for (unsigned i = 0; i < f.multiplicity; ++i) acc = acc * f.factor;
  }
  return acc;
}

bool no_solutions_mod_p(const BiPoly& f, unsigned p) {
  if (p < 2 || p > 97) throw Error(ErrorCode::InvalidArgument, "p must be a prime <= 97");
  for (unsigned d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  }
  if (!f.has_integer_coeffs()) {
    throw Error(ErrorCode::NonIntegerCoefficients, "clear denominators before reducing mod p");
  }
  std::vector<std::vector<long>> c(f.by_m().size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (const auto& q : f.by_m()[i].coeffs()) {
      Int r = mod_floor(Int(q.get_num()), Int(static_cast<unsigned long>(p)));
      c[i].push_back(r.get_si());
    }
  }
  const long P = p;
  for (long m = 0; m < P; ++m) {
    for (long n = 0; n < P; ++n) {
      long acc = 0;
      for (std::size_t i = c.size(); i-- > 0;) {
        long inner = 0;
        for (std::size_t j = c[i].size(); j-- > 0;) inner = (inner * n + c[i][j]) % P;
        acc = (acc * m + inner) % P;
      }
      if (acc == 0) return false;
    }
  }
  return true;
}

}  // namespace parteq
