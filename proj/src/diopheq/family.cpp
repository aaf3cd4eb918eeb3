#include "parteq/diopheq.hpp"
#include "parteq/error.hpp"
#include "parteq/polyalg.hpp"
#include "parteq/quasipoly.hpp"

#include <algorithm>

namespace parteq {

namespace {

// Everything at s >= bound has the sign of the leading coefficient (Cauchy).
Int cauchy_bound(const RatPoly& f) {
  Rat best = 0;
  for (int k = 0; k < f.degree(); ++k) {
    Rat r = abs(f.coeff(k) / f.leading());
    if (r > best) best = r;
  }
  Rat b = best + 1;
  return floor_div(b.get_num(), b.get_den()) + 1;
}

// f1(e s + k) == f2(s) for some e = +-1 and integer k, applied to both coordinates.
bool same_points(const RatPoly& x1, const RatPoly& y1, const RatPoly& x2, const RatPoly& y2) {
  if (y1.degree() != y2.degree() || x1.degree() != x2.degree() || y1.degree() < 1) return false;
  const int d = y1.degree();
  for (int e : {1, -1}) {
    Rat sgn = (d - 1) % 2 == 0 ? Rat(1) : Rat(e);
    Rat k = (sgn * y2.coeff(d - 1) - y1.coeff(d - 1)) / (Rat(d) * y1.leading());
    if (!is_integer(k)) continue;
    if (y1.compose_linear(e, k) == y2 && x1.compose_linear(e, k) == x2) return true;
  }
  return false;
}

struct Parametrization {
  RatPoly m_of, n_of;  // in t
  std::string how;     // what t is
};

}  // namespace

std::vector<SolutionCertificate> detect_family(const ResidueSubproblem& sub) {
  std::vector<SolutionCertificate> out;
  if (sub.p.degree() != 2 || sub.q.degree() < 1) return out;
  const Rat p2 = sub.p.coeff(2), p1 = sub.p.coeff(1), p0 = sub.p.coeff(0);
  // Disc_m(p(m) - q(n))
  RatPoly G = Rat(4 * p2) * sub.q + RatPoly::constant(p1 * p1 - 4 * p2 * p0);
  std::vector<std::string> head{"Disc_m F = " + G.to_string()};

  std::vector<Parametrization> params;
  const RatPoly T{0, 1};
  if (auto sigma = perfect_square_root(G)) {
    for (int sg : {1, -1})
      params.push_back({(RatPoly::constant(-p1) + Rat(sg) * *sigma) * Rat(1 / (2 * p2)), T, "t = n"});
  } else {
    auto sq = squarefree_decompose(G);
    RatPoly h = RatPoly::constant(1);
    for (const auto& [f, e] : sq.factors)
      if (e % 2) h *= f;
    if (h.degree() != 1) {
      head.push_back("squarefree part of degree " + std::to_string(h.degree()) + ", no substitution");
      return out;
    }
    // G = c h S^2 with h = n + mu/lambda; need c (lambda n + mu)/lambda to be a square
    Rat mu_l = h.coeff(0);
    Int lambda = mu_l.get_den(), mu = mu_l.get_num();
    Rat c1 = sq.content / Rat(lambda);
    Int r = squarefree_part(Int(c1.get_num() * c1.get_den()));
    RatPoly n_of = RatPoly{Rat(-mu), 0, Rat(r)} * Rat(1, lambda);
    std::string how = "n = " + n_of.to_string('u') + ", t = u";
    head.push_back("substitution " + how);
    auto root = perfect_square_root(G.compose(n_of));
    if (!root) return out;
    for (int sg : {1, -1})
      params.push_back({(RatPoly::constant(-p1) + Rat(sg) * *root) * Rat(1 / (2 * p2)), n_of, how});
  }

  auto ps_a = piece_source(sub.a), ps_b = piece_source(sub.b);
  for (const auto& par : params) {
    Int K0 = 2 * lcm(par.m_of.denominator_lcm(), par.n_of.denominator_lcm());
    std::vector<bool> adm;
    for (Int c = 0; c < K0; ++c) adm.push_back(is_integer(par.m_of.eval(c)) && is_integer(par.n_of.eval(c)));
    // coarsest modulus the integral classes are periodic in
    std::size_t K = adm.size();
    for (std::size_t d = 1; d < adm.size(); ++d) {
      if (adm.size() % d) continue;
      bool periodic = true;
      for (std::size_t c = d; c < adm.size() && periodic; ++c) periodic = adm[c] == adm[c - d];
      if (periodic) {
        K = d;
        break;
      }
    }
    for (std::size_t c = 0; c < K; ++c) {
      if (!adm[c]) continue;
      RatPoly mc = par.m_of.compose_linear(Rat(K), Rat(c));
      RatPoly nc = par.n_of.compose_linear(Rat(K), Rat(c));
      if (mc.degree() < 1 || nc.degree() < 1 || mc.leading() < 0 || nc.leading() < 0) continue;
      if (!sub.F.substitute(mc, nc).is_zero()) continue;
      RatPoly xs = Rat(sub.ma) * mc + RatPoly::constant(Rat(sub.i));
      RatPoly ys = Rat(sub.mb) * nc + RatPoly::constant(Rat(sub.j));

      Int hi = std::max(cauchy_bound(mc), cauchy_bound(nc));
      Int s0 = hi;
      if (hi <= 1'000'000) {
        while (s0 > -hi - 1 && mc.eval(Int(s0 - 1)) >= 0 && nc.eval(Int(s0 - 1)) >= 0) --s0;
      }

      bool dup = false;
      for (const auto& prev : out) dup = dup || same_points(prev.x_of, prev.y_of, xs, ys);
      if (dup) continue;

      SolutionCertificate cert;
      cert.equation = sub.label();
      cert.kind = CertificateKind::poly_family;
      cert.x_of = xs;
      cert.y_of = ys;
      cert.s_min = s0;
      cert.parameter = par.how + " = " + std::to_string(K) + "s + " + std::to_string(c);
      cert.transcript = head;
      cert.transcript.push_back("m = " + mc.to_string('s') + ", n = " + nc.to_string('s') + ", F(m, n) = 0");
      bool ok = true;
      for (Int s = s0; s < s0 + 25 && ok; ++s) {
        Int x = xs.eval(s).get_num(), y = ys.eval(s).get_num();
        Int u = ps_a->value(x), v = ps_b->value(y);
        ok = u == v;
        cert.transcript.push_back("s = " + to_string(s) + ": P_A(" + to_string(x) + ") = " + to_string(u) +
                                  (ok ? " = " : " != ") + "P_B(" + to_string(y) + ")");
      }
      if (!ok) continue;
      cert.verified = true;
      out.push_back(std::move(cert));
    }
  }
  return out;
}

Rat discriminant_pipeline(const ResidueSubproblem& sub) {
  RatPoly G = discriminant(sub.F, Var::m);
  if (G.degree() < 2 || G.degree() > 4)
    throw Error(ErrorCode::DegreeUnsupported, "Disc_m F has degree " + std::to_string(G.degree()));
  return discriminant(G);
}

}  // namespace parteq
