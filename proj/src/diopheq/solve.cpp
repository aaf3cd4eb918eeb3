#include "parteq/diopheq.hpp"
#include "parteq/error.hpp"

#include <set>

namespace parteq {

namespace {

SolutionCertificate conic_certificate(const ResidueSubproblem& sub, const ConicResult& res) {
  SolutionCertificate c;
  c.equation = sub.label();
  c.kind = CertificateKind::pell_family;
  c.pell = "X^2 - " + to_string(res.D) + " Y^2 = " + to_string(res.N) + ", automorphism (" +
           to_string(res.automorphism.x) + ", " + to_string(res.automorphism.y) + ")";
  for (const auto& s : res.solutions) c.pell_points.push_back({sub.x_of(s.m), sub.y_of(s.n)});
  c.verified = reverify(c, sub.a, sub.b);
  for (const auto& [x, y] : c.pell_points)
    c.transcript.push_back("(" + to_string(x) + ", " + to_string(y) + ") checked by DP");
  return c;
}

}  // namespace

SolveReport solve_equal_values(const PartSet& a, const PartSet& b, const SolveOptions& options) {
  SolveReport rep;
  auto subs = enumerate_subproblems(a, b);
  rep.subproblems = subs.size();
  std::set<std::pair<Int, Int>> seen;

  if (options.x_max && options.y_max) {
    for (auto& c : brute_force_search(a, b, options.x_max, options.y_max)) {
      seen.insert({c.x, c.y});
      rep.certificates.push_back(std::move(c));
    }
    rep.notes.push_back("brute force over x <= " + std::to_string(options.x_max) + ", y <= " +
                        std::to_string(options.y_max));
  }

  for (const auto& sub : subs) {
    bool settled = false;
    const int dp = sub.p.degree(), dq = sub.q.degree();
    if (options.families && dp == 2) {
      auto fams = detect_family(sub);
      settled = !fams.empty();
      for (auto& f : fams) rep.certificates.push_back(std::move(f));
      if (!settled && dq == 2) {
        Rat s = Rat(lcm(sub.p.denominator_lcm(), sub.q.denominator_lcm()));
        try {
          auto res = solve_conic({sub.p * s, sub.q * s}, 5);
          auto c = conic_certificate(sub, res);
          if (!c.verified) throw Error(ErrorCode::VerificationFailed, sub.label());
          rep.certificates.push_back(std::move(c));
          settled = res.base_complete;
        } catch (const Error& e) {
          if (e.code() == ErrorCode::NoSolutionFound || e.code() == ErrorCode::NotHyperbolic) {
            rep.notes.push_back(sub.label() + ": " + e.what());
          } else {
            throw;
          }
        }
      }
    }
    if (options.curves && !settled && dp == 2 && (dq == 3 || dq == 4)) {
      auto model = reduce_to_curve(sub);
      auto pts = curve_points_to_solutions(model, sub, bounded_curve_points(model, options.x_bound));
      for (const auto& [x, y] : pts) {
        if (x < 1 || y < 1 || !seen.insert({x, y}).second) continue;
        SolutionCertificate c;
        c.equation = sub.label();
        c.kind = CertificateKind::point;
        c.x = x;
        c.y = y;
        c.value = sub.p.eval((x - sub.i) / sub.ma).get_num();
        c.verified = reverify(c, a, b);
        c.transcript.push_back("from " + model.to_string() + ", |X| <= " + std::to_string(options.x_bound) + " (bounded)");
        if (!c.verified) throw Error(ErrorCode::VerificationFailed, sub.label());
        rep.certificates.push_back(std::move(c));
      }
    }
    if (!settled) rep.inconclusive.push_back(sub.label());
  }
  return rep;
}

std::vector<ReducibleCase> reducibility_sweep(std::uint64_t max_part, std::size_t limit) {
  if (max_part < 5) throw Error(ErrorCode::InvalidArgument, "need max_part >= 5");
  std::vector<PartSet> sets;
  // subsets {1} + 4 of {2..max_part}
  std::vector<std::uint64_t> pick{2, 3, 4, 5};
  for (;;) {
    sets.push_back(PartSet{1, pick[0], pick[1], pick[2], pick[3]});
    int k = 3;
    while (k >= 0 && pick[k] == max_part - (3 - k)) --k;
    if (k < 0) break;
    ++pick[k];
    for (int t = k + 1; t < 4; ++t) pick[t] = pick[t - 1] + 1;
  }
  std::vector<ReducibleCase> out;
  for (std::size_t x = 0; x < sets.size(); ++x) {
    for (std::size_t y = x + 1; y < sets.size(); ++y) {
      for (auto& sub : enumerate_subproblems(sets[x], sets[y])) {
        auto fac = bifactor_search(sub.F);
        unsigned total = 0;
        for (const auto& f : fac.factors) total += f.multiplicity;
        if (total < 2) continue;
        out.push_back({std::move(sub), std::move(fac)});
        if (limit && out.size() >= limit) return out;
      }
    }
  }
  return out;
}

}  // namespace parteq
