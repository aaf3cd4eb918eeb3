// parteq: command-line front end.
// Exit codes: 0 done, 1 failure, 2 only bounded/inconclusive items remain, 64 usage error.

#include "parteq/diopheq.hpp"
#include "parteq/error.hpp"
#include "parteq/partcount.hpp"
#include "parteq/pellconic.hpp"
#include "parteq/quasipoly.hpp"
#include "parteq/squarehunt.hpp"
#include "parteq/suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

using namespace parteq;
using json = nlohmann::ordered_json;

namespace {

constexpr int kUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string rat_str(const Rat& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

json poly_json(const RatPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(rat_str(c));
  return a;
}

std::string poly_csv(const RatPoly& p) {
  std::string s;
  for (const auto& c : p.coeffs()) s += (s.empty() ? "" : " ") + rat_str(c);
  return s;
}

std::string parts_text(const PartSet& a, char sep) {
  std::string s;
  for (auto v : a.parts()) s += (s.empty() ? "" : std::string(1, sep)) + std::to_string(v);
  return s;
}

PartSet parse_set(const std::string& text) {
  try {
    return PartSet::parse(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

// "6,9,0" -> 6x^2 + 9x + 0, highest degree first
RatPoly parse_poly(const std::string& text) {
  std::vector<Rat> desc;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    tok.erase(0, tok.find_first_not_of(' '));
    tok.erase(tok.find_last_not_of(' ') + 1);
    Rat q;
    if (tok.empty() || q.set_str(tok, 10) != 0) throw UsageError("bad coefficient '" + tok + "' in '" + text + "'");
    q.canonicalize();
    desc.push_back(q);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return RatPoly(std::vector<Rat>(desc.rbegin(), desc.rend()));
}

void set_threads(unsigned threads) {
  if (threads) setenv("PARTEQ_THREADS", std::to_string(threads).c_str(), 1);
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---- count

int run_count(const std::string& set_text, std::uint64_t upto, bool as_json, bool as_csv) {
  PartSet set = parse_set(set_text);
  auto values = count_table(set, upto);
  if (as_json) {
    json a = json::array();
    for (const auto& v : values) a.push_back(v.get_str());
    print_json(a);
  } else {
    if (as_csv) std::cout << "n,value\n";
    const char* sep = as_csv ? "," : " ";
    for (std::uint64_t n = 0; n <= upto; ++n) std::cout << n << sep << values[n].get_str() << "\n";
  }
  return 0;
}

// ---- decompose

int run_decompose(const std::string& set_text, std::uint64_t modulus, bool text) {
  PartSet set = parse_set(set_text);
  std::uint64_t M = modulus ? modulus : set.lcm();
  // residues that are not polynomial at M (possible when L_A does not divide M) stay empty
  std::vector<std::optional<RatPoly>> pieces;
  if (M % set.lcm() == 0) {
    for (auto& p : decompose(set).refine(M).pieces) pieces.emplace_back(std::move(p));
  } else {
    for (std::uint64_t r = 0; r < M; ++r) pieces.push_back(try_piece(set, M, r));
  }
  if (text) {
    for (std::uint64_t r = 0; r < M; ++r)
      std::cout << "P(" << M << "n+" << r << ") = " << (pieces[r] ? pieces[r]->to_string() : "not a polynomial")
                << "\n";
    return 0;
  }
  json j;
  j["modulus"] = M;
  j["pieces"] = json::array();
  for (const auto& p : pieces) j["pieces"].push_back(p ? poly_json(*p) : json(nullptr));
  print_json(j);
  return 0;
}

// ---- pell, conic

int run_pell(const std::string& d_text, std::size_t take, bool as_json) {
  Int D;
  if (D.set_str(d_text, 10) != 0) throw UsageError("bad D '" + d_text + "'");
  auto sols = pell_take(D, take);
  if (as_json) {
    json a = json::array();
    for (const auto& s : sols) a.push_back({{"u", s.u.get_str()}, {"v", s.v.get_str()}});
    print_json(a);
  } else {
    for (const auto& s : sols) std::cout << s.u.get_str() << " " << s.v.get_str() << "\n";
  }
  return 0;
}

int run_conic(const std::string& p_text, const std::string& q_text, std::size_t take, const std::string& bound,
              bool as_json) {
  ConicProblem cp{parse_poly(p_text), parse_poly(q_text)};
  Int B;
  if (B.set_str(bound, 10) != 0 || B < 1) throw UsageError("bad bound '" + bound + "'");
  auto res = solve_conic(cp, take, B);
  if (as_json) {
    json j;
    j["equation"] = cp.p.to_string('m') + " = " + cp.q.to_string('n');
    j["D"] = res.D.get_str();
    j["N"] = res.N.get_str();
    j["base_complete"] = res.base_complete;
    j["solutions"] = json::array();
    for (const auto& s : res.solutions) j["solutions"].push_back({{"m", s.m.get_str()}, {"n", s.n.get_str()}});
    print_json(j);
  } else {
    for (const auto& s : res.solutions) std::cout << s.m.get_str() << " " << s.n.get_str() << "\n";
    if (!res.base_complete) std::cerr << "note: base search stopped at the bound (bounded)\n";
  }
  return 0;
}

// ---- solve

json certificate_json(const SolutionCertificate& c) {
  json j;
  j["equation"] = c.equation;
  j["kind"] = certificate_kind_name(c.kind);
  json payload;
  switch (c.kind) {
    case CertificateKind::point:
      payload = {{"x", c.x.get_str()}, {"y", c.y.get_str()}, {"value", c.value.get_str()}};
      break;
    case CertificateKind::poly_family:
      payload = {{"x_of", poly_json(c.x_of)},
                 {"y_of", poly_json(c.y_of)},
                 {"s_min", c.s_min.get_str()},
                 {"parameter", c.parameter}};
      break;
    case CertificateKind::pell_family: {
      json pts = json::array();
      for (const auto& [x, y] : c.pell_points) pts.push_back({x.get_str(), y.get_str()});
      payload = {{"conic", c.pell}, {"points", pts}};
      break;
    }
  }
  j["payload"] = payload;
  j["verified"] = c.verified;
  j["transcript"] = c.transcript;
  return j;
}

int run_solve(const std::string& a_text, const std::string& b_text, const SolveOptions& opt, bool as_json) {
  PartSet a = parse_set(a_text), b = parse_set(b_text);
  if ((opt.x_max == 0) != (opt.y_max == 0)) throw UsageError("--xmax and --ymax go together");
  auto rep = solve_equal_values(a, b, opt);
  std::string eq = "P_" + a.to_string() + "(x) = P_" + b.to_string() + "(y)";
  if (as_json) {
    json j;
    j["equation"] = eq;
    j["subproblems"] = rep.subproblems;
    j["certificates"] = json::array();
    for (const auto& c : rep.certificates) j["certificates"].push_back(certificate_json(c));
    j["inconclusive"] = rep.inconclusive;
    j["notes"] = rep.notes;
    print_json(j);
  } else {
    std::cout << eq << ": " << rep.subproblems << " subproblems\n";
    for (const auto& c : rep.certificates) {
      std::cout << certificate_kind_name(c.kind) << "  " << c.equation;
      if (c.kind == CertificateKind::point)
        std::cout << "  x=" << c.x.get_str() << " y=" << c.y.get_str() << " value=" << c.value.get_str();
      else if (c.kind == CertificateKind::poly_family)
        std::cout << "  x=" << c.x_of.to_string('s') << " y=" << c.y_of.to_string('s') << " (s >= " << c.s_min.get_str()
                  << ")";
      else
        std::cout << "  " << c.pell;
      std::cout << (c.verified ? "" : "  UNVERIFIED") << "\n";
    }
    for (const auto& s : rep.inconclusive) std::cout << "inconclusive  " << s << "\n";
    for (const auto& s : rep.notes) std::cout << "note  " << s << "\n";
  }
  for (const auto& c : rep.certificates)
    if (!c.verified) return 1;
  return rep.inconclusive.empty() ? 0 : 2;
}

// ---- hunt-squares

int run_hunt(std::uint64_t k, std::uint64_t max_part, bool linear, std::uint64_t bound, bool as_json, bool as_csv) {
  if (linear) {
    auto recs = census_square_times_linear(k, max_part, bound);
    if (as_csv) {
      std::cout << "parts,L,i,c,g-coefficients,alpha,beta,square-n\n";
      for (const auto& r : recs) {
        std::string sq;
        for (const auto& n : r.square_values) sq += (sq.empty() ? "" : " ") + n.get_str();
        std::cout << parts_text(r.set, ' ') << "," << r.modulus << "," << r.residue << "," << rat_str(r.shape.c) << ","
                  << poly_csv(r.shape.g) << "," << r.shape.alpha.get_str() << "," << r.shape.beta.get_str() << ","
                  << sq << "\n";
      }
      return 0;
    }
    json j;
    j["k"] = k;
    j["max_part"] = max_part;
    j["bound"] = bound;
    j["records"] = json::array();
    for (const auto& r : recs) {
      json sq = json::array();
      for (const auto& n : r.square_values) sq.push_back(n.get_str());
      j["records"].push_back({{"parts", r.set.parts()},
                              {"L", r.modulus},
                              {"i", r.residue},
                              {"c", rat_str(r.shape.c)},
                              {"g", poly_json(r.shape.g)},
                              {"alpha", r.shape.alpha.get_str()},
                              {"beta", r.shape.beta.get_str()},
                              {"square_n_bounded", sq}});
    }
    print_json(j);
    return 0;
  }

  auto recs = census_square_pieces(k, max_part);
  if (as_csv) {
    std::cout << "parts,L,i,root-coefficients\n";
    for (const auto& r : recs)
      std::cout << parts_text(r.set, ' ') << "," << r.modulus << "," << r.residue << "," << poly_csv(r.root) << "\n";
    return 0;
  }
  if (as_json) {
    json j;
    j["k"] = k;
    j["max_part"] = max_part;
    json counts;
    for (auto c : {SquareConvention::rational, SquareConvention::integral, SquareConvention::split}) {
      std::size_t n = 0;
      for (const auto& r : recs) n += counts_under(r, c);
      counts[convention_name(c)] = n;
    }
    j["counts"] = counts;
    j["records"] = json::array();
    for (const auto& r : recs)
      j["records"].push_back({{"parts", r.set.parts()},
                              {"L", r.modulus},
                              {"i", r.residue},
                              {"root", poly_json(r.root)},
                              {"integral", r.integral},
                              {"split", r.split}});
    print_json(j);
    return 0;
  }
  for (auto c : {SquareConvention::rational, SquareConvention::integral, SquareConvention::split}) {
    auto table = census_table(recs, c);
    std::size_t n = 0;
    for (const auto& [s, r] : table) n += r.size();
    std::cout << convention_name(c) << ": " << n << " pairs in " << table.size() << " sets\n";
  }
  for (const auto& [s, res] : census_table(recs, SquareConvention::split)) {
    std::cout << "  " << s.to_string() << "  L=" << s.lcm() << "  i=";
    for (std::size_t t = 0; t < res.size(); ++t) std::cout << (t ? "," : "") << res[t];
    std::cout << "\n";
  }
  return 0;
}

// ---- verify-paper, registry, sweep

int run_verify(const std::string& tag, bool quiet) {
  std::vector<const suite::Criterion*> chosen;
  try {
    chosen = suite::select(tag);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  std::vector<suite::CriterionResult> results;
  for (const auto* c : chosen) {
    auto r = suite::run(*c);
    std::string secs;
    for (std::size_t k = 0; k < c->sections.size(); ++k) secs += (k ? "," : "") + std::string("§") + std::to_string(c->sections[k]);
    std::printf("%-12s C%-2d %-12s %s\n", suite::outcome_name(r.outcome), c->id, secs.c_str(), r.summary.c_str());
    if (!quiet)
      for (const auto& d : r.details) std::printf("      %s\n", d.c_str());
    std::fflush(stdout);
    results.push_back(std::move(r));
  }
  return suite::exit_code(results);
}

int run_registry(const std::string& pattern, bool as_json) {
  auto rep = verify_family_registry(pattern);
  if (rep.checks.empty()) throw UsageError("no registry entry matches '" + pattern + "'");
  if (as_json) {
    json a = json::array();
    for (const auto& c : rep.checks)
      a.push_back({{"entry", c.entry},
                   {"params", c.params},
                   {"passed", c.passed},
                   {"symbolic", c.symbolic},
                   {"points", c.points},
                   {"erratum", c.erratum},
                   {"transcript", c.transcript}});
    print_json(a);
  } else {
    for (const auto& c : rep.checks) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.entry;
      if (!c.params.empty()) std::cout << " [" << c.params << "]";
      std::cout << " points=" << c.points << (c.symbolic ? " symbolic" : "") << "\n";
      if (!c.erratum.empty()) std::cout << "     erratum: " << c.erratum << "\n";
    }
  }
  return rep.all_passed() ? 0 : 1;
}

int run_sweep(bool extended, std::uint64_t max_part, std::size_t limit, bool as_json) {
  if (!extended) throw UsageError("the reducibility sweep is long-running; pass --extended to run it");
  auto cases = reducibility_sweep(max_part, limit);
  json a = json::array();
  for (const auto& rc : cases) {
    std::string fs;
    for (const auto& f : rc.factors.factors) fs += "(" + f.factor.to_string() + ")";
    if (as_json)
      a.push_back({{"subproblem", rc.sub.label()}, {"constant", rat_str(rc.factors.constant)}, {"factors", fs}});
    else
      std::cout << rc.sub.label() << "  " << to_string(rc.factors.constant) << " " << fs << "\n";
  }
  if (as_json) print_json(a);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Restricted partition functions: counts, quasi-polynomials and equal-value equations"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned threads = 0;
  app.add_option("--threads", threads, "worker threads (default: PARTEQ_THREADS or all cores)");

  std::string set_text, a_text, b_text, p_text, q_text, d_text, tag = "all", pattern = "*", bound_text = "1000000";
  std::uint64_t upto = 0, modulus = 0, k = 5, max_part = 15, bound = kDefaultSquareBound;
  std::size_t take = 3, limit = 0;
  bool as_json = false, as_csv = false, text = false, quiet = false, extended = false, linear = false;
  SolveOptions sopt;

  auto* count = app.add_subcommand("count", "P_A(0..N)");
  count->add_option("--set", set_text, "parts, e.g. 1,2,3")->required();
  count->add_option("--upto", upto, "largest n")->required();
  auto* cj = count->add_flag("--json", as_json, "JSON array of decimal strings");
  count->add_flag("--csv", as_csv, "CSV rows n,value")->excludes(cj);

  auto* dec = app.add_subcommand("decompose", "residue polynomials P_A(Mn+i)");
  dec->add_option("--set", set_text)->required();
  dec->add_option("--modulus", modulus, "M (default lcm of the parts); non-polynomial residues are null")->check(CLI::PositiveNumber);
  dec->add_flag("--text", text, "one line per residue instead of JSON");

  auto* pell = app.add_subcommand("pell", "solutions of u^2 - D v^2 = 1");
  pell->add_option("--d", d_text)->required();
  pell->add_option("--take", take)->check(CLI::PositiveNumber);
  pell->add_flag("--json", as_json);

  auto* conic = app.add_subcommand("conic", "nonnegative solutions of p(m) = q(n), quadratics");
  conic->add_option("--p", p_text, "coefficients, highest first, e.g. 6,9,0")->required();
  conic->add_option("--q", q_text)->required();
  conic->add_option("--take", take)->check(CLI::PositiveNumber);
  conic->add_option("--bound", bound_text, "base search bound");
  conic->add_flag("--json", as_json);

  auto* solve = app.add_subcommand("solve", "P_A(x) = P_B(y)");
  solve->add_option("--a", a_text)->required();
  solve->add_option("--b", b_text)->required();
  solve->add_option("--xmax", sopt.x_max, "brute-force bound on x");
  solve->add_option("--ymax", sopt.y_max, "brute-force bound on y");
  solve->add_flag("--families", sopt.families, "look for polynomial and Pell families");
  auto* curves = solve->add_flag("--curves", sopt.curves, "reduce subproblems to curves and search points");
  solve->add_option("--xbound", sopt.x_bound, "curve search bound on |X|")->needs(curves)->check(CLI::PositiveNumber);
  solve->add_flag("--json", as_json);

  auto* hunt = app.add_subcommand("hunt-squares", "residue pieces that are squares of polynomials");
  hunt->add_option("--k", k, "set size")->check(CLI::PositiveNumber);
  hunt->add_option("--max-part", max_part)->check(CLI::PositiveNumber);
  hunt->add_flag("--linear", linear, "square times linear pieces instead");
  hunt->add_option("--bound", bound, "n bound for the square-value search with --linear");
  auto* hj = hunt->add_flag("--json", as_json);
  hunt->add_flag("--csv", as_csv)->excludes(hj);

  auto* verify = app.add_subcommand("verify-paper", "run the acceptance checks");
  verify->add_option("selection", tag, "all, a section (3, §3, sec3) or a criterion (C7)");
  verify->add_flag("--quiet", quiet, "one line per check");

  auto* reg = app.add_subcommand("registry", "verify the registered solution families");
  reg->add_option("--pattern", pattern, "glob on entry keys");
  reg->add_flag("--json", as_json);

  auto* sweep = app.add_subcommand("sweep", "reducibility search over 5-element sets (slow)");
  sweep->add_flag("--extended", extended, "required: acknowledges the runtime");
  sweep->add_option("--max-part", max_part)->check(CLI::PositiveNumber);
  sweep->add_option("--limit", limit, "stop after this many reducible cases (0: no limit)");
  sweep->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  set_threads(threads);
  if (sweep->parsed() && limit == 0) limit = static_cast<std::size_t>(-1);
  try {
    if (count->parsed()) return run_count(set_text, upto, as_json, as_csv);
    if (dec->parsed()) return run_decompose(set_text, modulus, text);
    if (pell->parsed()) return run_pell(d_text, take, as_json);
    if (conic->parsed()) return run_conic(p_text, q_text, take, bound_text, as_json);
    if (solve->parsed()) return run_solve(a_text, b_text, sopt, as_json);
    if (hunt->parsed()) return run_hunt(k, max_part, linear, bound, as_json, as_csv);
    if (verify->parsed()) return run_verify(tag, quiet);
    if (reg->parsed()) return run_registry(pattern, as_json);
    if (sweep->parsed()) return run_sweep(extended, max_part, limit, as_json);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::InvalidPartSet:
      case ErrorCode::InvalidArgument:
      case ErrorCode::SquareD:
      case ErrorCode::NotHyperbolic:
      case ErrorCode::DegreeUnsupported:
        return kUsage;
      case ErrorCode::NoSolutionFound:
      case ErrorCode::BudgetExceeded:
        return 2;
      default:
        return 1;
    }
  }
  return kUsage;
}
