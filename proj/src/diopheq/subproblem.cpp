#include "parteq/diopheq.hpp"
#include "parteq/error.hpp"
#include "parteq/partcount.hpp"
#include "parteq/quasipoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace parteq {

namespace {

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d * d != n) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string set_label(const PartSet& s) {
  std::string t = s.to_string();
  return "P_" + t;
}

std::string equation_of(const PartSet& a, const PartSet& b) {
  return set_label(a) + "(x) = " + set_label(b) + "(y)";
}

// Fresh DP values for the listed arguments; arguments beyond the table cap go through the pieces.
class FreshValues {
 public:
  FreshValues(const PartSet& set, const std::vector<Int>& args) : set_(set) {
    std::uint64_t hi = 0;
    for (const auto& x : args)
      if (x >= 0 && x <= Int(PieceSource::kTableCap)) hi = std::max<std::uint64_t>(hi, x.get_ui());
    table_ = count_table(set, hi);
  }
  Int operator()(const Int& x) const {
    if (x < 0) return 0;
    if (x < Int(table_.size())) return table_[x.get_ui()];
    return piece_source(set_)->value(x);
  }
  bool from_table(const Int& x) const { return x < Int(table_.size()); }

 private:
  PartSet set_;
  std::vector<Int> table_;
};

}  // namespace

std::vector<PieceRef> coarse_pieces(const PartSet& set) {
  const std::uint64_t L = set.lcm();
  std::vector<bool> covered(L, false);
  std::vector<PieceRef> out;
  for (std::uint64_t M : divisors(L)) {
    for (std::uint64_t r = 0; r < M; ++r) {
      bool free = true;
      for (std::uint64_t x = r; x < L; x += M) free = free && !covered[x];
      if (!free) continue;
      auto piece = try_piece(set, M, r);
      if (!piece) continue;
      for (std::uint64_t x = r; x < L; x += M) covered[x] = true;
      out.push_back({M, r, std::move(*piece)});
    }
  }
  return out;
}

std::string ResidueSubproblem::label() const {
  return set_label(a) + "(" + std::to_string(ma) + "m+" + std::to_string(i) + ") = " + set_label(b) + "(" +
         std::to_string(mb) + "n+" + std::to_string(j) + ")";
}

ResidueSubproblem make_subproblem(const PartSet& a, std::uint64_t ma, std::uint64_t i, const PartSet& b,
                                  std::uint64_t mb, std::uint64_t j) {
  if (ma == 0 || mb == 0 || i >= ma || j >= mb)
    throw Error(ErrorCode::InvalidArgument, "residues must lie in [0, modulus)");
  ResidueSubproblem s;
  s.a = a;
  s.b = b;
  s.ma = ma;
  s.mb = mb;
  s.i = i;
  s.j = j;
  auto p = try_piece(a, ma, i);
  if (!p) throw Error(ErrorCode::NotPolynomial, set_label(a) + " at " + std::to_string(ma) + "m+" + std::to_string(i));
  auto q = try_piece(b, mb, j);
  if (!q) throw Error(ErrorCode::NotPolynomial, set_label(b) + " at " + std::to_string(mb) + "n+" + std::to_string(j));
  s.p = std::move(*p);
  s.q = std::move(*q);
  s.F = BiPoly::difference(s.p, s.q);
  return s;
}

std::vector<ResidueSubproblem> enumerate_subproblems(const PartSet& a, const PartSet& b) {
  auto pa = coarse_pieces(a);
  auto pb = a == b ? pa : coarse_pieces(b);
  std::vector<ResidueSubproblem> out;
  out.reserve(pa.size() * pb.size());
  for (const auto& x : pa) {
    for (const auto& y : pb) {
      ResidueSubproblem s;
      s.a = a;
      s.b = b;
      s.ma = x.modulus;
      s.i = x.residue;
      s.mb = y.modulus;
      s.j = y.residue;
      s.p = x.poly;
      s.q = y.poly;
      s.F = BiPoly::difference(s.p, s.q);
      out.push_back(std::move(s));
    }
  }
  return out;
}

const char* certificate_kind_name(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::point: return "point";
    case CertificateKind::poly_family: return "poly_family";
    case CertificateKind::pell_family: return "pell_family";
  }
  return "?";
}

bool reverify(const SolutionCertificate& cert, const PartSet& a, const PartSet& b) {
  std::vector<std::pair<Int, Int>> pts;
  switch (cert.kind) {
    case CertificateKind::point:
      pts.push_back({cert.x, cert.y});
      break;
    case CertificateKind::poly_family:
      for (Int s = cert.s_min; s < cert.s_min + 25; ++s) {
        Rat x = cert.x_of.eval(s), y = cert.y_of.eval(s);
        if (!is_integer(x) || !is_integer(y)) return false;
        pts.push_back({x.get_num(), y.get_num()});
      }
      break;
    case CertificateKind::pell_family:
      pts = cert.pell_points;
      if (pts.empty()) return false;
      break;
  }
  std::vector<Int> xs, ys;
  for (const auto& [x, y] : pts) {
    if (x < 0 || y < 0) return false;
    xs.push_back(x);
    ys.push_back(y);
  }
  FreshValues va(a, xs);
  // an empty B marks a one-sided certificate: P_A(x) = value
  if (b.size() == 0) return cert.kind == CertificateKind::point && va(cert.x) == cert.value;
  FreshValues vb(b, ys);
  for (const auto& [x, y] : pts) {
    Int v = va(x);
    if (v != vb(y)) return false;
    if (cert.kind == CertificateKind::point && v != cert.value) return false;
  }
  return true;
}

std::vector<SolutionCertificate> brute_force_search(const PartSet& a, const PartSet& b, std::uint64_t x_max,
                                                    std::uint64_t y_max) {
  PartitionTable ta(a, x_max), tb(b, y_max);
  // index the smaller table
  const bool index_b = y_max <= x_max;
  const PartitionTable& small = index_b ? tb : ta;
  const PartitionTable& big = index_b ? ta : tb;
  std::uint64_t small_max = index_b ? y_max : x_max, big_max = index_b ? x_max : y_max;
  std::unordered_multimap<std::size_t, std::uint64_t> index;
  index.reserve(small_max);
  for (std::uint64_t k = 1; k <= small_max; ++k) index.emplace(small.hash_at(k), k);

  std::vector<std::pair<std::uint64_t, std::uint64_t>> hits;
  for (std::uint64_t k = 1; k <= big_max; ++k) {
    auto [lo, hi] = index.equal_range(big.hash_at(k));
    for (auto it = lo; it != hi; ++it) {
      if (!big.equal_at(k, small, it->second)) continue;
      hits.push_back(index_b ? std::make_pair(k, it->second) : std::make_pair(it->second, k));
    }
  }

  std::vector<SolutionCertificate> out;
  out.reserve(hits.size());
  for (const auto& [x, y] : hits) {
    SolutionCertificate c;
    c.equation = equation_of(a, b);
    c.kind = CertificateKind::point;
    c.x = int_from_u64(x);
    c.y = int_from_u64(y);
    c.value = ta.value(x);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const SolutionCertificate& l, const SolutionCertificate& r) {
    if (l.value != r.value) return l.value < r.value;
    if (l.x != r.x) return l.x < r.x;
    return l.y < r.y;
  });

  // second opinion from separate tables
  std::vector<Int> xs, ys;
  for (const auto& c : out) {
    xs.push_back(c.x);
    ys.push_back(c.y);
  }
  FreshValues va(a, xs), vb(b, ys);
  for (auto& c : out) {
    Int u = va(c.x), v = vb(c.y);
    c.verified = u == c.value && v == c.value;
    c.transcript.push_back("P_A(" + to_string(c.x) + ") = " + to_string(u) + ", P_B(" + to_string(c.y) +
                           ") = " + to_string(v) + " (DP)");
    if (!c.verified)
      throw Error(ErrorCode::VerificationFailed, "hash join produced (" + to_string(c.x) + ", " + to_string(c.y) + ")");
  }
  return out;
}

std::vector<std::pair<Int, Int>> search_subproblem(const ResidueSubproblem& sub, std::uint64_t x_max,
                                                   std::uint64_t y_max) {
  // x, y >= 1 as in brute_force_search, so the union over subproblems matches it
  std::map<Rat, std::vector<Int>> by_value;
  for (Int m = 0; sub.x_of(m) <= x_max; ++m) {
    if (sub.x_of(m) < 1) continue;
    by_value[sub.p.eval(m)].push_back(m);
  }
  std::vector<std::pair<Int, Int>> out;
  for (Int n = 0; sub.y_of(n) <= y_max; ++n) {
    if (sub.y_of(n) < 1) continue;
    auto it = by_value.find(sub.q.eval(n));
    if (it == by_value.end()) continue;
    for (const auto& m : it->second) out.push_back({sub.x_of(m), sub.y_of(n)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace parteq
