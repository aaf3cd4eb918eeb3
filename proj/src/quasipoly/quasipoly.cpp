#include "parteq/quasipoly.hpp"

#include "parteq/error.hpp"
#include "parteq/polyalg.hpp"

#include <map>
#include <numeric>

namespace parteq {

Int QuasiPoly::evaluate(const Int& x) const {
  if (x < 0) throw Error(ErrorCode::InvalidArgument, "negative argument");
  Int L = int_from_u64(modulus);
  Int r = mod_floor(x, L);
  Rat v = pieces[r.get_ui()](Rat(Int((x - r) / L)));
  return v.get_num();
}

QuasiPoly QuasiPoly::refine(std::uint64_t new_modulus) const {
  if (new_modulus % modulus != 0) {
    throw Error(ErrorCode::InvalidArgument, "refined modulus must be a multiple of the current one");
  }
  QuasiPoly out{set, new_modulus, {}, {}};
  const std::uint64_t q = new_modulus / modulus;
  for (std::uint64_t r = 0; r < new_modulus; ++r) {
    const RatPoly& base = pieces[r % modulus];
    out.pieces.push_back(base.compose_linear(Rat(int_from_u64(q)), Rat(int_from_u64(r / modulus))));
    out.empty_residue.push_back(empty_residue[r % modulus]);
  }
  return out;
}

Rat leading_coefficient_law(const PartSet& set) {
  const std::size_t k = set.size();
  Int num = 1, den = 1;
  for (std::size_t i = 0; i + 1 < k; ++i) num *= int_from_u64(set.lcm());
  for (std::size_t i = 2; i < k; ++i) den *= static_cast<unsigned long>(i);
  for (auto a : set.parts()) den *= int_from_u64(a);
  Rat q(num, den);
  q.canonicalize();
  return q;
}

PieceSource::PieceSource(PartSet set) : set_(std::move(set)) {}

void PieceSource::ensure(std::uint64_t limit) {
  if (table_ && table_->limit() >= limit) return;
  std::uint64_t target = limit;
  if (table_) target = std::max<std::uint64_t>(limit, table_->limit() + table_->limit() / 2);
  table_ = std::make_unique<PartitionTable>(set_, target);
}

std::vector<Int> PieceSource::samples(std::uint64_t M, std::uint64_t r, std::size_t count,
                                      std::uint64_t& n0) {
  const std::uint64_t top = set_.max_part();
  n0 = r >= top ? 0 : (top - r + M - 1) / M;
  std::lock_guard<std::mutex> lock(mu_);
  ensure(M * (n0 + count) + r);
  std::vector<Int> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(table_->value(M * (n0 + k) + r));
  return out;
}

RatPoly PieceSource::piece(std::uint64_t r) {
  const std::uint64_t L = modulus();
  if (r >= L) throw Error(ErrorCode::InvalidArgument, "residue out of range");
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(r);
    if (it != cache_.end()) return it->second;
  }
  const std::size_t k = set_.size();
  std::uint64_t n0 = 0;
  auto vals = samples(L, r, 4 * k, n0);
  RatPoly p;
  // Divisibility by gcd(A) is fixed by the residue, so a residue is empty or never empty.
  const bool empty = r % set_.gcd() != 0;
  for (const auto& v : vals) {
    if (empty && v != 0) throw Error(ErrorCode::NotPolynomial, "nonzero value on an unreachable residue");
  }
  if (!empty) {
    try {
      p = interpolate_consecutive(int_from_u64(n0), vals, static_cast<int>(k) - 1);
    } catch (const Error& e) {
      throw Error(ErrorCode::NotPolynomial, std::string("L_A-piece failed verification: ") + e.what());
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  cache_.emplace(r, p);
  return p;
}

Int PieceSource::table_value(std::uint64_t x) {
  std::lock_guard<std::mutex> lock(mu_);
  ensure(x);
  return table_->value(x);
}

std::uint64_t PieceSource::table_limit() {
  std::lock_guard<std::mutex> lock(mu_);
  return table_ ? table_->limit() : 0;
}

Int PieceSource::value(const Int& x) {
  if (x < 0) throw Error(ErrorCode::InvalidArgument, "negative argument");
  if (x <= kTableCap) return table_value(x.get_ui());
  Int L = int_from_u64(modulus());
  Int r = mod_floor(x, L);
  Rat v = piece(r.get_ui())(Rat(Int((x - r) / L)));
  return v.get_num();
}

std::shared_ptr<PieceSource> piece_source(const PartSet& set) {
  static std::mutex mu;
  static std::map<PartSet, std::shared_ptr<PieceSource>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(set);
  if (it != cache.end()) return it->second;
  if (cache.size() >= 256) cache.clear();
  auto src = std::make_shared<PieceSource>(set);
  cache.emplace(set, src);
  return src;
}

QuasiPoly decompose(const PartSet& set) {
  auto src = piece_source(set);
  QuasiPoly out{set, set.lcm(), {}, {}};
  for (std::uint64_t r = 0; r < set.lcm(); ++r) {
    out.pieces.push_back(src->piece(r));
    out.empty_residue.push_back(out.pieces.back().is_zero());
  }
  return out;
}

std::optional<RatPoly> try_piece(const PartSet& set, std::uint64_t M, std::uint64_t r) {
  if (M == 0 || r >= M) throw Error(ErrorCode::InvalidArgument, "need 0 <= r < M");
  auto src = piece_source(set);
  const std::uint64_t L = set.lcm();
  if (M % L == 0) {
    RatPoly base = src->piece(r % L);
    return base.compose_linear(Rat(int_from_u64(M / L)), Rat(int_from_u64(r / L)));
  }
  const std::size_t k = set.size();
  std::uint64_t n0 = 0;
  auto vals = src->samples(M, r, 4 * k, n0);
  RatPoly g;
  try {
    g = interpolate_consecutive(int_from_u64(n0), vals, static_cast<int>(k) - 1);
  } catch (const Error&) {
    return std::nullopt;
  }
  // n = (T/M) q + c covers every n; each class lands on one L_A-piece.
  const std::uint64_t T = std::lcm(M, L);
  const std::uint64_t per_m = T / M, per_l = T / L;
  for (std::uint64_t c = 0; c < per_m; ++c) {
    const std::uint64_t shift = M * c + r;
    RatPoly lhs = g.compose_linear(Rat(int_from_u64(per_m)), Rat(int_from_u64(c)));
    RatPoly rhs = src->piece(shift % L).compose_linear(Rat(int_from_u64(per_l)), Rat(int_from_u64(shift / L)));
    if (lhs != rhs) return std::nullopt;
  }
  return g;
}

QuasiPoly closed_form_12a(std::uint64_t a, FormulaVariant variant) {
  if (a < 3) throw Error(ErrorCode::InvalidArgument, "closed form needs a >= 3");
  const bool printed = variant == FormulaVariant::printed;
  QuasiPoly out{PartSet{1, 2, a}, 2 * a, {}, {}};
  const long A = static_cast<long>(a);
  for (long i = 0; i < 2 * A; ++i) {
    long quad = 0, lin = 0, cst = 0;
    if (a % 2 == 0) {
      const long c = A / 2;
      quad = 2 * c;
      lin = c + 2 * (i / 2) + 2;
      cst = i < 2 * c ? (i + 2) / 2 : 2 * (i / 2) + 2 - (printed ? A : c);
    } else {
      const long c = (A - 1) / 2;
      quad = 2 * c + 1;
      lin = c + i + 2;
      cst = i <= 2 * c ? (i + 2) / 2 : i + 1 - (printed ? A : c);
    }
    out.pieces.push_back(RatPoly{cst, lin, quad});
    out.empty_residue.push_back(false);
  }
  return out;
}

}  // namespace parteq
