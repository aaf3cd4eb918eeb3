#include "parteq/partcount.hpp"

#include "parteq/error.hpp"

#include <numeric>

namespace parteq {

std::size_t limbs_for(const PartSet& set, std::size_t limit) {
  Int bound = 1;
  for (auto a : set.parts()) bound *= int_from_u64(limit / a + 1);
  std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  return std::max<std::size_t>(1, (bits + 63) / 64);
}

PartitionTable::PartitionTable(const PartSet& set, std::size_t limit, simd::Isa isa,
                               std::size_t budget_bytes)
    : set_(set), limit_(limit), limbs_(limbs_for(set, limit)) {
  if (limit_ + 1 > budget_bytes / 8 / limbs_) {
    throw Error(ErrorCode::BudgetExceeded,
                "table of " + std::to_string(limit_ + 1) + " entries x " + std::to_string(limbs_) +
                    " limbs exceeds the memory budget");
  }
  planes_.assign(limbs_ * len(), 0);
  planes_[0] = 1;
  for (auto a : set_.parts()) {
    if (a <= limit_) simd::coin_accumulate(isa, planes_.data(), limbs_, len(), a);
  }
}

std::size_t PartitionTable::top_limb(std::size_t n) const {
  std::size_t k = limbs_;
  while (k > 1 && limb(n, k - 1) == 0) --k;
  return k;
}

Int PartitionTable::value(std::size_t n) const {
  if (n > limit_) {
    throw Error(ErrorCode::InvalidArgument,
                "index " + std::to_string(n) + " beyond table limit " + std::to_string(limit_));
  }
  if (limbs_ == 1) return int_from_u64(planes_[n]);
  std::vector<std::uint64_t> buf(limbs_);
  for (std::size_t k = 0; k < limbs_; ++k) buf[k] = limb(n, k);
  Int z;
  mpz_import(z.get_mpz_t(), limbs_, -1, sizeof(std::uint64_t), 0, 0, buf.data());
  return z;
}

std::vector<Int> PartitionTable::values() const {
  std::vector<Int> out;
  out.reserve(len());
  for (std::size_t n = 0; n <= limit_; ++n) out.push_back(value(n));
  return out;
}

bool PartitionTable::is_zero(std::size_t n) const {
  for (std::size_t k = 0; k < limbs_; ++k) {
    if (limb(n, k) != 0) return false;
  }
  return true;
}

bool PartitionTable::equal_at(std::size_t n, const PartitionTable& other, std::size_t m) const {
  std::size_t ka = top_limb(n);
  if (ka != other.top_limb(m)) return false;
  for (std::size_t k = 0; k < ka; ++k) {
    if (limb(n, k) != other.limb(m, k)) return false;
  }
  return true;
}

std::size_t PartitionTable::hash_at(std::size_t n) const {
  std::size_t h = 0;
  std::size_t top = top_limb(n);
  for (std::size_t k = 0; k < top; ++k) {
    h ^= std::hash<std::uint64_t>{}(limb(n, k)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::vector<std::uint8_t> PartitionTable::square_candidates() const {
  std::vector<std::uint8_t> flags(len());
  simd::square_residue_filter(planes_.data(), len(), flags.data());
  return flags;
}

std::vector<Int> count_table(const PartSet& set, std::size_t N) {
  return PartitionTable(set, N).values();
}

Int sertoz_count(std::uint64_t a1, std::uint64_t a2, const Int& n) {
  if (std::gcd(a1, a2) != 1) {
    throw Error(ErrorCode::HypothesisViolated,
                "parts " + std::to_string(a1) + "," + std::to_string(a2) + " are not coprime");
  }
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative argument");
  Int a = int_from_u64(a1), b = int_from_u64(a2);
  if (a1 == 1 || a2 == 1) return floor_div(n, a * b) + 1;
  Int ai, bi;  // a*ai = 1 mod b, b*bi = 1 mod a
  mpz_invert(ai.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_invert(bi.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
  // n/(ab) - {bi n / a} - {ai n / b} + 1, all over ab
  Int num = n - mod_floor(Int(bi * n), a) * b - mod_floor(Int(ai * n), b) * a + a * b;
  return num / (a * b);
}

}  // namespace parteq
