#include "parteq/error.hpp"
#include "parteq/partcount.hpp"
#include "parteq/polyalg.hpp"
#include "parteq/quasipoly.hpp"
#include "parteq/squarehunt.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>

namespace parteq {

namespace {

std::vector<PartSet> subsets(std::uint64_t k, std::uint64_t max_part) {
  std::vector<PartSet> out;
  if (k == 0 || k > max_part) return out;
  std::vector<std::uint64_t> pick(k);
  for (std::uint64_t i = 0; i < k; ++i) pick[i] = i + 1;
  for (;;) {
    out.emplace_back(pick);
    std::int64_t i = static_cast<std::int64_t>(k) - 1;
    while (i >= 0 && pick[i] == max_part - (k - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (std::uint64_t t = i + 1; t < k; ++t) pick[t] = pick[t - 1] + 1;
  }
  return out;
}

// results[i] = work(items[i]), spread over threads; order is that of items
template <class T, class R>
std::vector<R> parallel_map(const std::vector<T>& items, unsigned threads, const std::function<R(const T&)>& work) {
  std::vector<R> results(items.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex fail_mu;
  auto run = [&] {
    for (;;) {
      std::size_t i = next++;
      if (i >= items.size()) return;
      try {
        results[i] = work(items[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(fail_mu);
        if (!failure) failure = std::current_exception();
        next = items.size();
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(items.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

bool splits_over_z(const RatPoly& g) {
  auto fac = factor_small(g);
  if (!fac.complete) return false;
  for (const auto& [f, e] : fac.factors)
    if (f.degree() > 1) return false;
  return true;
}

std::vector<SquarePieceRecord> square_pieces_of(const PartSet& set) {
  const std::uint64_t L = set.lcm();
  constexpr std::uint64_t kProbe = 4;  // values at n = 0..3 must all be squares
  PartitionTable table(set, kProbe * L - 1);
  auto flags = table.square_candidates();
  std::vector<SquarePieceRecord> out;
  std::shared_ptr<PieceSource> src;
  for (std::uint64_t i = 0; i < L; ++i) {
    bool maybe = !table.is_zero(i);
    for (std::uint64_t n = 0; n < kProbe && maybe; ++n) maybe = flags[n * L + i] != 0;
    for (std::uint64_t n = 0; n < kProbe && maybe; ++n) maybe = is_square(table.value(n * L + i));
    if (!maybe) continue;
    if (!src) src = piece_source(set);
    RatPoly piece = src->piece(i);
    auto g = perfect_square_root(piece);
    if (!g) continue;
    SquarePieceRecord r{set, L, i, *g, g->has_integer_coeffs(), false};
    r.split = r.integral && splits_over_z(*g);
    if (!(*g * *g == piece)) throw Error(ErrorCode::VerificationFailed, "square root of the piece");
    for (std::uint64_t n = 0; n <= 10; ++n) {
      Rat v = g->eval(n);
      if (Rat(src->table_value(L * n + i)) != v * v)
        throw Error(ErrorCode::VerificationFailed, set.to_string() + " residue " + std::to_string(i));
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

const char* convention_name(SquareConvention c) {
  switch (c) {
    case SquareConvention::rational: return "rational";
    case SquareConvention::integral: return "integral";
    case SquareConvention::split: return "split";
  }
  return "?";
}

bool counts_under(const SquarePieceRecord& r, SquareConvention c) {
  switch (c) {
    case SquareConvention::rational: return true;
    case SquareConvention::integral: return r.integral;
    case SquareConvention::split: return r.split;
  }
  return false;
}

unsigned default_parallelism() {
  if (const char* env = std::getenv("PARTEQ_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SquarePieceRecord> census_square_pieces(std::uint64_t k, std::uint64_t max_part, unsigned threads) {
  if (k < 2 || max_part < k) throw Error(ErrorCode::InvalidArgument, "need k >= 2 and max_part >= k");
  auto sets = subsets(k, max_part);
  auto per = parallel_map<PartSet, std::vector<SquarePieceRecord>>(sets, threads, square_pieces_of);
  std::vector<SquarePieceRecord> out;
  for (auto& v : per)
    for (auto& r : v) out.push_back(std::move(r));
  // subsets come out lexicographically and residues ascending
  return out;
}

std::map<PartSet, std::vector<std::uint64_t>> census_table(const std::vector<SquarePieceRecord>& records,
                                                           SquareConvention convention) {
  std::map<PartSet, std::vector<std::uint64_t>> out;
  for (const auto& r : records)
    if (counts_under(r, convention)) out[r.set].push_back(r.residue);
  return out;
}

std::optional<LinearShape> square_times_linear_shape(const RatPoly& piece) {
  if (piece.degree() < 1) return std::nullopt;
  auto sq = squarefree_decompose(piece);
  RatPoly h = RatPoly::constant(1), g = RatPoly::constant(1);
  for (const auto& [f, e] : sq.factors) {
    if (e % 2) h *= f;
    g *= pow(f, e / 2);
  }
  if (h.degree() != 1) return std::nullopt;
  Rat b = h.coeff(0);  // h = n + b
  LinearShape s;
  s.alpha = b.get_den();
  s.beta = b.get_num();
  s.c = sq.content / Rat(s.alpha);
  s.g = g;
  return s;
}

std::vector<SquareTimesLinearRecord> census_square_times_linear(std::uint64_t k, std::uint64_t max_part,
                                                                std::uint64_t bound, unsigned threads) {
  if (k < 2 || max_part < k) throw Error(ErrorCode::InvalidArgument, "need k >= 2 and max_part >= k");
  auto sets = subsets(k, max_part);
  auto per = parallel_map<PartSet, std::vector<SquareTimesLinearRecord>>(sets, threads, [bound](const PartSet& set) {
    std::vector<SquareTimesLinearRecord> out;
    auto src = piece_source(set);
    const std::uint64_t L = set.lcm();
    for (std::uint64_t i = 0; i < L; ++i) {
      RatPoly piece = src->piece(i);
      if (piece.is_zero()) continue;
      auto shape = square_times_linear_shape(piece);
      if (!shape) continue;
      SquareTimesLinearRecord r{set, L, i, piece, *shape, bound, {}};
      // piece(n) is a square iff c (alpha n + beta) is, unless g(n) = 0
      Int cn = shape->c.get_num() * shape->c.get_den();
      for (std::uint64_t n = 0; n <= bound; ++n) {
        Int lin = shape->alpha * n + shape->beta;
        if (shape->g.eval(n) == 0 || is_square(Int(cn * lin))) r.square_values.push_back(n);
      }
      out.push_back(std::move(r));
    }
    return out;
  });
  std::vector<SquareTimesLinearRecord> out;
  for (auto& v : per)
    for (auto& r : v) out.push_back(std::move(r));
  return out;
}

}  // namespace parteq
