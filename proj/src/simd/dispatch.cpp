#include "kernels_impl.hpp"

#include "parteq/simd/kernels.hpp"

#include <atomic>
#include <cstdlib>

namespace parteq::simd {

namespace {

// -1 means no programmatic override.
std::atomic<int> g_override{-1};

std::optional<Isa> env_isa() {
  static const std::optional<Isa> cached = [] {
    const char* v = std::getenv("PARTEQ_SIMD");
    if (!v) return std::optional<Isa>{};
    auto isa = parse_isa(v);
    if (isa && isa_available(*isa)) return isa;
    return std::optional<Isa>{};
  }();
  return cached;
}

}  // namespace

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "scalar";
}

std::optional<Isa> parse_isa(std::string_view name) {
  if (name == "scalar") return Isa::scalar;
  if (name == "avx2") return Isa::avx2;
  if (name == "neon") return Isa::neon;
  return std::nullopt;
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(__i386__)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() {
  if (isa_available(Isa::avx2)) return Isa::avx2;
  if (isa_available(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

Isa active_isa() {
  int o = g_override.load(std::memory_order_relaxed);
  if (o >= 0) return static_cast<Isa>(o);
  if (auto e = env_isa()) return *e;
  return best_isa();
}

void set_isa_override(std::optional<Isa> isa) {
  if (isa && !isa_available(*isa)) isa = Isa::scalar;
  g_override.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

void coin_accumulate(Isa isa, std::uint64_t* planes, std::size_t limbs, std::size_t len,
                     std::size_t part) {
  if (part == 0 || len <= part) return;
  switch (isa) {
#if defined(__x86_64__) || defined(__i386__)
    case Isa::avx2:
      if (isa_available(Isa::avx2)) return detail::coin_avx2(planes, limbs, len, part);
      break;
#endif
#if defined(__aarch64__)
    case Isa::neon: return detail::coin_neon(planes, limbs, len, part);
#endif
    default: break;
  }
  detail::coin_scalar(planes, limbs, len, part, part);
}

void coin_accumulate(std::uint64_t* planes, std::size_t limbs, std::size_t len, std::size_t part) {
  coin_accumulate(active_isa(), planes, limbs, len, part);
}

void square_residue_filter(Isa isa, const std::uint64_t* low, std::size_t len, std::uint8_t* flags) {
  switch (isa) {
#if defined(__x86_64__) || defined(__i386__)
    case Isa::avx2:
      if (isa_available(Isa::avx2)) return detail::square_filter_avx2(low, len, flags);
      break;
#endif
#if defined(__aarch64__)
    case Isa::neon: return detail::square_filter_neon(low, len, flags);
#endif
    default: break;
  }
  detail::square_filter_scalar(low, 0, len, flags);
}

void square_residue_filter(const std::uint64_t* low, std::size_t len, std::uint8_t* flags) {
  square_residue_filter(active_isa(), low, len, flags);
}

}  // namespace parteq::simd
