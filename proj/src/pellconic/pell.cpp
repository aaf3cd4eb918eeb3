#include "parteq/error.hpp"
#include "parteq/pellconic.hpp"

namespace parteq {

PellSolution pell_fundamental(const Int& D) {
  if (D < 1) throw Error(ErrorCode::InvalidArgument, "Pell needs D >= 2, got " + to_string(D));
  Int a0 = isqrt(D);
  if (a0 * a0 == D) throw Error(ErrorCode::SquareD, to_string(D) + " is a perfect square");
  // convergents of the continued fraction of sqrt(D)
  Int m = 0, d = 1, a = a0;
  Int h_prev = 1, h = a0, k_prev = 0, k = 1;
  while (h * h - D * k * k != 1) {
    m = d * a - m;
    d = (D - m * m) / d;
    a = (a0 + m) / d;
    Int h_next = a * h + h_prev;
    Int k_next = a * k + k_prev;
    h_prev = std::move(h);
    h = std::move(h_next);
    k_prev = std::move(k);
    k = std::move(k_next);
  }
  return {h, k};
}

PellStream::PellStream(Int D) : d_(std::move(D)), fund_(pell_fundamental(d_)) {}

PellSolution PellStream::next() {
  if (!cur_) {
    cur_ = fund_;
  } else {
    const auto& [u, v] = *cur_;
    cur_ = PellSolution{fund_.u * u + d_ * fund_.v * v, fund_.u * v + fund_.v * u};
  }
  return *cur_;
}

std::vector<PellSolution> pell_take(const Int& D, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "pell_take needs k >= 1");
  PellStream s(D);
  std::vector<PellSolution> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(s.next());
  return out;
}

}  // namespace parteq
