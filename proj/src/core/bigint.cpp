#include "parteq/bigint.hpp"

#include "parteq/error.hpp"

#include <numeric>
#include <utility>
#include <vector>

namespace parteq {

Int int_from_u64(std::uint64_t v) {
  static_assert(sizeof(unsigned long) == 8, "expects LP64");
  return Int(static_cast<unsigned long>(v));
}

Int parse_int(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  Int z;
  if (s.empty() || z.set_str(s, 10) != 0) {
    throw Error(ErrorCode::InvalidArgument, "not an integer: " + std::string(text));
  }
  return z;
}

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator: " + std::string(text));
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string rat_to_fraction(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Int& z) { return z.get_str(); }
std::string to_string(const Rat& q) { return q.get_str(); }

bool is_integer(const Rat& q) { return q.get_den() == 1; }

bool is_square(const Int& z) { return z >= 0 && mpz_perfect_square_p(z.get_mpz_t()) != 0; }

std::optional<Int> exact_sqrt(const Int& z) {
  if (!is_square(z)) return std::nullopt;
  Int r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r;
}

std::optional<Rat> exact_sqrt(const Rat& q) {
  auto n = exact_sqrt(Int(q.get_num()));
  if (!n) return std::nullopt;
  auto d = exact_sqrt(Int(q.get_den()));
  if (!d) return std::nullopt;
  return Rat(*n, *d);
}

Int isqrt(const Int& z) {
  if (z < 0) throw Error(ErrorCode::InvalidArgument, "isqrt of negative value");
  Int r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r;
}

namespace {

Int pollard_rho(const Int& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    auto f = [&](const Int& v) {
      Int r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      Int diff = abs(x - y);
      d = gcd(diff, n);
    }
    if (d != n) return d;
  }
}

void collect_prime_powers(const Int& n, std::vector<std::pair<Int, unsigned>>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
    for (auto& [p, e] : out) {
      if (p == n) {
        ++e;
        return;
      }
    }
    out.emplace_back(n, 1);
    return;
  }
  Int d = pollard_rho(n);
  collect_prime_powers(d, out);
  collect_prime_powers(Int(n / d), out);
}

}  // namespace

Int squarefree_part(const Int& z) {
  if (z == 0) throw Error(ErrorCode::InvalidArgument, "squarefree part of zero");
  Int n = abs(z);
  Int out = 1;
  for (unsigned long p = 2; p < 10000 && Int(p) * p <= n; ++p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    if (e % 2 == 1) out *= p;
  }
  if (n > 1 && !is_square(n)) {
    std::vector<std::pair<Int, unsigned>> powers;
    collect_prime_powers(n, powers);
    for (const auto& [p, e] : powers) {
      if (e % 2 == 1) out *= p;
    }
  }
  return z < 0 ? Int(-out) : out;
}

Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int mod_floor(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace parteq
