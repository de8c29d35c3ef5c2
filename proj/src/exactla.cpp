#include "lcsq/exactla.hpp"

namespace lcsq::exactla {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for all 64-bit n.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint32_t random_prime(std::mt19937_64& rng, std::uint32_t lo, std::uint32_t hi) {
  if (lo >= hi) throw std::invalid_argument("random_prime: empty range");
  std::uniform_int_distribution<std::uint32_t> dist(lo, hi - 1);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const auto c = dist(rng);
    if (is_prime(c)) return c;
  }
  throw std::runtime_error("random_prime: no prime found");
}

std::pair<std::uint32_t, std::uint32_t> default_primes(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  constexpr std::uint32_t lo = (1u << 30) + 1;
  constexpr std::uint32_t hi = 1u << 31;
  const auto p = random_prime(rng, lo, hi);
  auto q = random_prime(rng, lo, hi);
  while (q == p) q = random_prime(rng, lo, hi);
  return {p, q};
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) throw std::invalid_argument("prime modulus must be below 2^31");
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    const auto q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p_;
  return static_cast<value_type>(t);
}

}  // namespace lcsq::exactla
