#include "asmo/primes.hpp"

#include <stdexcept>
#include <string>

namespace asmo {

Sieve::Sieve(std::uint64_t limit) : limit_(limit), spf_(limit + 1, 0) {
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      primes_.push_back(i);
      for (std::uint64_t j = i; j <= limit; j += i) {
        if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
      }
    }
  }
}

bool Sieve::is_prime(std::uint64_t n) const {
  if (n > limit_) return asmo::is_prime(n);
  return n >= 2 && spf_[n] == n;
}

std::uint64_t Sieve::smallest_factor(std::uint64_t n) const {
  if (n < 2 || n > limit_) throw std::out_of_range("Sieve::smallest_factor: " + std::to_string(n));
  return spf_[n];
}

std::vector<std::pair<std::uint64_t, int>> Sieve::factor(std::uint64_t n) const {
  std::vector<std::pair<std::uint64_t, int>> out;
  while (n > 1) {
    const std::uint64_t p = smallest_factor(n);
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint64_t, int>> prime_power_decomposition(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return std::make_pair(n, 1);
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1) return std::nullopt;
  return std::make_pair(p, e);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  unsigned __int128 result = 1 % mod;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1U) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1U;
  }
  return static_cast<std::uint64_t>(result);
}

int legendre(std::int64_t a, std::uint64_t p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("legendre: modulus must be an odd prime");
  const auto pm = static_cast<std::int64_t>(p);
  const auto r = static_cast<std::uint64_t>(((a % pm) + pm) % pm);
  if (r == 0) return 0;
  return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

PlaceNorm::PlaceNorm(std::uint64_t value) : value_(value) {
  const auto pe = prime_power_decomposition(value);
  if (!pe) throw std::invalid_argument("place norm must be a prime power, got " + std::to_string(value));
  prime_ = pe->first;
  exponent_ = pe->second;
}

}  // namespace asmo
