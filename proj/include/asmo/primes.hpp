#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace asmo {

// Smallest-prime-factor sieve on [0, limit].
class Sieve {
 public:
  explicit Sieve(std::uint64_t limit);

  std::uint64_t limit() const noexcept { return limit_; }
  bool is_prime(std::uint64_t n) const;
  std::uint64_t smallest_factor(std::uint64_t n) const;
  const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }

  // (prime, exponent) pairs in increasing prime order.
  std::vector<std::pair<std::uint64_t, int>> factor(std::uint64_t n) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint64_t> primes_;
};

bool is_prime(std::uint64_t n);

// Returns (p, e) with n = p^e, e >= 1, or nullopt when n is not a prime power.
std::optional<std::pair<std::uint64_t, int>> prime_power_decomposition(std::uint64_t n);

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

// Legendre symbol (a | p) for an odd prime p, via Euler's criterion.
int legendre(std::int64_t a, std::uint64_t p);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

// Norm N(v) = q_v of a finite place; always a prime power p^e.
class PlaceNorm {
 public:
  // Throws std::invalid_argument if value is not a prime power.
  explicit PlaceNorm(std::uint64_t value);

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t prime() const noexcept { return prime_; }
  int exponent() const noexcept { return exponent_; }

  friend auto operator<=>(const PlaceNorm& a, const PlaceNorm& b) { return a.value_ <=> b.value_; }
  friend bool operator==(const PlaceNorm& a, const PlaceNorm& b) { return a.value_ == b.value_; }

 private:
  std::uint64_t value_;
  std::uint64_t prime_;
  int exponent_;
};

}  // namespace asmo
