#include "asmo/tau.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace asmo {
namespace {

// Coefficients of eta(q)/q^{1/24} = prod (1 - q^k) by the pentagonal number theorem.
std::vector<std::pair<std::uint64_t, int>> euler_function_terms(std::uint64_t limit) {
  std::vector<std::pair<std::uint64_t, int>> terms;
  terms.emplace_back(0, 1);
  for (std::uint64_t k = 1;; ++k) {
    const std::uint64_t a = k * (3 * k - 1) / 2;
    const std::uint64_t b = k * (3 * k + 1) / 2;
    if (a > limit) break;
    const int sign = (k % 2 == 0) ? 1 : -1;
    terms.emplace_back(a, sign);
    if (b <= limit) terms.emplace_back(b, sign);
  }
  std::sort(terms.begin(), terms.end());
  return terms;
}

// First `count` coefficients of prod (1 - q^k)^24, via the recurrence for powers of
// a power series: n g_n = sum_{i=1}^{n} ((k+1) i - n) h_i g_{n-i} with h_0 = 1.
std::vector<Int128> eta24_coefficients(std::uint64_t count) {
  constexpr Int128 power = 24;
  const auto h = euler_function_terms(count);
  std::vector<Int128> g(count, 0);
  g[0] = 1;
  for (std::uint64_t n = 1; n < count; ++n) {
    Int128 acc = 0;
    for (const auto& [i, sign] : h) {
      if (i == 0) continue;
      if (i > n) break;
      const Int128 factor = (power + 1) * static_cast<Int128>(i) - static_cast<Int128>(n);
      acc += factor * sign * g[n - i];
    }
    if (acc % static_cast<Int128>(n) != 0) throw std::logic_error("eta^24 recurrence lost exactness");
    g[n] = acc / static_cast<Int128>(n);
  }
  return g;
}

struct TauTable {
  std::mutex mutex;
  std::vector<Int128> eta24;  // tau(n) = eta24[n - 1]
};

TauTable& table() {
  static TauTable instance;
  return instance;
}

}  // namespace

void reserve_ramanujan_tau(std::uint64_t n) {
  auto& t = table();
  std::lock_guard lock(t.mutex);
  if (t.eta24.size() >= n) return;
  const std::uint64_t target = std::max<std::uint64_t>({n, 2 * t.eta24.size(), 1024});
  t.eta24 = eta24_coefficients(target);
}

Int128 ramanujan_tau(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("ramanujan_tau: n must be positive");
  reserve_ramanujan_tau(n);
  auto& t = table();
  std::lock_guard lock(t.mutex);
  return t.eta24[n - 1];
}

double normalized_tau(std::uint64_t p) {
  const auto tau = static_cast<long double>(ramanujan_tau(p));
  return static_cast<double>(tau / std::pow(static_cast<long double>(p), 5.5L));
}

}  // namespace asmo
