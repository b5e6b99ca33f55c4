#include "asmo/lfunc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "asmo/errors.hpp"
#include "asmo/parallel.hpp"
#include "asmo/tau.hpp"

namespace asmo {
namespace {

// Places above p with norm p^f, f <= K, as (f, norm).
std::vector<std::pair<int, std::uint64_t>> places_above(const RepresentationSpec& spec, std::uint64_t p, int K) {
  std::vector<std::pair<int, std::uint64_t>> out;
  if (spec.l() == 1) {
    out.emplace_back(1, p);
    return out;
  }
  std::uint64_t q = p;
  for (int f = 1; f <= K; ++f) {
    if (spec.is_place(q)) out.emplace_back(f, q);
    if (q > std::numeric_limits<std::uint64_t>::max() / p) break;
    q *= p;
  }
  return out;
}

// Multiplies acc by the series sum_k h_k x^{f k}, truncated at degree K.
void multiply_local(std::vector<Complex>& acc, const std::vector<Complex>& h, int f) {
  const int K = static_cast<int>(acc.size()) - 1;
  std::vector<Complex> out(acc.size(), Complex(0.0, 0.0));
  for (int i = 0; i <= K; ++i) {
    if (acc[i] == Complex(0.0, 0.0)) continue;
    for (int k = 0; i + f * k <= K && k < static_cast<int>(h.size()); ++k) out[i + f * k] += acc[i] * h[k];
  }
  acc = std::move(out);
}

std::vector<Complex> unit_series(int K) {
  std::vector<Complex> acc(static_cast<std::size_t>(K) + 1, Complex(0.0, 0.0));
  acc[0] = 1.0;
  return acc;
}

template <typename LocalSeries>
std::vector<Complex> assemble(std::size_t N, LocalSeries&& local) {
  std::vector<Complex> a(N, Complex(0.0, 0.0));
  if (N == 0) return a;
  a[0] = 1.0;
  if (N == 1) return a;

  const Sieve sieve(N);
  const auto& primes = sieve.primes();
  std::vector<std::vector<Complex>> per_prime(primes.size());
  parallel_for(primes.size(), [&](std::size_t i) {
    const std::uint64_t p = primes[i];
    int K = 0;
    for (std::uint64_t q = p; q <= N; q *= p) {
      ++K;
      if (q > N / p) break;
    }
    per_prime[i] = local(p, K);
  });

  // Multiplicative fill: a(n) = a(p^k) a(n / p^k) with p the smallest prime of n.
  std::vector<std::size_t> prime_slot(N + 1, 0);
  for (std::size_t i = 0; i < primes.size(); ++i) prime_slot[primes[i]] = i;
  for (std::size_t n = 2; n <= N; ++n) {
    const std::uint64_t p = sieve.smallest_factor(n);
    std::size_t rest = n;
    int k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    a[n - 1] = per_prime[prime_slot[p]][k] * a[rest - 1];
  }
  return a;
}

}  // namespace

std::vector<Complex> complete_homogeneous(std::span<const Complex> roots, int K) {
  if (K < 0) throw std::invalid_argument("complete_homogeneous: K must be nonnegative");
  // e(x) = prod (1 - root x) = sum_i c_i x^i.
  std::vector<Complex> c(roots.size() + 1, Complex(0.0, 0.0));
  c[0] = 1.0;
  for (std::size_t j = 0; j < roots.size(); ++j) {
    for (std::size_t i = j + 1; i >= 1; --i) c[i] -= roots[j] * c[i - 1];
  }
  std::vector<Complex> h(static_cast<std::size_t>(K) + 1, Complex(0.0, 0.0));
  h[0] = 1.0;
  for (int k = 1; k <= K; ++k) {
    Complex acc(0.0, 0.0);
    for (int i = 1; i <= k && i < static_cast<int>(c.size()); ++i) acc -= c[i] * h[k - i];
    h[k] = acc;
  }
  return h;
}

std::vector<Complex> complete_homogeneous_newton(std::span<const Complex> roots, int K) {
  if (K < 0) throw std::invalid_argument("complete_homogeneous_newton: K must be nonnegative");
  std::vector<Complex> power_sums(static_cast<std::size_t>(K) + 1, Complex(0.0, 0.0));
  for (const auto& r : roots) {
    Complex pw = 1.0;
    for (int k = 1; k <= K; ++k) {
      pw *= r;
      power_sums[k] += pw;
    }
  }
  std::vector<Complex> h(static_cast<std::size_t>(K) + 1, Complex(0.0, 0.0));
  h[0] = 1.0;
  for (int k = 1; k <= K; ++k) {
    Complex acc(0.0, 0.0);
    for (int i = 1; i <= k; ++i) acc += power_sums[i] * h[k - i];
    h[k] = acc / static_cast<double>(k);
  }
  return h;
}

std::vector<Complex> standard_prime_power_coeffs(const RepresentationSpec& spec, std::uint64_t p, int K) {
  if (!is_prime(p)) throw std::invalid_argument("standard_prime_power_coeffs: p must be prime");
  auto acc = unit_series(K);
  for (const auto& [f, norm] : places_above(spec, p, K)) {
    const auto alphas = satake_at(spec, PlaceNorm(norm));
    multiply_local(acc, complete_homogeneous(alphas, K / f), f);
  }
  return acc;
}

std::vector<Complex> rs_prime_power_coeffs(const RankinSelbergPair& pair, std::uint64_t p, int K) {
  if (!is_prime(p)) throw std::invalid_argument("rs_prime_power_coeffs: p must be prime");
  auto places = places_above(pair.left(), p, K);
  for (const auto& place : places_above(pair.right(), p, K)) {
    if (std::find(places.begin(), places.end(), place) == places.end()) places.push_back(place);
  }
  std::sort(places.begin(), places.end());

  auto acc = unit_series(K);
  for (const auto& [f, norm] : places) {
    const PlaceNorm v(norm);
    const auto alpha = satake_at(pair.left(), v);
    const auto alpha_prime = satake_at(pair.right(), v);
    std::vector<Complex> products;
    products.reserve(alpha.size() * alpha_prime.size());
    for (const auto& a : alpha) {
      for (const auto& b : alpha_prime) products.push_back(a * std::conj(b));
    }
    multiply_local(acc, complete_homogeneous(products, K / f), f);
  }
  return acc;
}

CoefficientStream::CoefficientStream(std::string source, std::vector<Complex> values, int degree, double theta)
    : source_(std::move(source)), values_(std::move(values)), degree_(degree), theta_(theta) {
  if (!values_.empty() && values_[0] != Complex(1.0, 0.0)) throw std::invalid_argument("coefficient stream needs a(1) = 1");
}

const Complex& CoefficientStream::at(std::size_t n) const {
  if (n == 0 || n > values_.size()) {
    throw std::out_of_range("coefficient index " + std::to_string(n) + " outside 1.." + std::to_string(values_.size()));
  }
  return values_[n - 1];
}

CoefficientStream standard_coeffs(const RepresentationSpec& spec, std::size_t N) {
  if (spec.is_builtin()) reserve_ramanujan_tau(N);
  auto values = assemble(N, [&](std::uint64_t p, int K) { return standard_prime_power_coeffs(spec, p, K); });
  return CoefficientStream(spec.name(), std::move(values), spec.m() * spec.l(), spec.ramanujan_exponent());
}

CoefficientStream rs_coeffs(const RankinSelbergPair& pair, std::size_t N) {
  if (pair.left().is_builtin() || pair.right().is_builtin()) reserve_ramanujan_tau(N);
  auto values = assemble(N, [&](std::uint64_t p, int K) { return rs_prime_power_coeffs(pair, p, K); });
  return CoefficientStream(pair.label(), std::move(values), pair.degree(),
                           pair.left().ramanujan_exponent() + pair.right().ramanujan_exponent());
}

double zeta_upper(double sigma) {
  if (!(sigma > 1.0)) throw std::domain_error("zeta_upper: sigma must exceed 1");
  constexpr int kTerms = 1000;
  double sum = 0.0;
  for (int n = kTerms - 1; n >= 1; --n) sum += std::pow(static_cast<double>(n), -sigma);
  // sum_{n>=K} n^{-sigma} <= K^{-sigma} + K^{1-sigma}/(sigma-1).
  const double k = kTerms;
  return sum + std::pow(k, -sigma) + std::pow(k, 1.0 - sigma) / (sigma - 1.0);
}

double dirichlet_tail_bound(const CoefficientStream& stream, double sigma, std::size_t N) {
  // sum_{n>N} d_r(n) n^{theta - sigma} <= N^{-delta} zeta(sigma - theta - delta)^r
  // for any 0 < delta < sigma - theta - 1 (Rankin's trick).
  const double room = sigma - stream.theta() - 1.0;
  if (!(room > 0.0)) {
    throw std::domain_error("dirichlet_partial: tail majorant needs Re s > " + std::to_string(1.0 + stream.theta()));
  }
  double tail = std::numeric_limits<double>::infinity();
  constexpr int kSteps = 64;
  for (int i = 1; i < kSteps; ++i) {
    const double delta = room * i / kSteps;
    const double bound = std::pow(static_cast<double>(N), -delta) *
                         std::pow(zeta_upper(sigma - stream.theta() - delta), stream.degree());
    tail = std::min(tail, bound);
  }
  return tail;
}

PartialSum dirichlet_partial(const CoefficientStream& stream, Complex s, std::size_t N) {
  const double sigma = s.real();
  if (!(sigma > 1.0)) {
    throw std::domain_error("dirichlet_partial: Re s = " + std::to_string(sigma) +
                            " is outside the region of absolute convergence (Re s > 1)");
  }
  if (N == 0 || N > stream.length()) {
    throw std::out_of_range("dirichlet_partial: N = " + std::to_string(N) + " exceeds stream length " +
                            std::to_string(stream.length()));
  }
  const double tail = dirichlet_tail_bound(stream, sigma, N);
  Complex value(0.0, 0.0);
  for (std::size_t n = 1; n <= N; ++n) value += stream.at(n) * std::exp(-s * std::log(static_cast<double>(n)));
  return {value, tail};
}

}  // namespace asmo
