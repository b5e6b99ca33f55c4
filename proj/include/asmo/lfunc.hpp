#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "asmo/repspec.hpp"

namespace asmo {

// h_0..h_K of the given roots, i.e. the coefficients of prod_j (1 - root_j x)^{-1},
// via the reciprocal of the expanded polynomial prod_j (1 - root_j x).
std::vector<Complex> complete_homogeneous(std::span<const Complex> roots, int K);

// Same quantity through Newton's identities k h_k = sum_{i=1}^k p_i h_{k-i}.
std::vector<Complex> complete_homogeneous_newton(std::span<const Complex> roots, int K);

// Coefficients of p^{-ks}, k = 0..K, in the local factor of L(s, pi_f) above p.
std::vector<Complex> standard_prime_power_coeffs(const RepresentationSpec& spec, std::uint64_t p, int K);

// Coefficients of p^{-ks}, k = 0..K, in the local Rankin-Selberg factor above p,
// built from the products alpha_pi(j) * conj(alpha_pi'(j')).
std::vector<Complex> rs_prime_power_coeffs(const RankinSelbergPair& pair, std::uint64_t p, int K);

/// Dirichlet coefficients a(1..N) of a finite-part L-function.
class CoefficientStream {
 public:
  CoefficientStream(std::string source, std::vector<Complex> values, int degree, double theta);

  const std::string& source() const noexcept { return source_; }
  std::size_t length() const noexcept { return values_.size(); }

  // a(n) for 1 <= n <= length().
  const Complex& at(std::size_t n) const;
  const std::vector<Complex>& values() const noexcept { return values_; }

  // Number of Satake-type parameters per place and exponent theta such that
  // |a(n)| <= d_degree(n) n^theta.
  int degree() const noexcept { return degree_; }
  double theta() const noexcept { return theta_; }

 private:
  std::string source_;
  std::vector<Complex> values_;
  int degree_;
  double theta_;
};

CoefficientStream standard_coeffs(const RepresentationSpec& spec, std::size_t N);
CoefficientStream rs_coeffs(const RankinSelbergPair& pair, std::size_t N);

struct PartialSum {
  Complex value;
  double tail_bound;
};

// sum_{n<=N} a(n) n^{-s} together with a rigorous bound on the omitted tail.
// Refuses Re s <= 1, and any s where the tail majorant diverges.
PartialSum dirichlet_partial(const CoefficientStream& stream, Complex s, std::size_t N);

// The tail bound used by dirichlet_partial, for Re s = sigma.
double dirichlet_tail_bound(const CoefficientStream& stream, double sigma, std::size_t N);

// Upper bound for zeta(sigma), sigma > 1 real.
double zeta_upper(double sigma);

}  // namespace asmo
