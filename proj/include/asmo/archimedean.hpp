#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "asmo/repspec.hpp"

namespace asmo {

// Principal branch of log Gamma: analytic on C minus (-inf, 0], real on the
// positive axis, with log Gamma(conj z) = conj(log Gamma(z)). Stirling series
// after an upward shift of the argument. Throws GammaPoleError at 0, -1, -2, ...
Complex log_gamma(Complex z);

// log of pi^{-r s/2} prod_j Gamma((s + b_j)/2) with r = params.size().
Complex log_arch_l_factor(std::span<const Complex> params, Complex s);
Complex arch_l_factor(const RankinSelbergPair& pair, Complex s);

/// Pole lattice of G(s) = L(1-s, pi~ x pi') / L(s, pi x pi~'):
/// numerator poles at 2n + 1 + conj(b_j), denominator poles at -b_j - 2n.
class PoleGeometry {
 public:
  explicit PoleGeometry(const RankinSelbergPair& pair);
  // Synthetic geometry directly from the pair parameters b_{pi x pi~'}(j).
  explicit PoleGeometry(std::vector<Complex> pair_params);

  const std::vector<Complex>& params() const noexcept { return params_; }
  int degree() const noexcept { return static_cast<int>(params_.size()); }

  // 1 / (8 m m' l).
  double exclusion_radius() const noexcept { return 1.0 / (8.0 * degree()); }

  struct Pole {
    Complex location;
    bool numerator;
    std::size_t factor;
    long index;
    double distance;
  };

  // Closest pole of either lattice to s.
  Pole nearest_pole(Complex s) const;

  // Distance from the vertical line Re s = re to the nearest pole abscissa.
  double line_clearance(double re) const;

 private:
  std::vector<Complex> params_;
};

struct AdmissibleLine {
  double H;
  int n;
  double clearance;
};

// An abscissa -H, H in [n, n+1], at distance >= 1/(8 m m' l) from both pole
// lattices: the midpoint of the widest gap among the fractional parts of the
// pole abscissae.
AdmissibleLine admissible_line(const PoleGeometry& geometry, int n);
AdmissibleLine admissible_line(const RankinSelbergPair& pair, int n);

// log G(s); refuses points inside an exclusion disc.
Complex log_g_ratio(const PoleGeometry& geometry, Complex s);
Complex g_ratio(const RankinSelbergPair& pair, Complex s);

struct GrowthRow {
  double t;
  double abs_g;
  double ratio;       // |G| / ((1+|t|)^{r(1/2+H)} prod (1+|b_j|)^{1/2+H})
  double prediction;  // pi^{-r(1/2+H)} prod (|t+v_j|/2)^{1/2+H}
  double deviation;   // | |G| / prediction - 1 |
};

struct GrowthReport {
  double H = 0.0;
  double stirling_threshold = 0.0;  // 50 (1 + max |v_j|)
  std::vector<GrowthRow> rows;
  std::optional<double> max_ratio;
  std::optional<double> max_deviation;  // over rows with |t| >= stirling_threshold
};

GrowthReport g_growth_check(const PoleGeometry& geometry, const AdmissibleLine& line, std::span<const double> t_grid);
GrowthReport g_growth_check(const RankinSelbergPair& pair, const AdmissibleLine& line,
                            std::span<const double> t_grid);

}  // namespace asmo
