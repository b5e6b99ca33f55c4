#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "asmo/primes.hpp"

namespace asmo {

using Complex = std::complex<double>;

// Finite local data produced by a rule rather than stored.
struct BuiltinLocalData {
  enum class Kind { trivial, dirichlet_quadratic, delta };
  Kind kind = Kind::trivial;
  std::uint64_t modulus = 0;  // only for dirichlet_quadratic

  std::string name() const;
};

// Explicit Satake data keyed by place norm.
struct TableLocalData {
  std::map<std::uint64_t, std::vector<Complex>> places;
};

using LocalDataSource = std::variant<BuiltinLocalData, TableLocalData>;

/// Invariants of a cuspidal representation: degree m over a field of degree l,
/// arithmetic conductor, archimedean parameters b(j) (m*l of them, grouped by
/// archimedean place) and Satake parameters at finite places.
///
/// Validated on construction and immutable afterwards.
class RepresentationSpec {
 public:
  RepresentationSpec(std::string name, int m, int l, std::uint64_t q_arith, std::vector<Complex> arch_params,
                     LocalDataSource finite_local);

  const std::string& name() const noexcept { return name_; }
  int m() const noexcept { return m_; }
  int l() const noexcept { return l_; }
  std::uint64_t q_arith() const noexcept { return q_arith_; }
  const std::vector<Complex>& arch_params() const noexcept { return arch_params_; }
  const LocalDataSource& finite_local() const noexcept { return finite_local_; }
  bool is_builtin() const noexcept { return std::holds_alternative<BuiltinLocalData>(finite_local_); }

  // Whether a finite place of this norm exists for the spec's field. Over the
  // rationals the places are the primes; for l > 1 they are the table keys.
  bool is_place(std::uint64_t norm) const;

  // Largest norm with data, or nullopt for generated (unbounded) data.
  std::optional<std::uint64_t> data_horizon() const;

  // Exponent theta with |alpha_v(j)| <= N(v)^theta at every place with data.
  double ramanujan_exponent() const noexcept { return theta_; }

 private:
  std::string name_;
  int m_;
  int l_;
  std::uint64_t q_arith_;
  std::vector<Complex> arch_params_;
  LocalDataSource finite_local_;
  double theta_ = 0.5;
};

// Sort a multiset lexicographically by (real, imaginary).
std::vector<Complex> canonicalize(std::vector<Complex> values);

// Satake parameters {alpha_{pi,v}(j)} in canonical order.
std::vector<Complex> satake_at(const RepresentationSpec& spec, const PlaceNorm& v);

// Local equivalence at v as equality of canonical Satake multisets within tol.
// Specs of different degree are never locally equivalent.
bool locally_equivalent(const RepresentationSpec& a, const RepresentationSpec& b, const PlaceNorm& v,
                        double tol);

RepresentationSpec load_spec(const nlohmann::json& document);
RepresentationSpec load_spec_text(std::string_view text);
RepresentationSpec load_spec_file(const std::string& path);

nlohmann::ordered_json spec_to_json(const RepresentationSpec& spec);

// Built-in catalog over the rationals. Accepts "trivial", "delta",
// "dirichlet-quadratic:<q>" and the short forms "chi<q>".
RepresentationSpec catalog_spec(std::string_view name);

// The catalog used by the acceptance checks: trivial, chi5, chi13, chi17, delta.
std::vector<RepresentationSpec> catalog();

/// The ordered pair (pi, pi') viewed through L(s, pi x contragredient(pi')).
class RankinSelbergPair {
 public:
  RankinSelbergPair(RepresentationSpec left, RepresentationSpec right,
                    std::optional<std::uint64_t> q_pair = std::nullopt);

  const RepresentationSpec& left() const noexcept { return left_; }
  const RepresentationSpec& right() const noexcept { return right_; }

  // b_{pi x pi~'}(j) = b_pi(j) + conj(b_pi'(j')), per archimedean place.
  const std::vector<Complex>& arch_params() const noexcept { return arch_params_; }

  // Parameters of the swapped pair pi~ x pi': the complex conjugates.
  std::vector<Complex> dual_arch_params() const;

  // m * m' * l.
  int degree() const noexcept { return static_cast<int>(arch_params_.size()); }

  // Pair conductor if it can be resolved: explicit value, the catalog rule, or 1
  // when both arithmetic conductors are 1.
  std::optional<std::uint64_t> q_pair() const noexcept { return q_pair_; }

  std::string label() const { return left_.name() + " x ~" + right_.name(); }

 private:
  RepresentationSpec left_;
  RepresentationSpec right_;
  std::vector<Complex> arch_params_;
  std::optional<std::uint64_t> q_pair_;
};

// Known pair conductor for two catalog entries, if any.
std::optional<std::uint64_t> catalog_pair_conductor(const RepresentationSpec& a, const RepresentationSpec& b);

}  // namespace asmo
