#include "asmo/repspec.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "asmo/errors.hpp"
#include "asmo/tau.hpp"

namespace asmo {
namespace {

constexpr double kBoundSlack = 1e-12;

std::vector<Complex> generate(const BuiltinLocalData& rule, std::uint64_t p) {
  switch (rule.kind) {
    case BuiltinLocalData::Kind::trivial:
      return {Complex(1.0, 0.0)};
    case BuiltinLocalData::Kind::dirichlet_quadratic:
      if (p == rule.modulus) return {Complex(0.0, 0.0)};
      return {Complex(static_cast<double>(legendre(static_cast<std::int64_t>(p), rule.modulus)), 0.0)};
    case BuiltinLocalData::Kind::delta: {
      // alpha, conj(alpha) are the roots of X^2 - lambda X + 1.
      const double lambda = normalized_tau(p);
      const double im = std::sqrt(std::max(0.0, 1.0 - 0.25 * lambda * lambda));
      return {Complex(0.5 * lambda, im), Complex(0.5 * lambda, -im)};
    }
  }
  throw std::logic_error("unknown builtin rule");
}

int builtin_degree(const BuiltinLocalData& rule) {
  return rule.kind == BuiltinLocalData::Kind::delta ? 2 : 1;
}

BuiltinLocalData parse_builtin(std::string_view name) {
  if (name == "trivial") return {BuiltinLocalData::Kind::trivial, 0};
  if (name == "delta") return {BuiltinLocalData::Kind::delta, 0};
  std::string_view digits;
  if (name.starts_with("dirichlet-quadratic:")) {
    digits = name.substr(std::string_view("dirichlet-quadratic:").size());
  } else if (name.starts_with("chi")) {
    digits = name.substr(3);
  } else {
    throw SpecError("unknown builtin '" + std::string(name) + "'");
  }
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw SpecError("malformed quadratic character modulus in '" + std::string(name) + "'");
  }
  const std::uint64_t q = std::stoull(std::string(digits));
  if (q < 3 || !is_prime(q)) throw SpecError("quadratic character modulus must be an odd prime, got " + std::string(digits));
  return {BuiltinLocalData::Kind::dirichlet_quadratic, q};
}

Complex parse_complex(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw SpecError("malformed document: " + where + " must be a [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

nlohmann::ordered_json complex_to_json(const Complex& z) { return nlohmann::ordered_json::array({z.real(), z.imag()}); }

}  // namespace

std::string BuiltinLocalData::name() const {
  switch (kind) {
    case Kind::trivial:
      return "trivial";
    case Kind::dirichlet_quadratic:
      return "dirichlet-quadratic:" + std::to_string(modulus);
    case Kind::delta:
      return "delta";
  }
  return "?";
}

RepresentationSpec::RepresentationSpec(std::string name, int m, int l, std::uint64_t q_arith,
                                       std::vector<Complex> arch_params, LocalDataSource finite_local)
    : name_(std::move(name)),
      m_(m),
      l_(l),
      q_arith_(q_arith),
      arch_params_(std::move(arch_params)),
      finite_local_(std::move(finite_local)) {
  if (m_ <= 0) throw SpecError("degree must be positive");
  if (l_ <= 0) throw SpecError("field degree must be positive");
  if (q_arith_ == 0) throw SpecError("arithmetic conductor must be a positive integer");
  if (arch_params_.size() != static_cast<std::size_t>(m_) * static_cast<std::size_t>(l_)) {
    throw SpecError("arch_params must have m*l = " + std::to_string(m_ * l_) + " entries, got " +
                    std::to_string(arch_params_.size()));
  }
  for (const auto& b : arch_params_) {
    if (!std::isfinite(b.real()) || !std::isfinite(b.imag())) throw SpecError("arch_params must be finite");
  }

  if (const auto* rule = std::get_if<BuiltinLocalData>(&finite_local_)) {
    if (l_ != 1) throw SpecError("builtin local data is defined over the rationals only (l = 1)");
    if (builtin_degree(*rule) != m_) {
      throw SpecError("Satake multiset of wrong cardinality: builtin '" + rule->name() + "' has degree " +
                      std::to_string(builtin_degree(*rule)) + ", spec declares m = " + std::to_string(m_));
    }
    theta_ = 0.0;
    return;
  }

  const auto& table = std::get<TableLocalData>(finite_local_).places;
  double theta = 0.0;
  for (const auto& [norm, values] : table) {
    const auto pe = prime_power_decomposition(norm);
    if (!pe) throw SpecError("table key " + std::to_string(norm) + " is not a prime power");
    if (l_ == 1 && pe->second != 1) {
      throw SpecError("the rational field has no place of norm " + std::to_string(norm));
    }
    if (values.size() != static_cast<std::size_t>(m_)) {
      throw SpecError("Satake multiset of wrong cardinality at N(v)=" + std::to_string(norm) + ": expected " +
                      std::to_string(m_) + ", got " + std::to_string(values.size()));
    }
    const double root = std::sqrt(static_cast<double>(norm));
    for (const auto& a : values) {
      const double mod = std::abs(a);
      if (!std::isfinite(mod)) throw SpecError("Satake parameters must be finite");
      if (mod > root * (1.0 + kBoundSlack)) {
        throw SpecError("|alpha| = " + std::to_string(mod) + " exceeds sqrt(N(v)) at N(v)=" + std::to_string(norm));
      }
      if (mod > 0.0) theta = std::max(theta, std::log(mod) / std::log(static_cast<double>(norm)));
    }
  }
  theta_ = std::min(theta, 0.5);
}

bool RepresentationSpec::is_place(std::uint64_t norm) const {
  if (l_ == 1) return is_prime(norm);
  const auto& table = std::get<TableLocalData>(finite_local_).places;
  return table.contains(norm);
}

std::optional<std::uint64_t> RepresentationSpec::data_horizon() const {
  if (is_builtin()) return std::nullopt;
  const auto& table = std::get<TableLocalData>(finite_local_).places;
  if (table.empty()) return 0;
  return table.rbegin()->first;
}

std::vector<Complex> canonicalize(std::vector<Complex> values) {
  std::sort(values.begin(), values.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return values;
}

std::vector<Complex> satake_at(const RepresentationSpec& spec, const PlaceNorm& v) {
  if (const auto* rule = std::get_if<BuiltinLocalData>(&spec.finite_local())) {
    if (v.exponent() != 1) throw MissingLocalDataError(spec.name(), v.value());
    return canonicalize(generate(*rule, v.prime()));
  }
  const auto& table = std::get<TableLocalData>(spec.finite_local()).places;
  const auto it = table.find(v.value());
  if (it == table.end()) throw MissingLocalDataError(spec.name(), v.value());
  return canonicalize(it->second);
}

bool locally_equivalent(const RepresentationSpec& a, const RepresentationSpec& b, const PlaceNorm& v, double tol) {
  if (a.m() != b.m()) return false;
  const auto x = satake_at(a, v);
  const auto y = satake_at(b, v);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(std::abs(x[i] - y[i]) <= tol)) return false;
  }
  return true;
}

RepresentationSpec load_spec(const nlohmann::json& doc) {
  if (!doc.is_object()) throw SpecError("malformed document: expected a JSON object");
  try {
    const auto name = doc.at("name").get<std::string>();
    const auto m = doc.at("m").get<long long>();
    const auto l = doc.at("l").get<long long>();
    const auto q = doc.at("q_arith").get<long long>();
    if (m <= 0) throw SpecError("degree must be positive");
    if (l <= 0) throw SpecError("field degree must be positive");
    if (q <= 0) throw SpecError("arithmetic conductor must be a positive integer");

    const auto& arch = doc.at("arch_params");
    if (!arch.is_array()) throw SpecError("malformed document: arch_params must be an array");
    std::vector<Complex> params;
    for (const auto& b : arch) params.push_back(parse_complex(b, "arch_params entry"));

    const auto& local = doc.at("finite_local");
    if (!local.is_object() || local.size() != 1) {
      throw SpecError("malformed document: finite_local must hold exactly one of 'builtin' or 'table'");
    }
    LocalDataSource source;
    if (local.contains("builtin")) {
      source = parse_builtin(local.at("builtin").get<std::string>());
    } else if (local.contains("table")) {
      TableLocalData table;
      for (const auto& [key, values] : local.at("table").items()) {
        if (key.empty() || !std::all_of(key.begin(), key.end(), [](char c) { return c >= '0' && c <= '9'; })) {
          throw SpecError("malformed document: table key '" + key + "' is not a positive integer");
        }
        if (!values.is_array()) throw SpecError("malformed document: table entry must be an array");
        std::vector<Complex> alphas;
        for (const auto& a : values) alphas.push_back(parse_complex(a, "Satake value at " + key));
        table.places.emplace(std::stoull(key), std::move(alphas));
      }
      source = std::move(table);
    } else {
      throw SpecError("malformed document: finite_local must hold 'builtin' or 'table'");
    }
    return RepresentationSpec(name, static_cast<int>(m), static_cast<int>(l), static_cast<std::uint64_t>(q),
                              std::move(params), std::move(source));
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("malformed document: ") + e.what());
  }
}

RepresentationSpec load_spec_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecError(std::string("malformed document: ") + e.what());
  }
  return load_spec(doc);
}

RepresentationSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("unreadable spec file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_spec_text(buffer.str());
}

nlohmann::ordered_json spec_to_json(const RepresentationSpec& spec) {
  nlohmann::ordered_json out;
  out["name"] = spec.name();
  out["m"] = spec.m();
  out["l"] = spec.l();
  out["q_arith"] = spec.q_arith();
  auto arch = nlohmann::ordered_json::array();
  for (const auto& b : spec.arch_params()) arch.push_back(complex_to_json(b));
  out["arch_params"] = arch;
  nlohmann::ordered_json local;
  if (const auto* rule = std::get_if<BuiltinLocalData>(&spec.finite_local())) {
    local["builtin"] = rule->name();
  } else {
    nlohmann::ordered_json table = nlohmann::ordered_json::object();
    for (const auto& [norm, values] : std::get<TableLocalData>(spec.finite_local()).places) {
      auto row = nlohmann::ordered_json::array();
      for (const auto& a : values) row.push_back(complex_to_json(a));
      table[std::to_string(norm)] = row;
    }
    local["table"] = table;
  }
  out["finite_local"] = local;
  return out;
}

RepresentationSpec catalog_spec(std::string_view name) {
  const auto rule = parse_builtin(name);
  switch (rule.kind) {
    case BuiltinLocalData::Kind::trivial:
      return RepresentationSpec("trivial", 1, 1, 1, {Complex(0.0, 0.0)}, rule);
    case BuiltinLocalData::Kind::dirichlet_quadratic: {
      // Even characters (q = 1 mod 4) have b = 0, odd ones b = 1.
      const double b = (rule.modulus % 4 == 1) ? 0.0 : 1.0;
      return RepresentationSpec("chi" + std::to_string(rule.modulus), 1, 1, rule.modulus, {Complex(b, 0.0)}, rule);
    }
    case BuiltinLocalData::Kind::delta:
      // Weight k = 12, level 1: b = {(k-1)/2, (k+1)/2}.
      return RepresentationSpec("delta", 2, 1, 1, {Complex(5.5, 0.0), Complex(6.5, 0.0)}, rule);
  }
  throw std::logic_error("unknown builtin rule");
}

std::vector<RepresentationSpec> catalog() {
  return {catalog_spec("trivial"), catalog_spec("chi5"), catalog_spec("chi13"), catalog_spec("chi17"),
          catalog_spec("delta")};
}

std::optional<std::uint64_t> catalog_pair_conductor(const RepresentationSpec& a, const RepresentationSpec& b) {
  const auto* ra = std::get_if<BuiltinLocalData>(&a.finite_local());
  const auto* rb = std::get_if<BuiltinLocalData>(&b.finite_local());
  if (ra == nullptr || rb == nullptr) return std::nullopt;
  const auto canonical = [](const BuiltinLocalData& r) -> std::uint64_t {
    return r.kind == BuiltinLocalData::Kind::dirichlet_quadratic ? r.modulus : 1;
  };
  if (a.q_arith() != canonical(*ra) || b.q_arith() != canonical(*rb)) return std::nullopt;

  using Kind = BuiltinLocalData::Kind;
  if (ra->kind == Kind::trivial) return b.q_arith();
  if (rb->kind == Kind::trivial) return a.q_arith();
  if (ra->kind == Kind::dirichlet_quadratic && rb->kind == Kind::dirichlet_quadratic) {
    return ra->modulus == rb->modulus ? 1 : ra->modulus * rb->modulus;
  }
  // Twist of a level-1 GL(2) form by a primitive character mod q has conductor q^2.
  if (ra->kind == Kind::dirichlet_quadratic) return ra->modulus * ra->modulus;
  if (rb->kind == Kind::dirichlet_quadratic) return rb->modulus * rb->modulus;
  return 1;
}

RankinSelbergPair::RankinSelbergPair(RepresentationSpec left, RepresentationSpec right,
                                     std::optional<std::uint64_t> q_pair)
    : left_(std::move(left)), right_(std::move(right)) {
  if (left_.l() != right_.l()) throw SpecError("pair members must share the field degree l");
  const auto l = static_cast<std::size_t>(left_.l());
  const auto m = static_cast<std::size_t>(left_.m());
  const auto mp = static_cast<std::size_t>(right_.m());
  arch_params_.reserve(m * mp * l);
  for (std::size_t k = 0; k < l; ++k) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t jp = 0; jp < mp; ++jp) {
        arch_params_.push_back(left_.arch_params()[k * m + j] + std::conj(right_.arch_params()[k * mp + jp]));
      }
    }
  }
  if (q_pair) {
    if (*q_pair == 0) throw SpecError("pair conductor must be a positive integer");
    q_pair_ = q_pair;
  } else if (auto known = catalog_pair_conductor(left_, right_)) {
    q_pair_ = known;
  } else if (left_.q_arith() == 1 && right_.q_arith() == 1) {
    q_pair_ = 1;
  }
}

std::vector<Complex> RankinSelbergPair::dual_arch_params() const {
  std::vector<Complex> out;
  out.reserve(arch_params_.size());
  for (const auto& b : arch_params_) out.push_back(std::conj(b));
  return out;
}

}  // namespace asmo
