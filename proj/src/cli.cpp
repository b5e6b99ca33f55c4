#include "asmo/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "asmo/acceptance.hpp"
#include "asmo/archimedean.hpp"
#include "asmo/conductor.hpp"
#include "asmo/errors.hpp"
#include "asmo/config.hpp"
#include "asmo/lfunc.hpp"
#include "asmo/mellin.hpp"
#include "asmo/report.hpp"
#include "asmo/repspec.hpp"
#include "asmo/smone.hpp"

namespace asmo::cli {
namespace {

using Json = report::Json;

const std::vector<std::string> kSubcommands = {"coeffs", "conductor", "sum", "strip",
                                               "gbound", "mellin", "distinguish", "verify"};

// A file path when it exists or looks like one, otherwise a catalog name.
RepresentationSpec resolve_spec(const std::string& arg) {
  const bool path_like = arg.find('/') != std::string::npos || arg.ends_with(".json");
  if (path_like || std::filesystem::exists(arg)) return load_spec_file(arg);
  try {
    return catalog_spec(arg);
  } catch (const SpecError&) {
    throw std::runtime_error("unreadable spec file: " + arg + " (no such file and not a catalog name)");
  }
}

Complex parse_complex(const std::string& text) {
  static const std::regex pattern(
      R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*(?:([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*[ij])?\s*$)");
  std::smatch m;
  if (text.empty() || !std::regex_match(text, m, pattern) || (!m[1].matched && !m[2].matched)) {
    // A lone imaginary part such as "3i".
    static const std::regex imag_only(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*[ij]\s*$)");
    if (std::regex_match(text, m, imag_only)) return {0.0, std::stod(m[1].str())};
    throw std::invalid_argument("malformed complex number '" + text + "' (expected e.g. 2+3i)");
  }
  const double re = m[1].matched ? std::stod(m[1].str()) : 0.0;
  double im = 0.0;
  if (m[2].matched) {
    im = m[3].matched ? std::stod(m[3].str()) : 1.0;
    if (m[2].str() == "-") im = -im;
  }
  return {re, im};
}

struct Options {
  Tolerances tol;
  std::string out_path;
  std::optional<long long> seed;

  std::string spec;
  std::vector<std::string> pair;
  std::string a;
  std::string b;
  std::optional<std::uint64_t> q_pair;
  std::size_t max_n = 0;
  double t = 0.0;
  double x = 0.0;
  std::optional<double> T;
  std::optional<std::size_t> N;
  int n = 1;
  std::optional<double> h;
  double tmax = 100.0;
  std::size_t samples = 101;
  std::string s;
  bool roundtrip = false;
  std::size_t grid = 29;
  double epsilon = 0.1;
  double c = 1.0;
  std::optional<double> moreno_exponent;
};

RankinSelbergPair make_pair(const std::vector<std::string>& names, std::optional<std::uint64_t> q_pair) {
  return RankinSelbergPair(resolve_spec(names.at(0)), resolve_spec(names.at(1)), q_pair);
}

Json run_coeffs(const Options& o, const CLI::App& cmd) {
  if (cmd.count("--pair")) {
    const auto pair = make_pair(o.pair, o.q_pair);
    return report::coefficients(rs_coeffs(pair, o.max_n));
  }
  if (o.spec.empty()) throw std::invalid_argument("coeffs needs --spec or --pair");
  return report::coefficients(standard_coeffs(resolve_spec(o.spec), o.max_n));
}

Json run_conductor(const Options& o, const CLI::App& cmd) {
  const auto left = resolve_spec(o.spec);
  Json out;
  out["spec"] = left.name();
  out["t"] = o.t;
  out["analytic_conductor"] = analytic_conductor(left, o.t);
  if (cmd.count("--pair")) {
    if (o.pair.size() != 1) throw std::invalid_argument("conductor --pair takes one spec");
    const RankinSelbergPair pair(left, resolve_spec(o.pair.front()), o.q_pair);
    out["pair"] = pair.label();
    out["q_pair"] = *pair.q_pair();
    out["report"] = report::conductor(rs_conductor(pair, o.t, o.tol.conductor_slack));
  }
  return out;
}

Json run_sum(const Options& o) {
  const auto pair = make_pair(o.pair, o.q_pair);
  Json out;
  out["pair"] = pair.label();
  out["x"] = o.x;
  out["S"] = report::complex(smoothed_sum(pair, o.x));
  if (o.T) {
    const std::size_t need = static_cast<std::size_t>(std::ceil(3.0 * o.x));
    const std::size_t N = o.N.value_or(std::max<std::size_t>(need, 1));
    const LineTransform line(*o.T, o.tol.weight_spec());
    out["contour"] = report::contour(contour_identity(rs_coeffs(pair, N), line, o.x, *o.T, N));
  }
  return out;
}

Json run_strip(const Options& o) {
  const auto pair = make_pair(o.pair, o.q_pair);
  const PoleGeometry geometry(pair);
  Json out;
  out["pair"] = pair.label();
  out["degree"] = geometry.degree();
  out["line"] = report::admissible(admissible_line(geometry, o.n), geometry.exclusion_radius());
  return out;
}

Json run_gbound(const Options& o) {
  const auto pair = make_pair(o.pair, o.q_pair);
  const PoleGeometry geometry(pair);
  AdmissibleLine line{};
  if (o.h) {
    line = {*o.h, static_cast<int>(std::floor(*o.h)), geometry.line_clearance(-*o.h)};
  } else {
    line = admissible_line(geometry, o.n);
  }
  std::vector<double> grid;
  for (std::size_t i = 0; i < o.samples; ++i) {
    grid.push_back(o.samples == 1 ? 0.0 : o.tmax * static_cast<double>(i) / static_cast<double>(o.samples - 1));
  }
  Json out;
  out["pair"] = pair.label();
  out["line"] = report::admissible(line, geometry.exclusion_radius());
  out["growth"] = report::growth(g_growth_check(geometry, line, grid));
  return out;
}

Json run_mellin(const Options& o, const CLI::App& cmd) {
  const auto spec = o.tol.weight_spec();
  Json out;
  if (cmd.count("--s")) {
    const Complex s = parse_complex(o.s);
    out["transform"] = report::mellin(s, weight_mellin_detailed(s, spec));
  }
  if (cmd.count("--x") || o.roundtrip) {
    const double T = o.T.value_or(400.0);
    const LineTransform line(T, spec);
    std::vector<double> xs;
    if (cmd.count("--x")) xs.push_back(o.x);
    if (o.roundtrip) {
      for (std::size_t k = 1; k <= o.grid; ++k) xs.push_back(3.0 * k / static_cast<double>(o.grid + 1));
    }
    Json rows = Json::array();
    double worst = 0.0;
    for (const double x : xs) {
      const double approx = line.invert(x);
      const double residual = std::abs(approx - weight(x));
      worst = std::max(worst, residual);
      Json row;
      row["x"] = x;
      row["w"] = weight(x);
      row["inversion"] = approx;
      row["residual"] = residual;
      rows.push_back(row);
    }
    out["roundtrip"]["T"] = T;
    out["roundtrip"]["rows"] = rows;
    out["roundtrip"]["max_residual"] = worst;
  }
  if (out.empty()) throw std::invalid_argument("mellin needs --s, --x or --roundtrip");
  return out;
}

Json run_distinguish(const Options& o, int& status) {
  VerdictOptions v;
  v.epsilon = o.epsilon;
  v.c = o.c;
  v.max_norm = o.max_n;
  v.tol = o.tol.local_equivalence;
  v.moreno_exponent = o.moreno_exponent;
  const auto verdict = theorem_verdict(resolve_spec(o.a), resolve_spec(o.b), v);
  if (verdict.any_inconsistent()) status = kInconsistent;
  return report::verdict(verdict);
}

Json run_verify(int& status) {
  const auto result = run_acceptance();
  if (!result.all_passed()) status = kInconsistent;
  return result.to_json();
}

void check_tolerance(const std::string& name, double value) {
  if (!(value >= kMinToleranceOverride)) {
    std::ostringstream msg;
    msg << name << " must be at least " << kMinToleranceOverride << ", got " << value;
    throw std::invalid_argument(msg.str());
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.size() >= 2 && !args[1].starts_with("-") &&
      std::find(kSubcommands.begin(), kSubcommands.end(), args[1]) == kSubcommands.end()) {
    err << "error: unknown subcommand '" << args[1] << "'\n";
    return kError;
  }

  Options o;
  CLI::App app{"Rankin-Selberg local data, conductors, smoothed sums and distinguishing places"};
  app.name(args.empty() ? "asmo" : args[0]);
  app.set_help_flag("--help", "print this help");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", o.out_path, "write the report to this file");
  app.add_option("--seed", o.seed, "reserved; nothing is randomized in production paths");
  app.add_option("--tol-mellin", o.tol.mellin_abs, "absolute error accepted for W(s)");
  app.add_option("--mellin-log-step", o.tol.mellin_log_step, "trapezoid step for tabulating W on a line");
  app.add_option("--tol-local", o.tol.local_equivalence, "Satake multiset comparison tolerance");
  app.add_option("--tol-imag", o.tol.self_pair_imag, "imaginary part allowed in self-pair sums");
  app.add_option("--tol-conductor", o.tol.conductor_slack, "relative slack in the conductor inequality");

  auto* coeffs = app.add_subcommand("coeffs", "Dirichlet coefficients of a spec or a pair");
  coeffs->add_option("--spec", o.spec, "spec file or catalog name");
  coeffs->add_option("--pair", o.pair, "two specs")->expected(2);
  coeffs->add_option("--max-n", o.max_n, "number of coefficients")->required()->check(CLI::PositiveNumber);
  coeffs->add_option("--q-pair", o.q_pair, "pair conductor q")->check(CLI::PositiveNumber);

  auto* conductor = app.add_subcommand("conductor", "analytic conductors and the pair inequality");
  conductor->add_option("--spec", o.spec, "spec file or catalog name")->required();
  conductor->add_option("--pair", o.pair, "second spec")->expected(1);
  conductor->add_option("--t", o.t, "height t");
  conductor->add_option("--q-pair", o.q_pair, "pair conductor q")->check(CLI::PositiveNumber);

  auto* sum = app.add_subcommand("sum", "smoothed sum S(x), optionally against the contour integral");
  sum->add_option("--pair", o.pair, "two specs")->expected(2)->required();
  sum->add_option("--x", o.x, "x")->required()->check(CLI::PositiveNumber);
  sum->add_option("--T", o.T, "truncation height of the contour integral")->check(CLI::PositiveNumber);
  sum->add_option("--N", o.N, "Dirichlet series length (default ceil(3x))")->check(CLI::PositiveNumber);
  sum->add_option("--q-pair", o.q_pair, "pair conductor q")->check(CLI::PositiveNumber);

  auto* strip = app.add_subcommand("strip", "admissible vertical line Re s = -H with H in [n, n+1]");
  strip->add_option("--pair", o.pair, "two specs")->expected(2)->required();
  strip->add_option("--n", o.n, "n")->required()->check(CLI::PositiveNumber);

  auto* gbound = app.add_subcommand("gbound", "growth of G(-H + it) along a grid");
  gbound->set_help_flag("--help", "print this help");
  gbound->add_option("--pair", o.pair, "two specs")->expected(2)->required();
  gbound->add_option("--h", o.h, "H (default: the admissible line for --n)")->check(CLI::PositiveNumber);
  gbound->add_option("--n", o.n, "n for the admissible line")->check(CLI::PositiveNumber);
  gbound->add_option("--tmax", o.tmax, "largest t")->check(CLI::NonNegativeNumber);
  gbound->add_option("--samples", o.samples, "grid size")->check(CLI::PositiveNumber);

  auto* mellin = app.add_subcommand("mellin", "Mellin transform of the weight and its inversion");
  mellin->add_option("--s", o.s, "evaluate W(s), e.g. 2+3i");
  mellin->add_option("--x", o.x, "inversion at x")->check(CLI::PositiveNumber);
  mellin->add_option("--t,--T", o.T, "inversion height (default 400)")->check(CLI::PositiveNumber);
  mellin->add_flag("--roundtrip", o.roundtrip, "inversion residuals on the grid x = 3k/(g+1), k = 1..g");
  mellin->add_option("--grid", o.grid, "grid size g for --roundtrip (default 29)")->check(CLI::PositiveNumber);

  auto* distinguish = app.add_subcommand("distinguish", "first distinguishing place and threshold verdicts");
  distinguish->add_option("--a", o.a, "first spec")->required();
  distinguish->add_option("--b", o.b, "second spec")->required();
  o.max_n = 10000;
  distinguish->add_option("--max-n", o.max_n, "largest place norm scanned")->check(CLI::PositiveNumber);
  distinguish->add_option("--epsilon", o.epsilon, "epsilon")->check(CLI::PositiveNumber);
  distinguish->add_option("--c", o.c, "constant c")->check(CLI::PositiveNumber);
  distinguish->add_option("--moreno-exponent", o.moreno_exponent, "exponent of the GL(2) comparison row")
      ->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");

  std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }

  try {
    check_tolerance("--tol-mellin", o.tol.mellin_abs);
    check_tolerance("--mellin-log-step", o.tol.mellin_log_step);
    check_tolerance("--tol-local", o.tol.local_equivalence);
    check_tolerance("--tol-imag", o.tol.self_pair_imag);
    check_tolerance("--tol-conductor", o.tol.conductor_slack);

    int status = kOk;
    std::string command;
    Json payload;
    if (coeffs->parsed()) {
      command = "coeffs";
      payload = run_coeffs(o, *coeffs);
    } else if (conductor->parsed()) {
      command = "conductor";
      payload = run_conductor(o, *conductor);
    } else if (sum->parsed()) {
      command = "sum";
      payload = run_sum(o);
    } else if (strip->parsed()) {
      command = "strip";
      payload = run_strip(o);
    } else if (gbound->parsed()) {
      command = "gbound";
      payload = run_gbound(o);
    } else if (mellin->parsed()) {
      command = "mellin";
      payload = run_mellin(o, *mellin);
    } else if (distinguish->parsed()) {
      command = "distinguish";
      payload = run_distinguish(o, status);
    } else if (verify->parsed()) {
      command = "verify";
      payload = run_verify(status);
    }

    const std::string text = report::render(report::envelope(command, o.tol, std::move(payload)));
    if (o.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(o.out_path, std::ios::binary);
      if (!file) throw std::runtime_error("cannot write " + o.out_path);
      file << text;
    }
    return status;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run(args, out, err);
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace asmo::cli
