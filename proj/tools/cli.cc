// Copyright 2026 The Secretary Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "output.h"
#include "secretary/aos.h"
#include "secretary/errors.h"
#include "secretary/lastzero.h"
#include "secretary/ros.h"
#include "secretary/sim.h"

namespace secretary::cli {

namespace {

// Shortest text that parses back to the same double, for the command echo.
std::string exact_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

// Collects the parameter echo and the canonical re-run command.
class Echo {
 public:
  explicit Echo(std::string path) : path_(std::move(path)) {}

  void add(const std::string& flag, double v) {
    params_.emplace_back(flag, v);
    args_.push_back("--" + flag + " " + exact_number(v));
  }
  void add(const std::string& flag, std::int64_t v) {
    params_.emplace_back(flag, v);
    args_.push_back("--" + flag + " " + std::to_string(v));
  }
  void add(const std::string& flag, std::uint64_t v) {
    params_.emplace_back(flag, v);
    args_.push_back("--" + flag + " " + std::to_string(v));
  }
  void add(const std::string& flag, const std::string& v) {
    params_.emplace_back(flag, v);
    args_.push_back("--" + flag + " " + v);
  }

  std::string command(Format format) const {
    std::string s = std::string(kToolName) + " " + path_;
    for (const auto& a : args_) s += " " + a;
    s += format == Format::kCsv ? " --format csv" : " --format json";
    return s;
  }

  Envelope envelope(Format format) const {
    Envelope env;
    env.command = command(format);
    env.params = params_;
    return env;
  }

 private:
  std::string path_;
  std::vector<std::pair<std::string, Cell>> params_;
  std::vector<std::string> args_;
};

unsigned workers_from_env() {
  const char* s = std::getenv(kWorkersEnv);
  if (s == nullptr || *s == '\0') return 1;
  unsigned w = 0;
  const char* end = s + std::char_traits<char>::length(s);
  auto [ptr, ec] = std::from_chars(s, end, w);
  if (ec != std::errc() || ptr != end || w < 1 || w > 1024) {
    throw DomainError(std::string(kWorkersEnv) +
                      " must be an integer in [1, 1024]");
  }
  return w;
}

void require_positive(std::int64_t v, const char* what) {
  if (v < 1) throw DomainError(std::string(what) + " must be at least 1");
}

void require_tolerance(double v, const char* what) {
  if (!(v > 0.0 && v < 1.0)) {
    throw DomainError(std::string(what) + " must lie in (0, 1)");
  }
}

std::int64_t i64(std::size_t v) { return static_cast<std::int64_t>(v); }

struct Options {
  std::string format = "csv";
  std::string out;

  double p = 0.5;
  std::int64_t n = 10;
  double tail_tol = 1e-10;
  double step = 0.01;
  std::int64_t count = 10;
  double tol = 1e-12;
  std::string form = "exact";
  std::string table = "ell";

  std::string policy = "kmax";
  std::string generator = "increasing";
  std::int64_t trials = 10000;
  std::uint64_t seed = 1;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> drop_point;
  std::string file;

  std::string kind = "fill-in";
  std::int64_t first = 1;
  std::int64_t last = 8;
};

// What a subcommand produces: a table envelope or free text with its own
// comment prefix (edge lists and DOT files).
struct Result {
  std::optional<Envelope> table;
  std::string text;
};

std::string text_header(const std::string& prefix, const std::string& cmd) {
  std::ostringstream os;
  os << prefix << " tool: " << kToolName << ' ' << kToolVersion << '\n';
  os << prefix << " command: " << cmd << '\n';
  return os.str();
}

Result cmd_guarantee_aos(const Options& o, Format f) {
  Echo echo("guarantee aos");
  echo.add("p", o.p);
  const AosGuarantee g = kmax_guarantee(o.p);
  Envelope env = echo.envelope(f);
  env.columns = {"p", "k", "guarantee", "lower_bound", "upper_bound"};
  env.rows.push_back({g.p, std::int64_t{g.k}, g.guarantee, g.lower_bound,
                      g.upper_bound});
  return {env, {}};
}

Result cmd_guarantee_ros(const Options& o, Format f) {
  Echo echo("guarantee ros");
  echo.add("p", o.p);
  echo.add("tail-tol", o.tail_tol);
  require_tolerance(o.tail_tol, "tail-tol");
  const std::size_t terms = guarantee_terms_needed(o.p, o.tail_tol);
  const ThresholdSequence t = solve_thresholds(terms);
  const double g = alg_t_guarantee(t, o.p, o.tail_tol);
  Envelope env = echo.envelope(f);
  env.columns = {"p", "terms", "guarantee"};
  env.rows.push_back({o.p, i64(terms), g});
  return {env, {}};
}

Result cmd_guarantee_unknown_p(const Options& o, Format f) {
  Echo echo("guarantee unknown-p");
  echo.add("n", o.n);
  echo.add("p", o.p);
  require_positive(o.n, "n");
  if (o.n > 1000000) throw DomainError("n must be at most 10^6");
  const UnknownPSuccess s = kmax_unknown_p_success(static_cast<int>(o.n), o.p);
  Envelope env = echo.envelope(f);
  env.columns = {"n", "p", "exact", "approx", "vacuous"};
  env.rows.push_back({o.n, o.p, s.exact, s.approx, s.vacuous});
  return {env, {}};
}

Result cmd_sweep(const Options& o, Format f) {
  Echo echo("sweep");
  echo.add("step", o.step);
  echo.add("tail-tol", o.tail_tol);
  if (!(o.step > 0.0 && o.step <= 0.1)) {
    throw DomainError("step must lie in (0, 0.1]");
  }
  require_tolerance(o.tail_tol, "tail-tol");
  std::vector<double> grid;
  for (std::int64_t i = 1;; ++i) {
    const double p = static_cast<double>(i) * o.step;
    if (p >= 1.0 - 1e-12) break;
    grid.push_back(p);
  }
  // One threshold set, long enough for the largest p, serves every row.
  std::size_t terms = 1;
  for (double p : grid) {
    terms = std::max(terms, guarantee_terms_needed(p, o.tail_tol));
  }
  const ThresholdSequence t = solve_thresholds(terms);
  Envelope env = echo.envelope(f);
  env.columns = {"p",           "aos_guarantee", "aos_lower",
                 "aos_upper",   "ros_guarantee", "aos_k"};
  for (double p : grid) {
    const AosGuarantee g = kmax_guarantee(p);
    env.rows.push_back({p, g.guarantee, g.lower_bound, g.upper_bound,
                        alg_t_guarantee(t, p, o.tail_tol), std::int64_t{g.k}});
  }
  return {env, {}};
}

Result cmd_thresholds(const Options& o, Format f) {
  Echo echo("thresholds");
  echo.add("count", o.count);
  echo.add("tol", o.tol);
  require_positive(o.count, "count");
  if (o.count > 1000000) throw DomainError("count must be at most 10^6");
  require_tolerance(o.tol, "tol");
  const ThresholdSequence t =
      solve_thresholds(static_cast<std::size_t>(o.count), o.tol);
  Envelope env = echo.envelope(f);
  env.columns = {"i", "t"};
  for (std::size_t i = 1; i <= t.count(); ++i) {
    env.rows.push_back({i64(i), t.at(i)});
  }
  return {env, {}};
}

Result cmd_success(const Options& o, Format f) {
  Echo echo("success");
  echo.add("n", o.n);
  echo.add("p", o.p);
  echo.add("form", o.form);
  require_positive(o.n, "n");
  if (o.n > 1000) throw DomainError("n must be at most 1000");
  const StopBeforeForm form =
      o.form == "shifted" ? StopBeforeForm::kShifted : StopBeforeForm::kExact;
  const int n = static_cast<int>(o.n);
  const ThresholdSequence t = solve_thresholds(static_cast<std::size_t>(n));
  Envelope env = echo.envelope(f);
  env.columns = {"n", "p", "success"};
  env.rows.push_back({o.n, o.p, alg_t_success_prob(t, o.p, n, 1e-12, form)});
  return {env, {}};
}

Result cmd_dp(const Options& o, Format f) {
  Echo echo("dp");
  echo.add("n", o.n);
  echo.add("table", o.table);
  require_positive(o.n, "n");
  if (o.n > 2000) throw DomainError("n must be at most 2000");
  const int n = static_cast<int>(o.n);
  const OptimalPolicy pol = optimal_policy_dp(n);
  Envelope env = echo.envelope(f);
  if (o.table == "ell") {
    env.columns = {"j", "ell"};
    for (int j = 1; j <= n; ++j) {
      env.rows.push_back({std::int64_t{j}, std::int64_t{pol.ell(j)}});
    }
  } else {
    env.columns = {"j", "r", "W"};
    for (int j = 0; j <= n; ++j) {
      for (int r = 1; r <= j + 1; ++r) {
        env.rows.push_back(
            {std::int64_t{j}, std::int64_t{r}, pol.table(j, r)});
      }
    }
  }
  return {env, {}};
}

Result cmd_gamma(const Options& o, Format f) {
  Echo echo("gamma");
  echo.add("tol", o.tol);
  require_tolerance(o.tol, "tol");
  const GammaResult g = gamma_constants(o.tol);
  Envelope env = echo.envelope(f);
  env.columns = {"c", "gamma", "c_residual", "tail_error"};
  env.rows.push_back({g.c, g.gamma, g.c_residual, g.tail_error});
  return {env, {}};
}

Result cmd_simulate(const Options& o, Format f) {
  Echo echo("simulate");
  echo.add("policy", o.policy);
  echo.add("generator", o.generator);
  echo.add("n", o.n);
  echo.add("p", o.p);
  echo.add("trials", o.trials);
  echo.add("seed", o.seed);
  if (o.k) echo.add("k", *o.k);
  if (o.drop_point) echo.add("drop-point", *o.drop_point);
  if (!o.file.empty()) echo.add("file", o.file);
  require_positive(o.n, "n");
  require_positive(o.trials, "trials");
  if (o.n > 10000000) throw DomainError("n must be at most 10^7");

  GeneratorSpec gen;
  gen.kind = parse_generator(o.generator);
  gen.n = static_cast<int>(o.n);
  if (o.drop_point) gen.drop_point = static_cast<int>(*o.drop_point);
  gen.path = o.file;
  if (gen.kind == GeneratorKind::kFromFile && gen.path.empty()) {
    throw DomainError("generator from-file needs --file");
  }
  PolicySpec pol;
  pol.name = o.policy;
  if (o.k) pol.k = static_cast<int>(*o.k);

  const TrialReport r =
      run_trials(pol, gen, o.p, static_cast<std::uint64_t>(o.trials), o.seed,
                 workers_from_env());
  Envelope env = echo.envelope(f);
  env.columns = {"policy", "generator", "n",        "p",  "trials",
                 "wins",   "estimate",  "ci",       "seed"};
  env.rows.push_back({r.policy, r.generator, std::int64_t{r.n}, r.p,
                      r.trials, r.wins, r.estimate,
                      r.ci ? Cell{*r.ci} : Cell{}, r.seed});
  return {env, {}};
}

void require_bit_length(std::int64_t n) {
  if (n < 1 || n > kMaxBitLength) {
    throw DomainError("n must lie in [1, 24]");
  }
}

Result cmd_conflict_census(const Options& o, Format f) {
  Echo echo("conflict census");
  echo.add("n", o.n);
  echo.add("p", o.p);
  require_bit_length(o.n);
  Envelope env = echo.envelope(f);
  env.columns = {"size", "degree", "count", "weight"};
  for (const CensusRow& row : degree_census(static_cast<int>(o.n), o.p)) {
    if (row.count == 0) continue;
    env.rows.push_back({std::int64_t{row.size}, std::int64_t{row.degree},
                        row.count, row.weight});
  }
  return {env, {}};
}

Result cmd_conflict_graph(const Options& o, Format f, bool dot) {
  Echo echo(dot ? "conflict dot" : "conflict edges");
  echo.add("n", o.n);
  require_bit_length(o.n);
  if (f != Format::kCsv) {
    throw DomainError(std::string(dot ? "dot" : "edges") +
                      " output is plain text; drop --format json");
  }
  std::ostringstream os;
  std::string cmd = echo.command(f);
  cmd.resize(cmd.size() - std::string(" --format csv").size());
  if (dot) {
    os << text_header("//", cmd);
    write_dot(os, static_cast<int>(o.n));
  } else {
    os << text_header("#", cmd);
    write_edge_list(os, static_cast<int>(o.n));
  }
  return {std::nullopt, os.str()};
}

Result cmd_conflict_strategy(const Options& o, Format f) {
  Echo echo("conflict strategy");
  echo.add("kind", o.kind);
  echo.add("first", o.first);
  echo.add("last", o.last);
  echo.add("p", o.p);
  if (o.kind == "kmax" && o.k) echo.add("k", *o.k);
  if (o.kind == "random") echo.add("seed", o.seed);
  if (o.first < 1 || o.first > o.last || o.last > kMaxBitLength) {
    throw DomainError("window must satisfy 1 <= first <= last <= 24");
  }
  require_probability(o.p, "p");
  const Window w{static_cast<int>(o.first), static_cast<int>(o.last)};
  std::optional<WindowStrategy> s;
  if (o.kind == "fill-in") {
    s = fill_in(w, o.p);
  } else if (o.kind == "kmax") {
    const int k = o.k ? static_cast<int>(*o.k) : kmax_k(o.p);
    s = kmax_selection(w, k);
  } else {
    s = random_valid_strategy(w, o.seed);
  }
  Envelope env = echo.envelope(f);
  env.summary.emplace_back("average_performance",
                           average_performance(*s, o.p));
  env.columns = {"size", "selected", "performance", "cover_ratio"};
  for (int size = w.first; size <= w.last; ++size) {
    env.rows.push_back({std::int64_t{size}, i64(s->selected(size).size()),
                        performance(*s, size, o.p),
                        cover_ratio(*s, size, o.p)});
  }
  return {env, {}};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  Options o;
  CLI::App app{"Secretary problem with independent sampling: guarantees, "
               "thresholds, dynamic programs, simulation and conflict graphs",
               kToolName};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", o.out, "Write to this path instead of stdout");

  auto* guarantee = app.add_subcommand("guarantee", "Success guarantees");
  guarantee->require_subcommand(1);
  auto* g_aos = guarantee->add_subcommand("aos", "k-max guarantee");
  g_aos->add_option("--p", o.p, "Sampling probability")->required();
  auto* g_ros = guarantee->add_subcommand("ros", "Time-threshold guarantee");
  g_ros->add_option("--p", o.p, "Sampling probability")->required();
  g_ros->add_option("--tail-tol", o.tail_tol, "Series truncation bound")
      ->capture_default_str();
  auto* g_unk =
      guarantee->add_subcommand("unknown-p", "k-max without knowing p");
  g_unk->add_option("--n", o.n, "Number of elements")->required();
  g_unk->add_option("--p", o.p, "Sampling probability")->required();

  auto* sweep = app.add_subcommand("sweep", "Guarantee curves over p");
  sweep->add_option("--step", o.step, "Grid step in (0, 0.1]")
      ->capture_default_str();
  sweep->add_option("--tail-tol", o.tail_tol, "Series truncation bound")
      ->capture_default_str();

  auto* thresholds =
      app.add_subcommand("thresholds", "Optimal threshold sequence");
  thresholds->add_option("--count", o.count, "Number of thresholds")
      ->capture_default_str();
  thresholds->add_option("--tol", o.tol, "Root tolerance")
      ->capture_default_str();

  auto* success =
      app.add_subcommand("success", "Finite-n success of the threshold rule");
  success->add_option("--n", o.n, "Number of elements")->required();
  success->add_option("--p", o.p, "Sampling probability")->required();
  success->add_option("--form", o.form, "Stop-before factor")
      ->check(CLI::IsMember({"exact", "shifted"}))
      ->capture_default_str();

  auto* dp = app.add_subcommand("dp", "Optimal rank rule by backward induction");
  dp->add_option("--n", o.n, "Number of elements")->required();
  dp->add_option("--table", o.table, "Which table to print")
      ->check(CLI::IsMember({"ell", "w"}))
      ->capture_default_str();

  auto* gamma = app.add_subcommand("gamma", "Limit constants c and gamma");
  gamma->add_option("--tol", o.tol, "Tolerance")->capture_default_str();

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo trials");
  simulate->add_option("--policy", o.policy, "Policy")
      ->check(CLI::IsMember(policy_names()))
      ->capture_default_str();
  simulate
      ->add_option("--generator", o.generator,
                   "increasing, increasing-then-drop, uniform-random, "
                   "from-file")
      ->capture_default_str();
  simulate->add_option("--n", o.n, "Number of elements")->required();
  simulate->add_option("--p", o.p, "Sampling probability")->required();
  simulate->add_option("--trials", o.trials, "Number of trials")
      ->capture_default_str();
  simulate->add_option("--seed", o.seed, "Seed")->capture_default_str();
  simulate->add_option("--k", o.k, "Override k for k-max policies");
  simulate->add_option("--drop-point", o.drop_point,
                       "Last increasing position for increasing-then-drop");
  simulate->add_option("--file", o.file, "Instance file for from-file");

  auto* conflict = app.add_subcommand("conflict", "Last-zero conflict graph");
  conflict->require_subcommand(1);
  auto* c_census = conflict->add_subcommand("census", "Degree census");
  c_census->add_option("--n", o.n, "Largest string length")->required();
  c_census->add_option("--p", o.p, "Probability of a 1")
      ->capture_default_str();
  auto* c_edges = conflict->add_subcommand("edges", "Edge list as text");
  c_edges->add_option("--n", o.n, "Largest string length")->required();
  auto* c_dot = conflict->add_subcommand("dot", "Graph in DOT format");
  c_dot->add_option("--n", o.n, "Largest string length")->required();
  auto* c_strategy =
      conflict->add_subcommand("strategy", "Window strategy report");
  c_strategy->add_option("--kind", o.kind, "Strategy")
      ->check(CLI::IsMember({"fill-in", "kmax", "random"}))
      ->capture_default_str();
  c_strategy->add_option("--first", o.first, "First size in the window")
      ->capture_default_str();
  c_strategy->add_option("--last", o.last, "Last size in the window")
      ->capture_default_str();
  c_strategy->add_option("--p", o.p, "Probability of a 1")->required();
  c_strategy->add_option("--k", o.k, "k for the k-max selection");
  c_strategy->add_option("--seed", o.seed, "Seed for the random strategy")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const Format f = o.format == "json" ? Format::kJson : Format::kCsv;
  Result result;
  try {
    if (g_aos->parsed()) {
      result = cmd_guarantee_aos(o, f);
    } else if (g_ros->parsed()) {
      result = cmd_guarantee_ros(o, f);
    } else if (g_unk->parsed()) {
      result = cmd_guarantee_unknown_p(o, f);
    } else if (sweep->parsed()) {
      result = cmd_sweep(o, f);
    } else if (thresholds->parsed()) {
      result = cmd_thresholds(o, f);
    } else if (success->parsed()) {
      result = cmd_success(o, f);
    } else if (dp->parsed()) {
      result = cmd_dp(o, f);
    } else if (gamma->parsed()) {
      result = cmd_gamma(o, f);
    } else if (simulate->parsed()) {
      result = cmd_simulate(o, f);
    } else if (c_census->parsed()) {
      result = cmd_conflict_census(o, f);
    } else if (c_edges->parsed()) {
      result = cmd_conflict_graph(o, f, false);
    } else if (c_dot->parsed()) {
      result = cmd_conflict_graph(o, f, true);
    } else if (c_strategy->parsed()) {
      result = cmd_conflict_strategy(o, f);
    }
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNoConvergence;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ostringstream buf;
  if (result.table) {
    write_envelope(buf, *result.table, f);
  } else {
    buf << result.text;
  }
  if (o.out.empty()) {
    out << buf.str();
    return kExitOk;
  }
  std::ofstream file(o.out, std::ios::binary);
  file << buf.str();
  file.close();
  if (!file) {
    err << "error: cannot write " << o.out << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back(kToolName);
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace secretary::cli
