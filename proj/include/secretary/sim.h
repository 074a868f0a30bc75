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

#ifndef SECRETARY_SIM_H_
#define SECRETARY_SIM_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "secretary/core.h"
#include "secretary/ros.h"

namespace secretary {

enum class GeneratorKind {
  kIncreasing,
  kIncreasingThenDrop,
  kUniformRandom,
  kFromFile,
};

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::kIncreasing;
  int n = 1;
  std::optional<int> drop_point;  // increasing-then-drop only
  std::string path;               // from-file only
};

std::string generator_name(GeneratorKind kind);
GeneratorKind parse_generator(const std::string& name);

// Values for uniform-random come from the reserved instance stream of seed.
Instance make_instance(const GeneratorSpec& gen, std::uint64_t seed);

// Policies known to run_trials:
//   kmax            k-max, k from `k` or floor(1/(1-p))    adversarial order
//   kmax-unknown-p  k = floor(n/(n-|S|))                   adversarial order
//   first-online    accept the first online value          adversarial order
//   alg-t           ALG_t with the optimal thresholds      random order
//   seq-ell-dp      sequential-l-max with the DP's l       random order
//   lastzero-kmax   k-max read on the last-zero string     (n and p only)
struct PolicySpec {
  std::string name;
  std::optional<int> k;
};

const std::vector<std::string>& policy_names();

struct TrialReport {
  std::string policy;
  std::string generator;
  int n = 0;
  double p = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t wins = 0;
  double estimate = 0.0;
  std::optional<double> ci;  // 3 sigma, reported from 10^4 trials up
  std::uint64_t seed = 0;
};

inline constexpr std::uint64_t kMinTrialsForCi = 10000;

// Trial i uses stream i of seed, so the win count does not depend on the
// number of workers.
TrialReport run_trials(const PolicySpec& policy, const GeneratorSpec& gen,
                       double p, std::uint64_t trials, std::uint64_t seed,
                       unsigned workers = 1);

// ALG_t on an instance seen only through its value ranks: arrival times are
// drawn lazily for the elements in decreasing value order, stopping as soon
// as the outcome is decided. Element ids are those of the increasing
// instance (id n-1 holds the largest value). Returns true on a win.
bool alg_t_trial_by_rank(const ThresholdSequence& t, int n, double p,
                         std::uint64_t seed, std::uint64_t trial);

using AosPolicy = std::function<Stop(std::span<const double> samples,
                                     std::span<const double> online)>;

struct AosOracleResult {
  double online_win = 0.0;  // stopped on max V
  double vacuous = 0.0;     // V empty
  double total() const { return online_win + vacuous; }
};

inline constexpr int kMaxOracleAos = 24;

// Exact success probability on the increasing instance, summing over all
// 2^n sample sets.
AosOracleResult oracle_aos_exact(const AosPolicy& policy, int n, double p);

// Win probability conditional on |S| = h, for h = 0..n.
std::vector<double> oracle_aos_by_h(const AosPolicy& policy, int n);

inline constexpr int kMaxOracleRos = 8;

// Exact success frequency of sequential-l-max over all n! rank orders, the
// first h positions being samples.
double oracle_ros_exact(const EllFunction& ell, int n, int h);

}  // namespace secretary

#endif  // SECRETARY_SIM_H_
