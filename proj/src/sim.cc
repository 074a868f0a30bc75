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

#include "secretary/sim.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <thread>

#include "secretary/aos.h"
#include "secretary/errors.h"
#include "secretary/lastzero.h"
#include "secretary/rng.h"

namespace secretary {

std::string generator_name(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kIncreasing:
      return "increasing";
    case GeneratorKind::kIncreasingThenDrop:
      return "increasing-then-drop";
    case GeneratorKind::kUniformRandom:
      return "uniform-random";
    case GeneratorKind::kFromFile:
      return "from-file";
  }
  return "unknown";
}

GeneratorKind parse_generator(const std::string& name) {
  for (auto k : {GeneratorKind::kIncreasing, GeneratorKind::kIncreasingThenDrop,
                 GeneratorKind::kUniformRandom, GeneratorKind::kFromFile}) {
    if (generator_name(k) == name) return k;
  }
  throw DomainError("unknown generator '" + name + "'");
}

Instance make_instance(const GeneratorSpec& gen, std::uint64_t seed) {
  if (gen.kind == GeneratorKind::kFromFile) return load_instance_file(gen.path);
  if (gen.n < 1) throw DomainError("generator needs n >= 1");
  const int n = gen.n;
  std::vector<double> values(n);
  switch (gen.kind) {
    case GeneratorKind::kIncreasing:
      std::iota(values.begin(), values.end(), 1.0);
      break;
    case GeneratorKind::kIncreasingThenDrop: {
      if (!gen.drop_point || *gen.drop_point < 1 || *gen.drop_point > n) {
        throw DomainError("increasing-then-drop needs 1 <= drop point <= n");
      }
      const int m = *gen.drop_point;
      for (int i = 0; i < n; ++i) values[i] = i < m ? i + 1.0 : -(i - m + 1.0);
      break;
    }
    case GeneratorKind::kUniformRandom: {
      CounterRng rng(seed, kInstanceStream);
      for (std::uint32_t attempt = 0;; ++attempt) {
        for (int i = 0; i < n; ++i) {
          values[i] = rng.uniform(CounterRng::element_counter(i, attempt));
        }
        std::vector<double> sorted(values);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
          break;
        }
      }
      break;
    }
    case GeneratorKind::kFromFile:
      break;
  }
  return Instance(std::move(values));
}

const std::vector<std::string>& policy_names() {
  static const std::vector<std::string> names = {
      "kmax", "kmax-unknown-p", "first-online", "alg-t", "seq-ell-dp",
      "lastzero-kmax"};
  return names;
}

bool alg_t_trial_by_rank(const ThresholdSequence& t, int n, double p,
                         std::uint64_t seed, std::uint64_t trial) {
  CounterRng rng(seed, trial);
  // Rank m (1 = largest) is element n - m of the increasing instance.
  auto tau = [&](int m) {
    return rng.uniform(CounterRng::element_counter(n - m));
  };
  auto acceptable = [&](double at, int samples_above) {
    const std::size_t k = t.index_at(at);
    if (k == 0) return false;
    if (k == t.count() && k <= static_cast<std::size_t>(samples_above)) {
      throw DomainError("threshold sequence too short for this trial");
    }
    return static_cast<std::size_t>(samples_above) < k;
  };
  int j = 1;
  double tj = 0.0;
  for (; j <= n; ++j) {
    tj = tau(j);
    if (tj >= p) break;
  }
  if (j > n) return true;  // every element sampled
  // max V is rank j with j - 1 samples above it. The best element arriving
  // in [p, tau_j) is the only one that can be accepted before it.
  int samples = j - 1;
  for (int m = j + 1; m <= n; ++m) {
    const double tm = tau(m);
    if (tm < p) {
      ++samples;
    } else if (tm < tj) {
      if (acceptable(tm, samples)) return false;
      break;
    }
  }
  return acceptable(tj, j - 1);
}

namespace {

struct TrialContext {
  PolicySpec policy;
  GeneratorSpec gen;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::optional<Instance> instance;
  std::optional<ThresholdSequence> thresholds;
  std::optional<EllFunction> ell;
  int k = 1;
  bool by_rank = false;
};

bool aos_trial(const TrialContext& ctx, std::uint64_t trial) {
  const Instance& inst = *ctx.instance;
  const SamplingOutcome out = sample(inst, ctx.p, ctx.seed, trial);
  std::vector<double> samples, online;
  for (std::size_t e = 0; e < inst.size(); ++e) {
    if (out.in_sample(e)) samples.push_back(inst.value(e));
  }
  for (std::size_t e : inst.order()) {
    if (!out.in_sample(e)) online.push_back(inst.value(e));
  }
  Stop s;
  const std::string& name = ctx.policy.name;
  if (name == "kmax") {
    s = kmax_run(KMaxPolicy(ctx.k), samples, online);
  } else if (name == "kmax-unknown-p") {
    s = kmax_unknown_p_run(static_cast<int>(inst.size()), samples, online);
  } else {
    s = online.empty() ? Stop::vacuous() : Stop::at(1);
  }
  if (s.is_vacuous()) return true;
  if (!s.stopped()) return false;
  return online[s.index - 1] == *std::max_element(online.begin(), online.end());
}

bool stopped_on_max_online(const Instance& inst, const SamplingOutcome& out,
                           std::size_t element) {
  for (std::size_t e = 0; e < inst.size(); ++e) {
    if (!out.in_sample(e) && inst.value(e) > inst.value(element)) return false;
  }
  return true;
}

bool run_one(const TrialContext& ctx, std::uint64_t trial) {
  const std::string& name = ctx.policy.name;
  if (name == "lastzero-kmax") {
    return simulate_last_zero(kmax_last_zero_policy(ctx.k), ctx.gen.n, ctx.p,
                              ctx.seed, trial);
  }
  if (name == "alg-t" && ctx.by_rank) {
    return alg_t_trial_by_rank(*ctx.thresholds, ctx.gen.n, ctx.p, ctx.seed,
                               trial);
  }
  if (name == "alg-t" || name == "seq-ell-dp") {
    const Instance& inst = *ctx.instance;
    const ArrivalRealization arr =
        draw_arrivals(inst.size(), ctx.p, ctx.seed, trial);
    const SamplingOutcome out = arr.outcome();
    if (name == "alg-t") {
      const Stop s = alg_t_run(*ctx.thresholds, arr, inst);
      if (s.is_vacuous()) return true;
      return s.stopped() && stopped_on_max_online(inst, out, s.index);
    }
    const auto views = rank_stream(inst, out, arr.arrival_order());
    const Stop s =
        seq_ell_run(*ctx.ell, static_cast<int>(out.sample_count()), views);
    if (s.is_vacuous()) return true;
    if (!s.stopped()) return false;
    const std::size_t first = out.sample_count() + 1;
    return stopped_on_max_online(inst, out, views[s.index - first].element);
  }
  return aos_trial(ctx, trial);
}

}  // namespace

TrialReport run_trials(const PolicySpec& policy, const GeneratorSpec& gen,
                       double p, std::uint64_t trials, std::uint64_t seed,
                       unsigned workers) {
  const auto& names = policy_names();
  if (std::find(names.begin(), names.end(), policy.name) == names.end()) {
    throw DomainError("unknown policy '" + policy.name + "'");
  }
  if (trials < 1) throw DomainError("trials must be at least 1");
  require_probability(p, "p");
  TrialContext ctx;
  ctx.policy = policy;
  ctx.gen = gen;
  ctx.p = p;
  ctx.seed = seed;
  if (policy.name == "kmax" || policy.name == "lastzero-kmax") {
    if (policy.k) {
      ctx.k = KMaxPolicy(*policy.k).k();
    } else {
      ctx.k = kmax_k(p);
    }
  }
  if (policy.name != "lastzero-kmax") {
    ctx.instance = make_instance(gen, seed);
    ctx.gen.n = static_cast<int>(ctx.instance->size());
  } else if (gen.n < 1) {
    throw DomainError("n must be positive");
  }
  if (policy.name == "alg-t") {
    // More than I thresholds are needed only when at least I samples beat
    // the element under consideration, which has probability p^I. Beyond
    // that the run throws instead of guessing.
    const std::size_t cap =
        p < 1.0 ? guarantee_terms_needed(p, 1e-12) + 1 : 1;
    ctx.thresholds = solve_thresholds(
        std::min(static_cast<std::size_t>(ctx.gen.n) + 1, cap));
    ctx.by_rank = gen.kind == GeneratorKind::kIncreasing;
  }
  if (policy.name == "seq-ell-dp") ctx.ell = optimal_policy_dp(ctx.gen.n).ell;

  workers = std::max(1u, workers);
  std::vector<std::uint64_t> wins(workers, 0);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    const std::uint64_t lo = trials * w / workers;
    const std::uint64_t hi = trials * (w + 1) / workers;
    try {
      for (std::uint64_t i = lo; i < hi; ++i) wins[w] += run_one(ctx, i);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  TrialReport r;
  r.policy = policy.name;
  r.generator = policy.name == "lastzero-kmax" ? "bernoulli-string"
                                               : generator_name(gen.kind);
  r.n = ctx.gen.n;
  r.p = p;
  r.trials = trials;
  r.wins = std::accumulate(wins.begin(), wins.end(), std::uint64_t{0});
  r.estimate = static_cast<double>(r.wins) / static_cast<double>(trials);
  if (trials >= kMinTrialsForCi) {
    r.ci = 3.0 * std::sqrt(r.estimate * (1.0 - r.estimate) /
                           static_cast<double>(trials));
  }
  r.seed = seed;
  return r;
}

AosOracleResult oracle_aos_exact(const AosPolicy& policy, int n, double p) {
  if (n < 1 || n > kMaxOracleAos) {
    throw DomainError("the exhaustive oracle handles 1 <= n <= 24");
  }
  require_probability(p, "p");
  std::vector<double> weight(n + 1);
  for (int h = 0; h <= n; ++h) {
    weight[h] = std::pow(p, h) * std::pow(1.0 - p, n - h);
  }
  AosOracleResult r;
  std::vector<double> samples, online;
  samples.reserve(n);
  online.reserve(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    samples.clear();
    online.clear();
    for (int i = 0; i < n; ++i) {
      ((mask >> i) & 1U ? samples : online).push_back(i + 1.0);
    }
    const double w = weight[samples.size()];
    if (online.empty()) {
      r.vacuous += w;
      continue;
    }
    const Stop s = policy(samples, online);
    // Increasing order: the last online value is max V.
    if (s.stopped() && s.index == online.size()) r.online_win += w;
  }
  return r;
}

std::vector<double> oracle_aos_by_h(const AosPolicy& policy, int n) {
  if (n < 1 || n > kMaxOracleAos) {
    throw DomainError("the exhaustive oracle handles 1 <= n <= 24");
  }
  std::vector<double> wins(n + 1, 0.0), total(n + 1, 0.0);
  std::vector<double> samples, online;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    samples.clear();
    online.clear();
    for (int i = 0; i < n; ++i) {
      ((mask >> i) & 1U ? samples : online).push_back(i + 1.0);
    }
    const std::size_t h = samples.size();
    total[h] += 1.0;
    if (online.empty()) {
      wins[h] += 1.0;
      continue;
    }
    const Stop s = policy(samples, online);
    if (s.stopped() && s.index == online.size()) wins[h] += 1.0;
  }
  for (int h = 0; h <= n; ++h) wins[h] /= total[h];
  return wins;
}

double oracle_ros_exact(const EllFunction& ell, int n, int h) {
  if (n < 1 || n > kMaxOracleRos) {
    throw DomainError("the permutation oracle handles 1 <= n <= 8");
  }
  if (ell.n() != n) throw DomainError("l is defined on a different n");
  if (h < 0 || h > n) throw DomainError("need 0 <= h <= n");
  if (h == n) return 1.0;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t wins = 0, count = 0;
  do {
    ++count;
    int best_online = -1;
    int max_online = -1;
    for (int i = h; i < n; ++i) max_online = std::max(max_online, perm[i]);
    for (int i = h; i < n; ++i) {
      const int v = perm[i];
      if (v < best_online) continue;
      best_online = v;
      int above = 0;
      for (int j = 0; j < i; ++j) above += perm[j] > v;
      if (above + 1 <= ell(i + 1)) {
        wins += v == max_online;
        break;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<double>(wins) / static_cast<double>(count);
}

}  // namespace secretary
