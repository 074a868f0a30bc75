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

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.h"
#include "secretary/aos.h"
#include "secretary/errors.h"
#include "secretary/ros.h"
#include "secretary/sim.h"

namespace secretary {
namespace {

TEST(Generators, Shapes) {
  const Instance inc = make_instance({GeneratorKind::kIncreasing, 4, {}, ""}, 0);
  EXPECT_EQ(inc.values(), (std::vector<double>{1, 2, 3, 4}));
  const Instance drop =
      make_instance({GeneratorKind::kIncreasingThenDrop, 5, 3, ""}, 0);
  EXPECT_EQ(drop.values(), (std::vector<double>{1, 2, 3, -1, -2}));
  EXPECT_THROW(make_instance({GeneratorKind::kIncreasingThenDrop, 5, 6, ""}, 0),
               DomainError);
  EXPECT_THROW(make_instance({GeneratorKind::kIncreasingThenDrop, 5, {}, ""}, 0),
               DomainError);
  const Instance u1 =
      make_instance({GeneratorKind::kUniformRandom, 50, {}, ""}, 9);
  const Instance u2 =
      make_instance({GeneratorKind::kUniformRandom, 50, {}, ""}, 9);
  EXPECT_EQ(u1.values(), u2.values());
  EXPECT_EQ(parse_generator("increasing-then-drop"),
            GeneratorKind::kIncreasingThenDrop);
  EXPECT_THROW(parse_generator("zigzag"), DomainError);
}

TEST(Generators, FromFile) {
  const std::string path = ::testing::TempDir() + "/instance.txt";
  {
    std::ofstream f(path);
    f << "# three values\n2.5\n-1\n7\n";
  }
  GeneratorSpec g{GeneratorKind::kFromFile, 0, {}, path};
  EXPECT_EQ(make_instance(g, 0).values(), (std::vector<double>{2.5, -1, 7}));
  g.path = path + ".missing";
  EXPECT_THROW(make_instance(g, 0), DomainError);
  std::remove(path.c_str());
}

TEST(RunTrials, Validation) {
  const GeneratorSpec g{GeneratorKind::kIncreasing, 10, {}, ""};
  EXPECT_THROW(run_trials({"nope", {}}, g, 0.5, 10, 1), DomainError);
  EXPECT_THROW(run_trials({"kmax", {}}, g, 0.5, 0, 1), DomainError);
  EXPECT_THROW(run_trials({"kmax", {}}, g, 1.5, 10, 1), DomainError);
  const TrialReport small = run_trials({"kmax", {}}, g, 0.5, 100, 1);
  EXPECT_FALSE(small.ci.has_value());
  const TrialReport big = run_trials({"kmax", {}}, g, 0.5, 10000, 1);
  ASSERT_TRUE(big.ci.has_value());
  EXPECT_DOUBLE_EQ(*big.ci, 3 * std::sqrt(big.estimate * (1 - big.estimate) /
                                          10000.0));
  EXPECT_DOUBLE_EQ(big.estimate, big.wins / 10000.0);
}

TEST(RunTrials, WorkerCountDoesNotChangeResults) {
  for (const std::string& policy : policy_names()) {
    for (auto kind : {GeneratorKind::kIncreasing, GeneratorKind::kUniformRandom}) {
      const GeneratorSpec g{kind, 30, {}, ""};
      const TrialReport a = run_trials({policy, {}}, g, 0.4, 5000, 77, 1);
      const TrialReport b = run_trials({policy, {}}, g, 0.4, 5000, 77, 3);
      const TrialReport c = run_trials({policy, {}}, g, 0.4, 5000, 77, 8);
      EXPECT_EQ(a.wins, b.wins) << policy;
      EXPECT_EQ(a.wins, c.wins) << policy;
      const TrialReport d = run_trials({policy, {}}, g, 0.4, 5000, 78, 1);
      if (a.wins != 0 && a.wins != a.trials) {
        EXPECT_NE(a.wins, d.wins) << policy;
      }
    }
  }
}

TEST(RunTrials, LazyThresholdRuleMatchesFullReplay) {
  const int n = 50;
  const double p = 0.4;
  const ThresholdSequence t = solve_thresholds(n + 1);
  std::vector<double> v(n);
  std::iota(v.begin(), v.end(), 1.0);
  const Instance inst(v);
  for (std::uint64_t trial = 0; trial < 5000; ++trial) {
    const ArrivalRealization a = draw_arrivals(n, p, 5, trial);
    const Stop s = alg_t_run(t, a, inst);
    bool win = s.is_vacuous();
    if (s.stopped()) {
      win = true;
      for (int e = static_cast<int>(s.index) + 1; e < n; ++e) {
        if (!a.in_sample(e)) win = false;
      }
    }
    ASSERT_EQ(alg_t_trial_by_rank(t, n, p, 5, trial), win) << trial;
  }
}

TEST(RunTrials, KmaxOnIncreasingThenDrop) {
  const GeneratorSpec g{GeneratorKind::kIncreasingThenDrop, 60, 40, ""};
  const TrialReport r = run_trials({"kmax", {}}, g, 0.5, 100000, 3);
  EXPECT_GE(r.estimate, kmax_guarantee(0.5).guarantee - *r.ci);
}

TEST(RunTrials, ThresholdRuleOnRandomValues) {
  const GeneratorSpec g{GeneratorKind::kUniformRandom, 2000, {}, ""};
  const TrialReport r = run_trials({"alg-t", {}}, g, 0.5, 20000, 11);
  EXPECT_GE(r.estimate, alg_t_guarantee_optimal(0.5) - *r.ci);
}

TEST(RunTrials, LastZeroGeneratorName) {
  const TrialReport r = run_trials({"lastzero-kmax", {}},
                                   {GeneratorKind::kIncreasing, 40, {}, ""},
                                   0.5, 1000, 2);
  EXPECT_EQ(r.generator, "bernoulli-string");
}

AosPolicy kmax_policy(int k) {
  return [k](std::span<const double> s, std::span<const double> o) {
    return kmax_run(KMaxPolicy(k), s, o);
  };
}

TEST(OracleAos, KmaxValues) {
  const AosOracleResult half = oracle_aos_exact(kmax_policy(2), 20, 0.5);
  EXPECT_NEAR(half.total(), 0.25, 1e-6);
  EXPECT_NEAR(half.vacuous, std::pow(0.5, 20), 1e-18);
  const AosOracleResult q = oracle_aos_exact(kmax_policy(4), 20, 0.75);
  EXPECT_NEAR(q.online_win, 81.0 / 256.0, 1e-4);
  EXPECT_NEAR(q.total(), oracle::kmax_increasing_exact(20, 4, 0.75), 1e-12);
  EXPECT_THROW(oracle_aos_exact(kmax_policy(1), 25, 0.5), DomainError);
}

TEST(OracleAos, FirstOnlineClosedForm) {
  const AosPolicy first = [](std::span<const double>,
                             std::span<const double> o) {
    return o.empty() ? Stop::vacuous() : Stop::at(1);
  };
  for (int n : {1, 2, 5, 12}) {
    for (double p : {0.0, 0.3, 0.9}) {
      const double closed =
          n * std::pow(p, n - 1) * (1 - p) + std::pow(p, n);
      EXPECT_NEAR(oracle_aos_exact(first, n, p).total(), closed, 1e-14);
    }
  }
}

TEST(OracleAos, ByHMatchesUnknownPTerms) {
  for (int n = 2; n <= 12; ++n) {
    const AosPolicy unknown = [n](std::span<const double> s,
                                  std::span<const double> o) {
      return kmax_unknown_p_run(n, s, o);
    };
    const auto by_h = oracle_aos_by_h(unknown, n);
    ASSERT_EQ(static_cast<int>(by_h.size()), n + 1);
    for (int h = 0; h <= n; ++h) {
      EXPECT_NEAR(by_h[h], kmax_unknown_p_term(n, h), 1e-12)
          << "n=" << n << " h=" << h;
    }
  }
}

TEST(OracleRos, SmallCases) {
  EXPECT_NEAR(oracle_ros_exact(EllFunction::constant(2, 1), 2, 0), 0.5, 1e-15);
  EXPECT_NEAR(oracle_ros_exact(EllFunction::constant(3, 1), 3, 1),
              seq_ell_success_given_h(3, 1, EllFunction::constant(3, 1)),
              1e-12);
  EXPECT_THROW(oracle_ros_exact(EllFunction::constant(9, 1), 9, 1),
               DomainError);
}

TEST(OracleRos, AgreesWithPipelineOracle) {
  for (int n = 1; n <= 6; ++n) {
    for (int h = 0; h < n; ++h) {
      const EllFunction ell = optimal_policy_dp(n).ell;
      EXPECT_NEAR(oracle_ros_exact(ell, n, h),
                  oracle::seq_ell_by_permutation(ell, n, h), 1e-15);
    }
  }
}

}  // namespace
}  // namespace secretary
