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
#include <numeric>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "secretary/core.h"
#include "secretary/errors.h"
#include "secretary/rng.h"

namespace secretary {
namespace {

TEST(Instance, RejectsTiesAndBadOrders) {
  EXPECT_THROW(Instance({1.0, 2.0, 1.0}), DomainError);
  EXPECT_THROW(Instance({1.0, NAN}), DomainError);
  EXPECT_THROW(Instance({1.0, 2.0}, {0, 0}), DomainError);
  EXPECT_THROW(Instance({1.0, 2.0}, {0}), DomainError);
  EXPECT_THROW(Instance(std::vector<double>{}), DomainError);
  const Instance ok({3.0, 1.0, 2.0}, {2, 0, 1});
  EXPECT_EQ(ok.size(), 3u);
}

TEST(Instance, ReadsFileFormat) {
  std::istringstream in("# header\n3.5\n\n  -1e2 \n# note\n+7\n");
  const Instance inst = read_instance(in);
  ASSERT_EQ(inst.size(), 3u);
  EXPECT_EQ(inst.value(0), 3.5);
  EXPECT_EQ(inst.value(1), -100.0);
  EXPECT_EQ(inst.value(2), 7.0);
  std::istringstream bad("1\nabc\n");
  EXPECT_THROW(read_instance(bad), DomainError);
  std::istringstream tie("1\n1\n");
  EXPECT_THROW(read_instance(tie), DomainError);
}

TEST(Sample, DegenerateProbabilities) {
  const Instance inst({1, 2, 3, 4, 5});
  EXPECT_EQ(sample(inst, 0.0, 9).sample_count(), 0u);
  EXPECT_EQ(sample(inst, 1.0, 9).sample_count(), 5u);
  EXPECT_THROW(sample(inst, 1.5, 9), DomainError);
  EXPECT_THROW(sample(inst, -0.1, 9), DomainError);
}

TEST(Sample, IsPureFunctionOfInputs) {
  std::vector<double> v(100);
  std::iota(v.begin(), v.end(), 0.0);
  const Instance inst(v);
  for (std::uint64_t seed : {0ull, 1ull, 12345ull}) {
    EXPECT_EQ(sample(inst, 0.3, seed).sample_mask(),
              sample(inst, 0.3, seed).sample_mask());
  }
  EXPECT_NE(sample(inst, 0.5, 1).sample_mask(),
            sample(inst, 0.5, 2).sample_mask());
}

TEST(Sample, LargeInstanceRate) {
  const std::size_t n = 1000000;
  std::vector<double> v(n);
  std::iota(v.begin(), v.end(), 0.0);
  const Instance inst(std::move(v));
  const SamplingOutcome out = sample(inst, 0.5, 2024);
  const double rate = static_cast<double>(out.sample_count()) / n;
  EXPECT_NEAR(rate, 0.5, 0.002);
}

TEST(Sample, PerElementRateOverSeeds) {
  const Instance inst({1, 2, 3});
  const int seeds = 1000000;
  const double p = 0.3;
  std::vector<int> hits(3, 0);
  for (int s = 0; s < seeds; ++s) {
    const SamplingOutcome out = sample(inst, p, static_cast<std::uint64_t>(s));
    for (std::size_t e = 0; e < 3; ++e) hits[e] += out.in_sample(e);
  }
  const double sigma = std::sqrt(p * (1 - p) / seeds);
  for (int h : hits) {
    EXPECT_NEAR(static_cast<double>(h) / seeds, p, 3 * sigma);
  }
}

TEST(DrawArrivals, Partition) {
  const ArrivalRealization a0 = draw_arrivals(50, 0.0, 3);
  EXPECT_EQ(a0.outcome().sample_count(), 0u);
  const ArrivalRealization a1 = draw_arrivals(1, 1.0, 3);
  EXPECT_EQ(a1.outcome().sample_count(), 1u);
  const ArrivalRealization a = draw_arrivals(100000, 0.3, 77);
  std::size_t below = 0;
  for (double t : a.times()) {
    ASSERT_GE(t, 0.0);
    ASSERT_LE(t, 1.0);
    below += t < 0.3;
  }
  EXPECT_EQ(below, a.outcome().sample_count());
  EXPECT_NEAR(static_cast<double>(below) / 100000, 0.3, 0.005);
  const auto order = a.arrival_order();
  for (std::size_t i = 1; i < order.size(); ++i) {
    ASSERT_LT(a.time(order[i - 1]), a.time(order[i]));
  }
  EXPECT_THROW(draw_arrivals(0, 0.5, 1), DomainError);
}

TEST(DrawArrivals, Reproducible) {
  EXPECT_EQ(draw_arrivals(20, 0.4, 5, 3).times(),
            draw_arrivals(20, 0.4, 5, 3).times());
  EXPECT_NE(draw_arrivals(20, 0.4, 5, 3).times(),
            draw_arrivals(20, 0.4, 5, 4).times());
}

TEST(ArrivalRealization, RejectsTimesOutsideUnitInterval) {
  EXPECT_THROW(ArrivalRealization({0.5, 1.5}, 0.2), DomainError);
}

std::vector<bool> flags(const std::vector<RankView>& v) {
  std::vector<bool> out;
  for (const auto& r : v) out.push_back(r.online_rank_best);
  return out;
}

TEST(RankStream, SmallExamples) {
  const SamplingOutcome none({false, false, false});
  const std::vector<std::size_t> id{0, 1, 2};
  EXPECT_EQ(flags(rank_stream(Instance({3, 1, 2}), none, id)),
            (std::vector<bool>{true, false, false}));
  EXPECT_EQ(flags(rank_stream(Instance({1, 2, 3}), none, id)),
            (std::vector<bool>{true, true, true}));

  const Instance inst({5, 4, 3});
  const SamplingOutcome one({true, false, false});
  const auto views = rank_stream(inst, one, id);
  ASSERT_EQ(views.size(), 2u);
  EXPECT_EQ(views[0].position, 2u);
  EXPECT_EQ(views[0].overall_rank, 2u);
  EXPECT_TRUE(views[0].online_rank_best);
  EXPECT_EQ(views[1].overall_rank, 3u);
  EXPECT_FALSE(views[1].online_rank_best);
}

TEST(RankStream, OverallRankWithinPosition) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const ArrivalRealization a = draw_arrivals(40, 0.35, seed);
    std::vector<double> vals(40);
    for (std::size_t i = 0; i < 40; ++i) vals[i] = a.time((i * 7) % 40);
    const Instance inst(vals);
    for (const RankView& r :
         rank_stream(inst, a.outcome(), a.arrival_order())) {
      ASSERT_GE(r.overall_rank, 1u);
      ASSERT_LE(r.overall_rank, r.position);
    }
  }
}

TEST(RankStream, InvariantUnderIncreasingMaps) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const ArrivalRealization a = draw_arrivals(30, 0.4, seed);
    std::vector<double> base(30), mapped(30);
    for (std::size_t i = 0; i < 30; ++i) {
      base[i] = std::sin(static_cast<double>(i * 13 + seed));
      mapped[i] = std::exp(3 * base[i]) - 17.0;
    }
    const auto out = a.outcome();
    const auto order = a.arrival_order();
    EXPECT_EQ(rank_stream(Instance(base), out, order),
              rank_stream(Instance(mapped), out, order));
  }
}

TEST(CounterRng, StreamsAndCountersAreIndependentlyKeyed) {
  const CounterRng a(1, 0), b(1, 1), c(2, 0);
  EXPECT_NE(a.bits(0), b.bits(0));
  EXPECT_NE(a.bits(0), c.bits(0));
  EXPECT_EQ(a.bits(5), CounterRng(1, 0).bits(5));
  double mean = 0.0;
  for (std::uint64_t i = 0; i < 100000; ++i) {
    const double u = a.uniform(i);
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    mean += u;
  }
  EXPECT_NEAR(mean / 100000, 0.5, 3 * std::sqrt(1.0 / 12 / 100000));
}

}  // namespace
}  // namespace secretary
