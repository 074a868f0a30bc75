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

#include "secretary/core.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "secretary/errors.h"
#include "secretary/rng.h"

namespace secretary {

namespace {

void check_distinct(const std::vector<double>& values) {
  std::vector<double> sorted(values);
  std::sort(sorted.begin(), sorted.end());
  auto tie = std::adjacent_find(sorted.begin(), sorted.end());
  if (tie != sorted.end()) {
    std::ostringstream msg;
    msg << "instance values must be distinct; repeated value " << *tie;
    throw DomainError(msg.str());
  }
}

void check_permutation(const std::vector<std::size_t>& order, std::size_t n,
                       const char* what) {
  if (order.size() != n) {
    throw DomainError(std::string(what) + " has the wrong length");
  }
  std::vector<bool> seen(n, false);
  for (std::size_t e : order) {
    if (e >= n || seen[e]) {
      throw DomainError(std::string(what) + " is not a permutation");
    }
    seen[e] = true;
  }
}

// Counts, over inserted positions, how many lie strictly before a position.
class Fenwick {
 public:
  explicit Fenwick(std::size_t n) : tree_(n + 1, 0) {}
  void add(std::size_t i) {
    for (++i; i < tree_.size(); i += i & (~i + 1)) ++tree_[i];
  }
  std::size_t prefix(std::size_t i) const {  // count in [0, i)
    std::size_t s = 0;
    for (; i > 0; i -= i & (~i + 1)) s += tree_[i];
    return s;
  }

 private:
  std::vector<std::size_t> tree_;
};

}  // namespace

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream msg;
    msg << what << " must lie in [0, 1], got " << p;
    throw DomainError(msg.str());
  }
}

Instance::Instance(std::vector<double> values)
    : Instance(values, [&] {
        std::vector<std::size_t> id(values.size());
        std::iota(id.begin(), id.end(), 0);
        return id;
      }()) {}

Instance::Instance(std::vector<double> values, std::vector<std::size_t> order)
    : values_(std::move(values)), order_(std::move(order)) {
  if (values_.empty()) throw DomainError("instance must be non-empty");
  for (double v : values_) {
    if (!std::isfinite(v)) throw DomainError("instance values must be finite");
  }
  check_distinct(values_);
  check_permutation(order_, values_.size(), "presentation order");
}

Instance read_instance(std::istream& in) {
  std::vector<double> values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    const char* b = line.data() + first;
    const char* e = line.data() + last + 1;
    if (*b == '+') ++b;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || ptr != e) {
      throw DomainError("line " + std::to_string(line_no) +
                        ": not a decimal value: " + line);
    }
    values.push_back(v);
  }
  return Instance(std::move(values));
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open instance file " + path);
  return read_instance(in);
}

SamplingOutcome::SamplingOutcome(std::vector<bool> sample_mask)
    : mask_(std::move(sample_mask)),
      sample_count_(static_cast<std::size_t>(
          std::count(mask_.begin(), mask_.end(), true))) {}

SamplingOutcome sample(const Instance& instance, double p, std::uint64_t seed,
                       std::uint64_t stream) {
  require_probability(p, "p");
  CounterRng rng(seed, stream);
  std::vector<bool> mask(instance.size());
  for (std::size_t i = 0; i < mask.size(); ++i) {
    mask[i] = rng.uniform(CounterRng::element_counter(i)) < p;
  }
  return SamplingOutcome(std::move(mask));
}

ArrivalRealization::ArrivalRealization(std::vector<double> times, double p)
    : times_(std::move(times)), p_(p) {
  require_probability(p, "p");
  for (double t : times_) {
    if (!(t >= 0.0 && t <= 1.0)) {
      throw DomainError("arrival times must lie in [0, 1]");
    }
  }
}

SamplingOutcome ArrivalRealization::outcome() const {
  std::vector<bool> mask(n());
  for (std::size_t i = 0; i < n(); ++i) mask[i] = in_sample(i);
  return SamplingOutcome(std::move(mask));
}

std::vector<std::size_t> ArrivalRealization::arrival_order() const {
  std::vector<std::size_t> order(n());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return times_[a] < times_[b]; });
  return order;
}

ArrivalRealization draw_arrivals(std::size_t n, double p, std::uint64_t seed,
                                 std::uint64_t stream) {
  if (n == 0) throw DomainError("n must be positive");
  require_probability(p, "p");
  CounterRng rng(seed, stream);
  std::vector<double> times(n);
  for (std::uint32_t attempt = 0;; ++attempt) {
    for (std::size_t i = 0; i < n; ++i) {
      times[i] = rng.uniform(CounterRng::element_counter(i, attempt));
    }
    std::vector<double> sorted(times);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) break;
  }
  return ArrivalRealization(std::move(times), p);
}

std::vector<RankView> rank_stream(
    const Instance& instance, const SamplingOutcome& outcome,
    const std::vector<std::size_t>& arrival_order) {
  const std::size_t n = instance.size();
  if (outcome.n() != n) throw DomainError("outcome size differs from instance");
  check_permutation(arrival_order, n, "arrival order");

  // Position of each element in decreasing value order.
  std::vector<std::size_t> by_value(n);
  std::iota(by_value.begin(), by_value.end(), 0);
  std::sort(by_value.begin(), by_value.end(), [&](std::size_t a, std::size_t b) {
    return instance.value(a) > instance.value(b);
  });
  for (std::size_t i = 1; i < n; ++i) {
    if (!(instance.value(by_value[i - 1]) > instance.value(by_value[i]))) {
      throw DomainError("tie in instance values");
    }
  }
  std::vector<std::size_t> slot(n);
  for (std::size_t i = 0; i < n; ++i) slot[by_value[i]] = i;

  Fenwick seen(n);
  for (std::size_t e = 0; e < n; ++e) {
    if (outcome.in_sample(e)) seen.add(slot[e]);
  }
  std::vector<RankView> views;
  views.reserve(outcome.online_count());
  std::size_t position = outcome.sample_count();
  std::size_t best_online_slot = n;  // none yet
  for (std::size_t e : arrival_order) {
    if (outcome.in_sample(e)) continue;
    ++position;
    RankView v;
    v.position = position;
    v.element = e;
    v.overall_rank = seen.prefix(slot[e]) + 1;
    v.online_rank_best = slot[e] < best_online_slot;
    if (v.online_rank_best) best_online_slot = slot[e];
    seen.add(slot[e]);
    views.push_back(v);
  }
  return views;
}

}  // namespace secretary
