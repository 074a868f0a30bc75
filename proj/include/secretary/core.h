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

#ifndef SECRETARY_CORE_H_
#define SECRETARY_CORE_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <string>
#include <vector>

namespace secretary {

// Result of playing one game. The index meaning depends on the caller: a
// 1-based position into the online list for the positional rules, an element
// id for the arrival-time rule.
struct Stop {
  enum class Kind { kStopped, kNone, kVacuous };

  Kind kind = Kind::kNone;
  std::size_t index = 0;

  static Stop at(std::size_t i) { return {Kind::kStopped, i}; }
  static Stop none() { return {Kind::kNone, 0}; }
  static Stop vacuous() { return {Kind::kVacuous, 0}; }

  bool stopped() const { return kind == Kind::kStopped; }
  bool is_vacuous() const { return kind == Kind::kVacuous; }
  bool operator==(const Stop&) const = default;
};

// Distinct values plus an adversarial presentation order (0-based element
// ids). Ties are rejected at construction.
class Instance {
 public:
  explicit Instance(std::vector<double> values);
  Instance(std::vector<double> values, std::vector<std::size_t> order);

  std::size_t size() const { return values_.size(); }
  double value(std::size_t element) const { return values_[element]; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<std::size_t>& order() const { return order_; }

 private:
  std::vector<double> values_;
  std::vector<std::size_t> order_;
};

// Reads one decimal value per line; blank lines and lines starting with '#'
// are skipped. Presentation order is file order.
Instance read_instance(std::istream& in);
Instance load_instance_file(const std::string& path);

class SamplingOutcome {
 public:
  explicit SamplingOutcome(std::vector<bool> sample_mask);

  std::size_t n() const { return mask_.size(); }
  bool in_sample(std::size_t element) const { return mask_[element]; }
  const std::vector<bool>& sample_mask() const { return mask_; }
  std::size_t sample_count() const { return sample_count_; }
  std::size_t online_count() const { return n() - sample_count_; }

 private:
  std::vector<bool> mask_;
  std::size_t sample_count_;
};

// Element i joins S with probability p, using draw (seed, stream, i).
SamplingOutcome sample(const Instance& instance, double p, std::uint64_t seed,
                       std::uint64_t stream = 0);

class ArrivalRealization {
 public:
  ArrivalRealization(std::vector<double> times, double p);

  std::size_t n() const { return times_.size(); }
  double p() const { return p_; }
  double time(std::size_t element) const { return times_[element]; }
  const std::vector<double>& times() const { return times_; }
  bool in_sample(std::size_t element) const { return times_[element] < p_; }
  SamplingOutcome outcome() const;
  // Element ids sorted by arrival time.
  std::vector<std::size_t> arrival_order() const;

 private:
  std::vector<double> times_;
  double p_;
};

// i.i.d. uniform arrival times; a realization with a repeated time is
// discarded and redrawn with the next attempt counter.
ArrivalRealization draw_arrivals(std::size_t n, double p, std::uint64_t seed,
                                 std::uint64_t stream = 0);

struct RankView {
  std::size_t position = 0;  // |S| plus online elements revealed so far
  bool online_rank_best = false;
  std::size_t overall_rank = 0;  // 1 = largest seen so far
  std::size_t element = 0;
  bool operator==(const RankView&) const = default;
};

// Samples are known before the first online element, whatever their place
// in arrival_order. One view per online element, in arrival order.
std::vector<RankView> rank_stream(const Instance& instance,
                                  const SamplingOutcome& outcome,
                                  const std::vector<std::size_t>& arrival_order);

void require_probability(double p, const char* what);

}  // namespace secretary

#endif  // SECRETARY_CORE_H_
