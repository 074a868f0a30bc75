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

#ifndef SECRETARY_LASTZERO_H_
#define SECRETARY_LASTZERO_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace secretary {

inline constexpr int kMaxBitLength = 24;

// A 0/1 string of length n <= 24. The first character is the most
// significant of the n low bits, so "01" is the integer 1.
class BitInstance {
 public:
  BitInstance(std::uint64_t bits, int n);
  static BitInstance parse(std::string_view s);

  int size() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  int norm() const;
  bool has_zero() const { return norm() < n_; }
  int trailing_ones() const;
  std::string str() const;
  bool operator==(const BitInstance&) const = default;

 private:
  std::uint64_t bits_;
  int n_;
};

std::ostream& operator<<(std::ostream& os, const BitInstance& b);

// Equal norm and the shorter string's prefix up to its last 0 matches the
// longer string. Symmetric; both strings need a 0.
bool in_conflict(const BitInstance& a, const BitInstance& b);

// Insert a 0 anywhere after the last 0. Empty for the all-ones string.
std::vector<BitInstance> children(const BitInstance& b);

// Remove the last 0. None when the string has at most one 0: with no 0 left
// the result would have no children, so it is not a conflict neighbour.
std::optional<BitInstance> parent(const BitInstance& b);

// Trailing ones plus one; 0 for the all-ones string.
int degree(const BitInstance& b);

double node_weight(const BitInstance& b, double p);

// Whether the k-max rule, read as "stop at the first 0 once at most k-1 ones
// remain", stops at the last 0 of b.
bool kmax_wins(const BitInstance& b, int k);

struct Window {
  int first = 1;
  int last = 1;
};

enum class LocalOperator { kSplit, kFill };

// Selected and removed nodes for every size of a window. Removed nodes are
// the in-window descendants of selected nodes and are recomputed eagerly.
class WindowStrategy {
 public:
  explicit WindowStrategy(Window window);

  const Window& window() const { return window_; }
  bool is_selected(const BitInstance& b) const;
  bool is_removed(const BitInstance& b) const;
  bool is_free(const BitInstance& b) const;
  std::vector<BitInstance> selected(int size) const;
  std::vector<BitInstance> removed(int size) const;
  std::size_t selected_count() const;

  // Raw edits; call refresh() afterwards to recompute the removed sets.
  void set_selected(const BitInstance& b, bool on);
  void refresh();

  // True when the removed sets are current and no selected node has a
  // selected ancestor inside the window.
  bool is_valid() const;

 private:
  static constexpr std::uint8_t kSelected = 1;
  static constexpr std::uint8_t kRemoved = 2;

  std::uint8_t flags(const BitInstance& b) const;
  std::vector<std::uint8_t>& level(int size);
  const std::vector<std::uint8_t>& level(int size) const;

  Window window_;
  std::vector<std::vector<std::uint8_t>> levels_;
};

// Nodes at which the k-max rule wins, for every size of the window.
WindowStrategy kmax_selection(Window window, int k);

// Degree 1..floor(1/(1-p)) at every size but the last, every node with a 0
// at the last size, skipping removed nodes.
WindowStrategy fill_in(Window window, double p);

WindowStrategy apply_local_operator(const WindowStrategy& strategy,
                                    const BitInstance& node, LocalOperator op,
                                    double p);

double performance(const WindowStrategy& strategy, int size, double p);
double cover_ratio(const WindowStrategy& strategy, int size, double p);
double average_performance(const WindowStrategy& strategy, double p);

// Sizes in increasing order; every free node with a 0 is selected with
// probability 1/2.
WindowStrategy random_valid_strategy(Window window, std::uint64_t seed);

struct ColoredNode {
  BitInstance red;
  int blue_ones = 0;
  int n = 0;
};

// p^(r+b) (1-p)^(n-r-b) C(n-m, b), r the norm of the red string of length m.
double colored_weight(const ColoredNode& node, double p);

struct LastZeroView {
  int position = 0;  // 1-based
  int bit = 0;
  int zeros_seen = 0;  // including this bit
  int ones_seen = 0;   // including this bit
  int total_ones = 0;
};

// Called once per bit; returning true stops there.
using LastZeroPolicy = std::function<bool(const LastZeroView&)>;

LastZeroPolicy kmax_last_zero_policy(int k);

// Bit i is 1 with probability p via draw (seed, stream, i). Win iff the
// policy stops on the last 0.
bool simulate_last_zero(const LastZeroPolicy& policy, int n, double p,
                        std::uint64_t seed, std::uint64_t stream = 0);

struct CensusRow {
  int size = 0;
  int degree = 0;
  std::uint64_t count = 0;
  double weight = 0.0;
};

// One row per (size, degree) for sizes 1..max_size.
std::vector<CensusRow> degree_census(int max_size, double p);

// "parent child" per line for every edge between sizes <= max_size.
void write_edge_list(std::ostream& os, int max_size);
void write_dot(std::ostream& os, int max_size);

}  // namespace secretary

#endif  // SECRETARY_LASTZERO_H_
