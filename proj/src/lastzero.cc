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

#include "secretary/lastzero.h"

#include <bit>
#include <cmath>
#include <sstream>
#include <string>

#include "secretary/aos.h"
#include "secretary/core.h"
#include "secretary/errors.h"
#include "secretary/rng.h"

namespace secretary {

namespace {

std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void check_size(int n) {
  if (n < 1 || n > kMaxBitLength) {
    throw DomainError("bit strings must have length in [1, 24]");
  }
}

void check_window(const Window& w) {
  if (w.first < 1 || w.last < w.first || w.last > kMaxBitLength) {
    throw DomainError("window must satisfy 1 <= first <= last <= 24");
  }
}

// p^m (1-p)^(s-m) for m = 0..s.
std::vector<double> norm_weights(int s, double p) {
  std::vector<double> w(s + 1);
  for (int m = 0; m <= s; ++m) {
    w[m] = std::pow(p, m) * std::pow(1.0 - p, s - m);
  }
  return w;
}

}  // namespace

BitInstance::BitInstance(std::uint64_t bits, int n) : bits_(bits), n_(n) {
  check_size(n);
  if ((bits & ~low_mask(n)) != 0) {
    throw DomainError("bits set beyond the string length");
  }
}

BitInstance BitInstance::parse(std::string_view s) {
  check_size(static_cast<int>(s.size()));
  std::uint64_t v = 0;
  for (char ch : s) {
    if (ch != '0' && ch != '1') throw DomainError("bit strings use 0 and 1");
    v = (v << 1) | static_cast<std::uint64_t>(ch - '0');
  }
  return BitInstance(v, static_cast<int>(s.size()));
}

int BitInstance::norm() const { return std::popcount(bits_); }

int BitInstance::trailing_ones() const {
  return std::min(std::countr_one(bits_), n_);
}

std::string BitInstance::str() const {
  std::string s(n_, '0');
  for (int i = 0; i < n_; ++i) {
    if ((bits_ >> (n_ - 1 - i)) & 1U) s[i] = '1';
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const BitInstance& b) {
  return os << b.str();
}

bool in_conflict(const BitInstance& a, const BitInstance& b) {
  if (!a.has_zero() || !b.has_zero()) {
    throw DomainError("conflict is defined only for strings with a 0");
  }
  if (a.size() == b.size()) return false;
  const BitInstance& small = a.size() < b.size() ? a : b;
  const BitInstance& large = a.size() < b.size() ? b : a;
  if (small.norm() != large.norm()) return false;
  // Prefix of the smaller string up to and including its last 0.
  const int r = small.size() - small.trailing_ones();
  return (small.bits() >> (small.size() - r)) ==
         (large.bits() >> (large.size() - r));
}

std::vector<BitInstance> children(const BitInstance& b) {
  std::vector<BitInstance> out;
  if (!b.has_zero() || b.size() >= kMaxBitLength) {
    if (b.has_zero()) throw DomainError("children would exceed length 24");
    return out;
  }
  const int t = b.trailing_ones();
  const std::uint64_t head = b.bits() >> t;  // ends with the last 0
  // Tail 1^a 0 1^(t-a) after the last 0.
  for (int a = 0; a <= t; ++a) {
    const std::uint64_t tail = (low_mask(a) << (t - a + 1)) | low_mask(t - a);
    out.emplace_back((head << (t + 1)) | tail, b.size() + 1);
  }
  return out;
}

std::optional<BitInstance> parent(const BitInstance& b) {
  if (b.size() - b.norm() < 2) return std::nullopt;
  const int t = b.trailing_ones();
  const std::uint64_t v = ((b.bits() >> (t + 1)) << t) | low_mask(t);
  return BitInstance(v, b.size() - 1);
}

int degree(const BitInstance& b) {
  return b.has_zero() ? b.trailing_ones() + 1 : 0;
}

double node_weight(const BitInstance& b, double p) {
  require_probability(p, "p");
  const int m = b.norm();
  return std::pow(p, m) * std::pow(1.0 - p, b.size() - m);
}

bool kmax_wins(const BitInstance& b, int k) {
  if (k < 1) throw DomainError("k must be positive");
  const int m = b.norm();
  const int zeros = b.size() - m;
  if (zeros == 0) return false;
  if (m < k) return zeros == 1;
  // Exactly one 0 after the k-th 1 from the end means that 1 sits at bit k.
  std::uint64_t v = b.bits();
  for (int i = 1; i < k; ++i) v &= v - 1;
  return std::countr_zero(v) == k;
}

WindowStrategy::WindowStrategy(Window window) : window_(window) {
  check_window(window);
  for (int s = window.first; s <= window.last; ++s) {
    levels_.emplace_back(std::size_t{1} << s, 0);
  }
}

std::vector<std::uint8_t>& WindowStrategy::level(int size) {
  return const_cast<std::vector<std::uint8_t>&>(
      static_cast<const WindowStrategy*>(this)->level(size));
}

const std::vector<std::uint8_t>& WindowStrategy::level(int size) const {
  if (size < window_.first || size > window_.last) {
    throw DomainError("size " + std::to_string(size) +
                      " lies outside the window [" +
                      std::to_string(window_.first) + ", " +
                      std::to_string(window_.last) + "]");
  }
  return levels_[size - window_.first];
}

std::uint8_t WindowStrategy::flags(const BitInstance& b) const {
  return level(b.size())[b.bits()];
}

bool WindowStrategy::is_selected(const BitInstance& b) const {
  return flags(b) & kSelected;
}

bool WindowStrategy::is_removed(const BitInstance& b) const {
  return flags(b) & kRemoved;
}

bool WindowStrategy::is_free(const BitInstance& b) const {
  return flags(b) == 0;
}

std::vector<BitInstance> WindowStrategy::selected(int size) const {
  std::vector<BitInstance> out;
  const auto& lv = level(size);
  for (std::uint64_t v = 0; v < lv.size(); ++v) {
    if (lv[v] & kSelected) out.emplace_back(v, size);
  }
  return out;
}

std::vector<BitInstance> WindowStrategy::removed(int size) const {
  std::vector<BitInstance> out;
  const auto& lv = level(size);
  for (std::uint64_t v = 0; v < lv.size(); ++v) {
    if (lv[v] & kRemoved) out.emplace_back(v, size);
  }
  return out;
}

std::size_t WindowStrategy::selected_count() const {
  std::size_t c = 0;
  for (const auto& lv : levels_) {
    for (auto f : lv) c += (f & kSelected) ? 1 : 0;
  }
  return c;
}

void WindowStrategy::set_selected(const BitInstance& b, bool on) {
  flags(b);  // range check
  auto& f = level(b.size())[b.bits()];
  f = on ? (f | kSelected) : (f & ~kSelected);
}

void WindowStrategy::refresh() {
  for (auto& f : level(window_.first)) f &= ~kRemoved;
  for (int s = window_.first + 1; s <= window_.last; ++s) {
    auto& lv = level(s);
    const auto& up = level(s - 1);
    for (std::uint64_t v = 0; v < lv.size(); ++v) {
      auto par = parent(BitInstance(v, s));
      const bool covered = par && up[par->bits()] != 0;
      lv[v] = covered ? (lv[v] | kRemoved) : (lv[v] & ~kRemoved);
    }
  }
}

bool WindowStrategy::is_valid() const {
  WindowStrategy fresh = *this;
  fresh.refresh();
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (fresh.levels_[i] != levels_[i]) return false;
    for (auto f : levels_[i]) {
      if ((f & kSelected) && (f & kRemoved)) return false;
    }
  }
  return true;
}

WindowStrategy kmax_selection(Window window, int k) {
  WindowStrategy w(window);
  for (int s = window.first; s <= window.last; ++s) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << s); ++v) {
      BitInstance b(v, s);
      if (kmax_wins(b, k)) w.set_selected(b, true);
    }
  }
  w.refresh();
  return w;
}

WindowStrategy fill_in(Window window, double p) {
  const int limit = kmax_k(p);
  WindowStrategy w(window);
  for (int s = window.first; s <= window.last; ++s) {
    w.refresh();
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << s); ++v) {
      BitInstance b(v, s);
      const int d = degree(b);
      if (d < 1 || !w.is_free(b)) continue;
      if (s == window.last || d <= limit) w.set_selected(b, true);
    }
  }
  w.refresh();
  return w;
}

WindowStrategy apply_local_operator(const WindowStrategy& strategy,
                                    const BitInstance& node, LocalOperator op,
                                    double p) {
  const double limit = inverse_complement(p);
  const int d = degree(node);
  WindowStrategy out = strategy;
  std::ostringstream why;
  if (op == LocalOperator::kSplit) {
    if (!strategy.is_selected(node)) {
      why << "split needs a selected node; " << node << " is not selected";
    } else if (!(d > limit)) {
      why << "split needs degree > 1/(1-p) = " << limit << "; " << node
          << " has degree " << d;
    } else if (node.size() >= strategy.window().last) {
      why << "split needs a node below the last window size";
    }
    if (!why.str().empty()) throw DomainError(why.str());
    out.set_selected(node, false);
    for (const BitInstance& c : children(node)) out.set_selected(c, true);
    out.refresh();
    return out;
  }
  if (!strategy.is_free(node)) {
    why << "fill needs a node that is neither selected nor removed; " << node
        << " is not";
  } else if (d < 1) {
    why << "fill needs a node with a 0; " << node << " has degree 0";
  } else if (!(d <= limit)) {
    why << "fill needs degree <= 1/(1-p) = " << limit << "; " << node
        << " has degree " << d;
  }
  if (!why.str().empty()) throw DomainError(why.str());
  out.set_selected(node, true);
  // Descendants share the norm and the prefix up to the node's last 0.
  const int r = node.size() - node.trailing_ones();
  const std::uint64_t prefix = node.bits() >> node.trailing_ones();
  for (int s = node.size() + 1; s <= strategy.window().last; ++s) {
    const int free_bits = s - r;
    for (std::uint64_t tail = 0; tail < (std::uint64_t{1} << free_bits);
         ++tail) {
      BitInstance b((prefix << free_bits) | tail, s);
      if (b.norm() == node.norm()) out.set_selected(b, false);
    }
  }
  out.refresh();
  return out;
}

double performance(const WindowStrategy& strategy, int size, double p) {
  require_probability(p, "p");
  const auto w = norm_weights(size, p);
  double total = 0.0;
  for (const BitInstance& b : strategy.selected(size)) total += w[b.norm()];
  return total;
}

double cover_ratio(const WindowStrategy& strategy, int size, double p) {
  require_probability(p, "p");
  const auto w = norm_weights(size, p);
  double total = 0.0;
  for (const BitInstance& b : strategy.selected(size)) total += w[b.norm()];
  for (const BitInstance& b : strategy.removed(size)) total += w[b.norm()];
  return total;
}

double average_performance(const WindowStrategy& strategy, double p) {
  const Window& win = strategy.window();
  double total = 0.0;
  for (int s = win.first; s <= win.last; ++s) total += performance(strategy, s, p);
  return total / (win.last - win.first + 1);
}

WindowStrategy random_valid_strategy(Window window, std::uint64_t seed) {
  WindowStrategy w(window);
  for (int s = window.first; s <= window.last; ++s) {
    w.refresh();
    CounterRng rng(seed, static_cast<std::uint64_t>(s));
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << s); ++v) {
      BitInstance b(v, s);
      if (degree(b) < 1 || !w.is_free(b)) continue;
      if (rng.uniform(v) < 0.5) w.set_selected(b, true);
    }
  }
  w.refresh();
  return w;
}

double colored_weight(const ColoredNode& node, double p) {
  require_probability(p, "p");
  const int m = node.red.size();
  const int b = node.blue_ones;
  if (m > node.n) throw DomainError("red string longer than n");
  if (b < 0 || b > node.n - m) throw DomainError("need 0 <= b <= n - m");
  const int r = node.red.norm();
  double choose = 1.0;
  for (int i = 1; i <= b; ++i) choose = choose * (node.n - m - b + i) / i;
  return std::pow(p, r + b) * std::pow(1.0 - p, node.n - r - b) * choose;
}

LastZeroPolicy kmax_last_zero_policy(int k) {
  if (k < 1) throw DomainError("k must be positive");
  return [k](const LastZeroView& v) {
    return v.bit == 0 && v.total_ones - v.ones_seen <= k - 1;
  };
}

bool simulate_last_zero(const LastZeroPolicy& policy, int n, double p,
                        std::uint64_t seed, std::uint64_t stream) {
  if (n < 1) throw DomainError("n must be positive");
  require_probability(p, "p");
  CounterRng rng(seed, stream);
  std::vector<int> bits(n);
  int total_ones = 0;
  for (int i = 0; i < n; ++i) {
    bits[i] = rng.uniform(CounterRng::element_counter(i)) < p ? 1 : 0;
    total_ones += bits[i];
  }
  const int total_zeros = n - total_ones;
  LastZeroView v;
  v.total_ones = total_ones;
  for (int i = 0; i < n; ++i) {
    v.position = i + 1;
    v.bit = bits[i];
    (bits[i] ? v.ones_seen : v.zeros_seen)++;
    if (policy(v)) return v.bit == 0 && v.zeros_seen == total_zeros;
  }
  return false;
}

std::vector<CensusRow> degree_census(int max_size, double p) {
  check_size(max_size);
  require_probability(p, "p");
  std::vector<CensusRow> rows;
  for (int s = 1; s <= max_size; ++s) {
    const auto w = norm_weights(s, p);
    std::vector<std::uint64_t> count(s + 1, 0);
    std::vector<double> weight(s + 1, 0.0);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << s); ++v) {
      BitInstance b(v, s);
      const int d = degree(b);
      ++count[d];
      weight[d] += w[b.norm()];
    }
    for (int d = 0; d <= s; ++d) rows.push_back({s, d, count[d], weight[d]});
  }
  return rows;
}

namespace {

template <typename Emit>
void for_each_edge(int max_size, Emit emit) {
  check_size(max_size);
  for (int s = 1; s < max_size; ++s) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << s); ++v) {
      BitInstance b(v, s);
      for (const BitInstance& c : children(b)) emit(b, c);
    }
  }
}

}  // namespace

void write_edge_list(std::ostream& os, int max_size) {
  for_each_edge(max_size, [&](const BitInstance& a, const BitInstance& b) {
    os << a << ' ' << b << '\n';
  });
}

void write_dot(std::ostream& os, int max_size) {
  os << "graph conflict {\n";
  for (int s = 1; s <= max_size; ++s) {
    os << "  { rank = same;";
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << s); ++v) {
      os << " \"" << BitInstance(v, s) << '"';
    }
    os << " }\n";
  }
  for_each_edge(max_size, [&](const BitInstance& a, const BitInstance& b) {
    os << "  \"" << a << "\" -- \"" << b << "\";\n";
  });
  os << "}\n";
}

}  // namespace secretary
