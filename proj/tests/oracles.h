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

// Reference computations used only by the tests. Each one is written from
// the defining formula or by brute force, without calling the library
// routine it is compared against.

#ifndef SECRETARY_TESTS_ORACLES_H_
#define SECRETARY_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/expint.hpp>

#include "secretary/core.h"
#include "secretary/lastzero.h"
#include "secretary/ros.h"

namespace secretary::oracle {

// ln(1/t) + sum_{j=1}^{i-1} ((1/t)^j - 1) / j, the optimality condition for
// the i-th threshold.
inline double threshold_condition(int i, double t) {
  double s = std::log(1.0 / t);
  for (int j = 1; j < i; ++j) s += (std::pow(1.0 / t, j) - 1.0) / j;
  return s;
}

// Plain bisection on the condition above; it decreases in t.
inline double threshold_by_bisection(int i) {
  double lo = 1e-12, hi = 1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (threshold_condition(i, mid) > 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// One summand of the infinite guarantee series with the inner integral done
// by Gauss-Kronrod quadrature instead of antiderivatives.
inline double guarantee_term_by_quadrature(int i, double t_i, double p) {
  const double m = std::max(p, t_i);
  if (m >= 1.0) return 0.0;
  auto f = [&](double t) {
    double s = 0.0, inv = 1.0;
    for (int j = 1; j <= i; ++j) {
      inv /= t;
      s += inv;
    }
    return (t - m) * s;
  };
  const double inner =
      boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, m, 1.0,
                                                                    8, 1e-13);
  return 1.0 - m - inner;
}

inline double guarantee_by_quadrature(const std::vector<double>& t, double p,
                                      int terms) {
  double total = 0.0;
  for (int i = 1; i <= terms; ++i) {
    total += std::pow(p, i - 1) * guarantee_term_by_quadrature(i, t[i - 1], p);
  }
  return total;
}

// int_0^1 (e^{cx} - 1)/x dx = sum_k c^k / (k k!).
inline double ein(double c) {
  double term = 1.0, s = 0.0;
  for (int k = 1; k < 200; ++k) {
    term *= c / k;
    s += term / k;
    if (term / k < 1e-18 * s) break;
  }
  return s;
}

inline double samuels_c() {
  double lo = 0.5, hi = 1.5;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (ein(mid) < 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

inline double samuels_gamma() {
  const double c = samuels_c();
  return std::exp(-c) +
         (std::exp(c) - 1.0 - c) * boost::math::expint(1, c);
}

inline double binomial_weight(int n, int h, double p) {
  if (p == 0.0) return h == 0 ? 1.0 : 0.0;
  if (p == 1.0) return h == n ? 1.0 : 0.0;
  return boost::math::pdf(boost::math::binomial_distribution<double>(n, p), h);
}

// Exact success of a threshold-by-rank rule on the increasing instance
// 1 < 2 < ... < n, summing over all 2^n sample sets. k_of_h gives the rank
// of the sample used as threshold when there are h samples. An empty online
// set counts as a win unless count_vacuous is false.
inline double kth_sample_rule_increasing_exact(
    int n, const std::function<int(int)>& k_of_h, double p,
    bool count_vacuous = true) {
  double total = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<int> samples;
    std::vector<int> online;
    for (int e = 0; e < n; ++e) {
      ((mask >> e) & 1 ? samples : online).push_back(e + 1);
    }
    const double w = std::pow(p, samples.size()) *
                     std::pow(1.0 - p, online.size());
    if (online.empty()) {
      if (count_vacuous) total += w;
      continue;
    }
    std::sort(samples.rbegin(), samples.rend());
    const int k = k_of_h(static_cast<int>(samples.size()));
    const int threshold =
        static_cast<int>(samples.size()) >= k ? samples[k - 1] : 0;
    const int best = online.back();
    for (int v : online) {
      if (v > threshold) {
        if (v == best) total += w;
        break;
      }
    }
  }
  return total;
}

inline double kmax_increasing_exact(int n, int k, double p,
                                    bool count_vacuous = true) {
  return kth_sample_rule_increasing_exact(
      n, [k](int) { return k; }, p, count_vacuous);
}

// Exact success of the sequential rule given h samples: every ordering of
// the ranks is fed through Instance, rank_stream and seq_ell_run.
inline double seq_ell_by_permutation(const EllFunction& ell, int n, int h) {
  std::vector<double> values(n);
  std::iota(values.begin(), values.end(), 1.0);
  std::vector<bool> mask(n, false);
  for (int i = 0; i < h; ++i) mask[i] = true;
  const SamplingOutcome outcome(mask);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::uint64_t wins = 0, total = 0;
  do {
    const Instance inst(values);
    const auto views = rank_stream(inst, outcome, order);
    const Stop s = seq_ell_run(ell, h, views);
    ++total;
    if (!s.stopped()) continue;
    double best = -1.0;
    for (int i = h; i < n; ++i) best = std::max(best, values[i]);
    const std::size_t element = views[s.index - h - 1].element;
    if (values[element] == best) ++wins;
  } while (std::next_permutation(values.begin(), values.end()));
  return static_cast<double>(wins) / static_cast<double>(total);
}

// Every non-decreasing map [n] -> {lo, ..., n}.
inline void for_each_ell(int n, int lo,
                         const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> v(n, lo);
  std::function<void(int, int)> rec = [&](int pos, int min_value) {
    if (pos == n) {
      f(v);
      return;
    }
    for (int x = min_value; x <= n; ++x) {
      v[pos] = x;
      rec(pos + 1, x);
    }
  };
  rec(0, lo);
}

inline double binomial_mixture(int n, double p,
                               const std::function<double(int)>& given_h) {
  double s = 0.0;
  for (int h = 0; h <= n; ++h) {
    const double w = binomial_weight(n, h, p);
    s += w * (h == n ? 1.0 : given_h(h));
  }
  return s;
}

// The objective maximized over s for a position r >= h + 1. The i = n
// summand is 0/0 and is dropped.
inline double f_n(int n, int h, int r, int s) {
  auto prod = [&](int upper) {
    double v = 1.0;
    for (int j = 0; j <= s - 1; ++j) {
      v *= static_cast<double>(h - j) / (upper - j);
    }
    return v;
  };
  const double tail = prod(n) / (n - h);
  double sum = 0.0;
  for (int i = r; i <= n - 1; ++i) {
    sum += (prod(i) / (i - h) - tail) / (n - i);
  }
  return sum - tail;
}

// Smallest maximizer of f_n over s in [0, h + 1].
inline int f_n_argmax(int n, int h, int r) {
  std::vector<double> f;
  for (int s = 0; s <= h + 1; ++s) f.push_back(f_n(n, h, r, s));
  const double best = *std::max_element(f.begin(), f.end());
  const double slack = 1e-12 * std::max(1.0, std::fabs(best));
  for (int s = 0; s <= h + 1; ++s) {
    if (f[s] >= best - slack) return s;
  }
  return h + 1;
}

// Win probability after step j when the best online value so far has
// relative rank r (r = j + 1: none yet), straight from the one-step
// recursion with a memo table.
inline double win_after_step(int n, int j, int r,
                             std::vector<std::vector<double>>& memo) {
  if (j == n) return 0.0;
  if (memo.empty()) {
    memo.assign(n + 1, std::vector<double>(n + 2, -1.0));
  }
  double& slot = memo[j][r];
  if (slot >= 0.0) return slot;
  double v = 0.0;
  if (r <= j) {
    v += static_cast<double>(j + 1 - r) / (j + 1) *
         win_after_step(n, j + 1, r, memo);
  }
  for (int rp = 1; rp <= std::min(r, j + 1); ++rp) {
    double stop = 1.0;
    for (int s = 0; s <= rp - 1; ++s) {
      stop *= static_cast<double>(j + 1 - s) / (n - s);
    }
    v += std::max(win_after_step(n, j + 1, rp, memo), stop) / (j + 1);
  }
  slot = v;
  return v;
}

// Bit strings as text, first character first.
inline std::string bits_text(std::uint64_t v, int n) {
  std::string s(n, '0');
  for (int i = 0; i < n; ++i) {
    if ((v >> (n - 1 - i)) & 1) s[i] = '1';
  }
  return s;
}

// Strings reachable from a by a path of growing size, where each step
// inserts a 0 somewhere after the last 0.
inline std::set<std::string> monotone_descendants(const std::string& a,
                                                  int max_size) {
  std::set<std::string> out;
  std::vector<std::string> frontier{a};
  while (!frontier.empty()) {
    std::vector<std::string> next;
    for (const std::string& s : frontier) {
      if (static_cast<int>(s.size()) >= max_size) continue;
      const std::size_t last = s.rfind('0');
      if (last == std::string::npos) continue;
      for (std::size_t pos = last + 1; pos <= s.size(); ++pos) {
        std::string c = s;
        c.insert(c.begin() + static_cast<std::ptrdiff_t>(pos), '0');
        if (out.insert(c).second) next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

// Greedy adversary at p = 1/2: at every size of the window select free
// degree-1 nodes (in numeric order) until their weight reaches `target`.
inline WindowStrategy greedy_degree_one(Window w, double target) {
  WindowStrategy s(w);
  for (int size = w.first; size <= w.last; ++size) {
    const double need = target * std::ldexp(1.0, size);
    int picked = 0;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << size); ++v) {
      if (picked >= need - 1e-9) break;
      const BitInstance b(v, size);
      if (degree(b) != 1 || !s.is_free(b)) continue;
      s.set_selected(b, true);
      ++picked;
    }
    s.refresh();
  }
  return s;
}

}  // namespace secretary::oracle

#endif  // SECRETARY_TESTS_ORACLES_H_
