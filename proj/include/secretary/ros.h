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

#ifndef SECRETARY_ROS_H_
#define SECRETARY_ROS_H_

#include <cstddef>
#include <vector>

#include "secretary/core.h"

namespace secretary {

// Increasing time thresholds t_1 <= t_2 <= ... inside (0, 1).
class ThresholdSequence {
 public:
  explicit ThresholdSequence(std::vector<double> thresholds);

  std::size_t count() const { return t_.size(); }
  // 1-based, as in t_1.
  double at(std::size_t i) const { return t_[i - 1]; }
  const std::vector<double>& values() const { return t_; }
  // Largest k with t_k <= tau, 0 when tau < t_1.
  std::size_t index_at(double tau) const;

 private:
  std::vector<double> t_;
};

// H_s(tau) = ln(1/tau) + sum_{j=1}^{s} (tau^-j - 1)/j.
double threshold_lhs(std::size_t s, double tau);

// t*_i solves H_{i-1}(t) = 1. Safeguarded Newton inside a shrinking
// bisection bracket; a bracket that collapses to adjacent doubles counts as
// converged.
ThresholdSequence solve_thresholds(std::size_t count, double tol = 1e-12);

// Accepts an online element arriving at tau in [t_k, t_{k+1}) when it is the
// best online element so far and beats the k-th largest sample. The stop
// index is the element id.
Stop alg_t_run(const ThresholdSequence& t, const ArrivalRealization& arrivals,
               const Instance& instance);

// One summand of the limit guarantee, without the p^(i-1) factor:
// 1 - m - sum_{j<=i} int_m^1 (x - m)/x^j dx with m = max(p, t_i).
double alg_t_term(std::size_t i, double t_i, double p);

// Smallest I with p^I < tail_tol. Each summand is at most p^(i-1) (1 - p),
// so the dropped tail is at most p^I.
std::size_t guarantee_terms_needed(double p, double tail_tol);

// Limit success guarantee of ALG_t for sampling probability p, truncated
// after guarantee_terms_needed(p, tail_tol) terms. The sequence must hold at
// least that many thresholds.
double alg_t_guarantee(const ThresholdSequence& t, double p, double tail_tol);

// Same, with t* solved to the required length.
double alg_t_guarantee_optimal(double p, double tail_tol = 1e-10);

enum class StopBeforeForm {
  // P(at least i-j+1 of the n-j smaller values arrive before t).
  kExact,
  // The same factor with the binomial CDF evaluated one step higher.
  kShifted,
};

// Finite-n success probability:
//   P(max V acceptable) - P(ALG_t stops before max V).
// The second term is integrated with composite Gauss-Legendre panels.
double alg_t_success_prob(const ThresholdSequence& t, double p, int n,
                          double quad_tol = 1e-12,
                          StopBeforeForm form = StopBeforeForm::kExact);

// Non-decreasing l: [n] -> {0, ..., n}. l(i) = 0 rejects at position i.
class EllFunction {
 public:
  explicit EllFunction(std::vector<int> values);
  static EllFunction constant(int n, int value);

  int n() const { return static_cast<int>(values_.size()); }
  int operator()(int position) const { return values_[position - 1]; }
  const std::vector<int>& values() const { return values_; }

 private:
  std::vector<int> values_;
};

// Accepts the first online view that is the best online so far and beats the
// l(position)-th largest sample. Stop index is the position.
Stop seq_ell_run(const EllFunction& ell, int h,
                 const std::vector<RankView>& ranks);

// Success probability of sequential-l-max given |S| = h.
double seq_ell_success_given_h(int n, int h, const EllFunction& ell);

// Binomial mixture over h plus the vacuous p^n.
double seq_ell_success(const EllFunction& ell, double p);

class WinTable {
 public:
  explicit WinTable(int n);
  int n() const { return n_; }
  // W(n, j, r) for 0 <= j <= n, 1 <= r <= j + 1 (r = j + 1: no online value
  // seen yet).
  double operator()(int j, int r) const { return w_[j][r - 1]; }
  double& at(int j, int r) { return w_[j][r - 1]; }

 private:
  int n_;
  std::vector<std::vector<double>> w_;
};

struct OptimalPolicy {
  WinTable table;
  EllFunction ell;
};

// Backward induction over (position, rank of the best online value so far).
OptimalPolicy optimal_policy_dp(int n);

// prod_{s=0}^{r-1} (j-s)/(n-s): probability that a best-so-far value at
// position j with overall rank r is the best of all n.
double best_overall_prob(int n, int j, int r);

int ell_star_finite(int n, int r);

// Minimal s >= 0 with H_s(tau) >= 1.
int ell_tilde(double tau);

struct GammaResult {
  double c = 0.0;
  double gamma = 0.0;
  double c_residual = 0.0;  // int_0^1 (e^{cx}-1)/x dx - 1
  double tail_error = 0.0;  // bound on the dropped part of the E1 integral
};

// int_0^1 (e^{cx} - 1)/x dx.
double samuels_integral(double c, double tol = 1e-14);

GammaResult gamma_constants(double tol = 1e-12);

}  // namespace secretary

#endif  // SECRETARY_ROS_H_
