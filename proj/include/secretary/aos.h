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

#ifndef SECRETARY_AOS_H_
#define SECRETARY_AOS_H_

#include <cstdint>
#include <span>

#include <boost/rational.hpp>

#include "secretary/core.h"

namespace secretary {

// 1/(1-p), snapped to the nearest integer when within a relative 1e-12 of
// it. Without the snap p = 2/3 would give 2.9999999999999996.
double inverse_complement(double p);

// floor(1/(1-p)) for 0 <= p < 1.
int kmax_k(double p);

class KMaxPolicy {
 public:
  explicit KMaxPolicy(int k);
  static KMaxPolicy from_p(double p) { return KMaxPolicy(kmax_k(p)); }
  int k() const { return k_; }

 private:
  int k_;
};

// Stops at the first online value above the k-th largest sample (minus
// infinity when there are fewer than k samples). Stop index is 1-based into
// `online`; an empty online list is a vacuous win.
Stop kmax_run(const KMaxPolicy& policy, std::span<const double> samples,
              std::span<const double> online);

struct AosGuarantee {
  double p = 0.0;
  int k = 1;
  double guarantee = 0.0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
};

AosGuarantee kmax_guarantee(double p);
double kmax_lower_bound(double p);  // p^(1/(1-p))
double kmax_upper_bound(double p);  // sup over real l of l p^l (1-p)

using Rational = boost::rational<std::int64_t>;
// k p^k (1-p) in exact arithmetic for rational p in [0, 1).
Rational kmax_guarantee_exact(Rational p);

// floor(n/(n-h)) for h < n.
int kmax_unknown_p_k(int n, int h);

// k-max with k = floor(n/(n-h)), h = |samples|. h = n is a vacuous win.
Stop kmax_unknown_p_run(int n, std::span<const double> samples,
                        std::span<const double> online);

// Probability that the unknown-p rule wins on the increasing instance given
// exactly h samples, h uniform among the C(n, h) sample sets.
double kmax_unknown_p_term(int n, int h);
// The same quantity in the with-replacement form k (h/n)^k (n-h)/n. It agrees
// with the exact term only asymptotically.
double kmax_unknown_p_term_approx(int n, int h);

struct UnknownPSuccess {
  double exact = 0.0;   // binomial mixture of kmax_unknown_p_term
  double approx = 0.0;  // binomial mixture of kmax_unknown_p_term_approx
  double vacuous = 0.0;  // p^n, included in both
};

UnknownPSuccess kmax_unknown_p_success(int n, double p);

// C(n, h) p^h (1-p)^(n-h), evaluated in log space.
double binomial_pmf(int n, int h, double p);

}  // namespace secretary

#endif  // SECRETARY_AOS_H_
