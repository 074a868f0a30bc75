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

#include "secretary/aos.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "secretary/errors.h"

namespace secretary {

namespace {

void require_below_one(double p) {
  require_probability(p, "p");
  if (p >= 1.0) {
    throw DomainError("p must be < 1: with p = 1 the online set is empty");
  }
}

double kth_largest(std::span<const double> samples, int k) {
  if (static_cast<std::size_t>(k) > samples.size()) {
    return -std::numeric_limits<double>::infinity();
  }
  std::vector<double> s(samples.begin(), samples.end());
  std::nth_element(s.begin(), s.begin() + (k - 1), s.end(),
                   std::greater<double>());
  return s[k - 1];
}

Stop first_above(double threshold, std::span<const double> online) {
  if (online.empty()) return Stop::vacuous();
  for (std::size_t i = 0; i < online.size(); ++i) {
    if (online[i] > threshold) return Stop::at(i + 1);
  }
  return Stop::none();
}

}  // namespace

double inverse_complement(double p) {
  require_below_one(p);
  const double x = 1.0 / (1.0 - p);
  const double r = std::round(x);
  return std::fabs(x - r) <= 1e-12 * x ? r : x;
}

int kmax_k(double p) {
  const double x = inverse_complement(p);
  if (x > 1e9) throw DomainError("p too close to 1 for an integer k");
  return static_cast<int>(std::floor(x));
}

KMaxPolicy::KMaxPolicy(int k) : k_(k) {
  if (k < 1) throw DomainError("k-max needs k >= 1");
}

Stop kmax_run(const KMaxPolicy& policy, std::span<const double> samples,
              std::span<const double> online) {
  return first_above(kth_largest(samples, policy.k()), online);
}

double kmax_lower_bound(double p) {
  require_below_one(p);
  return std::pow(p, 1.0 / (1.0 - p));
}

double kmax_upper_bound(double p) {
  require_below_one(p);
  if (p == 0.0) return 0.0;
  // p^(-1/ln p) is exactly 1/e.
  return (p - 1.0) / std::log(p) / std::numbers::e;
}

AosGuarantee kmax_guarantee(double p) {
  require_below_one(p);
  AosGuarantee g;
  g.p = p;
  g.k = kmax_k(p);
  g.guarantee = g.k * std::pow(p, g.k) * (1.0 - p);
  g.lower_bound = kmax_lower_bound(p);
  g.upper_bound = kmax_upper_bound(p);
  return g;
}

Rational kmax_guarantee_exact(Rational p) {
  if (p < 0 || p >= 1) throw DomainError("p must lie in [0, 1)");
  const Rational q = 1 - p;
  // floor(1/q) = floor(den / num) for q = num/den.
  const std::int64_t k = q.denominator() / q.numerator();
  Rational power(1);
  for (std::int64_t i = 0; i < k; ++i) power *= p;
  return Rational(k) * power * q;
}

int kmax_unknown_p_k(int n, int h) {
  if (n < 1 || h < 0 || h >= n) {
    throw DomainError("unknown-p k-max needs 0 <= h < n");
  }
  return n / (n - h);
}

Stop kmax_unknown_p_run(int n, std::span<const double> samples,
                        std::span<const double> online) {
  const int h = static_cast<int>(samples.size());
  if (h + static_cast<int>(online.size()) != n) {
    throw DomainError("samples and online values must add up to n");
  }
  if (h == n) return Stop::vacuous();
  return kmax_run(KMaxPolicy(kmax_unknown_p_k(n, h)), samples, online);
}

double kmax_unknown_p_term(int n, int h) {
  if (h == n) return 1.0;
  const int k = kmax_unknown_p_k(n, h);
  // Fewer samples than k: the first online value is taken, which on the
  // increasing instance is the maximum only when it is the sole one.
  if (h < k) return n - h == 1 ? 1.0 : 0.0;
  // Exactly one online value among the top k and the (k+1)-th is a sample:
  // k (n-h) h!/(h-k)! / (n!/(n-k-1)!).
  double v = static_cast<double>(k) * (n - h) / n;
  for (int j = 0; j < k; ++j) {
    v *= static_cast<double>(h - j) / (n - 1 - j);
  }
  return v;
}

double kmax_unknown_p_term_approx(int n, int h) {
  if (h == n) return 1.0;
  const int k = kmax_unknown_p_k(n, h);
  const double x = static_cast<double>(h) / n;
  return k * std::pow(x, k) * (n - h) / n;
}

double binomial_pmf(int n, int h, double p) {
  if (h < 0 || h > n) return 0.0;
  if (p == 0.0) return h == 0 ? 1.0 : 0.0;
  if (p == 1.0) return h == n ? 1.0 : 0.0;
  const double log_c =
      std::lgamma(n + 1.0) - std::lgamma(h + 1.0) - std::lgamma(n - h + 1.0);
  return std::exp(log_c + h * std::log(p) + (n - h) * std::log1p(-p));
}

UnknownPSuccess kmax_unknown_p_success(int n, double p) {
  if (n < 1) throw DomainError("n must be positive");
  require_probability(p, "p");
  UnknownPSuccess s;
  for (int h = 0; h < n; ++h) {
    const double w = binomial_pmf(n, h, p);
    if (w == 0.0) continue;
    s.exact += w * kmax_unknown_p_term(n, h);
    s.approx += w * kmax_unknown_p_term_approx(n, h);
  }
  s.vacuous = std::pow(p, n);
  s.exact += s.vacuous;
  s.approx += s.vacuous;
  return s;
}

}  // namespace secretary
