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

#include "secretary/ros.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "secretary/aos.h"
#include "secretary/errors.h"
#include "secretary/quadrature.h"

namespace secretary {

ThresholdSequence::ThresholdSequence(std::vector<double> thresholds)
    : t_(std::move(thresholds)) {
  if (t_.empty()) throw DomainError("threshold sequence must be non-empty");
  for (std::size_t i = 0; i < t_.size(); ++i) {
    if (!(t_[i] > 0.0 && t_[i] < 1.0)) {
      throw DomainError("thresholds must lie strictly inside (0, 1)");
    }
    if (i > 0 && t_[i] < t_[i - 1]) {
      throw DomainError("thresholds must be non-decreasing");
    }
  }
}

std::size_t ThresholdSequence::index_at(double tau) const {
  return static_cast<std::size_t>(
      std::upper_bound(t_.begin(), t_.end(), tau) - t_.begin());
}

namespace {

// H_s and its derivative in one O(s) pass. The powers are carried as
// E_j = x^j - 1 with x = 1/tau, which keeps full relative accuracy when tau
// is close to 1.
void threshold_lhs_and_slope(std::size_t s, double tau, double* value,
                             double* slope) {
  const double delta = (1.0 - tau) / tau;
  const double x = 1.0 + delta;
  double h = std::log1p(delta);
  double e = 0.0;
  double power_sum = 1.0;  // sum_{j=0}^{s} x^j
  for (std::size_t j = 1; j <= s; ++j) {
    e = x * e + delta;
    h += e / static_cast<double>(j);
    power_sum += e + 1.0;
  }
  *value = h;
  if (slope != nullptr) *slope = -power_sum / tau;
}

}  // namespace

double threshold_lhs(std::size_t s, double tau) {
  if (!(tau > 0.0 && tau <= 1.0)) throw DomainError("tau must lie in (0, 1]");
  double v = 0.0;
  threshold_lhs_and_slope(s, tau, &v, nullptr);
  return v;
}

ThresholdSequence solve_thresholds(std::size_t count, double tol) {
  if (count < 1) throw DomainError("count must be at least 1");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  constexpr double kEps = 1e-15;
  constexpr int kMaxIter = 300;
  std::vector<double> t;
  t.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) {
    const std::size_t s = i - 1;
    // H_s > 1 at t*_{i-1} (one more positive term than its own condition)
    // and H_s(1) = 0.
    double lo = i == 1 ? kEps : t.back();
    double hi = 1.0 - kEps;
    double x;
    if (i == 1) {
      x = 0.5;
    } else if (i == 2) {
      x = 0.5 * (lo + hi);
    } else {
      x = std::min(t[i - 2] + (t[i - 2] - t[i - 3]), 0.5 * (lo + 1.0));
    }
    bool done = false;
    for (int it = 0; it < kMaxIter && !done; ++it) {
      double f = 0.0, df = 0.0;
      threshold_lhs_and_slope(s, x, &f, &df);
      f -= 1.0;
      if (std::fabs(f) < tol) {
        done = true;
        break;
      }
      if (f > 0.0) {
        lo = x;
      } else {
        hi = x;
      }
      if (std::nextafter(lo, 1.0) >= hi) {
        x = std::fabs(f) < tol ? x : 0.5 * (lo + hi);
        done = true;
        break;
      }
      double next = x - f / df;
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      x = next;
    }
    if (!done) {
      std::ostringstream msg;
      msg << "threshold t*_" << i << " did not converge to " << tol;
      throw ConvergenceError(msg.str());
    }
    t.push_back(x);
  }
  return ThresholdSequence(std::move(t));
}

Stop alg_t_run(const ThresholdSequence& t, const ArrivalRealization& arrivals,
               const Instance& instance) {
  const std::size_t n = instance.size();
  if (arrivals.n() != n) {
    throw DomainError("arrival realization and instance sizes differ");
  }
  std::vector<double> samples;
  for (std::size_t e = 0; e < n; ++e) {
    if (arrivals.in_sample(e)) samples.push_back(instance.value(e));
  }
  if (samples.size() == n) return Stop::vacuous();
  std::sort(samples.begin(), samples.end(), std::greater<double>());

  double best_online = -std::numeric_limits<double>::infinity();
  for (std::size_t e : arrivals.arrival_order()) {
    if (arrivals.in_sample(e)) continue;
    const double v = instance.value(e);
    if (!(v > best_online)) continue;
    best_online = v;
    const std::size_t k = t.index_at(arrivals.time(e));
    if (k == 0) continue;
    const double threshold = k <= samples.size()
                                 ? samples[k - 1]
                                 : -std::numeric_limits<double>::infinity();
    // Past the last known threshold the true index is at least k, so a
    // value above the k-th sample is accepted either way.
    if (v > threshold) return Stop::at(e);
    if (k == t.count()) {
      throw DomainError("threshold sequence too short for this realization");
    }
  }
  return Stop::none();
}

double alg_t_term(std::size_t i, double t_i, double p) {
  if (i < 1) throw DomainError("term index starts at 1");
  const double m = std::max(p, t_i);
  if (m >= 1.0) return 0.0;
  if (!(m > 0.0)) throw DomainError("threshold must be positive");
  // With delta = 1/m - 1 every inner integral is written as a sum of
  // non-negative pieces, so nothing cancels as m approaches 1.
  const double delta = (1.0 - m) / m;
  const double lg = std::log1p(delta);  // ln(1/m)
  // j = 1 integral is (1 - m) - m ln(1/m); it cancels the leading 1 - m.
  double term = m * lg;
  if (i >= 2) term -= (lg - delta) + m * delta * delta;
  const double d2 = delta * delta;
  const double x = 1.0 + delta;
  double f = 0.0;  // x^(j-2) - 1 - (j-2) delta
  for (std::size_t j = 3; j <= i; ++j) {
    const double jm2 = static_cast<double>(j - 2);
    term -= (f + jm2 * m * d2) / (jm2 * (jm2 + 1.0));
    f = x * f + jm2 * d2;
  }
  return term;
}

std::size_t guarantee_terms_needed(double p, double tail_tol) {
  if (!(tail_tol > 0.0 && tail_tol < 1.0)) {
    throw DomainError("tail tolerance must lie in (0, 1)");
  }
  require_probability(p, "p");
  if (p >= 1.0) throw DomainError("p must be < 1");
  if (p == 0.0) return 1;
  const double exact = std::log(tail_tol) / std::log(p);
  std::size_t terms = static_cast<std::size_t>(std::floor(exact)) + 1;
  while (terms > 1 && std::pow(p, static_cast<double>(terms - 1)) < tail_tol) {
    --terms;
  }
  while (std::pow(p, static_cast<double>(terms)) >= tail_tol) ++terms;
  return terms;
}

double alg_t_guarantee(const ThresholdSequence& t, double p, double tail_tol) {
  const std::size_t terms = guarantee_terms_needed(p, tail_tol);
  if (t.count() < terms) {
    std::ostringstream msg;
    msg << "need " << terms << " thresholds for p = " << p
        << " and tail tolerance " << tail_tol << ", have " << t.count();
    throw DomainError(msg.str());
  }
  double sum = 0.0;
  double weight = 1.0;
  for (std::size_t i = 1; i <= terms; ++i) {
    sum += weight * alg_t_term(i, t.at(i), p);
    weight *= p;
  }
  return sum;
}

double alg_t_guarantee_optimal(double p, double tail_tol) {
  const std::size_t terms = guarantee_terms_needed(p, tail_tol);
  return alg_t_guarantee(solve_thresholds(terms), p, tail_tol);
}

namespace {

double log_choose(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double pmf(int n, int k, double t) {
  if (k < 0 || k > n) return 0.0;
  if (t >= 1.0) return k == n ? 1.0 : 0.0;
  return std::exp(log_choose(n, k) + k * std::log(t) +
                  (n - k) * std::log1p(-t));
}

// P(Bin(n, t) >= k).
double upper_tail(int n, int k, double t) {
  if (k <= 0) return 1.0;
  if (k > n) return 0.0;
  double s = 0.0;
  for (int x = n; x >= k; --x) s += pmf(n, x, t);
  return std::min(s, 1.0);
}

// Integrand of the stop-before term for fixed i:
//   sum_{j=1}^{i} (t - m)/t^j * P(Bin(n-j, t) >= i - j + c),
// with c = 1 for the exact form. The tails are advanced in j with
//   P(Bin(N-1) >= K-1) = P(Bin(N) >= K) + (1-t) P(Bin(N-1) = K-1).
double stop_before_integrand(int n, int i, double m, int c, double t) {
  int big_n = n - 1;
  int big_k = i - 1 + c;
  double tail = upper_tail(big_n, big_k, t);
  double q = pmf(big_n - 1, big_k - 1, t);
  double inv_t_pow = 1.0 / t;
  double sum = 0.0;
  for (int j = 1; j <= i; ++j) {
    sum += inv_t_pow * tail;
    if (j == i) break;
    tail += (1.0 - t) * q;
    // pmf(N-2, K-2) from pmf(N-1, K-1).
    q = (big_n - 1 > 0 && t > 0.0) ? q * (big_k - 1) / ((big_n - 1) * t) : 0.0;
    --big_n;
    --big_k;
    inv_t_pow /= t;
  }
  return (t - m) * sum;
}

}  // namespace

double alg_t_success_prob(const ThresholdSequence& t, double p, int n,
                          double quad_tol, StopBeforeForm form) {
  if (n < 1) throw DomainError("n must be positive");
  require_probability(p, "p");
  if (!(quad_tol > 0.0)) throw DomainError("quad_tol must be positive");
  if (t.count() < static_cast<std::size_t>(n)) {
    throw DomainError("need at least n thresholds");
  }
  const int c = form == StopBeforeForm::kExact ? 1 : 2;
  double acceptable = std::pow(p, n);
  double weight = 1.0;
  for (int i = 1; i <= n; ++i) {
    acceptable += weight * (1.0 - std::max(p, t.at(i)));
    weight *= p;
  }
  double stop_before = 0.0;
  weight = 1.0;
  const double per_integral = quad_tol / n;
  for (int i = 1; i <= n - 1; ++i) {
    const double m = std::max(p, t.at(i));
    if (m < 1.0 && weight > 0.0) {
      auto f = [&](double x) { return stop_before_integrand(n, i, m, c, x); };
      stop_before += weight * integrate_panels(f, m, 1.0, per_integral, 20).value;
    }
    weight *= p;
  }
  return acceptable - stop_before;
}

EllFunction::EllFunction(std::vector<int> values) : values_(std::move(values)) {
  const int n = static_cast<int>(values_.size());
  if (n < 1) throw DomainError("l must be defined on at least one position");
  for (int i = 0; i < n; ++i) {
    if (values_[i] < 0 || values_[i] > n) {
      throw DomainError("l values must lie in {0, ..., n}");
    }
    if (i > 0 && values_[i] < values_[i - 1]) {
      throw DomainError("l must be non-decreasing");
    }
  }
}

EllFunction EllFunction::constant(int n, int value) {
  return EllFunction(std::vector<int>(n, value));
}

Stop seq_ell_run(const EllFunction& ell, int h,
                 const std::vector<RankView>& ranks) {
  if (h < 0 || h + static_cast<int>(ranks.size()) != ell.n()) {
    throw DomainError("h plus the online views must equal n");
  }
  if (ranks.empty()) return Stop::vacuous();
  for (const RankView& v : ranks) {
    const int pos = static_cast<int>(v.position);
    if (pos < 1 || pos > ell.n()) throw DomainError("position outside [n]");
    // A best-online value has only samples above it, so beating the l-th
    // largest sample means overall rank <= l.
    if (v.online_rank_best && static_cast<int>(v.overall_rank) <= ell(pos)) {
      return Stop::at(v.position);
    }
  }
  return Stop::none();
}

double seq_ell_success_given_h(int n, int h, const EllFunction& ell) {
  if (ell.n() != n) throw DomainError("l is defined on a different n");
  if (h < 0 || h >= n) throw DomainError("need 0 <= h < n");
  auto hat = [&](int i) { return std::min(ell(i), h + 1); };
  // prod_{j=0}^{s-1} (h-j)/(x-j) for s = 0..h+1.
  auto products = [&](int x) {
    std::vector<double> pr(h + 2, 1.0);
    for (int s = 1; s <= h + 1; ++s) {
      pr[s] = pr[s - 1] * (h - (s - 1)) / static_cast<double>(x - (s - 1));
    }
    return pr;
  };
  const std::vector<double> pn = products(n);
  const double inv_nh = 1.0 / (n - h);
  double total = inv_nh * (1.0 - pn[hat(h + 1)]);
  for (int i = h + 1; i <= n - 1; ++i) {
    const std::vector<double> pi = products(i);
    double inner = 0.0;
    for (int r = h + 1; r <= i; ++r) {
      const int s = hat(r);
      inner += pi[s] / (i - h) - inv_nh * pn[s];
    }
    total += inner / (n - i) - inv_nh * pn[hat(i + 1)];
  }
  return total;
}

double seq_ell_success(const EllFunction& ell, double p) {
  require_probability(p, "p");
  const int n = ell.n();
  double s = std::pow(p, n);
  for (int h = 0; h < n; ++h) {
    const double w = binomial_pmf(n, h, p);
    if (w > 0.0) s += w * seq_ell_success_given_h(n, h, ell);
  }
  return s;
}

WinTable::WinTable(int n) : n_(n), w_(n + 1) {
  for (int j = 0; j <= n; ++j) w_[j].assign(j + 1, 0.0);
}

double best_overall_prob(int n, int j, int r) {
  double v = 1.0;
  for (int s = 0; s < r; ++s) {
    if (j - s <= 0) return 0.0;
    v *= static_cast<double>(j - s) / (n - s);
  }
  return v;
}

OptimalPolicy optimal_policy_dp(int n) {
  if (n < 1) throw DomainError("n must be positive");
  WinTable w(n);
  std::vector<double> prefix(n + 2, 0.0);
  for (int j = n - 1; j >= 0; --j) {
    // prefix[r] = sum_{r'=1}^{r} max(W(j+1, r'), Pi(j+1, r')).
    double pi = 1.0;
    for (int r = 1; r <= j + 1; ++r) {
      pi *= static_cast<double>(j + 1 - (r - 1)) / (n - (r - 1));
      prefix[r] = prefix[r - 1] + std::max(w(j + 1, r), pi);
    }
    const double inv = 1.0 / (j + 1);
    for (int r = 1; r <= j + 1; ++r) {
      const double stay = r <= j + 1 ? (j + 1 - r) * inv * w(j + 1, r) : 0.0;
      w.at(j, r) = stay + inv * prefix[r];
    }
  }
  std::vector<int> ell(n, 0);
  for (int j = 1; j <= n; ++j) {
    double pi = 1.0;
    for (int r = 1; r <= j; ++r) {
      pi *= static_cast<double>(j - (r - 1)) / (n - (r - 1));
      if (pi >= w(j, r)) ell[j - 1] = r;
    }
  }
  return {std::move(w), EllFunction(std::move(ell))};
}

int ell_star_finite(int n, int r) {
  if (r < 1 || r > n) throw DomainError("need 1 <= r <= n");
  for (int s = 0;; ++s) {
    // Any summand with i <= s has a zero factor in its denominator and
    // sends the sum to minus infinity.
    if (s >= r) return s;
    double d = 1.0;
    double scale = 1.0;
    for (int i = r; i <= n - 1; ++i) {
      double prod = 1.0;
      for (int j = 0; j <= s; ++j) {
        prod *= static_cast<double>(n - j) / (i - j);
      }
      d += (1.0 - prod) / (n - i);
      scale += (1.0 + prod) / (n - i);
    }
    // Exact zeros are common (the products telescope); do not let rounding
    // push them to the wrong side.
    if (d <= 1e-13 * scale) return s;
  }
}

int ell_tilde(double tau) {
  if (!(tau > 0.0 && tau < 1.0)) throw DomainError("tau must lie in (0, 1)");
  const double delta = (1.0 - tau) / tau;
  const double x = 1.0 + delta;
  double h = std::log1p(delta);
  double e = 0.0;
  for (int s = 0;; ++s) {
    if (h >= 1.0) return s;
    e = x * e + delta;
    h += e / (s + 1);
  }
}

double samuels_integral(double c, double tol) {
  auto f = [c](double x) {
    const double cx = c * x;
    return cx == 0.0 ? c : std::expm1(cx) / x;
  };
  return integrate_adaptive(f, 0.0, 1.0, tol).value;
}

GammaResult gamma_constants(double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  const double inner_tol = std::min(tol, 1e-13) * 1e-2;
  double lo = 0.5, hi = 1.5;
  double flo = samuels_integral(lo, inner_tol) - 1.0;
  double fhi = samuels_integral(hi, inner_tol) - 1.0;
  if (!(flo < 0.0 && fhi > 0.0)) {
    throw ConvergenceError("root bracket [0.5, 1.5] does not straddle c");
  }
  GammaResult g;
  g.c = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    g.c = 0.5 * (lo + hi);
    g.c_residual = samuels_integral(g.c, inner_tol) - 1.0;
    if (std::fabs(g.c_residual) < tol * 1e-2 || hi - lo < 1e-16) break;
    if (g.c_residual < 0.0) {
      lo = g.c;
    } else {
      hi = g.c;
    }
  }
  if (std::fabs(g.c_residual) >= tol) {
    throw ConvergenceError("bisection for c did not reach the tolerance");
  }
  const double c = g.c;
  // E1(c) = int_1^inf e^{-cx}/x dx, cut at X with e^{-cX} < tol c.
  const double upper = std::max(2.0, -std::log(tol * c) / c);
  auto f = [c](double x) { return std::exp(-c * x) / x; };
  const double e1 = integrate_adaptive(f, 1.0, upper, inner_tol).value;
  g.tail_error = std::exp(-c * upper) / (c * upper);
  g.gamma = std::exp(-c) + (std::expm1(c) - c) * e1;
  return g;
}

}  // namespace secretary
