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

#include "secretary/quadrature.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "secretary/errors.h"

namespace secretary {

GaussLegendre::GaussLegendre(int order) {
  if (order < 1) throw DomainError("quadrature order must be positive");
  nodes_.resize(order);
  weights_.resize(order);
  const int m = (order + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Newton on P_order from the Chebyshev-like initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 1; k <= order; ++k) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p2) / k;
      }
      dp = order * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0, p1 = 0.0;
    for (int k = 1; k <= order; ++k) {
      double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p2) / k;
    }
    dp = order * (x * p0 - p1) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes_[i] = -x;
    nodes_[order - 1 - i] = x;
    weights_[i] = w;
    weights_[order - 1 - i] = w;
  }
  if (order % 2 == 1) nodes_[order / 2] = 0.0;
}

double GaussLegendre::integrate(const Integrand& f, double a, double b,
                                int panels) const {
  const double h = (b - a) / panels;
  double total = 0.0;
  for (int k = 0; k < panels; ++k) {
    const double lo = a + k * h;
    const double mid = lo + 0.5 * h;
    double s = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      s += weights_[i] * f(mid + 0.5 * h * nodes_[i]);
    }
    total += 0.5 * h * s;
  }
  return total;
}

QuadratureResult integrate_panels(const Integrand& f, double a, double b,
                                  double tol, int order, int max_panels) {
  if (!(tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  QuadratureResult r;
  if (a == b) return r;
  GaussLegendre rule(order);
  int panels = 1;
  double prev = rule.integrate(f, a, b, panels);
  r.evaluations = order;
  while (panels < max_panels) {
    panels *= 2;
    double cur = rule.integrate(f, a, b, panels);
    r.evaluations += order * panels;
    r.error = std::fabs(cur - prev);
    r.value = cur;
    if (r.error < tol) return r;
    prev = cur;
  }
  std::ostringstream msg;
  msg << "Gauss-Legendre panels did not converge on [" << a << ", " << b
      << "]: last change " << r.error << " > " << tol;
  throw ConvergenceError(msg.str());
}

namespace {

constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

void gk15(const Integrand& f, double a, double b, double* kronrod,
          double* gauss) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double k = kWgk[7] * fc;
  double g = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double x = h * kXgk[i];
    const double sum = f(c - x) + f(c + x);
    k += kWgk[i] * sum;
    if (i % 2 == 1) g += kWg[i / 2] * sum;
  }
  *kronrod = k * h;
  *gauss = g * h;
}

void adapt(const Integrand& f, double a, double b, double tol, int depth,
           QuadratureResult* r) {
  double k = 0.0, g = 0.0;
  gk15(f, a, b, &k, &g);
  r->evaluations += 15;
  const double err = std::fabs(k - g);
  if (err <= tol || (b - a) < 1e-14 * (std::fabs(a) + std::fabs(b))) {
    r->value += k;
    r->error += err;
    return;
  }
  if (depth == 0) {
    std::ostringstream msg;
    msg << "adaptive quadrature exceeded its depth on [" << a << ", " << b
        << "]";
    throw ConvergenceError(msg.str());
  }
  const double m = 0.5 * (a + b);
  adapt(f, a, m, 0.5 * tol, depth - 1, r);
  adapt(f, m, b, 0.5 * tol, depth - 1, r);
}

}  // namespace

QuadratureResult integrate_adaptive(const Integrand& f, double a, double b,
                                    double tol, int max_depth) {
  if (!(tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  QuadratureResult r;
  if (a == b) return r;
  adapt(f, a, b, tol, max_depth, &r);
  return r;
}

}  // namespace secretary
