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

#ifndef SECRETARY_QUADRATURE_H_
#define SECRETARY_QUADRATURE_H_

#include <functional>
#include <vector>

namespace secretary {

using Integrand = std::function<double(double)>;

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // estimate
  int evaluations = 0;
};

// Gauss-Legendre rule on [-1, 1].
class GaussLegendre {
 public:
  explicit GaussLegendre(int order);

  int order() const { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

  // Composite rule with `panels` equal panels on [a, b].
  double integrate(const Integrand& f, double a, double b, int panels) const;

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

// Composite Gauss-Legendre, doubling the panel count until two successive
// estimates differ by less than tol. Throws ConvergenceError past max_panels.
QuadratureResult integrate_panels(const Integrand& f, double a, double b,
                                  double tol, int order = 16,
                                  int max_panels = 4096);

// Adaptive Gauss-Kronrod (7, 15) with interval bisection.
QuadratureResult integrate_adaptive(const Integrand& f, double a, double b,
                                    double tol, int max_depth = 50);

}  // namespace secretary

#endif  // SECRETARY_QUADRATURE_H_
