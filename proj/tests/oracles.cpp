// Copyright 2026 The preventkit Authors
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

#include "oracles.hpp"

#include <cmath>

namespace oracles {

namespace {

double chi2_density_df1(double t) {
  // k=1: f(t) = exp(-t/2) / sqrt(2*pi*t)
  return std::exp(-t / 2.0) / std::sqrt(2.0 * M_PI * t);
}

double simpson(double (*f)(double), double a, double b) {
  const double m = (a + b) / 2.0;
  return (b - a) / 6.0 * (f(a) + 4.0 * f(m) + f(b));
}

double adaptive_simpson(double (*f)(double), double a, double b, double eps,
                        double whole, int depth) {
  const double m = (a + b) / 2.0;
  const double left = simpson(f, a, m);
  const double right = simpson(f, m, b);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * eps) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(f, a, m, eps / 2.0, left, depth - 1) +
         adaptive_simpson(f, m, b, eps / 2.0, right, depth - 1);
}

double entropy_of_proportions(const double* p, int n) {
  double h = 0.0;
  for (int i = 0; i < n; ++i) {
    if (p[i] > 0.0) h -= p[i] * std::log2(p[i]);
  }
  return h;
}

}  // namespace

double chi2_tail_df1(double x) {
  // The density decays like exp(-t/2); beyond x+250 the remainder is
  // far below the quadrature tolerance.
  const double upper = x + 250.0;
  const double whole = simpson(chi2_density_df1, x, upper);
  return adaptive_simpson(chi2_density_df1, x, upper, 1e-12, whole, 60);
}

double chance_agreement_by_enumeration(
    const std::map<std::string, double>& proportions) {
  double pe = 0.0;
  for (const auto& [cat_a, p_a] : proportions) {
    for (const auto& [cat_b, p_b] : proportions) {
      if (cat_a == cat_b) pe += p_a * p_b;
    }
  }
  return pe;
}

SplitNumbers split_numbers(const JointTable& table, int feature) {
  const double total = static_cast<double>(table.total());
  SplitNumbers out;
  if (total == 0.0) return out;

  double parent[2] = {0.0, 0.0};
  double branch[2][2] = {{0.0, 0.0}, {0.0, 0.0}};  // [feature value][label]
  for (int i = 0; i < 2; ++i) {
    for (int a = 0; a < 2; ++a) {
      for (int l = 0; l < 2; ++l) {
        const double w = static_cast<double>(table.w[i][a][l]);
        parent[l] += w / total;
        branch[feature == 0 ? i : a][l] += w;
      }
    }
  }

  double children = 0.0;
  for (int v = 0; v < 2; ++v) {
    const double side = branch[v][0] + branch[v][1];
    if (side == 0.0) continue;
    const double share = side / total;
    const double p[2] = {branch[v][0] / side, branch[v][1] / side};
    children += share * entropy_of_proportions(p, 2);
    out.split_info -= share * std::log2(share);
  }
  out.gain = entropy_of_proportions(parent, 2) - children;
  out.gain_ratio = out.split_info > 0.0 ? out.gain / out.split_info : 0.0;
  return out;
}

int cell_majority(const JointTable& table, int intent, int aware) {
  const uint64_t dont = table.w[intent][aware][0];
  const uint64_t negtc = table.w[intent][aware][1];
  if (dont + negtc == 0) return -1;
  if (dont != negtc) return dont > negtc ? 0 : 1;

  uint64_t global[2] = {0, 0};
  for (const auto& plane : table.w)
    for (const auto& row : plane)
      for (int l = 0; l < 2; ++l) global[l] += row[l];
  if (global[0] != global[1]) return global[0] > global[1] ? 0 : 1;
  return 0;  // DONT
}

}  // namespace oracles
