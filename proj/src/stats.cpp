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

#include "stats.hpp"

#include <cmath>
#include <cstdlib>

#include "errors.hpp"

namespace pvk::stats {

std::string_view band_name(Band b) {
  switch (b) {
    case Band::BelowSlight: return "below_slight";
    case Band::Slight: return "slight";
    case Band::Fair: return "fair";
    case Band::Moderate: return "moderate";
    case Band::Substantial: return "substantial";
    default: return "almost_perfect";
  }
}

double percent_agreement(const LabelPairs& items) {
  if (items.empty()) {
    throw ArgumentError("percent agreement requires a nonempty item set");
  }
  size_t agreed = 0;
  for (const auto& [a, b] : items) agreed += a == b;
  return static_cast<double>(agreed) / static_cast<double>(items.size());
}

AgreementReport kappa(const std::string& feature_name, const LabelPairs& items) {
  AgreementReport report;
  report.feature = feature_name;
  report.n_items = items.size();
  report.p_a = percent_agreement(items);

  int64_t agreed = 0;
  std::map<std::string, int64_t> pooled;
  for (const auto& [a, b] : items) {
    agreed += a == b;
    ++pooled[a];
    ++pooled[b];
  }
  if (pooled.size() < 2) {
    throw DegenerateError("all assignments fall in category '" +
                          pooled.begin()->first +
                          "'; chance agreement is 1 and kappa is undefined");
  }
  const auto n = static_cast<int64_t>(items.size());
  int64_t sum_sq = 0;
  for (const auto& [category, count] : pooled) {
    report.category_proportions[category] =
        static_cast<double>(count) / static_cast<double>(2 * n);
    sum_sq += count * count;
  }
  report.p_e = static_cast<double>(sum_sq) / static_cast<double>(4 * n * n);
  // (p_a - p_e) / (1 - p_e) scaled by 4n^2: exact in integers, so
  // rational inputs band correctly (8/10 agreement gives exactly 0.6).
  report.kappa = static_cast<double>(4 * n * agreed - sum_sq) /
                 static_cast<double>(4 * n * n - sum_sq);
  report.band = reliability_band(report.kappa);
  return report;
}

Band reliability_band(double kappa_value) {
  if (kappa_value > 1.0) {
    throw ArgumentError("kappa cannot exceed 1");
  }
  if (kappa_value < 0.0) return Band::BelowSlight;
  if (kappa_value <= 0.20) return Band::Slight;
  if (kappa_value <= 0.40) return Band::Fair;
  if (kappa_value <= 0.60) return Band::Moderate;
  if (kappa_value <= 0.80) return Band::Substantial;
  return Band::AlmostPerfect;
}

std::string_view significance_label(Significance s) {
  switch (s) {
    case Significance::NS: return "ns";
    case Significance::P05: return "0.05";
    case Significance::P01: return "0.01";
    default: return "0.001";
  }
}

ChiSquareResult chi_square_yates(const annotation::ContingencyTable2x2& t) {
  const double a = static_cast<double>(t.a);
  const double b = static_cast<double>(t.b);
  const double c = static_cast<double>(t.c);
  const double d = static_cast<double>(t.d);
  const double n = a + b + c + d;
  const double row0 = a + b, row1 = c + d, col0 = a + c, col1 = b + d;
  if (row0 == 0 || row1 == 0 || col0 == 0 || col1 == 0) {
    throw DegenerateError("chi-square is undefined when a row or column is empty");
  }
  double corrected = std::abs(a * d - b * c) - n / 2.0;
  if (corrected < 0.0) corrected = 0.0;

  ChiSquareResult result;
  result.statistic = n * corrected * corrected / (row0 * row1 * col0 * col1);
  result.significance = significance_level(result.statistic);
  const double min_expected =
      std::min(std::min(row0 * col0, row0 * col1), std::min(row1 * col0, row1 * col1)) / n;
  result.n_warning = n <= 40.0 || min_expected < 5.0;
  return result;
}

Significance significance_level(double statistic) {
  if (statistic < 0.0 || std::isnan(statistic)) {
    throw ArgumentError("chi-square statistic must be nonnegative");
  }
  if (statistic >= kCritical001) return Significance::P001;
  if (statistic >= kCritical01) return Significance::P01;
  if (statistic >= kCritical05) return Significance::P05;
  return Significance::NS;
}

}  // namespace pvk::stats
