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

#ifndef PVK_STATS_HPP
#define PVK_STATS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "annotation.hpp"

namespace pvk::stats {

// Per-item label pairs from two coders, over any nominal scale.
using LabelPairs = std::vector<std::pair<std::string, std::string>>;

enum class Band { BelowSlight, Slight, Fair, Moderate, Substantial, AlmostPerfect };

std::string_view band_name(Band b);

struct AgreementReport {
  std::string feature;
  size_t n_items = 0;
  double p_a = 0.0;  // observed agreement
  double p_e = 0.0;  // chance agreement, sum of squared category proportions
  std::map<std::string, double> category_proportions;  // pooled over both coders
  double kappa = 0.0;  // (p_a - p_e) / (1 - p_e)
  Band band = Band::BelowSlight;
};

// Share of items on which the two coders picked the same label.
double percent_agreement(const LabelPairs& items);

// Chance-corrected agreement.  Category proportions pool the
// assignments of both coders (2n assignments for n items); all
// assignments in a single category leave the statistic undefined.
AgreementReport kappa(const std::string& feature_name, const LabelPairs& items);

// Qualitative reliability level: boundaries at 0.20/0.40/0.60/0.80,
// upper-inclusive; negative values fall below the scale.
Band reliability_band(double kappa_value);

enum class Significance { NS, P05, P01, P001 };

// "ns", "0.05", "0.01", "0.001".
std::string_view significance_label(Significance s);

// df=1 critical values for the 0.05 / 0.01 / 0.001 levels.
inline constexpr double kCritical05 = 3.841;
inline constexpr double kCritical01 = 6.635;
inline constexpr double kCritical001 = 10.828;

struct ChiSquareResult {
  double statistic = 0.0;
  Significance significance = Significance::NS;
  // Set when n <= 40 or any expected cell is below 5.
  bool n_warning = false;
};

// Yates-corrected 2x2 chi-square:
//   chi2 = n * max(|ad - bc| - n/2, 0)^2 / ((a+b)(c+d)(a+c)(b+d))
// The continuity correction is clamped at zero so independent tables
// score exactly 0.  Requires all four marginals to be nonzero.
ChiSquareResult chi_square_yates(const annotation::ContingencyTable2x2& t);

// Strictest df=1 level met by a nonnegative statistic.
Significance significance_level(double statistic);

}  // namespace pvk::stats

#endif  // PVK_STATS_HPP
