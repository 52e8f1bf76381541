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

// Independent reference computations used by the tests.  Nothing here
// shares code with the library paths it checks.

#ifndef PVK_TEST_ORACLES_HPP
#define PVK_TEST_ORACLES_HPP

#include <cstdint>
#include <map>
#include <string>

namespace oracles {

// Upper-tail probability P(X >= x) of the chi-square distribution with
// one degree of freedom, by adaptive Simpson quadrature of the density.
double chi2_tail_df1(double x);

// Chance agreement computed by enumerating all (category, category)
// coder pairs with product probabilities.
double chance_agreement_by_enumeration(const std::map<std::string, double>& proportions);

// Joint (intentionality x awareness x label) weight table.
struct JointTable {
  uint64_t w[2][2][2] = {};  // [intent][aware][label: 0=DONT, 1=NEG_TC]

  uint64_t total() const {
    uint64_t t = 0;
    for (const auto& plane : w)
      for (const auto& row : plane)
        for (uint64_t v : row) t += v;
    return t;
  }
};

struct SplitNumbers {
  double gain = 0.0;
  double split_info = 0.0;
  double gain_ratio = 0.0;  // 0 when split_info is 0
};

// Plain-formula information gain of splitting the table on one feature
// (0 = intentionality, 1 = awareness), computed from proportions.
SplitNumbers split_numbers(const JointTable& table, int feature);

// Weighted-majority label of one (intent, aware) cell; ties go to the
// globally more frequent label, then to DONT.  Returns 0/1 for
// DONT/NEG_TC, or -1 for an empty cell.
int cell_majority(const JointTable& table, int intent, int aware);

}  // namespace oracles

#endif  // PVK_TEST_ORACLES_HPP
