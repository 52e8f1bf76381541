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

#ifndef PVK_INDUCTION_HPP
#define PVK_INDUCTION_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "annotation.hpp"

namespace pvk::induction {

// Coded examples collapsed by identical feature/label combination.
struct TrainingInstance {
  annotation::Intentionality intentionality;
  annotation::Awareness awareness;
  annotation::FormClass label;
  uint64_t weight = 1;

  bool operator==(const TrainingInstance&) const = default;
};

std::vector<TrainingInstance> instances_from(
    const std::vector<annotation::ConsensusExample>& subset);

enum class SplitFeature { Intentionality, Awareness };

std::string_view split_feature_name(SplitFeature f);

// Shannon entropy in bits of a class-weight vector.
double entropy_bits(const std::array<uint64_t, 2>& class_weights);

struct SplitEvaluation {
  double gain = 0.0;        // information gain in bits
  double split_info = 0.0;  // entropy of the branch proportions
  double gain_ratio = 0.0;  // gain / split_info (0 when split_info is 0)
  bool usable = false;      // positive gain and both branches populated
};

SplitEvaluation evaluate_split(const std::vector<TrainingInstance>& instances,
                               SplitFeature feature);

// A nominal-attribute decision tree over the two function features.
// Nodes are either leaves carrying a label plus class counts, or binary
// splits with one child per feature value; no feature repeats on a
// root-to-leaf path.
class DecisionTree {
 public:
  struct Node {
    bool leaf = true;
    annotation::FormClass label = annotation::FormClass::Dont;
    std::array<uint64_t, 2> counts{0, 0};  // [DONT, NEG_TC] routed here
    SplitFeature feature = SplitFeature::Intentionality;
    std::array<int32_t, 2> children{-1, -1};  // per feature value order
  };

  struct Prediction {
    annotation::FormClass form;
    double confidence;  // majority share of the deciding leaf
  };

  // Top-down induction: splits maximize gain ratio among features with
  // positive gain; recursion stops on pure nodes, exhausted features or
  // no usable split.  Leaf labels take the weighted majority, ties
  // broken toward the globally more frequent class, then toward DONT.
  static DecisionTree induce(const std::vector<TrainingInstance>& instances);

  Prediction predict(annotation::Intentionality intent,
                     annotation::Awareness aware) const;

  // One node per line, preorder ids, root is node 0:
  //   node <id> leaf <label> <count_DONT> <count_NEG_TC>
  //   node <id> split <feature> <child_id_value1> <child_id_value2>
  std::string serialize() const;
  static DecisionTree deserialize(std::string_view text);

  const std::vector<Node>& nodes() const { return nodes_; }
  uint64_t training_weight() const;

  bool operator==(const DecisionTree& other) const;

 private:
  std::vector<Node> nodes_;  // preorder; node 0 is the root
};

}  // namespace pvk::induction

#endif  // PVK_INDUCTION_HPP
