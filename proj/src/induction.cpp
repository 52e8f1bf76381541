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

#include "induction.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "errors.hpp"

namespace pvk::induction {

namespace {

using annotation::FormClass;

constexpr double kGainEpsilon = 1e-12;

size_t value_of(const TrainingInstance& inst, SplitFeature f) {
  if (f == SplitFeature::Intentionality) {
    return inst.intentionality == annotation::Intentionality::Con ? 0 : 1;
  }
  return inst.awareness == annotation::Awareness::Aw ? 0 : 1;
}

std::array<uint64_t, 2> class_weights(const std::vector<TrainingInstance>& instances) {
  std::array<uint64_t, 2> w{0, 0};
  for (const auto& inst : instances) {
    w[inst.label == FormClass::Dont ? 0 : 1] += inst.weight;
  }
  return w;
}

FormClass majority_label(const std::array<uint64_t, 2>& counts,
                         FormClass global_majority) {
  if (counts[0] > counts[1]) return FormClass::Dont;
  if (counts[1] > counts[0]) return FormClass::NegTc;
  return global_majority;
}

std::string path_string(const std::vector<int64_t>& path) {
  std::string s;
  for (size_t i = 0; i < path.size(); ++i) {
    if (i) s += " -> ";
    s += std::to_string(path[i]);
  }
  return s;
}

}  // namespace

std::vector<TrainingInstance> instances_from(
    const std::vector<annotation::ConsensusExample>& subset) {
  std::map<std::tuple<int, int, int>, uint64_t> cells;
  for (const auto& ex : subset) {
    const auto key = std::make_tuple(
        ex.intentionality == annotation::Intentionality::Con ? 0 : 1,
        ex.awareness == annotation::Awareness::Aw ? 0 : 1,
        ex.form == FormClass::Dont ? 0 : 1);
    ++cells[key];
  }
  std::vector<TrainingInstance> out;
  for (const auto& [key, weight] : cells) {
    const auto [intent, aware, label] = key;
    out.push_back({intent == 0 ? annotation::Intentionality::Con
                               : annotation::Intentionality::Unc,
                   aware == 0 ? annotation::Awareness::Aw : annotation::Awareness::Unaw,
                   label == 0 ? FormClass::Dont : FormClass::NegTc, weight});
  }
  return out;
}

std::string_view split_feature_name(SplitFeature f) {
  return f == SplitFeature::Intentionality ? "intentionality" : "awareness";
}

double entropy_bits(const std::array<uint64_t, 2>& class_weights) {
  const uint64_t total = class_weights[0] + class_weights[1];
  if (total == 0) return 0.0;
  double weighted_logs = 0.0;
  for (uint64_t w : class_weights) {
    if (w > 0) weighted_logs += static_cast<double>(w) * std::log2(static_cast<double>(w));
  }
  return std::log2(static_cast<double>(total)) -
         weighted_logs / static_cast<double>(total);
}

SplitEvaluation evaluate_split(const std::vector<TrainingInstance>& instances,
                               SplitFeature feature) {
  std::array<std::array<uint64_t, 2>, 2> branch{{{0, 0}, {0, 0}}};
  for (const auto& inst : instances) {
    branch[value_of(inst, feature)][inst.label == FormClass::Dont ? 0 : 1] +=
        inst.weight;
  }
  const std::array<uint64_t, 2> parent = {branch[0][0] + branch[1][0],
                                          branch[0][1] + branch[1][1]};
  const uint64_t total = parent[0] + parent[1];

  SplitEvaluation eval;
  if (total == 0) return eval;
  double children_entropy = 0.0;
  for (const auto& side : branch) {
    const uint64_t side_total = side[0] + side[1];
    if (side_total == 0) continue;
    const double share = static_cast<double>(side_total) / static_cast<double>(total);
    children_entropy += share * entropy_bits(side);
    eval.split_info -= share * std::log2(share);
  }
  eval.gain = entropy_bits(parent) - children_entropy;
  const bool both_sides = (branch[0][0] + branch[0][1]) > 0 && (branch[1][0] + branch[1][1]) > 0;
  eval.usable = both_sides && eval.gain > kGainEpsilon && eval.split_info > 0.0;
  eval.gain_ratio = eval.usable ? eval.gain / eval.split_info : 0.0;
  return eval;
}

DecisionTree DecisionTree::induce(const std::vector<TrainingInstance>& instances) {
  if (instances.empty()) {
    throw ArgumentError("cannot induce a tree from an empty training set");
  }
  for (const auto& inst : instances) {
    if (inst.weight == 0) throw ArgumentError("training weights must be positive");
  }
  const auto global_counts = class_weights(instances);
  const FormClass global_majority =
      global_counts[1] > global_counts[0] ? FormClass::NegTc : FormClass::Dont;

  DecisionTree tree;
  // Preorder construction keeps serialization canonical.
  std::function<int32_t(std::vector<TrainingInstance>, std::array<bool, 2>)> build =
      [&](std::vector<TrainingInstance> subset, std::array<bool, 2> used) -> int32_t {
    const auto counts = class_weights(subset);
    const bool pure = counts[0] == 0 || counts[1] == 0;

    std::optional<SplitFeature> chosen;
    double best_ratio = 0.0;
    if (!pure) {
      for (SplitFeature f : {SplitFeature::Intentionality, SplitFeature::Awareness}) {
        if (used[static_cast<size_t>(f)]) continue;
        const auto eval = evaluate_split(subset, f);
        if (eval.usable && (!chosen || eval.gain_ratio > best_ratio)) {
          chosen = f;
          best_ratio = eval.gain_ratio;
        }
      }
    }

    const auto node_id = static_cast<int32_t>(tree.nodes_.size());
    tree.nodes_.emplace_back();
    if (!chosen) {
      Node& node = tree.nodes_[node_id];
      node.leaf = true;
      node.counts = counts;
      node.label = majority_label(counts, global_majority);
      return node_id;
    }

    auto& slot = tree.nodes_[node_id];
    slot.leaf = false;
    slot.feature = *chosen;
    used[static_cast<size_t>(*chosen)] = true;
    for (size_t value = 0; value < 2; ++value) {
      std::vector<TrainingInstance> side;
      for (const auto& inst : subset) {
        if (value_of(inst, *chosen) == value) side.push_back(inst);
      }
      const int32_t child = build(std::move(side), used);
      tree.nodes_[node_id].children[value] = child;
    }
    return node_id;
  };
  build(instances, {false, false});
  return tree;
}

DecisionTree::Prediction DecisionTree::predict(annotation::Intentionality intent,
                                               annotation::Awareness aware) const {
  if (nodes_.empty()) throw ArgumentError("empty decision tree");
  size_t at = 0;
  while (!nodes_[at].leaf) {
    const auto& node = nodes_[at];
    const size_t value = node.feature == SplitFeature::Intentionality
                             ? (intent == annotation::Intentionality::Con ? 0 : 1)
                             : (aware == annotation::Awareness::Aw ? 0 : 1);
    at = static_cast<size_t>(node.children[value]);
  }
  const auto& leaf = nodes_[at];
  const uint64_t total = leaf.counts[0] + leaf.counts[1];
  const uint64_t majority =
      leaf.label == FormClass::Dont ? leaf.counts[0] : leaf.counts[1];
  return {leaf.label,
          total == 0 ? 1.0 : static_cast<double>(majority) / static_cast<double>(total)};
}

std::string DecisionTree::serialize() const {
  std::ostringstream out;
  for (size_t i = 0; i < nodes_.size(); ++i) {
    const Node& node = nodes_[i];
    out << "node " << i << ' ';
    if (node.leaf) {
      out << "leaf " << annotation::to_token(node.label) << ' ' << node.counts[0]
          << ' ' << node.counts[1];
    } else {
      out << "split " << split_feature_name(node.feature) << ' ' << node.children[0]
          << ' ' << node.children[1];
    }
    out << '\n';
  }
  return out.str();
}

DecisionTree DecisionTree::deserialize(std::string_view content) {
  struct Raw {
    Node node;
    bool used = false;
  };
  std::map<int64_t, Raw> by_id;

  std::istringstream in{std::string(content)};
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;  // blank line
    if (word[0] == '#') continue;
    if (word != "node") {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'node', got '" + word + "'");
    }
    int64_t id;
    std::string kind;
    if (!(ls >> id >> kind) || id < 0) {
      throw ParseError("line " + std::to_string(line_no) + ": malformed node record");
    }
    if (by_id.count(id)) {
      throw ParseError("line " + std::to_string(line_no) + ": duplicate node id " +
                       std::to_string(id));
    }
    Raw raw;
    if (kind == "leaf") {
      std::string label;
      uint64_t dont = 0, negtc = 0;
      if (!(ls >> label >> dont >> negtc)) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": leaf needs '<label> <count_DONT> <count_NEG_TC>'");
      }
      raw.node.leaf = true;
      try {
        raw.node.label = annotation::parse_form(label);
      } catch (const ValidationError&) {
        throw ParseError("line " + std::to_string(line_no) + ": unknown label '" +
                         label + "'");
      }
      raw.node.counts = {dont, negtc};
    } else if (kind == "split") {
      std::string feature;
      int64_t left = -1, right = -1;
      if (!(ls >> feature >> left >> right) || left < 0 || right < 0) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": split needs '<feature> <child> <child>'");
      }
      raw.node.leaf = false;
      if (feature == "intentionality") raw.node.feature = SplitFeature::Intentionality;
      else if (feature == "awareness") raw.node.feature = SplitFeature::Awareness;
      else {
        throw ParseError("line " + std::to_string(line_no) + ": unknown feature '" +
                         feature + "'");
      }
      raw.node.children = {static_cast<int32_t>(left), static_cast<int32_t>(right)};
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown node kind '" +
                       kind + "'");
    }
    std::string extra;
    if (ls >> extra) {
      throw ParseError("line " + std::to_string(line_no) + ": trailing content '" +
                       extra + "'");
    }
    by_id.emplace(id, std::move(raw));
  }
  if (by_id.empty()) throw ParseError("tree file contains no nodes");
  if (!by_id.count(0)) throw ParseError("tree file has no root (node 0)");

  // Rebuild in preorder, checking shape along the way.
  DecisionTree tree;
  std::vector<int64_t> path;
  std::function<int32_t(int64_t, std::array<bool, 2>)> visit =
      [&](int64_t id, std::array<bool, 2> seen) -> int32_t {
    path.push_back(id);
    auto it = by_id.find(id);
    if (it == by_id.end()) {
      throw ParseError("missing node " + std::to_string(id) + " (path " +
                       path_string(path) + ")");
    }
    if (it->second.used) {
      throw ParseError("node " + std::to_string(id) +
                       " is referenced twice (path " + path_string(path) + ")");
    }
    it->second.used = true;
    const Node node = it->second.node;
    const auto new_id = static_cast<int32_t>(tree.nodes_.size());
    tree.nodes_.push_back(node);
    if (!node.leaf) {
      const auto fidx = static_cast<size_t>(node.feature);
      if (seen[fidx]) {
        throw ParseError("feature '" + std::string(split_feature_name(node.feature)) +
                         "' repeats on path " + path_string(path));
      }
      seen[fidx] = true;
      for (size_t value = 0; value < 2; ++value) {
        const int32_t child = visit(node.children[value], seen);
        tree.nodes_[new_id].children[value] = child;
      }
    }
    path.pop_back();
    return new_id;
  };
  visit(0, {false, false});

  for (const auto& [id, raw] : by_id) {
    if (!raw.used) {
      throw ParseError("node " + std::to_string(id) + " is not reachable from the root");
    }
  }
  return tree;
}

uint64_t DecisionTree::training_weight() const {
  uint64_t total = 0;
  for (const auto& node : nodes_) {
    if (node.leaf) total += node.counts[0] + node.counts[1];
  }
  return total;
}

bool DecisionTree::operator==(const DecisionTree& other) const {
  if (nodes_.size() != other.nodes_.size()) return false;
  for (size_t i = 0; i < nodes_.size(); ++i) {
    const Node& a = nodes_[i];
    const Node& b = other.nodes_[i];
    if (a.leaf != b.leaf) return false;
    if (a.leaf) {
      if (a.label != b.label || a.counts != b.counts) return false;
    } else {
      if (a.feature != b.feature || a.children != b.children) return false;
    }
  }
  return true;
}

}  // namespace pvk::induction
