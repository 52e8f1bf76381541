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
#include <random>

#include "annotation.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "oracles.hpp"

using namespace pvk;
using annotation::Awareness;
using annotation::FormClass;
using annotation::Intentionality;
using induction::DecisionTree;
using induction::SplitFeature;
using induction::TrainingInstance;

namespace {

const std::string kFixtures = PVK_FIXTURES_DIR;

TrainingInstance inst(Intentionality i, Awareness a, FormClass l, uint64_t w) {
  return {i, a, l, w};
}

// The joint distribution of the bundled 165-example agreement subset.
std::vector<TrainingInstance> fixture_instances() {
  return {
      inst(Intentionality::Con, Awareness::Aw, FormClass::Dont, 3),
      inst(Intentionality::Con, Awareness::Unaw, FormClass::Dont, 58),
      inst(Intentionality::Unc, Awareness::Unaw, FormClass::Dont, 45),
      inst(Intentionality::Unc, Awareness::Aw, FormClass::NegTc, 32),
      inst(Intentionality::Unc, Awareness::Unaw, FormClass::NegTc, 27),
  };
}

oracles::JointTable to_joint(const std::vector<TrainingInstance>& instances) {
  oracles::JointTable t;
  for (const auto& i : instances) {
    t.w[i.intentionality == Intentionality::Con ? 0 : 1]
       [i.awareness == Awareness::Aw ? 0 : 1][i.label == FormClass::Dont ? 0 : 1] +=
        i.weight;
  }
  return t;
}

}  // namespace

TEST_CASE("induce on the fixture joint table routes CON to DONT") {
  const auto tree = DecisionTree::induce(fixture_instances());
  CHECK(tree.training_weight() == 165);

  const auto con_aw = tree.predict(Intentionality::Con, Awareness::Aw);
  const auto con_unaw = tree.predict(Intentionality::Con, Awareness::Unaw);
  CHECK(con_aw.form == FormClass::Dont);
  CHECK(con_unaw.form == FormClass::Dont);

  const auto unc_aw = tree.predict(Intentionality::Unc, Awareness::Aw);
  CHECK(unc_aw.form == FormClass::NegTc);
  CHECK(unc_aw.confidence == 1.0);

  const auto unc_unaw = tree.predict(Intentionality::Unc, Awareness::Unaw);
  CHECK(unc_unaw.form == FormClass::Dont);
  CHECK(unc_unaw.confidence == doctest::Approx(45.0 / 72.0).epsilon(1e-15));
}

TEST_CASE("induce picks the larger gain ratio at the root") {
  // On the fixture table awareness has the better gain ratio, so the
  // root splits on it.
  const auto tree = DecisionTree::induce(fixture_instances());
  REQUIRE(!tree.nodes().empty());
  CHECK_FALSE(tree.nodes()[0].leaf);
  CHECK(tree.nodes()[0].feature == SplitFeature::Awareness);

  const auto intent_eval =
      induction::evaluate_split(fixture_instances(), SplitFeature::Intentionality);
  const auto aware_eval =
      induction::evaluate_split(fixture_instances(), SplitFeature::Awareness);
  CHECK(aware_eval.gain_ratio > intent_eval.gain_ratio);
}

TEST_CASE("induce handles pure and tied training sets") {
  const auto pure = DecisionTree::induce(
      {inst(Intentionality::Con, Awareness::Aw, FormClass::NegTc, 5)});
  REQUIRE(pure.nodes().size() == 1);
  CHECK(pure.nodes()[0].leaf);
  CHECK(pure.predict(Intentionality::Unc, Awareness::Unaw).form == FormClass::NegTc);

  // Two instances identical except for the label: no usable split, and
  // the leaf tie-break lands on DONT.
  const auto tied = DecisionTree::induce({
      inst(Intentionality::Con, Awareness::Aw, FormClass::Dont, 2),
      inst(Intentionality::Con, Awareness::Aw, FormClass::NegTc, 2),
  });
  REQUIRE(tied.nodes().size() == 1);
  CHECK(tied.predict(Intentionality::Con, Awareness::Aw).form == FormClass::Dont);

  // A cell tie resolves toward the globally more frequent class first.
  const auto global_tie = DecisionTree::induce({
      inst(Intentionality::Con, Awareness::Aw, FormClass::Dont, 2),
      inst(Intentionality::Con, Awareness::Aw, FormClass::NegTc, 2),
      inst(Intentionality::Unc, Awareness::Aw, FormClass::NegTc, 3),
  });
  CHECK(global_tie.predict(Intentionality::Con, Awareness::Aw).form ==
        FormClass::NegTc);

  CHECK_THROWS_AS(DecisionTree::induce({}), ArgumentError);
}

TEST_CASE("doubling every weight keeps the tree structure and labels") {
  auto doubled = fixture_instances();
  for (auto& i : doubled) i.weight *= 2;
  const auto base = DecisionTree::induce(fixture_instances());
  const auto twice = DecisionTree::induce(doubled);
  REQUIRE(base.nodes().size() == twice.nodes().size());
  for (size_t i = 0; i < base.nodes().size(); ++i) {
    CHECK(base.nodes()[i].leaf == twice.nodes()[i].leaf);
    if (base.nodes()[i].leaf) {
      CHECK(base.nodes()[i].label == twice.nodes()[i].label);
    } else {
      CHECK(base.nodes()[i].feature == twice.nodes()[i].feature);
      CHECK(base.nodes()[i].children == twice.nodes()[i].children);
    }
  }
}

TEST_CASE("gain ratio matches the brute-force oracle on all small tables") {
  // Every 2x2x2 joint count table with cells up to 5.
  uint64_t cells[8];
  size_t checked = 0;
  std::vector<TrainingInstance> instances;
  instances.reserve(8);
  for (uint64_t code = 0; code < 1679616; ++code) {  // 6^8
    uint64_t rest = code;
    uint64_t total = 0;
    for (int k = 0; k < 8; ++k) {
      cells[k] = rest % 6;
      rest /= 6;
      total += cells[k];
    }
    if (total == 0) continue;
    instances.clear();
    int k = 0;
    for (int i = 0; i < 2; ++i) {
      for (int a = 0; a < 2; ++a) {
        for (int l = 0; l < 2; ++l, ++k) {
          if (cells[k] == 0) continue;
          instances.push_back(inst(i == 0 ? Intentionality::Con : Intentionality::Unc,
                                   a == 0 ? Awareness::Aw : Awareness::Unaw,
                                   l == 0 ? FormClass::Dont : FormClass::NegTc,
                                   cells[k]));
        }
      }
    }
    const auto joint = to_joint(instances);
    for (int f = 0; f < 2; ++f) {
      const auto impl = induction::evaluate_split(
          instances, f == 0 ? SplitFeature::Intentionality : SplitFeature::Awareness);
      const auto oracle = oracles::split_numbers(joint, f);
      if (std::abs(impl.gain - oracle.gain) >= 1e-12 ||
          std::abs(impl.split_info - oracle.split_info) >= 1e-12) {
        CAPTURE(code);
        REQUIRE(std::abs(impl.gain - oracle.gain) < 1e-12);
        REQUIRE(std::abs(impl.split_info - oracle.split_info) < 1e-12);
      }
      if (impl.usable) {
        if (std::abs(impl.gain_ratio - oracle.gain_ratio) >= 1e-12) {
          CAPTURE(code);
          REQUIRE(std::abs(impl.gain_ratio - oracle.gain_ratio) < 1e-12);
        }
      }
      ++checked;
    }
  }
  CHECK(checked > 3000000);
}

TEST_CASE("tree predictions equal the per-cell majority on the fixture") {
  const auto instances = fixture_instances();
  const auto tree = DecisionTree::induce(instances);
  const auto joint = to_joint(instances);
  for (int i = 0; i < 2; ++i) {
    for (int a = 0; a < 2; ++a) {
      const int expected = oracles::cell_majority(joint, i, a);
      if (expected < 0) continue;
      const auto got = tree.predict(i == 0 ? Intentionality::Con : Intentionality::Unc,
                                    a == 0 ? Awareness::Aw : Awareness::Unaw);
      CHECK((got.form == FormClass::Dont ? 0 : 1) == expected);
    }
  }
}

TEST_CASE("training accuracy is at least the majority baseline") {
  std::mt19937 rng(31337);
  for (int round = 0; round < 200; ++round) {
    std::vector<TrainingInstance> instances;
    uint64_t global[2] = {0, 0};
    for (int i = 0; i < 2; ++i) {
      for (int a = 0; a < 2; ++a) {
        for (int l = 0; l < 2; ++l) {
          const uint64_t w = rng() % 6;
          if (w == 0) continue;
          instances.push_back(inst(i == 0 ? Intentionality::Con : Intentionality::Unc,
                                   a == 0 ? Awareness::Aw : Awareness::Unaw,
                                   l == 0 ? FormClass::Dont : FormClass::NegTc, w));
          global[l] += w;
        }
      }
    }
    if (instances.empty()) continue;
    const auto tree = DecisionTree::induce(instances);
    uint64_t correct = 0, total = 0;
    for (const auto& i : instances) {
      total += i.weight;
      if (tree.predict(i.intentionality, i.awareness).form == i.label) {
        correct += i.weight;
      }
    }
    CHECK(correct >= std::max(global[0], global[1]));
    CHECK(total == tree.training_weight());
  }
}

TEST_CASE("serialization round-trips the fixture tree") {
  const auto tree = DecisionTree::induce(fixture_instances());
  const auto text = tree.serialize();
  CHECK(text.find("node 0 split awareness") == 0);
  const auto back = DecisionTree::deserialize(text);
  CHECK(back == tree);
  CHECK(back.serialize() == text);
}

TEST_CASE("deserialize accepts a hand-written single leaf") {
  const auto tree = DecisionTree::deserialize("node 0 leaf NEG_TC 0 0\n");
  const auto p = tree.predict(Intentionality::Con, Awareness::Unaw);
  CHECK(p.form == FormClass::NegTc);
  CHECK(p.confidence == 1.0);
}

TEST_CASE("deserialize rejects malformed input with a useful message") {
  CHECK_THROWS_AS(DecisionTree::deserialize(""), ParseError);
  // Truncated: the split references children that never appear.
  CHECK_THROWS_WITH_AS(DecisionTree::deserialize("node 0 split awareness 1 2\n"),
                       doctest::Contains("path 0 -> 1"), ParseError);
  CHECK_THROWS_AS(DecisionTree::deserialize("node 1 leaf DONT 1 0\n"), ParseError);
  CHECK_THROWS_AS(DecisionTree::deserialize("node 0 leaf MAYBE 1 0\n"), ParseError);
  CHECK_THROWS_AS(DecisionTree::deserialize("node 0 split color 1 2\n"
                                            "node 1 leaf DONT 1 0\n"
                                            "node 2 leaf NEG_TC 0 1\n"),
                  ParseError);
  // A feature repeating along a path.
  CHECK_THROWS_WITH_AS(
      DecisionTree::deserialize("node 0 split awareness 1 2\n"
                                "node 1 leaf DONT 1 0\n"
                                "node 2 split awareness 3 4\n"
                                "node 3 leaf DONT 1 0\n"
                                "node 4 leaf NEG_TC 0 1\n"),
      doctest::Contains("repeats"), ParseError);
  // Unreachable extras are rejected.
  CHECK_THROWS_AS(DecisionTree::deserialize("node 0 leaf DONT 1 0\n"
                                            "node 1 leaf NEG_TC 0 1\n"),
                  ParseError);
  // Duplicate ids.
  CHECK_THROWS_AS(DecisionTree::deserialize("node 0 leaf DONT 1 0\n"
                                            "node 0 leaf DONT 1 0\n"),
                  ParseError);
}

TEST_CASE("instances_from collapses duplicate feature combinations") {
  std::vector<annotation::ConsensusExample> subset;
  for (int i = 0; i < 4; ++i) {
    subset.push_back({"e" + std::to_string(i), Intentionality::Unc, Awareness::Aw,
                      FormClass::NegTc});
  }
  subset.push_back({"e9", Intentionality::Con, Awareness::Aw, FormClass::Dont});
  const auto instances = induction::instances_from(subset);
  REQUIRE(instances.size() == 2);
  uint64_t total = 0;
  for (const auto& i : instances) total += i.weight;
  CHECK(total == 5);
}
