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

#ifndef PVK_REALIZER_HPP
#define PVK_REALIZER_HPP

#include <optional>
#include <string>

#include "annotation.hpp"
#include "induction.hpp"

namespace pvk::realizer {

// Surface variants: FULL/CONTRACTED pair with DONT, BE_CAREFUL/TAKE_CARE
// with NEG_TC.
enum class Variant { Full, Contracted, BeCareful, TakeCare };

std::string_view variant_name(Variant v);
Variant parse_variant(std::string_view token);
Variant default_variant(annotation::FormClass form);

struct RealizationRequest {
  annotation::FormClass form;
  Variant variant;
  std::string action;                   // base-form verb phrase
  std::optional<std::string> trailing;  // purpose/reason clause
};

// Renders one stand-alone preventative sentence:
//   "Do not <action>."            "Don't <action>."
//   "Be careful not to <action>." "Take care not to <action>."
// A trailing clause goes before the period, comma-separated when it
// opens with a participle ("-ing" word) and space-separated otherwise.
std::string realize(const RealizationRequest& request);

// Predict the form with the tree, then realize.  Without a preference
// DONT renders as FULL and NEG_TC as BE_CAREFUL.
std::string plan_and_realize(const induction::DecisionTree& tree,
                             annotation::Intentionality intent,
                             annotation::Awareness aware, const std::string& action,
                             std::optional<Variant> preference = std::nullopt,
                             const std::optional<std::string>& trailing = std::nullopt);

}  // namespace pvk::realizer

#endif  // PVK_REALIZER_HPP
