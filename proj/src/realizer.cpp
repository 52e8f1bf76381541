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

#include "realizer.hpp"

#include "errors.hpp"
#include "text.hpp"

namespace pvk::realizer {

namespace {

using annotation::FormClass;

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && text::is_space(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && text::is_space(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool opens_with_participle(const std::string& clause) {
  size_t e = 0;
  while (e < clause.size() &&
         text::is_word_byte(static_cast<unsigned char>(clause[e]))) {
    ++e;
  }
  const std::string head = text::fold_ascii(clause.substr(0, e));
  return head.size() > 4 && head.ends_with("ing");
}

}  // namespace

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::Full: return "FULL";
    case Variant::Contracted: return "CONTRACTED";
    case Variant::BeCareful: return "BE_CAREFUL";
    default: return "TAKE_CARE";
  }
}

Variant parse_variant(std::string_view token) {
  if (token == "FULL") return Variant::Full;
  if (token == "CONTRACTED") return Variant::Contracted;
  if (token == "BE_CAREFUL") return Variant::BeCareful;
  if (token == "TAKE_CARE") return Variant::TakeCare;
  throw ValidationError("unknown variant '" + std::string(token) +
                        "' (expected FULL, CONTRACTED, BE_CAREFUL or TAKE_CARE)");
}

Variant default_variant(FormClass form) {
  return form == FormClass::Dont ? Variant::Full : Variant::BeCareful;
}

std::string realize(const RealizationRequest& request) {
  const bool dont_variant =
      request.variant == Variant::Full || request.variant == Variant::Contracted;
  if (dont_variant != (request.form == FormClass::Dont)) {
    throw ArgumentError("variant " + std::string(variant_name(request.variant)) +
                        " is incompatible with form " +
                        std::string(annotation::to_token(request.form)));
  }
  const std::string action = trim(request.action);
  if (action.empty()) throw ArgumentError("action phrase is empty");

  std::string out;
  switch (request.variant) {
    case Variant::Full: out = "Do not "; break;
    case Variant::Contracted: out = "Don't "; break;
    case Variant::BeCareful: out = "Be careful not to "; break;
    case Variant::TakeCare: out = "Take care not to "; break;
  }
  out += action;
  if (request.trailing) {
    const std::string clause = trim(*request.trailing);
    if (!clause.empty()) {
      out += opens_with_participle(clause) ? ", " : " ";
      out += clause;
    }
  }
  while (!out.empty() && (out.back() == '.' ||
                          text::is_space(static_cast<unsigned char>(out.back())))) {
    out.pop_back();
  }
  out.push_back('.');
  if (out[0] >= 'a' && out[0] <= 'z') out[0] = static_cast<char>(out[0] - 'a' + 'A');
  return out;
}

std::string plan_and_realize(const induction::DecisionTree& tree,
                             annotation::Intentionality intent,
                             annotation::Awareness aware, const std::string& action,
                             std::optional<Variant> preference,
                             const std::optional<std::string>& trailing) {
  const auto prediction = tree.predict(intent, aware);
  RealizationRequest request;
  request.form = prediction.form;
  request.variant = preference.value_or(default_variant(prediction.form));
  request.action = action;
  request.trailing = trailing;
  return realize(request);
}

}  // namespace pvk::realizer
