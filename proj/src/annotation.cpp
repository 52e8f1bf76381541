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

#include "annotation.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

#include "csv.hpp"
#include "errors.hpp"

namespace pvk::annotation {

namespace {

const char* kHeader[5] = {"example_id", "coder", "form", "intentionality",
                          "awareness"};

std::string bad_token(size_t line, std::string_view column, std::string_view token) {
  return "line " + std::to_string(line) + ", column '" + std::string(column) +
         "': unknown token '" + std::string(token) + "'";
}

}  // namespace

std::string_view to_token(FormClass v) {
  return v == FormClass::Dont ? "DONT" : "NEG_TC";
}
std::string_view to_token(Intentionality v) {
  return v == Intentionality::Con ? "CON" : "UNC";
}
std::string_view to_token(Awareness v) {
  return v == Awareness::Aw ? "AW" : "UNAW";
}
std::string_view to_token(Feature f) {
  switch (f) {
    case Feature::Form: return "form";
    case Feature::Intentionality: return "intentionality";
    default: return "awareness";
  }
}

FormClass parse_form(std::string_view token) {
  if (token == "DONT") return FormClass::Dont;
  if (token == "NEG_TC") return FormClass::NegTc;
  throw ValidationError("unknown form token '" + std::string(token) + "'");
}
Intentionality parse_intentionality(std::string_view token) {
  if (token == "CON") return Intentionality::Con;
  if (token == "UNC") return Intentionality::Unc;
  throw ValidationError("unknown intentionality token '" + std::string(token) + "'");
}
Awareness parse_awareness(std::string_view token) {
  if (token == "AW") return Awareness::Aw;
  if (token == "UNAW") return Awareness::Unaw;
  throw ValidationError("unknown awareness token '" + std::string(token) + "'");
}
Feature parse_feature(std::string_view token) {
  if (token == "form") return Feature::Form;
  if (token == "intentionality") return Feature::Intentionality;
  if (token == "awareness") return Feature::Awareness;
  throw ValidationError("unknown feature '" + std::string(token) +
                        "' (expected form, intentionality or awareness)");
}

CodingSet CodingSet::from_records(std::vector<CodingRecord> records) {
  std::set<std::pair<std::string, std::string>> seen;
  std::map<std::string, std::set<std::string>> coders_by_example;
  for (const auto& r : records) {
    if (!seen.insert({r.example_id, r.coder}).second) {
      throw ValidationError("duplicate record for example '" + r.example_id +
                            "', coder '" + r.coder + "'");
    }
    coders_by_example[r.example_id].insert(r.coder);
  }
  CodingSet set;
  if (!coders_by_example.empty()) {
    const auto& roster = coders_by_example.begin()->second;
    for (const auto& [id, coders] : coders_by_example) {
      if (coders != roster) {
        throw ValidationError("example '" + id +
                              "' is not coded by the full coder roster");
      }
    }
    set.roster_.assign(roster.begin(), roster.end());
  }
  set.example_count_ = coders_by_example.size();
  set.records_ = std::move(records);
  return set;
}

CodingSet CodingSet::load_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open coding file '" + path + "'");
  csv::Reader reader(in, /*skip_comments=*/true);
  std::vector<std::string> fields;
  if (!reader.next(fields)) {
    throw ValidationError("coding file '" + path + "' is empty");
  }
  if (fields.size() != 5 || !std::equal(fields.begin(), fields.end(), kHeader,
                                        [](const std::string& a, const char* b) {
                                          return a == b;
                                        })) {
    throw ValidationError(
        "coding file '" + path +
        "' must start with header 'example_id,coder,form,intentionality,awareness'");
  }
  std::vector<CodingRecord> records;
  while (reader.next(fields)) {
    if (fields.size() != 5) {
      throw ValidationError("line " + std::to_string(reader.line()) +
                            ": expected 5 fields, got " +
                            std::to_string(fields.size()));
    }
    CodingRecord r;
    r.example_id = fields[0];
    r.coder = fields[1];
    if (r.example_id.empty() || r.coder.empty()) {
      throw ValidationError("line " + std::to_string(reader.line()) +
                            ": empty example_id or coder");
    }
    try {
      r.form = parse_form(fields[2]);
    } catch (const ValidationError&) {
      throw ValidationError(bad_token(reader.line(), "form", fields[2]));
    }
    try {
      r.intentionality = parse_intentionality(fields[3]);
    } catch (const ValidationError&) {
      throw ValidationError(bad_token(reader.line(), "intentionality", fields[3]));
    }
    try {
      r.awareness = parse_awareness(fields[4]);
    } catch (const ValidationError&) {
      throw ValidationError(bad_token(reader.line(), "awareness", fields[4]));
    }
    records.push_back(std::move(r));
  }
  return from_records(std::move(records));
}

void CodingSet::write_csv(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write coding file '" + path + "'");
  std::vector<std::string> row(kHeader, kHeader + 5);
  csv::write_row(out, row);
  for (const auto& r : records_) {
    row = {r.example_id, r.coder, std::string(to_token(r.form)),
           std::string(to_token(r.intentionality)),
           std::string(to_token(r.awareness))};
    csv::write_row(out, row);
  }
  if (!out) throw IoError("failed writing coding file '" + path + "'");
}

std::vector<std::pair<std::string, std::string>> CodingSet::feature_pairs(
    Feature f) const {
  if (roster_.size() != 2) {
    throw ArgumentError("agreement statistics are defined for exactly 2 coders, got " +
                        std::to_string(roster_.size()));
  }
  auto label = [&](const CodingRecord& r) -> std::string {
    switch (f) {
      case Feature::Form: return std::string(to_token(r.form));
      case Feature::Intentionality: return std::string(to_token(r.intentionality));
      default: return std::string(to_token(r.awareness));
    }
  };
  std::map<std::string, std::pair<std::string, std::string>> by_example;
  for (const auto& r : records_) {
    auto& slot = by_example[r.example_id];
    if (r.coder == roster_[0]) slot.first = label(r);
    else slot.second = label(r);
  }
  std::vector<std::pair<std::string, std::string>> items;
  items.reserve(by_example.size());
  for (auto& [id, pair] : by_example) items.push_back(std::move(pair));
  return items;
}

std::vector<ConsensusExample> agreement_subset(const CodingSet& codings) {
  if (codings.roster().size() < 2) {
    throw ArgumentError("agreement subset requires at least 2 coders per example");
  }
  std::map<std::string, std::vector<const CodingRecord*>> by_example;
  for (const auto& r : codings.records()) by_example[r.example_id].push_back(&r);

  std::vector<ConsensusExample> out;
  for (const auto& [id, recs] : by_example) {
    const CodingRecord* first = recs.front();
    bool intent_agree = true;
    bool aware_agree = true;
    for (const CodingRecord* r : recs) {
      if (r->form != first->form) {
        throw DataError("form coding disagreement on example '" + id +
                        "'; coding data is corrupt");
      }
      intent_agree &= r->intentionality == first->intentionality;
      aware_agree &= r->awareness == first->awareness;
    }
    if (intent_agree && aware_agree) {
      out.push_back({id, first->intentionality, first->awareness, first->form});
    }
  }
  // std::map iteration already yields ids in sorted order.
  return out;
}

ContingencyTable2x2 build_contingency(const std::vector<ConsensusExample>& subset,
                                      Feature feature) {
  if (subset.empty()) {
    throw ArgumentError("cannot build a contingency table from an empty subset");
  }
  if (feature == Feature::Form) {
    throw ArgumentError("contingency feature must be intentionality or awareness");
  }
  ContingencyTable2x2 t;
  t.row_labels = {"DONT", "NEG_TC"};
  if (feature == Feature::Intentionality) {
    t.col_labels = {"CON", "UNC"};
  } else {
    t.col_labels = {"AW", "UNAW"};
  }
  for (const auto& ex : subset) {
    const bool row1 = ex.form == FormClass::NegTc;
    const bool col1 = feature == Feature::Intentionality
                          ? ex.intentionality == Intentionality::Unc
                          : ex.awareness == Awareness::Unaw;
    if (!row1 && !col1) ++t.a;
    else if (!row1 && col1) ++t.b;
    else if (row1 && !col1) ++t.c;
    else ++t.d;
  }
  return t;
}

}  // namespace pvk::annotation
