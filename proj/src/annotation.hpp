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

#ifndef PVK_ANNOTATION_HPP
#define PVK_ANNOTATION_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pvk::annotation {

// Grammatical form of a preventative expression.
enum class FormClass { Dont, NegTc };

// Does the writer expect the reader to consciously intend the prevented
// action (CON) or to stumble into it (UNC)?
enum class Intentionality { Con, Unc };

// Is the reader presumed aware that the consequences of the prevented
// action are bad?
enum class Awareness { Aw, Unaw };

enum class Feature { Form, Intentionality, Awareness };

std::string_view to_token(FormClass v);
std::string_view to_token(Intentionality v);
std::string_view to_token(Awareness v);
std::string_view to_token(Feature f);
FormClass parse_form(std::string_view token);
Intentionality parse_intentionality(std::string_view token);
Awareness parse_awareness(std::string_view token);
Feature parse_feature(std::string_view token);

// One coder's judgment of one example.
struct CodingRecord {
  std::string example_id;
  std::string coder;
  FormClass form;
  Intentionality intentionality;
  Awareness awareness;

  bool operator==(const CodingRecord&) const = default;
};

// A validated collection of coding records: (example, coder) pairs are
// unique and every example carries records from the same coder roster.
class CodingSet {
 public:
  static CodingSet from_records(std::vector<CodingRecord> records);
  static CodingSet load_csv(const std::string& path);
  void write_csv(const std::string& path) const;

  const std::vector<CodingRecord>& records() const { return records_; }
  const std::vector<std::string>& roster() const { return roster_; }
  size_t example_count() const { return example_count_; }

  // Per-item label pairs for one feature, ordered by example id.  Only
  // defined for a two-coder roster; labels are the CSV tokens.
  std::vector<std::pair<std::string, std::string>> feature_pairs(Feature f) const;

 private:
  std::vector<CodingRecord> records_;
  std::vector<std::string> roster_;  // sorted coder names
  size_t example_count_ = 0;
};

// One example every coder agreed on, with the unanimous labels.
struct ConsensusExample {
  std::string example_id;
  Intentionality intentionality;
  Awareness awareness;
  FormClass form;

  bool operator==(const ConsensusExample&) const = default;
};

// Examples whose coders all agree on intentionality AND awareness,
// sorted by example id.  Form codings must agree on every example; a
// conflict means the input is corrupt.
std::vector<ConsensusExample> agreement_subset(const CodingSet& codings);

// 2x2 cross-tabulation of form (rows: DONT, NEG_TC) against one
// function feature (columns in enum order):
//
//            col0   col1
//   DONT       a      b
//   NEG_TC     c      d
struct ContingencyTable2x2 {
  uint64_t a = 0, b = 0, c = 0, d = 0;
  std::array<std::string, 2> row_labels;
  std::array<std::string, 2> col_labels;

  uint64_t n() const { return a + b + c + d; }
};

ContingencyTable2x2 build_contingency(const std::vector<ConsensusExample>& subset,
                                      Feature feature);

}  // namespace pvk::annotation

#endif  // PVK_ANNOTATION_HPP
