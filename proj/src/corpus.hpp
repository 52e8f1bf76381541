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

#ifndef PVK_CORPUS_HPP
#define PVK_CORPUS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "annotation.hpp"

namespace pvk::corpus {

enum class Family { Dont, NegTc };

// One probed surface form.  The id inventory is fixed: dont, do_not,
// take_care, make_sure, be_careful, be_sure, ensure, be_certain.
struct ProbePattern {
  std::string id;
  std::string surface;  // lowercase, single-space separated words
  Family family;
};

const std::vector<ProbePattern>& default_patterns();

// CSV with header `id,surface,family`; ids must come from the built-in
// inventory with their canonical family.
std::vector<ProbePattern> load_patterns_csv(const std::string& path);

// One extracted sentence/segment.
struct Utterance {
  std::string id;      // "<source>#<segment index>"
  std::string text;    // whitespace-normalized document slice
  std::string source;  // document path
  size_t begin = 0;    // byte span into the source document
  size_t end = 0;
  std::vector<std::string> matched;  // ids of patterns that hit

  bool operator==(const Utterance&) const = default;
};

// Splits a document into sentence segments.  Boundaries occur after
// '.', '!' or '?' followed by whitespace and at blank lines; a bundled
// abbreviation list suppresses '.' boundaries.  Segment spans cover the
// document in order; only whitespace falls between them.  Invalid UTF-8
// raises a decoding error naming the byte offset.
std::vector<Utterance> break_sentences(std::string_view document,
                                       std::string_view source);

// All segments of every regular file under `dir`, in sorted relative
// path order.
std::vector<Utterance> read_corpus_dir(const std::string& dir);

// One pattern occurrence inside an utterance's text.
struct MatchOccurrence {
  size_t pos = 0;
  size_t len = 0;
  const ProbePattern* pattern = nullptr;
};

// All word-boundary-respecting occurrences of `pattern` in the
// case-folded text.  The first token of a multiword surface may carry
// an "-s"/"-ing" inflection ("taking care", "makes sure").
std::vector<MatchOccurrence> find_matches(std::string_view text,
                                          const ProbePattern& pattern);

// Utterances whose text contains at least one pattern, in input order,
// with `matched` filled in.
std::vector<Utterance> probe(const std::vector<Utterance>& utterances,
                             const std::vector<ProbePattern>& patterns);

// Deterministic sampling: all hits when |hits| <= cap, otherwise
// exactly `cap` hits chosen by a partial Fisher-Yates shuffle driven by
// the MINSTD generator and re-sorted into input order.  The draw
// sequence is frozen: x[0] = (seed mod 2^31-2) + 1, each step advances
// x <- 16807*x mod (2^31-1) and swaps index i with i + x mod (n-i).
std::vector<Utterance> sample(const std::vector<Utterance>& hits, uint32_t cap,
                              uint64_t seed);

enum class RejectReason { NotImperative, NotNegative, Manual };

std::string_view reject_reason_token(RejectReason r);

struct FilterVerdict {
  std::string utterance_id;
  bool keep = false;
  std::optional<RejectReason> reason;  // present iff keep is false
  bool overridden = false;
};

using Overrides = std::unordered_map<std::string, bool>;

// CSV with header `id,keep`, keep in {true,false}.
Overrides load_overrides_csv(const std::string& path);

// Rejects NOT_IMPERATIVE when every matched occurrence is immediately
// preceded, within its clause, by an overt subject (a pronoun, or a
// determiner plus the following word); rejects NOT_NEGATIVE when a
// TC-family occurrence has no "not"/"never" within the next ten word
// tokens.  An override entry always wins and marks the verdict
// overridden (reason MANUAL when it forces rejection).
FilterVerdict filter_candidate(const Utterance& u,
                               const std::vector<ProbePattern>& patterns,
                               const Overrides& overrides);

// Form class of a filtered utterance; when both families match, the
// earliest occurrence decides.
annotation::FormClass classify_form(const Utterance& u,
                                    const std::vector<ProbePattern>& patterns);

// Stage counts in the style of a distribution table: one column per
// pattern over the raw/sampled/kept stages, plus per-family totals
// (each utterance counted once, by its earliest-match family).
struct StageReport {
  struct PatternRow {
    std::string pattern_id;
    Family family;
    size_t raw = 0, sampled = 0, kept = 0;
  };
  std::vector<PatternRow> rows;     // in pattern-table order
  size_t raw_dont = 0, raw_negtc = 0;
  size_t sampled_dont = 0, sampled_negtc = 0;
  size_t kept_dont = 0, kept_negtc = 0;
  size_t total_segments = 0;
  size_t probed_segments = 0;  // |raw|

  double probed_share() const {
    return total_segments ? static_cast<double>(probed_segments) / total_segments : 0.0;
  }
};

StageReport stage_report(size_t total_segments, const std::vector<Utterance>& raw,
                         const std::vector<Utterance>& sampled,
                         const std::vector<Utterance>& kept,
                         const std::vector<ProbePattern>& patterns);

std::string render_stage_report(const StageReport& report, bool as_csv);

// Utterance CSV: header `id,source,start,end,patterns,text` with
// `patterns` a ';'-joined id list.
std::string render_utterances_csv(const std::vector<Utterance>& utterances);
void write_utterances_csv(const std::vector<Utterance>& utterances,
                          const std::string& path);
std::vector<Utterance> read_utterances_csv(const std::string& path);

// Verdict CSV: header `id,keep,reason,overridden`; reason is empty on
// kept rows.
std::string render_verdicts_csv(const std::vector<FilterVerdict>& verdicts);
void write_verdicts_csv(const std::vector<FilterVerdict>& verdicts,
                        const std::string& path);

}  // namespace pvk::corpus

#endif  // PVK_CORPUS_HPP
