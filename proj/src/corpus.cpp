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

#include "corpus.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "csv.hpp"
#include "errors.hpp"
#include "text.hpp"

namespace fs = std::filesystem;

namespace pvk::corpus {

namespace {

using text::Token;

// Token endings (lowercase, including the final '.') that do not close
// a sentence.
const std::set<std::string>& abbreviations() {
  static const std::set<std::string> abbrevs = {
      "e.g.", "i.e.", "etc.", "mr.", "mrs.", "dr.", "f.", "c.", "no.", "vs.",
  };
  return abbrevs;
}

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

// The non-whitespace run ending at `dot`, lowercased, with leading
// punctuation stripped: for "(e.g." this yields "e.g.".
std::string trailing_token(std::string_view s, size_t dot) {
  size_t start = dot;
  while (start > 0 && !text::is_space(static_cast<unsigned char>(s[start - 1]))) {
    --start;
  }
  while (start < dot && !text::is_word_byte(static_cast<unsigned char>(s[start]))) {
    ++start;
  }
  return text::fold_ascii(s.substr(start, dot - start + 1));
}

// True when the whitespace run starting at `pos` contains a second
// newline, i.e. a blank line.
bool blank_line_ahead(std::string_view s, size_t pos) {
  size_t k = pos + 1;
  while (k < s.size() && text::is_space(static_cast<unsigned char>(s[k]))) {
    if (s[k] == '\n') return true;
    ++k;
  }
  return false;
}

bool subject_pronoun(const std::string& w) {
  static const std::set<std::string> pronouns = {"i", "you", "he", "she",
                                                 "it", "we", "they"};
  return pronouns.count(w) > 0;
}

bool determiner(const std::string& w) {
  static const std::set<std::string> dets = {
      "the", "a", "an", "this", "these", "those", "my",    "your", "his",
      "her", "its", "our", "their", "some", "any", "each", "every", "no"};
  return dets.count(w) > 0;
}

bool subordinator(const std::string& w) {
  static const std::set<std::string> subs = {
      "if", "when", "while", "unless", "until", "because", "although",
      "though", "after", "before", "once", "since", "as", "where", "that"};
  return subs.count(w) > 0;
}

std::string join_ids(const std::vector<std::string>& ids) {
  std::string out;
  for (size_t i = 0; i < ids.size(); ++i) {
    if (i) out.push_back(';');
    out += ids[i];
  }
  return out;
}

Family family_of_id(const std::string& id) {
  return (id == "dont" || id == "do_not") ? Family::Dont : Family::NegTc;
}

const std::set<std::string>& known_pattern_ids() {
  static const std::set<std::string> ids = {"dont",       "do_not",  "take_care",
                                            "make_sure",  "be_careful", "be_sure",
                                            "ensure",     "be_certain"};
  return ids;
}

// Earliest occurrence of any matched pattern; null when nothing hits.
std::optional<MatchOccurrence> earliest_match(const Utterance& u,
                                              const std::vector<ProbePattern>& patterns) {
  std::optional<MatchOccurrence> best;
  for (const auto& pat : patterns) {
    if (std::find(u.matched.begin(), u.matched.end(), pat.id) == u.matched.end()) {
      continue;
    }
    for (const auto& occ : find_matches(u.text, pat)) {
      if (!best || occ.pos < best->pos) best = occ;
    }
  }
  return best;
}

}  // namespace

const std::vector<ProbePattern>& default_patterns() {
  static const std::vector<ProbePattern> patterns = {
      {"dont", "don't", Family::Dont},
      {"do_not", "do not", Family::Dont},
      {"take_care", "take care", Family::NegTc},
      {"make_sure", "make sure", Family::NegTc},
      {"be_careful", "be careful", Family::NegTc},
      {"be_sure", "be sure", Family::NegTc},
      {"ensure", "ensure", Family::NegTc},
      {"be_certain", "be certain", Family::NegTc},
  };
  return patterns;
}

std::vector<ProbePattern> load_patterns_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open pattern file '" + path + "'");
  csv::Reader reader(in, /*skip_comments=*/true);
  std::vector<std::string> fields;
  if (!reader.next(fields) || fields != std::vector<std::string>{"id", "surface", "family"}) {
    throw ValidationError("pattern file '" + path +
                          "' must start with header 'id,surface,family'");
  }
  std::vector<ProbePattern> patterns;
  std::set<std::string> seen;
  while (reader.next(fields)) {
    if (fields.size() != 3) {
      throw ValidationError("line " + std::to_string(reader.line()) +
                            ": expected 3 fields");
    }
    ProbePattern p;
    p.id = fields[0];
    if (!known_pattern_ids().count(p.id)) {
      throw ValidationError("line " + std::to_string(reader.line()) +
                            ": unknown pattern id '" + p.id + "'");
    }
    if (!seen.insert(p.id).second) {
      throw ValidationError("line " + std::to_string(reader.line()) +
                            ": duplicate pattern id '" + p.id + "'");
    }
    p.surface = text::normalize_ws(text::fold_ascii(fields[1]));
    if (p.surface.empty()) {
      throw ValidationError("line " + std::to_string(reader.line()) +
                            ": empty surface for pattern '" + p.id + "'");
    }
    const Family canonical = family_of_id(p.id);
    const std::string& tok = fields[2];
    if ((tok != "DONT" && tok != "NEG_TC") ||
        (tok == "DONT") != (canonical == Family::Dont)) {
      throw ValidationError("line " + std::to_string(reader.line()) +
                            ": family '" + tok + "' does not match pattern '" +
                            p.id + "'");
    }
    p.family = canonical;
    patterns.push_back(std::move(p));
  }
  if (patterns.empty()) {
    throw ValidationError("pattern file '" + path + "' contains no patterns");
  }
  return patterns;
}

std::vector<Utterance> break_sentences(std::string_view document,
                                       std::string_view source) {
  if (auto bad = text::utf8_invalid_offset(document)) {
    throw DecodingError("invalid UTF-8 at byte offset " + std::to_string(*bad) +
                        " in '" + std::string(source) + "'");
  }
  std::vector<Utterance> segments;
  const size_t n = document.size();
  size_t pos = 0;
  while (pos < n) {
    while (pos < n && text::is_space(static_cast<unsigned char>(document[pos]))) {
      ++pos;
    }
    if (pos >= n) break;
    const size_t start = pos;
    size_t seg_end = n;
    for (size_t j = start; j < n; ++j) {
      const char c = document[j];
      if (is_terminator(c)) {
        const bool at_eot = j + 1 >= n;
        if (at_eot || text::is_space(static_cast<unsigned char>(document[j + 1]))) {
          if (c != '.' || !abbreviations().count(trailing_token(document, j))) {
            seg_end = j + 1;
            break;
          }
        }
      } else if (c == '\n' && blank_line_ahead(document, j)) {
        seg_end = j;  // paragraph break
        break;
      }
    }
    size_t end = seg_end;
    while (end > start && text::is_space(static_cast<unsigned char>(document[end - 1]))) {
      --end;
    }
    if (end > start) {
      Utterance u;
      u.source = std::string(source);
      u.id = u.source + "#" + std::to_string(segments.size());
      u.begin = start;
      u.end = end;
      u.text = text::normalize_ws(document.substr(start, end - start));
      segments.push_back(std::move(u));
    }
    pos = seg_end;
  }
  return segments;
}

std::vector<Utterance> read_corpus_dir(const std::string& dir) {
  fs::path root(dir);
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw IoError("corpus directory '" + dir + "' does not exist or is not a directory");
  }
  std::vector<fs::path> files;
  for (auto it = fs::recursive_directory_iterator(root, ec);
       it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (ec) throw IoError("cannot walk corpus directory '" + dir + "': " + ec.message());
    if (it->is_regular_file() && it->path().filename().string().front() != '.') {
      files.push_back(it->path());
    }
  }
  // Visit order must not matter: sort by relative path.
  std::vector<std::pair<std::string, fs::path>> rel;
  rel.reserve(files.size());
  for (const auto& f : files) {
    rel.emplace_back(fs::relative(f, root).generic_string(), f);
  }
  std::sort(rel.begin(), rel.end());

  std::vector<Utterance> segments;
  for (const auto& [relpath, path] : rel) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open corpus file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    auto segs = break_sentences(buf.str(), relpath);
    segments.insert(segments.end(), std::make_move_iterator(segs.begin()),
                    std::make_move_iterator(segs.end()));
  }
  return segments;
}

std::vector<MatchOccurrence> find_matches(std::string_view text_in,
                                          const ProbePattern& pattern) {
  const std::string folded = text::fold_ascii(text_in);

  // Inflection tolerance for the first token of multiword surfaces.
  std::vector<std::string> needles;
  const size_t space = pattern.surface.find(' ');
  if (space == std::string::npos) {
    needles.push_back(pattern.surface);
  } else {
    const std::string head = pattern.surface.substr(0, space);
    const std::string rest = pattern.surface.substr(space);
    needles.push_back(head + rest);
    needles.push_back(head + "s" + rest);
    needles.push_back(head + "ing" + rest);
    if (head.size() > 1 && head.back() == 'e') {
      needles.push_back(head.substr(0, head.size() - 1) + "ing" + rest);
    }
  }
  std::sort(needles.begin(), needles.end());
  needles.erase(std::unique(needles.begin(), needles.end()), needles.end());

  std::vector<MatchOccurrence> occs;
  for (const auto& needle : needles) {
    for (size_t at = folded.find(needle); at != std::string::npos;
         at = folded.find(needle, at + 1)) {
      const bool left_ok =
          at == 0 || !text::is_word_byte(static_cast<unsigned char>(folded[at - 1]));
      const size_t after = at + needle.size();
      const bool right_ok =
          after >= folded.size() ||
          !text::is_word_byte(static_cast<unsigned char>(folded[after]));
      if (left_ok && right_ok) occs.push_back({at, needle.size(), &pattern});
    }
  }
  std::sort(occs.begin(), occs.end(),
            [](const MatchOccurrence& a, const MatchOccurrence& b) {
              return a.pos < b.pos;
            });
  return occs;
}

std::vector<Utterance> probe(const std::vector<Utterance>& utterances,
                             const std::vector<ProbePattern>& patterns) {
  if (patterns.empty()) throw ArgumentError("probe requires a nonempty pattern table");
  std::vector<Utterance> hits;
  for (const auto& u : utterances) {
    std::vector<std::string> matched;
    for (const auto& pat : patterns) {
      if (!find_matches(u.text, pat).empty()) matched.push_back(pat.id);
    }
    if (!matched.empty()) {
      Utterance hit = u;
      hit.matched = std::move(matched);
      hits.push_back(std::move(hit));
    }
  }
  return hits;
}

std::vector<Utterance> sample(const std::vector<Utterance>& hits, uint32_t cap,
                              uint64_t seed) {
  if (cap == 0) throw ArgumentError("sample cap must be at least 1");
  if (hits.size() <= cap) return hits;

  constexpr uint64_t kModulus = 2147483647ull;  // 2^31 - 1
  uint64_t x = seed % (kModulus - 1) + 1;
  auto draw = [&x]() {
    x = (x * 16807ull) % kModulus;
    return x;
  };

  std::vector<size_t> order(hits.size());
  std::iota(order.begin(), order.end(), size_t{0});
  for (size_t i = 0; i < cap; ++i) {
    const size_t j = i + static_cast<size_t>(draw() % (order.size() - i));
    std::swap(order[i], order[j]);
  }
  order.resize(cap);
  std::sort(order.begin(), order.end());

  std::vector<Utterance> out;
  out.reserve(cap);
  for (size_t idx : order) out.push_back(hits[idx]);
  return out;
}

std::string_view reject_reason_token(RejectReason r) {
  switch (r) {
    case RejectReason::NotImperative: return "NOT_IMPERATIVE";
    case RejectReason::NotNegative: return "NOT_NEGATIVE";
    default: return "MANUAL";
  }
}

Overrides load_overrides_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open overrides file '" + path + "'");
  csv::Reader reader(in, /*skip_comments=*/true);
  std::vector<std::string> fields;
  if (!reader.next(fields) || fields != std::vector<std::string>{"id", "keep"}) {
    throw ValidationError("overrides file '" + path +
                          "' must start with header 'id,keep'");
  }
  Overrides overrides;
  while (reader.next(fields)) {
    if (fields.size() != 2) {
      throw ValidationError("line " + std::to_string(reader.line()) +
                            ": expected 2 fields");
    }
    bool keep;
    if (fields[1] == "true") keep = true;
    else if (fields[1] == "false") keep = false;
    else {
      throw ValidationError("line " + std::to_string(reader.line()) +
                            ": keep must be 'true' or 'false', got '" + fields[1] + "'");
    }
    overrides[fields[0]] = keep;
  }
  return overrides;
}

FilterVerdict filter_candidate(const Utterance& u,
                               const std::vector<ProbePattern>& patterns,
                               const Overrides& overrides) {
  if (u.matched.empty()) {
    throw ArgumentError("utterance '" + u.id + "' has no matched patterns");
  }
  if (auto it = overrides.find(u.id); it != overrides.end()) {
    FilterVerdict v{u.id, it->second, std::nullopt, true};
    if (!v.keep) v.reason = RejectReason::Manual;
    return v;
  }

  const auto tokens = text::tokenize(u.text);
  auto token_index_at = [&](size_t pos) {
    size_t idx = 0;
    while (idx < tokens.size() && tokens[idx].pos < pos) ++idx;
    return idx;
  };

  std::vector<MatchOccurrence> occs;
  for (const auto& pat : patterns) {
    if (std::find(u.matched.begin(), u.matched.end(), pat.id) == u.matched.end()) {
      continue;
    }
    auto found = find_matches(u.text, pat);
    occs.insert(occs.end(), found.begin(), found.end());
  }

  // Not an imperative: every occurrence sits right after an overt
  // subject within its clause.
  bool all_subject_preceded = !occs.empty();
  for (const auto& occ : occs) {
    const size_t occ_tok = token_index_at(occ.pos);

    size_t clause_start = 0;
    for (size_t k = 0; k < occ_tok; ++k) {
      const auto& t = tokens[k];
      if (!t.word) {
        if (t.lower == ";") clause_start = k + 1;
        else if (t.lower == "," && k + 1 < occ_tok && tokens[k + 1].word &&
                 subordinator(tokens[k + 1].lower)) {
          clause_start = k + 1;
        }
      } else if (t.lower == "if" || t.lower == "when" || t.lower == "that") {
        clause_start = k + 1;
      }
    }

    bool subject = false;
    if (occ_tok > clause_start) {
      const auto& prev = tokens[occ_tok - 1];
      if (prev.word && subject_pronoun(prev.lower)) {
        subject = true;
      } else if (prev.word && occ_tok >= clause_start + 2) {
        const auto& prev2 = tokens[occ_tok - 2];
        if (prev2.word && determiner(prev2.lower)) subject = true;
      }
    }
    if (!subject) {
      all_subject_preceded = false;
      break;
    }
  }
  if (all_subject_preceded) {
    return {u.id, false, RejectReason::NotImperative, false};
  }

  // Not negative: a TC-family occurrence with no negation nearby.
  for (const auto& occ : occs) {
    if (occ.pattern->family != Family::NegTc) continue;
    const size_t end_tok = token_index_at(occ.pos + occ.len);
    bool negated = false;
    size_t seen_words = 0;
    for (size_t k = end_tok; k < tokens.size() && seen_words < 10; ++k) {
      if (!tokens[k].word) continue;
      ++seen_words;
      if (tokens[k].lower == "not" || tokens[k].lower == "never") {
        negated = true;
        break;
      }
    }
    if (!negated) {
      return {u.id, false, RejectReason::NotNegative, false};
    }
  }

  return {u.id, true, std::nullopt, false};
}

annotation::FormClass classify_form(const Utterance& u,
                                    const std::vector<ProbePattern>& patterns) {
  const auto best = earliest_match(u, patterns);
  if (!best) {
    throw ArgumentError("utterance '" + u.id + "' has no matched patterns");
  }
  return best->pattern->family == Family::Dont ? annotation::FormClass::Dont
                                               : annotation::FormClass::NegTc;
}

StageReport stage_report(size_t total_segments, const std::vector<Utterance>& raw,
                         const std::vector<Utterance>& sampled,
                         const std::vector<Utterance>& kept,
                         const std::vector<ProbePattern>& patterns) {
  StageReport report;
  report.total_segments = total_segments;
  report.probed_segments = raw.size();
  for (const auto& pat : patterns) {
    report.rows.push_back({pat.id, pat.family, 0, 0, 0});
  }
  auto row_of = [&](const std::string& id) -> StageReport::PatternRow* {
    for (auto& r : report.rows) {
      if (r.pattern_id == id) return &r;
    }
    return nullptr;
  };
  auto tally = [&](const std::vector<Utterance>& stage, size_t StageReport::PatternRow::*cell,
                   size_t& dont_total, size_t& negtc_total) {
    for (const auto& u : stage) {
      for (const auto& id : u.matched) {
        if (auto* row = row_of(id)) ++(row->*cell);
      }
      if (const auto best = earliest_match(u, patterns)) {
        (best->pattern->family == Family::Dont ? dont_total : negtc_total) += 1;
      }
    }
  };
  tally(raw, &StageReport::PatternRow::raw, report.raw_dont, report.raw_negtc);
  tally(sampled, &StageReport::PatternRow::sampled, report.sampled_dont,
        report.sampled_negtc);
  tally(kept, &StageReport::PatternRow::kept, report.kept_dont, report.kept_negtc);
  return report;
}

std::string render_stage_report(const StageReport& report, bool as_csv) {
  std::ostringstream out;
  const std::array<std::string, 3> stages = {"raw", "sampled", "kept"};
  auto cell = [&](const StageReport::PatternRow& r, size_t stage) {
    return stage == 0 ? r.raw : stage == 1 ? r.sampled : r.kept;
  };
  auto family_totals = [&](size_t stage) -> std::pair<size_t, size_t> {
    switch (stage) {
      case 0: return {report.raw_dont, report.raw_negtc};
      case 1: return {report.sampled_dont, report.sampled_negtc};
      default: return {report.kept_dont, report.kept_negtc};
    }
  };

  if (as_csv) {
    std::vector<std::string> row = {"stage"};
    for (const auto& r : report.rows) row.push_back(r.pattern_id);
    row.insert(row.end(), {"dont_family", "neg_tc_family", "segments_probed",
                           "segments_total"});
    csv::write_row(out, row);
    for (size_t s = 0; s < stages.size(); ++s) {
      row = {stages[s]};
      for (const auto& r : report.rows) row.push_back(std::to_string(cell(r, s)));
      const auto [dont, negtc] = family_totals(s);
      row.push_back(std::to_string(dont));
      row.push_back(std::to_string(negtc));
      row.push_back(std::to_string(report.probed_segments));
      row.push_back(std::to_string(report.total_segments));
      csv::write_row(out, row);
    }
    return out.str();
  }

  size_t width = 8;
  for (const auto& r : report.rows) width = std::max(width, r.pattern_id.size() + 2);
  auto pad = [&](const std::string& s, size_t w) {
    return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
  };
  out << pad("stage", 8);
  for (const auto& r : report.rows) out << pad(r.pattern_id, width);
  out << pad("DONT", 8) << pad("neg-TC", 8) << "\n";
  for (size_t s = 0; s < stages.size(); ++s) {
    out << pad(stages[s], 8);
    for (const auto& r : report.rows) out << pad(std::to_string(cell(r, s)), width);
    const auto [dont, negtc] = family_totals(s);
    out << pad(std::to_string(dont), 8) << pad(std::to_string(negtc), 8) << "\n";
  }
  char pct[32];
  std::snprintf(pct, sizeof pct, "%.1f%%", 100.0 * report.probed_share());
  out << "probed " << report.probed_segments << "/" << report.total_segments
      << " segments (" << pct << ")\n";
  return out.str();
}

std::string render_utterances_csv(const std::vector<Utterance>& utterances) {
  std::ostringstream out;
  std::vector<std::string> row = {"id", "source", "start", "end", "patterns", "text"};
  csv::write_row(out, row);
  for (const auto& u : utterances) {
    row = {u.id,
           u.source,
           std::to_string(u.begin),
           std::to_string(u.end),
           join_ids(u.matched),
           u.text};
    csv::write_row(out, row);
  }
  return out.str();
}

void write_utterances_csv(const std::vector<Utterance>& utterances,
                          const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << render_utterances_csv(utterances);
  if (!out) throw IoError("failed writing '" + path + "'");
}

std::string render_verdicts_csv(const std::vector<FilterVerdict>& verdicts) {
  std::ostringstream out;
  std::vector<std::string> row = {"id", "keep", "reason", "overridden"};
  csv::write_row(out, row);
  for (const auto& v : verdicts) {
    row = {v.utterance_id, v.keep ? "true" : "false",
           v.reason ? std::string(reject_reason_token(*v.reason)) : std::string(),
           v.overridden ? "true" : "false"};
    csv::write_row(out, row);
  }
  return out.str();
}

void write_verdicts_csv(const std::vector<FilterVerdict>& verdicts,
                        const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << render_verdicts_csv(verdicts);
  if (!out) throw IoError("failed writing '" + path + "'");
}

std::vector<Utterance> read_utterances_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  csv::Reader reader(in);
  std::vector<std::string> fields;
  if (!reader.next(fields) ||
      fields != std::vector<std::string>{"id", "source", "start", "end", "patterns",
                                         "text"}) {
    throw ValidationError("utterance file '" + path +
                          "' must start with header 'id,source,start,end,patterns,text'");
  }
  std::vector<Utterance> out;
  while (reader.next(fields)) {
    if (fields.size() != 6) {
      throw ValidationError("line " + std::to_string(reader.line()) +
                            ": expected 6 fields");
    }
    Utterance u;
    u.id = fields[0];
    u.source = fields[1];
    try {
      u.begin = std::stoull(fields[2]);
      u.end = std::stoull(fields[3]);
    } catch (const std::exception&) {
      throw ValidationError("line " + std::to_string(reader.line()) +
                            ": start/end must be integers");
    }
    if (!fields[4].empty()) {
      size_t from = 0;
      while (true) {
        const size_t semi = fields[4].find(';', from);
        u.matched.push_back(fields[4].substr(from, semi - from));
        if (semi == std::string::npos) break;
        from = semi + 1;
      }
    }
    u.text = fields[5];
    out.push_back(std::move(u));
  }
  return out;
}

}  // namespace pvk::corpus
