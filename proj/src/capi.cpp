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

#include "preventkit.h"

#include <array>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "annotation.hpp"
#include "corpus.hpp"
#include "csv.hpp"
#include "errors.hpp"
#include "induction.hpp"
#include "realizer.hpp"
#include "stats.hpp"

using pvk::annotation::Awareness;
using pvk::annotation::Feature;
using pvk::annotation::FormClass;
using pvk::annotation::Intentionality;

struct pvk_patterns {
  std::vector<pvk::corpus::ProbePattern> table;
};

struct pvk_utterances {
  std::vector<pvk::corpus::Utterance> list;
  std::vector<std::string> joined;  // cached ';'-joined pattern ids

  void rebuild_joined() {
    joined.clear();
    joined.reserve(list.size());
    for (const auto& u : list) {
      std::string j;
      for (size_t i = 0; i < u.matched.size(); ++i) {
        if (i) j.push_back(';');
        j += u.matched[i];
      }
      joined.push_back(std::move(j));
    }
  }
};

struct pvk_verdicts {
  std::vector<pvk::corpus::FilterVerdict> list;
};

struct pvk_codings {
  pvk::annotation::CodingSet set;
};

struct pvk_subset {
  std::vector<pvk::annotation::ConsensusExample> examples;
};

struct pvk_tree {
  pvk::induction::DecisionTree tree;
};

namespace {

thread_local std::string t_last_error;

pvk_status status_of(pvk::ErrorKind kind) {
  switch (kind) {
    case pvk::ErrorKind::Argument: return PVK_E_ARGUMENT;
    case pvk::ErrorKind::Validation: return PVK_E_VALIDATION;
    case pvk::ErrorKind::Data: return PVK_E_DATA;
    case pvk::ErrorKind::Parse: return PVK_E_PARSE;
    case pvk::ErrorKind::Decoding: return PVK_E_DECODING;
    case pvk::ErrorKind::Io: return PVK_E_IO;
    case pvk::ErrorKind::Degenerate: return PVK_E_DEGENERATE;
  }
  return PVK_E_INTERNAL;
}

template <typename Fn>
pvk_status guarded(Fn&& fn) {
  try {
    fn();
    return PVK_OK;
  } catch (const pvk::Error& e) {
    t_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return PVK_E_INTERNAL;
  }
}

pvk_status fail_argument(const char* msg) {
  t_last_error = msg;
  return PVK_E_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Feature to_feature(pvk_feature f) {
  switch (f) {
    case PVK_FEATURE_FORM: return Feature::Form;
    case PVK_FEATURE_INTENTIONALITY: return Feature::Intentionality;
    default: return Feature::Awareness;
  }
}

pvk_band to_c_band(pvk::stats::Band b) {
  switch (b) {
    case pvk::stats::Band::BelowSlight: return PVK_BAND_BELOW_SLIGHT;
    case pvk::stats::Band::Slight: return PVK_BAND_SLIGHT;
    case pvk::stats::Band::Fair: return PVK_BAND_FAIR;
    case pvk::stats::Band::Moderate: return PVK_BAND_MODERATE;
    case pvk::stats::Band::Substantial: return PVK_BAND_SUBSTANTIAL;
    default: return PVK_BAND_ALMOST_PERFECT;
  }
}

pvk_significance to_c_significance(pvk::stats::Significance s) {
  switch (s) {
    case pvk::stats::Significance::NS: return PVK_SIG_NS;
    case pvk::stats::Significance::P05: return PVK_SIG_P05;
    case pvk::stats::Significance::P01: return PVK_SIG_P01;
    default: return PVK_SIG_P001;
  }
}

pvk::realizer::Variant to_variant(pvk_variant v) {
  switch (v) {
    case PVK_VARIANT_FULL: return pvk::realizer::Variant::Full;
    case PVK_VARIANT_CONTRACTED: return pvk::realizer::Variant::Contracted;
    case PVK_VARIANT_BE_CAREFUL: return pvk::realizer::Variant::BeCareful;
    default: return pvk::realizer::Variant::TakeCare;
  }
}

}  // namespace

extern "C" {

const char* pvk_version(void) { return PVK_VERSION_STRING; }

const char* pvk_status_name(pvk_status s) {
  switch (s) {
    case PVK_OK: return "ok";
    case PVK_E_ARGUMENT: return "argument error";
    case PVK_E_VALIDATION: return "validation error";
    case PVK_E_DATA: return "data error";
    case PVK_E_PARSE: return "parse error";
    case PVK_E_DECODING: return "decoding error";
    case PVK_E_IO: return "io error";
    case PVK_E_DEGENERATE: return "degenerate input";
    default: return "internal error";
  }
}

const char* pvk_last_error(void) { return t_last_error.c_str(); }

/* ---------------------------- enums ------------------------------- */

const char* pvk_form_name(pvk_form f) {
  return f == PVK_FORM_DONT ? "DONT" : "NEG_TC";
}

pvk_status pvk_parse_form(const char* token, pvk_form* out) {
  if (!token || !out) return fail_argument("token and out must be non-NULL");
  return guarded([&] {
    *out = pvk::annotation::parse_form(token) == FormClass::Dont ? PVK_FORM_DONT
                                                                 : PVK_FORM_NEG_TC;
  });
}

const char* pvk_intentionality_name(pvk_intentionality v) {
  return v == PVK_INTENT_CON ? "CON" : "UNC";
}

pvk_status pvk_parse_intentionality(const char* token, pvk_intentionality* out) {
  if (!token || !out) return fail_argument("token and out must be non-NULL");
  return guarded([&] {
    *out = pvk::annotation::parse_intentionality(token) == Intentionality::Con
               ? PVK_INTENT_CON
               : PVK_INTENT_UNC;
  });
}

const char* pvk_awareness_name(pvk_awareness v) {
  return v == PVK_AWARE_AW ? "AW" : "UNAW";
}

pvk_status pvk_parse_awareness(const char* token, pvk_awareness* out) {
  if (!token || !out) return fail_argument("token and out must be non-NULL");
  return guarded([&] {
    *out = pvk::annotation::parse_awareness(token) == Awareness::Aw ? PVK_AWARE_AW
                                                                    : PVK_AWARE_UNAW;
  });
}

const char* pvk_feature_name(pvk_feature f) {
  switch (f) {
    case PVK_FEATURE_FORM: return "form";
    case PVK_FEATURE_INTENTIONALITY: return "intentionality";
    default: return "awareness";
  }
}

pvk_status pvk_parse_feature(const char* token, pvk_feature* out) {
  if (!token || !out) return fail_argument("token and out must be non-NULL");
  return guarded([&] {
    switch (pvk::annotation::parse_feature(token)) {
      case Feature::Form: *out = PVK_FEATURE_FORM; break;
      case Feature::Intentionality: *out = PVK_FEATURE_INTENTIONALITY; break;
      default: *out = PVK_FEATURE_AWARENESS; break;
    }
  });
}

const char* pvk_band_name(pvk_band b) {
  switch (b) {
    case PVK_BAND_BELOW_SLIGHT: return "below_slight";
    case PVK_BAND_SLIGHT: return "slight";
    case PVK_BAND_FAIR: return "fair";
    case PVK_BAND_MODERATE: return "moderate";
    case PVK_BAND_SUBSTANTIAL: return "substantial";
    default: return "almost_perfect";
  }
}

const char* pvk_significance_label(pvk_significance s) {
  switch (s) {
    case PVK_SIG_NS: return "ns";
    case PVK_SIG_P05: return "0.05";
    case PVK_SIG_P01: return "0.01";
    default: return "0.001";
  }
}

const char* pvk_variant_name(pvk_variant v) {
  switch (v) {
    case PVK_VARIANT_FULL: return "FULL";
    case PVK_VARIANT_CONTRACTED: return "CONTRACTED";
    case PVK_VARIANT_BE_CAREFUL: return "BE_CAREFUL";
    default: return "TAKE_CARE";
  }
}

pvk_status pvk_parse_variant(const char* token, pvk_variant* out) {
  if (!token || !out) return fail_argument("token and out must be non-NULL");
  return guarded([&] {
    switch (pvk::realizer::parse_variant(token)) {
      case pvk::realizer::Variant::Full: *out = PVK_VARIANT_FULL; break;
      case pvk::realizer::Variant::Contracted: *out = PVK_VARIANT_CONTRACTED; break;
      case pvk::realizer::Variant::BeCareful: *out = PVK_VARIANT_BE_CAREFUL; break;
      default: *out = PVK_VARIANT_TAKE_CARE; break;
    }
  });
}

const char* pvk_reject_reason_name(pvk_reject_reason r) {
  switch (r) {
    case PVK_REJECT_NOT_IMPERATIVE: return "NOT_IMPERATIVE";
    case PVK_REJECT_NOT_NEGATIVE: return "NOT_NEGATIVE";
    default: return "MANUAL";
  }
}

/* --------------------------- patterns ----------------------------- */

pvk_status pvk_patterns_default(pvk_patterns** out) {
  if (!out) return fail_argument("out must be non-NULL");
  return guarded([&] { *out = new pvk_patterns{pvk::corpus::default_patterns()}; });
}

pvk_status pvk_patterns_load_csv(const char* path, pvk_patterns** out) {
  if (!path || !out) return fail_argument("path and out must be non-NULL");
  return guarded([&] { *out = new pvk_patterns{pvk::corpus::load_patterns_csv(path)}; });
}

size_t pvk_patterns_count(const pvk_patterns* p) { return p ? p->table.size() : 0; }

const char* pvk_patterns_id(const pvk_patterns* p, size_t index) {
  if (!p || index >= p->table.size()) return nullptr;
  return p->table[index].id.c_str();
}

void pvk_patterns_free(pvk_patterns* p) { delete p; }

/* ---------------------------- corpus ------------------------------ */

pvk_status pvk_break_document(const char* text, const char* source,
                              pvk_utterances** out) {
  if (!text || !source || !out) {
    return fail_argument("text, source and out must be non-NULL");
  }
  return guarded([&] {
    auto* u = new pvk_utterances{pvk::corpus::break_sentences(text, source), {}};
    u->rebuild_joined();
    *out = u;
  });
}

pvk_status pvk_probe_dir(const char* dir, const pvk_patterns* patterns,
                         pvk_utterances** hits, size_t* total_segments) {
  if (!dir || !patterns || !hits) {
    return fail_argument("dir, patterns and hits must be non-NULL");
  }
  return guarded([&] {
    const auto segments = pvk::corpus::read_corpus_dir(dir);
    if (total_segments) *total_segments = segments.size();
    auto* u = new pvk_utterances{pvk::corpus::probe(segments, patterns->table), {}};
    u->rebuild_joined();
    *hits = u;
  });
}

pvk_status pvk_probe(const pvk_utterances* utterances, const pvk_patterns* patterns,
                     pvk_utterances** hits) {
  if (!utterances || !patterns || !hits) {
    return fail_argument("utterances, patterns and hits must be non-NULL");
  }
  return guarded([&] {
    auto* u = new pvk_utterances{pvk::corpus::probe(utterances->list, patterns->table), {}};
    u->rebuild_joined();
    *hits = u;
  });
}

pvk_status pvk_sample(const pvk_utterances* hits, uint32_t cap, uint64_t seed,
                      pvk_utterances** out) {
  if (!hits || !out) return fail_argument("hits and out must be non-NULL");
  return guarded([&] {
    auto* u = new pvk_utterances{pvk::corpus::sample(hits->list, cap, seed), {}};
    u->rebuild_joined();
    *out = u;
  });
}

pvk_status pvk_filter(const pvk_utterances* hits, const pvk_patterns* patterns,
                      const char* overrides_csv, pvk_verdicts** out) {
  if (!hits || !patterns || !out) {
    return fail_argument("hits, patterns and out must be non-NULL");
  }
  return guarded([&] {
    pvk::corpus::Overrides overrides;
    if (overrides_csv) overrides = pvk::corpus::load_overrides_csv(overrides_csv);
    auto* v = new pvk_verdicts;
    v->list.reserve(hits->list.size());
    for (const auto& u : hits->list) {
      v->list.push_back(pvk::corpus::filter_candidate(u, patterns->table, overrides));
    }
    *out = v;
  });
}

pvk_status pvk_filter_overrides(const pvk_utterances* hits, const pvk_patterns* patterns,
                                const char* const* override_ids,
                                const int* override_keeps, size_t n_overrides,
                                pvk_verdicts** out) {
  if (!hits || !patterns || !out) {
    return fail_argument("hits, patterns and out must be non-NULL");
  }
  if (n_overrides > 0 && (!override_ids || !override_keeps)) {
    return fail_argument("override arrays must be non-NULL when n_overrides > 0");
  }
  return guarded([&] {
    pvk::corpus::Overrides overrides;
    for (size_t i = 0; i < n_overrides; ++i) {
      if (!override_ids[i]) throw pvk::ArgumentError("override id is NULL");
      overrides[override_ids[i]] = override_keeps[i] != 0;
    }
    auto* v = new pvk_verdicts;
    v->list.reserve(hits->list.size());
    for (const auto& u : hits->list) {
      v->list.push_back(pvk::corpus::filter_candidate(u, patterns->table, overrides));
    }
    *out = v;
  });
}

pvk_status pvk_select_kept(const pvk_utterances* hits, const pvk_verdicts* verdicts,
                           pvk_utterances** out) {
  if (!hits || !verdicts || !out) {
    return fail_argument("hits, verdicts and out must be non-NULL");
  }
  if (hits->list.size() != verdicts->list.size()) {
    return fail_argument("verdicts do not match the utterance list");
  }
  return guarded([&] {
    auto* u = new pvk_utterances;
    for (size_t i = 0; i < hits->list.size(); ++i) {
      if (verdicts->list[i].keep) u->list.push_back(hits->list[i]);
    }
    u->rebuild_joined();
    *out = u;
  });
}

pvk_status pvk_classify(const pvk_utterances* utterances, size_t index,
                        const pvk_patterns* patterns, pvk_form* out) {
  if (!utterances || !patterns || !out) {
    return fail_argument("utterances, patterns and out must be non-NULL");
  }
  if (index >= utterances->list.size()) return fail_argument("index out of range");
  return guarded([&] {
    *out = pvk::corpus::classify_form(utterances->list[index], patterns->table) ==
                   FormClass::Dont
               ? PVK_FORM_DONT
               : PVK_FORM_NEG_TC;
  });
}

size_t pvk_utterances_count(const pvk_utterances* u) { return u ? u->list.size() : 0; }

const char* pvk_utterances_id(const pvk_utterances* u, size_t index) {
  if (!u || index >= u->list.size()) return nullptr;
  return u->list[index].id.c_str();
}

const char* pvk_utterances_text(const pvk_utterances* u, size_t index) {
  if (!u || index >= u->list.size()) return nullptr;
  return u->list[index].text.c_str();
}

const char* pvk_utterances_source(const pvk_utterances* u, size_t index) {
  if (!u || index >= u->list.size()) return nullptr;
  return u->list[index].source.c_str();
}

pvk_status pvk_utterances_span(const pvk_utterances* u, size_t index, size_t* start,
                               size_t* end) {
  if (!u || index >= u->list.size()) return fail_argument("index out of range");
  if (start) *start = u->list[index].begin;
  if (end) *end = u->list[index].end;
  return PVK_OK;
}

const char* pvk_utterances_patterns(const pvk_utterances* u, size_t index) {
  if (!u || index >= u->joined.size()) return nullptr;
  return u->joined[index].c_str();
}

pvk_status pvk_utterances_write_csv(const pvk_utterances* u, const char* path) {
  if (!u || !path) return fail_argument("utterances and path must be non-NULL");
  return guarded([&] { pvk::corpus::write_utterances_csv(u->list, path); });
}

pvk_status pvk_utterances_render_csv(const pvk_utterances* u, char** out) {
  if (!u || !out) return fail_argument("utterances and out must be non-NULL");
  return guarded([&] { *out = copy_string(pvk::corpus::render_utterances_csv(u->list)); });
}

pvk_status pvk_utterances_read_csv(const char* path, pvk_utterances** out) {
  if (!path || !out) return fail_argument("path and out must be non-NULL");
  return guarded([&] {
    auto* u = new pvk_utterances{pvk::corpus::read_utterances_csv(path), {}};
    u->rebuild_joined();
    *out = u;
  });
}

void pvk_utterances_free(pvk_utterances* u) { delete u; }

size_t pvk_verdicts_count(const pvk_verdicts* v) { return v ? v->list.size() : 0; }

pvk_status pvk_verdicts_get(const pvk_verdicts* v, size_t index, int* keep, int* reason,
                            int* overridden) {
  if (!v || index >= v->list.size()) return fail_argument("index out of range");
  const auto& verdict = v->list[index];
  if (keep) *keep = verdict.keep ? 1 : 0;
  if (reason) {
    if (!verdict.reason) {
      *reason = -1;
    } else {
      switch (*verdict.reason) {
        case pvk::corpus::RejectReason::NotImperative:
          *reason = PVK_REJECT_NOT_IMPERATIVE;
          break;
        case pvk::corpus::RejectReason::NotNegative:
          *reason = PVK_REJECT_NOT_NEGATIVE;
          break;
        default: *reason = PVK_REJECT_MANUAL; break;
      }
    }
  }
  if (overridden) *overridden = verdict.overridden ? 1 : 0;
  return PVK_OK;
}

pvk_status pvk_verdicts_write_csv(const pvk_verdicts* v, const char* path) {
  if (!v || !path) return fail_argument("verdicts and path must be non-NULL");
  return guarded([&] { pvk::corpus::write_verdicts_csv(v->list, path); });
}

pvk_status pvk_verdicts_render_csv(const pvk_verdicts* v, char** out) {
  if (!v || !out) return fail_argument("verdicts and out must be non-NULL");
  return guarded([&] { *out = copy_string(pvk::corpus::render_verdicts_csv(v->list)); });
}

void pvk_verdicts_free(pvk_verdicts* v) { delete v; }

pvk_status pvk_overrides_write_csv(const char* const* ids, const int* keeps, size_t n,
                                   const char* path) {
  if (!path || (n > 0 && (!ids || !keeps))) {
    return fail_argument("ids, keeps and path must be non-NULL");
  }
  return guarded([&] {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw pvk::IoError(std::string("cannot write '") + path + "'");
    out << "id,keep\n";
    for (size_t i = 0; i < n; ++i) {
      if (!ids[i]) throw pvk::ArgumentError("override id is NULL");
      out << pvk::csv::escape(ids[i]) << ',' << (keeps[i] ? "true" : "false") << '\n';
    }
    if (!out) throw pvk::IoError(std::string("failed writing '") + path + "'");
  });
}

pvk_status pvk_stage_report_render(const pvk_patterns* patterns, size_t total_segments,
                                   const pvk_utterances* raw,
                                   const pvk_utterances* sampled,
                                   const pvk_utterances* kept, int as_csv, char** out) {
  if (!patterns || !raw || !sampled || !kept || !out) {
    return fail_argument("patterns, raw, sampled, kept and out must be non-NULL");
  }
  return guarded([&] {
    const auto report = pvk::corpus::stage_report(total_segments, raw->list,
                                                  sampled->list, kept->list,
                                                  patterns->table);
    *out = copy_string(pvk::corpus::render_stage_report(report, as_csv != 0));
  });
}

/* ------------------------ codings and stats ----------------------- */

pvk_status pvk_codings_load_csv(const char* path, pvk_codings** out) {
  if (!path || !out) return fail_argument("path and out must be non-NULL");
  return guarded([&] {
    *out = new pvk_codings{pvk::annotation::CodingSet::load_csv(path)};
  });
}

pvk_status pvk_codings_write_csv(const pvk_codings* c, const char* path) {
  if (!c || !path) return fail_argument("codings and path must be non-NULL");
  return guarded([&] { c->set.write_csv(path); });
}

size_t pvk_codings_examples(const pvk_codings* c) {
  return c ? c->set.example_count() : 0;
}

size_t pvk_codings_coders(const pvk_codings* c) {
  return c ? c->set.roster().size() : 0;
}

void pvk_codings_free(pvk_codings* c) { delete c; }

pvk_status pvk_percent_agreement(const pvk_codings* c, pvk_feature f, double* out) {
  if (!c || !out) return fail_argument("codings and out must be non-NULL");
  return guarded([&] {
    *out = pvk::stats::percent_agreement(c->set.feature_pairs(to_feature(f)));
  });
}

pvk_status pvk_kappa(const pvk_codings* c, pvk_feature f, pvk_agreement_report* out) {
  if (!c || !out) return fail_argument("codings and out must be non-NULL");
  return guarded([&] {
    const Feature feature = to_feature(f);
    const auto report = pvk::stats::kappa(
        std::string(pvk::annotation::to_token(feature)), c->set.feature_pairs(feature));
    out->n_items = report.n_items;
    out->p_a = report.p_a;
    out->p_e = report.p_e;
    out->kappa = report.kappa;
    out->band = to_c_band(report.band);
    // Order categories by the feature's enum order.
    std::array<std::string, 2> cats;
    switch (feature) {
      case Feature::Form: cats = {"DONT", "NEG_TC"}; break;
      case Feature::Intentionality: cats = {"CON", "UNC"}; break;
      default: cats = {"AW", "UNAW"}; break;
    }
    for (size_t i = 0; i < 2; ++i) {
      const auto it = report.category_proportions.find(cats[i]);
      out->category_proportion[i] =
          it == report.category_proportions.end() ? 0.0 : it->second;
    }
  });
}

pvk_status pvk_reliability_band(double kappa, pvk_band* out) {
  if (!out) return fail_argument("out must be non-NULL");
  return guarded([&] { *out = to_c_band(pvk::stats::reliability_band(kappa)); });
}

pvk_status pvk_agreement_subset(const pvk_codings* c, pvk_subset** out) {
  if (!c || !out) return fail_argument("codings and out must be non-NULL");
  return guarded([&] {
    *out = new pvk_subset{pvk::annotation::agreement_subset(c->set)};
  });
}

size_t pvk_subset_count(const pvk_subset* s) { return s ? s->examples.size() : 0; }

void pvk_subset_free(pvk_subset* s) { delete s; }

pvk_status pvk_contingency(const pvk_subset* s, pvk_feature f, pvk_table2x2* out) {
  if (!s || !out) return fail_argument("subset and out must be non-NULL");
  return guarded([&] {
    const auto table = pvk::annotation::build_contingency(s->examples, to_feature(f));
    out->a = table.a;
    out->b = table.b;
    out->c = table.c;
    out->d = table.d;
    out->n = table.n();
  });
}

pvk_status pvk_chi_square_yates(const pvk_table2x2* t, pvk_chi2_result* out) {
  if (!t || !out) return fail_argument("table and out must be non-NULL");
  if (t->n != t->a + t->b + t->c + t->d) {
    return fail_argument("table total n must equal a+b+c+d");
  }
  return guarded([&] {
    pvk::annotation::ContingencyTable2x2 table;
    table.a = t->a;
    table.b = t->b;
    table.c = t->c;
    table.d = t->d;
    const auto result = pvk::stats::chi_square_yates(table);
    out->statistic = result.statistic;
    out->significance = to_c_significance(result.significance);
    out->n_warning = result.n_warning ? 1 : 0;
  });
}

pvk_status pvk_significance_level(double statistic, pvk_significance* out) {
  if (!out) return fail_argument("out must be non-NULL");
  return guarded([&] {
    *out = to_c_significance(pvk::stats::significance_level(statistic));
  });
}

/* --------------------------- induction ---------------------------- */

pvk_status pvk_induce(const pvk_subset* s, pvk_tree** out) {
  if (!s || !out) return fail_argument("subset and out must be non-NULL");
  return guarded([&] {
    const auto instances = pvk::induction::instances_from(s->examples);
    *out = new pvk_tree{pvk::induction::DecisionTree::induce(instances)};
  });
}

pvk_status pvk_tree_load(const char* path, pvk_tree** out) {
  if (!path || !out) return fail_argument("path and out must be non-NULL");
  return guarded([&] {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw pvk::IoError(std::string("cannot open tree file '") + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    *out = new pvk_tree{pvk::induction::DecisionTree::deserialize(buf.str())};
  });
}

pvk_status pvk_tree_save(const pvk_tree* t, const char* path) {
  if (!t || !path) return fail_argument("tree and path must be non-NULL");
  return guarded([&] {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw pvk::IoError(std::string("cannot write tree file '") + path + "'");
    out << t->tree.serialize();
    if (!out) throw pvk::IoError(std::string("failed writing tree file '") + path + "'");
  });
}

pvk_status pvk_tree_render(const pvk_tree* t, char** out) {
  if (!t || !out) return fail_argument("tree and out must be non-NULL");
  return guarded([&] { *out = copy_string(t->tree.serialize()); });
}

size_t pvk_tree_nodes(const pvk_tree* t) { return t ? t->tree.nodes().size() : 0; }

pvk_status pvk_predict(const pvk_tree* t, pvk_intentionality intent, pvk_awareness aware,
                       pvk_prediction* out) {
  if (!t || !out) return fail_argument("tree and out must be non-NULL");
  return guarded([&] {
    const auto p = t->tree.predict(
        intent == PVK_INTENT_CON ? Intentionality::Con : Intentionality::Unc,
        aware == PVK_AWARE_AW ? Awareness::Aw : Awareness::Unaw);
    out->form = p.form == FormClass::Dont ? PVK_FORM_DONT : PVK_FORM_NEG_TC;
    out->confidence = p.confidence;
  });
}

void pvk_tree_free(pvk_tree* t) { delete t; }

/* ---------------------------- realizer ---------------------------- */

pvk_status pvk_realize(pvk_form form, pvk_variant variant, const char* action,
                       const char* trailing, char** out) {
  if (!action || !out) return fail_argument("action and out must be non-NULL");
  return guarded([&] {
    pvk::realizer::RealizationRequest request;
    request.form = form == PVK_FORM_DONT ? FormClass::Dont : FormClass::NegTc;
    request.variant = to_variant(variant);
    request.action = action;
    if (trailing) request.trailing = trailing;
    *out = copy_string(pvk::realizer::realize(request));
  });
}

pvk_status pvk_plan_realize(const pvk_tree* t, pvk_intentionality intent,
                            pvk_awareness aware, const char* action,
                            const char* trailing, int variant, char** out) {
  if (!t || !action || !out) {
    return fail_argument("tree, action and out must be non-NULL");
  }
  if (variant < -1 || variant > PVK_VARIANT_TAKE_CARE) {
    return fail_argument("variant must be -1 or a pvk_variant value");
  }
  return guarded([&] {
    std::optional<pvk::realizer::Variant> preference;
    if (variant >= 0) preference = to_variant(static_cast<pvk_variant>(variant));
    std::optional<std::string> trail;
    if (trailing) trail = trailing;
    *out = copy_string(pvk::realizer::plan_and_realize(
        t->tree, intent == PVK_INTENT_CON ? Intentionality::Con : Intentionality::Unc,
        aware == PVK_AWARE_AW ? Awareness::Aw : Awareness::Unaw, action, preference,
        trail));
  });
}

void pvk_string_free(char* s) { delete[] s; }

} /* extern "C" */
