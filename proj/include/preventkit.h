/* Copyright 2026 The preventkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* preventkit -- C API for a corpus-study toolkit for preventative
 * expressions in instructional text.
 *
 * The library covers the whole pipeline:
 *
 *   - segmenting raw instructional text into sentences,
 *   - probing segments for preventative surface patterns ("don't",
 *     "take care", ...),
 *   - drawing reproducible random samples from the hits,
 *   - filtering hits that are not negative imperatives,
 *   - bookkeeping for multi-coder annotation files,
 *   - inter-coder agreement (percent agreement, Kappa, reliability bands),
 *   - 2x2 association statistics (Yates-corrected chi-square),
 *   - induction of a decision tree mapping function features to a
 *     grammatical form, and
 *   - template realization of preventative expressions.
 *
 * All functions that can fail return a pvk_status.  On failure the
 * thread-local message retrieved by pvk_last_error() describes the
 * problem.  Objects returned through out-parameters are owned by the
 * caller and released with the matching *_free function.  Strings
 * returned through `char **` out-parameters are released with
 * pvk_string_free().  Unless noted otherwise, passing NULL for a
 * required argument yields PVK_E_ARGUMENT.
 */

#ifndef PREVENTKIT_H
#define PREVENTKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PVK_BUILD)
#    define PVK_API __declspec(dllexport)
#  else
#    define PVK_API __declspec(dllimport)
#  endif
#else
#  define PVK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define PVK_VERSION_STRING "0.1.0"

/* ------------------------------------------------------------------ */
/* Status and error reporting                                          */
/* ------------------------------------------------------------------ */

typedef enum pvk_status {
  PVK_OK = 0,
  PVK_E_ARGUMENT = 1,   /* bad argument or violated precondition */
  PVK_E_VALIDATION = 2, /* malformed input data (CSV schema, enum tokens) */
  PVK_E_DATA = 3,       /* semantically inconsistent data */
  PVK_E_PARSE = 4,      /* unparseable structured file */
  PVK_E_DECODING = 5,   /* invalid text encoding */
  PVK_E_IO = 6,         /* file system failure */
  PVK_E_DEGENERATE = 7, /* statistic undefined on this input */
  PVK_E_INTERNAL = 99
} pvk_status;

PVK_API const char *pvk_version(void);
PVK_API const char *pvk_status_name(pvk_status s);

/* Message for the most recent failing call on this thread. */
PVK_API const char *pvk_last_error(void);

/* ------------------------------------------------------------------ */
/* Coding schema enums                                                 */
/* ------------------------------------------------------------------ */

/* Grammatical form of a preventative expression: a negative imperative
 * proper ("do not ...", "don't ...") or a "take care"-family imperative
 * with a negative complement ("be careful not to ..."). */
typedef enum pvk_form { PVK_FORM_DONT = 0, PVK_FORM_NEG_TC = 1 } pvk_form;

/* Whether the reader is expected to consciously intend the prevented
 * action (CON) or to stumble into it (UNC). */
typedef enum pvk_intentionality {
  PVK_INTENT_CON = 0,
  PVK_INTENT_UNC = 1
} pvk_intentionality;

/* Whether the reader is presumed aware that the consequences of the
 * prevented action are bad. */
typedef enum pvk_awareness { PVK_AWARE_AW = 0, PVK_AWARE_UNAW = 1 } pvk_awareness;

typedef enum pvk_feature {
  PVK_FEATURE_FORM = 0,
  PVK_FEATURE_INTENTIONALITY = 1,
  PVK_FEATURE_AWARENESS = 2
} pvk_feature;

/* Qualitative reliability level for a Kappa value. */
typedef enum pvk_band {
  PVK_BAND_BELOW_SLIGHT = 0,
  PVK_BAND_SLIGHT = 1,
  PVK_BAND_FAIR = 2,
  PVK_BAND_MODERATE = 3,
  PVK_BAND_SUBSTANTIAL = 4,
  PVK_BAND_ALMOST_PERFECT = 5
} pvk_band;

/* Strictest df=1 significance level met by a chi-square statistic. */
typedef enum pvk_significance {
  PVK_SIG_NS = 0,
  PVK_SIG_P05 = 1,
  PVK_SIG_P01 = 2,
  PVK_SIG_P001 = 3
} pvk_significance;

/* Surface variant used by the realizer.  FULL and CONTRACTED are valid
 * for PVK_FORM_DONT; BE_CAREFUL and TAKE_CARE for PVK_FORM_NEG_TC. */
typedef enum pvk_variant {
  PVK_VARIANT_FULL = 0,
  PVK_VARIANT_CONTRACTED = 1,
  PVK_VARIANT_BE_CAREFUL = 2,
  PVK_VARIANT_TAKE_CARE = 3
} pvk_variant;

/* Why a probed hit was rejected by the filter. */
typedef enum pvk_reject_reason {
  PVK_REJECT_NOT_IMPERATIVE = 0,
  PVK_REJECT_NOT_NEGATIVE = 1,
  PVK_REJECT_MANUAL = 2
} pvk_reject_reason;

/* Token <-> enum helpers.  Tokens are the ones used in the CSV formats:
 * DONT|NEG_TC, CON|UNC, AW|UNAW, form|intentionality|awareness. */
PVK_API const char *pvk_form_name(pvk_form f);
PVK_API pvk_status pvk_parse_form(const char *token, pvk_form *out);
PVK_API const char *pvk_intentionality_name(pvk_intentionality v);
PVK_API pvk_status pvk_parse_intentionality(const char *token, pvk_intentionality *out);
PVK_API const char *pvk_awareness_name(pvk_awareness v);
PVK_API pvk_status pvk_parse_awareness(const char *token, pvk_awareness *out);
PVK_API const char *pvk_feature_name(pvk_feature f);
PVK_API pvk_status pvk_parse_feature(const char *token, pvk_feature *out);
PVK_API const char *pvk_band_name(pvk_band b);
/* "ns", "0.05", "0.01" or "0.001". */
PVK_API const char *pvk_significance_label(pvk_significance s);
PVK_API const char *pvk_variant_name(pvk_variant v);
PVK_API pvk_status pvk_parse_variant(const char *token, pvk_variant *out);
PVK_API const char *pvk_reject_reason_name(pvk_reject_reason r);

/* ------------------------------------------------------------------ */
/* Opaque handles                                                      */
/* ------------------------------------------------------------------ */

typedef struct pvk_patterns pvk_patterns;     /* probe pattern table */
typedef struct pvk_utterances pvk_utterances; /* ordered utterance list */
typedef struct pvk_verdicts pvk_verdicts;     /* filter verdicts */
typedef struct pvk_codings pvk_codings;       /* multi-coder coding set */
typedef struct pvk_subset pvk_subset;         /* agreement subset */
typedef struct pvk_tree pvk_tree;             /* induced decision tree */

/* ------------------------------------------------------------------ */
/* Plain result structs                                                */
/* ------------------------------------------------------------------ */

/* 2x2 contingency table.  Rows are the form classes (DONT, NEG_TC) and
 * columns the two values of one function feature:
 *
 *             value0   value1
 *   DONT        a        b
 *   NEG_TC      c        d
 *
 * n must equal a+b+c+d. */
typedef struct pvk_table2x2 {
  uint64_t a, b, c, d;
  uint64_t n;
} pvk_table2x2;

typedef struct pvk_agreement_report {
  uint64_t n_items;
  double p_a;   /* observed agreement */
  double p_e;   /* chance agreement, sum of squared category proportions */
  double kappa; /* (p_a - p_e) / (1 - p_e) */
  pvk_band band;
  /* Proportion of assignments pooled over both coders, indexed by the
   * feature's enum order (DONT/NEG_TC, CON/UNC or AW/UNAW). */
  double category_proportion[2];
} pvk_agreement_report;

typedef struct pvk_chi2_result {
  double statistic;
  pvk_significance significance;
  /* Set when n <= 40 or any expected cell count is below 5; the
   * statistic is then unreliable for small samples. */
  int n_warning;
} pvk_chi2_result;

typedef struct pvk_prediction {
  pvk_form form;
  double confidence; /* majority proportion of the deciding leaf */
} pvk_prediction;

/* ------------------------------------------------------------------ */
/* Probe patterns                                                      */
/* ------------------------------------------------------------------ */

/* The built-in table: don't, do not, take care, make sure, be careful,
 * be sure, ensure, be certain. */
PVK_API pvk_status pvk_patterns_default(pvk_patterns **out);

/* Load a pattern table from CSV with header `id,surface,family`.
 * Ids must come from the built-in inventory and the family column must
 * be the id's canonical family (DONT or NEG_TC). */
PVK_API pvk_status pvk_patterns_load_csv(const char *path, pvk_patterns **out);

PVK_API size_t pvk_patterns_count(const pvk_patterns *p);
PVK_API const char *pvk_patterns_id(const pvk_patterns *p, size_t index);
PVK_API void pvk_patterns_free(pvk_patterns *p);

/* ------------------------------------------------------------------ */
/* Corpus pipeline                                                     */
/* ------------------------------------------------------------------ */

/* Break one UTF-8 document into sentence segments.  `source` names the
 * document and seeds the segment ids (`<source>#<index>`).  Boundaries
 * fall after '.', '!' or '?' followed by whitespace and at blank lines;
 * a small abbreviation list ("e.g.", "i.e.", "etc.", "Mr.", "Dr.",
 * "F.") suppresses boundaries. */
PVK_API pvk_status pvk_break_document(const char *text, const char *source,
                                      pvk_utterances **out);

/* Walk a directory of UTF-8 text files (recursively, in sorted relative
 * path order), break every file into segments and keep the segments
 * that contain at least one pattern.  `total_segments`, when non-NULL,
 * receives the number of segments before probing. */
PVK_API pvk_status pvk_probe_dir(const char *dir, const pvk_patterns *patterns,
                                 pvk_utterances **hits, size_t *total_segments);

/* Keep the utterances whose case-folded text contains at least one
 * pattern surface as a word-boundary-respecting substring. */
PVK_API pvk_status pvk_probe(const pvk_utterances *utterances,
                             const pvk_patterns *patterns, pvk_utterances **hits);

/* Reproducible sampling: when the list has more than `cap` elements,
 * draw exactly `cap` of them with a partial Fisher-Yates shuffle driven
 * by the MINSTD generator (x[n+1] = 16807*x[n] mod 2^31-1, seeded with
 * x[0] = (seed mod 2^31-2) + 1) and return them in original order.
 * Identical inputs give bit-identical output on every platform. */
PVK_API pvk_status pvk_sample(const pvk_utterances *hits, uint32_t cap,
                              uint64_t seed, pvk_utterances **out);

/* Judge every probed utterance: rejects non-imperative uses (the probed
 * phrase is preceded by an overt subject within its clause) and
 * non-negative "take care"-family uses (no "not"/"never" within ten
 * tokens after the probed phrase).  `overrides_csv`, when non-NULL,
 * names a CSV file `id,keep` whose entries win over the heuristics. */
PVK_API pvk_status pvk_filter(const pvk_utterances *hits,
                              const pvk_patterns *patterns,
                              const char *overrides_csv, pvk_verdicts **out);

/* Same as pvk_filter with the overrides given as parallel arrays. */
PVK_API pvk_status pvk_filter_overrides(const pvk_utterances *hits,
                                        const pvk_patterns *patterns,
                                        const char *const *override_ids,
                                        const int *override_keeps,
                                        size_t n_overrides, pvk_verdicts **out);

/* Subset of `hits` whose verdict is keep, in order. */
PVK_API pvk_status pvk_select_kept(const pvk_utterances *hits,
                                   const pvk_verdicts *verdicts,
                                   pvk_utterances **out);

/* Form class of a kept utterance; the earliest matched pattern decides
 * when several families match. */
PVK_API pvk_status pvk_classify(const pvk_utterances *utterances, size_t index,
                                const pvk_patterns *patterns, pvk_form *out);

PVK_API size_t pvk_utterances_count(const pvk_utterances *u);
PVK_API const char *pvk_utterances_id(const pvk_utterances *u, size_t index);
PVK_API const char *pvk_utterances_text(const pvk_utterances *u, size_t index);
PVK_API const char *pvk_utterances_source(const pvk_utterances *u, size_t index);
PVK_API pvk_status pvk_utterances_span(const pvk_utterances *u, size_t index,
                                       size_t *start, size_t *end);
/* ';'-joined ids of the matched patterns (empty string when none). */
PVK_API const char *pvk_utterances_patterns(const pvk_utterances *u, size_t index);

/* CSV with header `id,source,start,end,patterns,text`. */
PVK_API pvk_status pvk_utterances_write_csv(const pvk_utterances *u,
                                            const char *path);
PVK_API pvk_status pvk_utterances_render_csv(const pvk_utterances *u, char **out);
PVK_API pvk_status pvk_utterances_read_csv(const char *path, pvk_utterances **out);
PVK_API void pvk_utterances_free(pvk_utterances *u);

PVK_API size_t pvk_verdicts_count(const pvk_verdicts *v);
/* `reason` is set to a pvk_reject_reason when keep is 0 and to -1 when
 * keep is 1.  Any out-parameter may be NULL. */
PVK_API pvk_status pvk_verdicts_get(const pvk_verdicts *v, size_t index,
                                    int *keep, int *reason, int *overridden);
/* CSV with header `id,keep,reason,overridden`. */
PVK_API pvk_status pvk_verdicts_write_csv(const pvk_verdicts *v, const char *path);
PVK_API pvk_status pvk_verdicts_render_csv(const pvk_verdicts *v, char **out);
PVK_API void pvk_verdicts_free(pvk_verdicts *v);

/* Write an overrides file (`id,keep`) from parallel arrays. */
PVK_API pvk_status pvk_overrides_write_csv(const char *const *ids,
                                           const int *keeps, size_t n,
                                           const char *path);

/* Render the per-pattern stage-count table (raw hits, sampled, kept)
 * with family totals and the share of probed segments.  `as_csv`
 * selects the machine-readable layout.  The returned string is released
 * with pvk_string_free(). */
PVK_API pvk_status pvk_stage_report_render(const pvk_patterns *patterns,
                                           size_t total_segments,
                                           const pvk_utterances *raw,
                                           const pvk_utterances *sampled,
                                           const pvk_utterances *kept,
                                           int as_csv, char **out);

/* ------------------------------------------------------------------ */
/* Coding sets and agreement statistics                                */
/* ------------------------------------------------------------------ */

/* Load a coding file: CSV with header
 * `example_id,coder,form,intentionality,awareness`, enum tokens
 * DONT|NEG_TC, CON|UNC, AW|UNAW, `#` comment lines allowed.  Every
 * example must carry records from the same coder roster and every
 * (example, coder) pair must be unique. */
PVK_API pvk_status pvk_codings_load_csv(const char *path, pvk_codings **out);
PVK_API pvk_status pvk_codings_write_csv(const pvk_codings *c, const char *path);
PVK_API size_t pvk_codings_examples(const pvk_codings *c);
PVK_API size_t pvk_codings_coders(const pvk_codings *c);
PVK_API void pvk_codings_free(pvk_codings *c);

/* Observed agreement for one feature.  Requires a two-coder roster. */
PVK_API pvk_status pvk_percent_agreement(const pvk_codings *c, pvk_feature f,
                                         double *out);

/* Kappa report for one feature: chance agreement uses category
 * proportions pooled over both coders.  Requires a two-coder roster and
 * non-degenerate marginals. */
PVK_API pvk_status pvk_kappa(const pvk_codings *c, pvk_feature f,
                             pvk_agreement_report *out);

/* Reliability band for a Kappa value (boundaries 0.20/0.40/0.60/0.80,
 * upper-inclusive; negative values map to BELOW_SLIGHT).  Values above
 * 1 are rejected. */
PVK_API pvk_status pvk_reliability_band(double kappa, pvk_band *out);

/* Examples whose coders all agree on both function features.  Form
 * codings must agree everywhere; a form conflict is a data error. */
PVK_API pvk_status pvk_agreement_subset(const pvk_codings *c, pvk_subset **out);
PVK_API size_t pvk_subset_count(const pvk_subset *s);
PVK_API void pvk_subset_free(pvk_subset *s);

/* Cross-tabulate form against one function feature over the subset. */
PVK_API pvk_status pvk_contingency(const pvk_subset *s, pvk_feature f,
                                   pvk_table2x2 *out);

/* Yates-corrected 2x2 chi-square:
 *   chi2 = n * max(|ad - bc| - n/2, 0)^2 / ((a+b)(c+d)(a+c)(b+d))
 * with df=1 significance thresholds 3.841 / 6.635 / 10.828.  All four
 * marginals must be nonzero. */
PVK_API pvk_status pvk_chi_square_yates(const pvk_table2x2 *t, pvk_chi2_result *out);

/* Strictest df=1 level met by a nonnegative statistic. */
PVK_API pvk_status pvk_significance_level(double statistic, pvk_significance *out);

/* ------------------------------------------------------------------ */
/* Decision-tree induction                                             */
/* ------------------------------------------------------------------ */

/* Induce a tree mapping (intentionality, awareness) to a form class
 * from the agreement subset.  Splits maximize information gain ratio;
 * leaves take the weighted majority class, ties broken toward the
 * globally more frequent class and then toward DONT. */
PVK_API pvk_status pvk_induce(const pvk_subset *s, pvk_tree **out);

/* Tree file format, one node per line, root is node 0:
 *   node <id> leaf <label> <count_DONT> <count_NEG_TC>
 *   node <id> split <feature> <child_id_value1> <child_id_value2>
 */
PVK_API pvk_status pvk_tree_load(const char *path, pvk_tree **out);
PVK_API pvk_status pvk_tree_save(const pvk_tree *t, const char *path);
PVK_API pvk_status pvk_tree_render(const pvk_tree *t, char **out);
PVK_API size_t pvk_tree_nodes(const pvk_tree *t);
PVK_API pvk_status pvk_predict(const pvk_tree *t, pvk_intentionality intent,
                               pvk_awareness aware, pvk_prediction *out);
PVK_API void pvk_tree_free(pvk_tree *t);

/* ------------------------------------------------------------------ */
/* Realizer                                                            */
/* ------------------------------------------------------------------ */

/* Render a preventative expression:
 *   DONT/FULL            "Do not <action>."
 *   DONT/CONTRACTED      "Don't <action>."
 *   NEG_TC/BE_CAREFUL    "Be careful not to <action>."
 *   NEG_TC/TAKE_CARE     "Take care not to <action>."
 * `action` is a base-form verb phrase; `trailing` (may be NULL) is a
 * purpose or reason clause appended before the final period. */
PVK_API pvk_status pvk_realize(pvk_form form, pvk_variant variant,
                               const char *action, const char *trailing,
                               char **out);

/* Predict with the tree, then realize.  `variant` may be -1 to use the
 * defaults (FULL for DONT, BE_CAREFUL for NEG_TC). */
PVK_API pvk_status pvk_plan_realize(const pvk_tree *t, pvk_intentionality intent,
                                    pvk_awareness aware, const char *action,
                                    const char *trailing, int variant,
                                    char **out);

PVK_API void pvk_string_free(char *s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PREVENTKIT_H */
