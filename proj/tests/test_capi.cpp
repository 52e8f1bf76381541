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

// Exercises the shared-library surface only: everything goes through
// preventkit.h.

#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "preventkit.h"

namespace {

const std::string kFixtures = PVK_FIXTURES_DIR;

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("version and error strings are well-formed") {
  CHECK(std::strcmp(pvk_version(), PVK_VERSION_STRING) == 0);
  CHECK(std::strcmp(pvk_status_name(PVK_OK), "ok") == 0);
  CHECK(pvk_last_error() != nullptr);
}

TEST_CASE("token helpers round-trip") {
  pvk_form form{};
  REQUIRE(pvk_parse_form("NEG_TC", &form) == PVK_OK);
  CHECK(form == PVK_FORM_NEG_TC);
  CHECK(std::strcmp(pvk_form_name(form), "NEG_TC") == 0);
  CHECK(pvk_parse_form("nope", &form) == PVK_E_VALIDATION);
  CHECK(std::string(pvk_last_error()).find("nope") != std::string::npos);

  pvk_intentionality intent{};
  REQUIRE(pvk_parse_intentionality("UNC", &intent) == PVK_OK);
  CHECK(intent == PVK_INTENT_UNC);
  pvk_awareness aware{};
  REQUIRE(pvk_parse_awareness("AW", &aware) == PVK_OK);
  CHECK(aware == PVK_AWARE_AW);
  pvk_feature feature{};
  REQUIRE(pvk_parse_feature("awareness", &feature) == PVK_OK);
  CHECK(feature == PVK_FEATURE_AWARENESS);
  pvk_variant variant{};
  REQUIRE(pvk_parse_variant("TAKE_CARE", &variant) == PVK_OK);
  CHECK(variant == PVK_VARIANT_TAKE_CARE);
  CHECK(std::strcmp(pvk_significance_label(PVK_SIG_P001), "0.001") == 0);
  CHECK(std::strcmp(pvk_band_name(PVK_BAND_MODERATE), "moderate") == 0);
  CHECK(std::strcmp(pvk_reject_reason_name(PVK_REJECT_MANUAL), "MANUAL") == 0);
}

TEST_CASE("the corpus pipeline runs end to end through the C API") {
  pvk_patterns* patterns = nullptr;
  REQUIRE(pvk_patterns_default(&patterns) == PVK_OK);
  CHECK(pvk_patterns_count(patterns) == 8);
  CHECK(std::strcmp(pvk_patterns_id(patterns, 0), "dont") == 0);

  pvk_utterances* hits = nullptr;
  size_t total = 0;
  REQUIRE(pvk_probe_dir((kFixtures + "/corpus").c_str(), patterns, &hits, &total) ==
          PVK_OK);
  CHECK(total == 15);
  REQUIRE(pvk_utterances_count(hits) == 9);

  pvk_utterances* sampled = nullptr;
  REQUIRE(pvk_sample(hits, 100, 0, &sampled) == PVK_OK);
  CHECK(pvk_utterances_count(sampled) == 9);

  pvk_verdicts* verdicts = nullptr;
  REQUIRE(pvk_filter(sampled, patterns, nullptr, &verdicts) == PVK_OK);
  REQUIRE(pvk_verdicts_count(verdicts) == 9);
  size_t kept_count = 0;
  for (size_t i = 0; i < 9; ++i) {
    int keep = 0, reason = -1, overridden = -1;
    REQUIRE(pvk_verdicts_get(verdicts, i, &keep, &reason, &overridden) == PVK_OK);
    kept_count += keep;
    CHECK(overridden == 0);
    if (keep) CHECK(reason == -1);
  }
  CHECK(kept_count == 7);

  pvk_utterances* kept = nullptr;
  REQUIRE(pvk_select_kept(sampled, verdicts, &kept) == PVK_OK);
  REQUIRE(pvk_utterances_count(kept) == 7);
  for (size_t i = 0; i < 7; ++i) {
    pvk_form form{};
    CHECK(pvk_classify(kept, i, patterns, &form) == PVK_OK);
  }

  char* report = nullptr;
  REQUIRE(pvk_stage_report_render(patterns, total, hits, sampled, kept, 1, &report) ==
          PVK_OK);
  CHECK(std::string(report).find("kept,2,1,1,0,3,0,0,0,3,4,9,15") != std::string::npos);
  pvk_string_free(report);

  // CSV round trip via files.
  const auto csv_path = temp_path("pvk_capi_hits.csv");
  REQUIRE(pvk_utterances_write_csv(hits, csv_path.c_str()) == PVK_OK);
  pvk_utterances* reread = nullptr;
  REQUIRE(pvk_utterances_read_csv(csv_path.c_str(), &reread) == PVK_OK);
  REQUIRE(pvk_utterances_count(reread) == 9);
  CHECK(std::strcmp(pvk_utterances_id(reread, 0), pvk_utterances_id(hits, 0)) == 0);
  CHECK(std::strcmp(pvk_utterances_text(reread, 3), pvk_utterances_text(hits, 3)) == 0);
  size_t s0 = 0, e0 = 0, s1 = 0, e1 = 0;
  REQUIRE(pvk_utterances_span(hits, 2, &s0, &e0) == PVK_OK);
  REQUIRE(pvk_utterances_span(reread, 2, &s1, &e1) == PVK_OK);
  CHECK(s0 == s1);
  CHECK(e0 == e1);
  std::filesystem::remove(csv_path);

  const auto verdicts_path = temp_path("pvk_capi_verdicts.csv");
  REQUIRE(pvk_verdicts_write_csv(verdicts, verdicts_path.c_str()) == PVK_OK);
  {
    std::ifstream in(verdicts_path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "id,keep,reason,overridden");
  }
  std::filesystem::remove(verdicts_path);

  pvk_utterances_free(reread);
  pvk_utterances_free(kept);
  pvk_verdicts_free(verdicts);
  pvk_utterances_free(sampled);
  pvk_utterances_free(hits);
  pvk_patterns_free(patterns);
}

TEST_CASE("array overrides force verdicts through the C API") {
  pvk_patterns* patterns = nullptr;
  REQUIRE(pvk_patterns_default(&patterns) == PVK_OK);
  pvk_utterances* segs = nullptr;
  REQUIRE(pvk_break_document("Be careful not to burn the garlic.", "doc", &segs) ==
          PVK_OK);
  pvk_utterances* hits = nullptr;
  REQUIRE(pvk_probe(segs, patterns, &hits) == PVK_OK);
  REQUIRE(pvk_utterances_count(hits) == 1);

  const char* ids[1] = {pvk_utterances_id(hits, 0)};
  const int keeps[1] = {0};
  pvk_verdicts* verdicts = nullptr;
  REQUIRE(pvk_filter_overrides(hits, patterns, ids, keeps, 1, &verdicts) == PVK_OK);
  int keep = 1, reason = -1, overridden = 0;
  REQUIRE(pvk_verdicts_get(verdicts, 0, &keep, &reason, &overridden) == PVK_OK);
  CHECK(keep == 0);
  CHECK(reason == PVK_REJECT_MANUAL);
  CHECK(overridden == 1);

  pvk_verdicts_free(verdicts);
  pvk_utterances_free(hits);
  pvk_utterances_free(segs);
  pvk_patterns_free(patterns);
}

TEST_CASE("error paths set status codes and messages") {
  pvk_utterances* out = nullptr;
  pvk_patterns* patterns = nullptr;
  REQUIRE(pvk_patterns_default(&patterns) == PVK_OK);
  CHECK(pvk_probe_dir("definitely-not-a-directory", patterns, &out, nullptr) ==
        PVK_E_IO);
  CHECK(std::string(pvk_last_error()).find("definitely-not-a-directory") !=
        std::string::npos);
  CHECK(pvk_probe_dir(nullptr, patterns, &out, nullptr) == PVK_E_ARGUMENT);

  pvk_utterances* segs = nullptr;
  const char bad[] = {'h', 'i', ' ', char(0xFF), 0};
  CHECK(pvk_break_document(bad, "doc", &segs) == PVK_E_DECODING);

  pvk_codings* codings = nullptr;
  CHECK(pvk_codings_load_csv((kFixtures + "/missing.csv").c_str(), &codings) ==
        PVK_E_IO);
  pvk_patterns_free(patterns);
}

TEST_CASE("agreement statistics through the C API") {
  pvk_codings* codings = nullptr;
  REQUIRE(pvk_codings_load_csv((kFixtures + "/kappa10.csv").c_str(), &codings) ==
          PVK_OK);
  CHECK(pvk_codings_examples(codings) == 10);
  CHECK(pvk_codings_coders(codings) == 2);

  double pa = 0.0;
  REQUIRE(pvk_percent_agreement(codings, PVK_FEATURE_INTENTIONALITY, &pa) == PVK_OK);
  CHECK(pa == doctest::Approx(0.8).epsilon(1e-15));

  pvk_agreement_report report{};
  REQUIRE(pvk_kappa(codings, PVK_FEATURE_INTENTIONALITY, &report) == PVK_OK);
  CHECK(report.n_items == 10);
  CHECK(report.kappa == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(report.band == PVK_BAND_MODERATE);
  CHECK(report.category_proportion[0] == doctest::Approx(0.5).epsilon(1e-15));

  REQUIRE(pvk_kappa(codings, PVK_FEATURE_FORM, &report) == PVK_OK);
  CHECK(report.kappa == 1.0);
  CHECK(report.band == PVK_BAND_ALMOST_PERFECT);

  pvk_band band{};
  REQUIRE(pvk_reliability_band(0.51, &band) == PVK_OK);
  CHECK(band == PVK_BAND_MODERATE);
  CHECK(pvk_reliability_band(1.5, &band) == PVK_E_ARGUMENT);

  pvk_codings_free(codings);
}

TEST_CASE("association statistics through the C API") {
  pvk_codings* codings = nullptr;
  REQUIRE(pvk_codings_load_csv((kFixtures + "/codings239.csv").c_str(), &codings) ==
          PVK_OK);
  CHECK(pvk_codings_examples(codings) == 239);

  pvk_subset* subset = nullptr;
  REQUIRE(pvk_agreement_subset(codings, &subset) == PVK_OK);
  CHECK(pvk_subset_count(subset) == 165);

  pvk_table2x2 intent{};
  REQUIRE(pvk_contingency(subset, PVK_FEATURE_INTENTIONALITY, &intent) == PVK_OK);
  CHECK(intent.a == 61);
  CHECK(intent.b == 45);
  CHECK(intent.c == 0);
  CHECK(intent.d == 59);
  CHECK(intent.n == 165);

  pvk_chi2_result chi2{};
  REQUIRE(pvk_chi_square_yates(&intent, &chi2) == PVK_OK);
  CHECK(chi2.statistic == doctest::Approx(51.4).epsilon(0.001));
  CHECK(chi2.significance == PVK_SIG_P001);
  CHECK(chi2.n_warning == 0);

  // n must be consistent.
  pvk_table2x2 broken{1, 2, 3, 4, 99};
  CHECK(pvk_chi_square_yates(&broken, &chi2) == PVK_E_ARGUMENT);

  pvk_significance sig{};
  REQUIRE(pvk_significance_level(6.7, &sig) == PVK_OK);
  CHECK(sig == PVK_SIG_P01);

  pvk_subset_free(subset);
  pvk_codings_free(codings);
}

TEST_CASE("induction, prediction and generation through the C API") {
  pvk_codings* codings = nullptr;
  REQUIRE(pvk_codings_load_csv((kFixtures + "/codings239.csv").c_str(), &codings) ==
          PVK_OK);
  pvk_subset* subset = nullptr;
  REQUIRE(pvk_agreement_subset(codings, &subset) == PVK_OK);
  pvk_tree* tree = nullptr;
  REQUIRE(pvk_induce(subset, &tree) == PVK_OK);
  CHECK(pvk_tree_nodes(tree) == 7);

  pvk_prediction prediction{};
  REQUIRE(pvk_predict(tree, PVK_INTENT_UNC, PVK_AWARE_UNAW, &prediction) == PVK_OK);
  CHECK(prediction.form == PVK_FORM_DONT);
  CHECK(prediction.confidence == doctest::Approx(45.0 / 72.0).epsilon(1e-15));

  const auto tree_path = temp_path("pvk_capi_tree.txt");
  REQUIRE(pvk_tree_save(tree, tree_path.c_str()) == PVK_OK);
  pvk_tree* reloaded = nullptr;
  REQUIRE(pvk_tree_load(tree_path.c_str(), &reloaded) == PVK_OK);
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(pvk_tree_render(tree, &a) == PVK_OK);
  REQUIRE(pvk_tree_render(reloaded, &b) == PVK_OK);
  CHECK(std::string(a) == std::string(b));
  pvk_string_free(a);
  pvk_string_free(b);
  std::filesystem::remove(tree_path);

  char* sentence = nullptr;
  REQUIRE(pvk_plan_realize(tree, PVK_INTENT_UNC, PVK_AWARE_AW, "burn the garlic",
                           nullptr, -1, &sentence) == PVK_OK);
  CHECK(std::string(sentence) == "Be careful not to burn the garlic.");
  pvk_string_free(sentence);

  REQUIRE(pvk_realize(PVK_FORM_DONT, PVK_VARIANT_FULL, "scrub or wet-mop the parquet",
                      nullptr, &sentence) == PVK_OK);
  CHECK(std::string(sentence) == "Do not scrub or wet-mop the parquet.");
  pvk_string_free(sentence);

  CHECK(pvk_realize(PVK_FORM_DONT, PVK_VARIANT_TAKE_CARE, "enter", nullptr,
                    &sentence) == PVK_E_ARGUMENT);
  CHECK(pvk_realize(PVK_FORM_DONT, PVK_VARIANT_FULL, "", nullptr, &sentence) ==
        PVK_E_ARGUMENT);

  // A malformed tree file reports a parse error.
  const auto bad_path = temp_path("pvk_capi_bad_tree.txt");
  {
    std::ofstream out(bad_path);
    out << "node 0 split awareness 1 2\n";
  }
  pvk_tree* bad_tree = nullptr;
  CHECK(pvk_tree_load(bad_path.c_str(), &bad_tree) == PVK_E_PARSE);
  std::filesystem::remove(bad_path);

  pvk_tree_free(reloaded);
  pvk_tree_free(tree);
  pvk_subset_free(subset);
  pvk_codings_free(codings);
}
