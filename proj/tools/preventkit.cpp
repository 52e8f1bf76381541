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

// Command-line front end: probe -> sample -> filter -> (offline human
// coding) -> agree / assoc -> induce -> predict / generate -> report.
// Everything goes through the public C API.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "preventkit.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

struct PatternsFree { void operator()(pvk_patterns* p) const { pvk_patterns_free(p); } };
struct UtterancesFree { void operator()(pvk_utterances* u) const { pvk_utterances_free(u); } };
struct VerdictsFree { void operator()(pvk_verdicts* v) const { pvk_verdicts_free(v); } };
struct CodingsFree { void operator()(pvk_codings* c) const { pvk_codings_free(c); } };
struct SubsetFree { void operator()(pvk_subset* s) const { pvk_subset_free(s); } };
struct TreeFree { void operator()(pvk_tree* t) const { pvk_tree_free(t); } };

using PatternsPtr = std::unique_ptr<pvk_patterns, PatternsFree>;
using UtterancesPtr = std::unique_ptr<pvk_utterances, UtterancesFree>;
using VerdictsPtr = std::unique_ptr<pvk_verdicts, VerdictsFree>;
using CodingsPtr = std::unique_ptr<pvk_codings, CodingsFree>;
using SubsetPtr = std::unique_ptr<pvk_subset, SubsetFree>;
using TreePtr = std::unique_ptr<pvk_tree, TreeFree>;

struct CliString {
  char* value = nullptr;
  ~CliString() { pvk_string_free(value); }
  std::string str() const { return value ? value : ""; }
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

[[noreturn]] void bail(pvk_status status) {
  std::cerr << "preventkit: " << pvk_last_error() << "\n";
  std::exit(status == PVK_OK ? kExitOk : kExitData);
}

void check(pvk_status status) {
  if (status != PVK_OK) bail(status);
}

// PREVENTKIT_SEED wins over --seed.
uint64_t resolve_seed(uint64_t flag_seed) {
  const char* env = std::getenv("PREVENTKIT_SEED");
  if (!env || !*env) return flag_seed;
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (errno != 0 || !end || *end != '\0') {
    throw UsageError(std::string("PREVENTKIT_SEED is not an unsigned integer: '") +
                     env + "'");
  }
  return v;
}

PatternsPtr load_patterns(const std::string& path) {
  pvk_patterns* p = nullptr;
  if (path.empty()) check(pvk_patterns_default(&p));
  else check(pvk_patterns_load_csv(path.c_str(), &p));
  return PatternsPtr(p);
}

// Multi-stage subcommands validate their inputs up front, before any
// stage runs.
void require_path(const std::string& path, bool directory) {
  if (path.empty()) return;
  namespace fs = std::filesystem;
  std::error_code ec;
  const bool ok = directory ? fs::is_directory(path, ec) : fs::is_regular_file(path, ec);
  if (!ok) {
    std::cerr << "preventkit: " << (directory ? "directory '" : "file '") << path
              << "' does not exist\n";
    std::exit(kExitData);
  }
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "preventkit: cannot write '" << out_path << "'\n";
    std::exit(kExitData);
  }
  out << content;
  if (!out) {
    std::cerr << "preventkit: failed writing '" << out_path << "'\n";
    std::exit(kExitData);
  }
}

void emit_utterances(const pvk_utterances* u, const std::string& out_path) {
  if (out_path.empty()) {
    CliString csv;
    check(pvk_utterances_render_csv(u, &csv.value));
    std::cout << csv.str();
  } else {
    check(pvk_utterances_write_csv(u, out_path.c_str()));
  }
}

std::string stamp_line() {
  std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return std::string("# generated ") + buf + "\n";
}

std::string format_double(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

const std::vector<std::string> kFeatureNames = {"form", "intentionality", "awareness"};
const std::vector<std::string> kFunctionFeatures = {"intentionality", "awareness"};

pvk_feature feature_from(const std::string& name) {
  pvk_feature f{};
  check(pvk_parse_feature(name.c_str(), &f));
  return f;
}

/* ------------------------- subcommands ---------------------------- */

struct ProbeArgs {
  std::string corpus, patterns, out;
};

int run_probe(const ProbeArgs& args) {
  PatternsPtr patterns = load_patterns(args.patterns);
  pvk_utterances* hits_raw = nullptr;
  size_t total = 0;
  check(pvk_probe_dir(args.corpus.c_str(), patterns.get(), &hits_raw, &total));
  UtterancesPtr hits(hits_raw);
  emit_utterances(hits.get(), args.out);
  std::cerr << "probed " << pvk_utterances_count(hits.get()) << " of " << total
            << " segments\n";
  return kExitOk;
}

struct SampleArgs {
  std::string in, out;
  uint32_t cap = 100;
  uint64_t seed = 0;
};

int run_sample(const SampleArgs& args) {
  pvk_utterances* in_raw = nullptr;
  check(pvk_utterances_read_csv(args.in.c_str(), &in_raw));
  UtterancesPtr hits(in_raw);
  pvk_utterances* sampled_raw = nullptr;
  check(pvk_sample(hits.get(), args.cap, resolve_seed(args.seed), &sampled_raw));
  UtterancesPtr sampled(sampled_raw);
  emit_utterances(sampled.get(), args.out);
  return kExitOk;
}

struct FilterArgs {
  std::string in, patterns, overrides, out, verdicts, save_overrides;
  bool prompt = false;
};

int run_filter(const FilterArgs& args) {
  require_path(args.in, false);
  require_path(args.patterns, false);
  require_path(args.overrides, false);
  PatternsPtr patterns = load_patterns(args.patterns);
  pvk_utterances* in_raw = nullptr;
  check(pvk_utterances_read_csv(args.in.c_str(), &in_raw));
  UtterancesPtr hits(in_raw);

  VerdictsPtr verdicts;
  std::vector<std::string> chosen_ids;
  std::vector<int> chosen_keeps;
  {
    pvk_verdicts* v = nullptr;
    check(pvk_filter(hits.get(), patterns.get(),
                     args.overrides.empty() ? nullptr : args.overrides.c_str(), &v));
    verdicts.reset(v);
  }

  if (args.prompt) {
    // Review each hit; empty input accepts the automatic verdict.
    const size_t n = pvk_utterances_count(hits.get());
    for (size_t i = 0; i < n; ++i) {
      int keep = 0, reason = -1;
      check(pvk_verdicts_get(verdicts.get(), i, &keep, &reason, nullptr));
      std::cerr << pvk_utterances_id(hits.get(), i) << "\n  "
                << pvk_utterances_text(hits.get(), i) << "\n  auto: "
                << (keep ? "keep" : std::string("reject (") +
                                        pvk_reject_reason_name(
                                            static_cast<pvk_reject_reason>(reason)) +
                                        ")")
                << "\n  keep? [y/n/enter=auto] " << std::flush;
      std::string line;
      if (!std::getline(std::cin, line)) line.clear();
      if (line == "y" || line == "Y") {
        chosen_ids.emplace_back(pvk_utterances_id(hits.get(), i));
        chosen_keeps.push_back(1);
      } else if (line == "n" || line == "N") {
        chosen_ids.emplace_back(pvk_utterances_id(hits.get(), i));
        chosen_keeps.push_back(0);
      }
    }
    if (!chosen_ids.empty()) {
      std::vector<const char*> id_ptrs;
      id_ptrs.reserve(chosen_ids.size());
      for (const auto& id : chosen_ids) id_ptrs.push_back(id.c_str());
      pvk_verdicts* v = nullptr;
      check(pvk_filter_overrides(hits.get(), patterns.get(), id_ptrs.data(),
                                 chosen_keeps.data(), id_ptrs.size(), &v));
      verdicts.reset(v);
    }
    if (!args.save_overrides.empty()) {
      std::vector<const char*> id_ptrs;
      for (const auto& id : chosen_ids) id_ptrs.push_back(id.c_str());
      check(pvk_overrides_write_csv(id_ptrs.data(), chosen_keeps.data(),
                                    id_ptrs.size(), args.save_overrides.c_str()));
    }
  }

  pvk_utterances* kept_raw = nullptr;
  check(pvk_select_kept(hits.get(), verdicts.get(), &kept_raw));
  UtterancesPtr kept(kept_raw);
  emit_utterances(kept.get(), args.out);
  if (!args.verdicts.empty()) {
    check(pvk_verdicts_write_csv(verdicts.get(), args.verdicts.c_str()));
  }
  std::cerr << "kept " << pvk_utterances_count(kept.get()) << " of "
            << pvk_utterances_count(hits.get()) << " hits\n";
  return kExitOk;
}

struct ReportArgs {
  std::string codings, feature, format = "text";
  bool stamp = false;
};

int run_agree(const ReportArgs& args) {
  pvk_codings* c_raw = nullptr;
  check(pvk_codings_load_csv(args.codings.c_str(), &c_raw));
  CodingsPtr codings(c_raw);

  std::vector<std::string> features =
      args.feature.empty() ? kFeatureNames : std::vector<std::string>{args.feature};
  std::string out;
  if (args.stamp) out += stamp_line();
  if (args.format == "csv") out += "feature,n_items,p_a,p_e,kappa,band\n";
  for (const auto& name : features) {
    pvk_agreement_report report{};
    check(pvk_kappa(codings.get(), feature_from(name), &report));
    if (args.format == "csv") {
      out += name + "," + std::to_string(report.n_items) + "," +
             format_double("%.6f", report.p_a) + "," +
             format_double("%.6f", report.p_e) + "," +
             format_double("%.6f", report.kappa) + "," + pvk_band_name(report.band) +
             "\n";
    } else {
      out += name + " P(A)=" + format_double("%.3f", report.p_a) +
             " P(E)=" + format_double("%.3f", report.p_e) +
             " K=" + format_double("%.3f", report.kappa) +
             " band=" + pvk_band_name(report.band) + "\n";
    }
  }
  std::cout << out;
  return kExitOk;
}

int run_assoc(const ReportArgs& args) {
  pvk_codings* c_raw = nullptr;
  check(pvk_codings_load_csv(args.codings.c_str(), &c_raw));
  CodingsPtr codings(c_raw);
  pvk_subset* s_raw = nullptr;
  check(pvk_agreement_subset(codings.get(), &s_raw));
  SubsetPtr subset(s_raw);

  std::vector<std::string> features =
      args.feature.empty() ? kFunctionFeatures : std::vector<std::string>{args.feature};
  std::string out;
  if (args.stamp) out += stamp_line();
  if (args.format == "csv") {
    out += "feature,a,b,c,d,n,chi2,significance,n_warning\n";
  } else {
    out += "agreement subset: " + std::to_string(pvk_subset_count(subset.get())) +
           " of " + std::to_string(pvk_codings_examples(codings.get())) +
           " examples\n";
  }
  for (const auto& name : features) {
    pvk_table2x2 table{};
    check(pvk_contingency(subset.get(), feature_from(name), &table));
    pvk_chi2_result chi2{};
    check(pvk_chi_square_yates(&table, &chi2));
    if (args.format == "csv") {
      out += name + "," + std::to_string(table.a) + "," + std::to_string(table.b) +
             "," + std::to_string(table.c) + "," + std::to_string(table.d) + "," +
             std::to_string(table.n) + "," + format_double("%.4f", chi2.statistic) +
             "," + pvk_significance_label(chi2.significance) + "," +
             (chi2.n_warning ? "true" : "false") + "\n";
    } else {
      out += name + " chi2=" + format_double("%.1f", chi2.statistic) +
             " sig=" + pvk_significance_label(chi2.significance);
      if (chi2.n_warning) out += " [small-sample warning]";
      out += "\n";
    }
  }
  std::cout << out;
  return kExitOk;
}

struct InduceArgs {
  std::string codings, out;
};

int run_induce(const InduceArgs& args) {
  pvk_codings* c_raw = nullptr;
  check(pvk_codings_load_csv(args.codings.c_str(), &c_raw));
  CodingsPtr codings(c_raw);
  pvk_subset* s_raw = nullptr;
  check(pvk_agreement_subset(codings.get(), &s_raw));
  SubsetPtr subset(s_raw);
  pvk_tree* t_raw = nullptr;
  check(pvk_induce(subset.get(), &t_raw));
  TreePtr tree(t_raw);

  CliString rendered;
  check(pvk_tree_render(tree.get(), &rendered.value));
  emit(rendered.str(), args.out);
  std::cerr << "induced tree with " << pvk_tree_nodes(tree.get()) << " nodes from "
            << pvk_subset_count(subset.get()) << " examples\n";
  return kExitOk;
}

struct PredictArgs {
  std::string tree, intentionality, awareness, format = "text";
};

int run_predict(const PredictArgs& args) {
  pvk_tree* t_raw = nullptr;
  check(pvk_tree_load(args.tree.c_str(), &t_raw));
  TreePtr tree(t_raw);
  pvk_intentionality intent{};
  check(pvk_parse_intentionality(args.intentionality.c_str(), &intent));
  pvk_awareness aware{};
  check(pvk_parse_awareness(args.awareness.c_str(), &aware));
  pvk_prediction prediction{};
  check(pvk_predict(tree.get(), intent, aware, &prediction));
  if (args.format == "csv") {
    std::cout << "form,confidence\n"
              << pvk_form_name(prediction.form) << ","
              << format_double("%.6f", prediction.confidence) << "\n";
  } else {
    std::cout << "form=" << pvk_form_name(prediction.form)
              << " confidence=" << format_double("%.3f", prediction.confidence) << "\n";
  }
  return kExitOk;
}

struct GenerateArgs {
  std::string form, variant, action, trailing, tree, intentionality, awareness;
};

int run_generate(const GenerateArgs& args) {
  CliString sentence;
  if (!args.tree.empty()) {
    if (args.intentionality.empty() || args.awareness.empty()) {
      throw UsageError("--tree mode needs --intentionality and --awareness");
    }
    pvk_tree* t_raw = nullptr;
    check(pvk_tree_load(args.tree.c_str(), &t_raw));
    TreePtr tree(t_raw);
    pvk_intentionality intent{};
    check(pvk_parse_intentionality(args.intentionality.c_str(), &intent));
    pvk_awareness aware{};
    check(pvk_parse_awareness(args.awareness.c_str(), &aware));
    int variant = -1;
    if (!args.variant.empty()) {
      pvk_variant v{};
      check(pvk_parse_variant(args.variant.c_str(), &v));
      variant = v;
    }
    check(pvk_plan_realize(tree.get(), intent, aware, args.action.c_str(),
                           args.trailing.empty() ? nullptr : args.trailing.c_str(),
                           variant, &sentence.value));
  } else {
    if (args.form.empty()) {
      throw UsageError("generate needs either --form or --tree");
    }
    pvk_form form{};
    check(pvk_parse_form(args.form.c_str(), &form));
    pvk_variant variant{};
    if (args.variant.empty()) {
      variant = form == PVK_FORM_DONT ? PVK_VARIANT_FULL : PVK_VARIANT_BE_CAREFUL;
    } else {
      check(pvk_parse_variant(args.variant.c_str(), &variant));
    }
    check(pvk_realize(form, variant, args.action.c_str(),
                      args.trailing.empty() ? nullptr : args.trailing.c_str(),
                      &sentence.value));
  }
  std::cout << sentence.str() << "\n";
  return kExitOk;
}

struct PipelineReportArgs {
  std::string corpus, patterns, overrides, format = "text";
  uint32_t cap = 100;
  uint64_t seed = 0;
  bool stamp = false;
};

int run_report(const PipelineReportArgs& args) {
  require_path(args.corpus, true);
  require_path(args.patterns, false);
  require_path(args.overrides, false);
  PatternsPtr patterns = load_patterns(args.patterns);
  pvk_utterances* raw_hits_raw = nullptr;
  size_t total = 0;
  check(pvk_probe_dir(args.corpus.c_str(), patterns.get(), &raw_hits_raw, &total));
  UtterancesPtr raw_hits(raw_hits_raw);

  pvk_utterances* sampled_raw = nullptr;
  check(pvk_sample(raw_hits.get(), args.cap, resolve_seed(args.seed), &sampled_raw));
  UtterancesPtr sampled(sampled_raw);

  pvk_verdicts* v_raw = nullptr;
  check(pvk_filter(sampled.get(), patterns.get(),
                   args.overrides.empty() ? nullptr : args.overrides.c_str(), &v_raw));
  VerdictsPtr verdicts(v_raw);
  pvk_utterances* kept_raw = nullptr;
  check(pvk_select_kept(sampled.get(), verdicts.get(), &kept_raw));
  UtterancesPtr kept(kept_raw);

  CliString rendered;
  check(pvk_stage_report_render(patterns.get(), total, raw_hits.get(), sampled.get(),
                                kept.get(), args.format == "csv" ? 1 : 0,
                                &rendered.value));
  if (args.stamp) std::cout << stamp_line();
  std::cout << rendered.str();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"corpus-study toolkit for preventative expressions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pvk_version());
  const CLI::IsMember fmt_validator({"text", "csv"});

  ProbeArgs probe_args;
  auto* probe = app.add_subcommand("probe", "segment a corpus and find pattern hits");
  probe->add_option("--corpus", probe_args.corpus, "directory of UTF-8 text files")
      ->required();
  probe->add_option("--patterns", probe_args.patterns, "pattern CSV (id,surface,family)");
  probe->add_option("--out", probe_args.out, "output CSV path (default: stdout)");

  SampleArgs sample_args;
  auto* sample = app.add_subcommand("sample", "draw a reproducible sample of hits");
  sample->add_option("--in", sample_args.in, "hits CSV from probe")->required();
  sample->add_option("--cap", sample_args.cap, "sample size cap")->default_val(100);
  sample->add_option("--seed", sample_args.seed, "sampling seed")->default_val(0);
  sample->add_option("--out", sample_args.out, "output CSV path (default: stdout)");

  FilterArgs filter_args;
  auto* filter = app.add_subcommand("filter", "drop hits that are not negative imperatives");
  filter->add_option("--in", filter_args.in, "hits CSV")->required();
  filter->add_option("--patterns", filter_args.patterns, "pattern CSV");
  auto* overrides_opt =
      filter->add_option("--overrides", filter_args.overrides, "overrides CSV (id,keep)");
  filter->add_option("--out", filter_args.out, "kept-hits CSV path (default: stdout)");
  filter->add_option("--verdicts", filter_args.verdicts, "write per-hit verdicts CSV");
  auto* prompt_flag =
      filter->add_flag("--prompt", filter_args.prompt, "review each hit interactively");
  filter->add_option("--save-overrides", filter_args.save_overrides,
                     "record interactive decisions as an overrides CSV")
      ->needs(prompt_flag);
  prompt_flag->excludes(overrides_opt);

  ReportArgs agree_args;
  auto* agree = app.add_subcommand("agree", "inter-coder agreement report");
  agree->add_option("--codings", agree_args.codings, "coding CSV")->required();
  agree->add_option("--feature", agree_args.feature, "one feature (default: all)")
      ->check(CLI::IsMember(kFeatureNames));
  agree->add_option("--format", agree_args.format, "text or csv")->check(fmt_validator);
  agree->add_flag("--stamp", agree_args.stamp, "embed a generation timestamp");

  ReportArgs assoc_args;
  auto* assoc = app.add_subcommand("assoc", "form/feature association report");
  assoc->add_option("--codings", assoc_args.codings, "coding CSV")->required();
  assoc->add_option("--feature", assoc_args.feature, "one function feature (default: both)")
      ->check(CLI::IsMember(kFunctionFeatures));
  assoc->add_option("--format", assoc_args.format, "text or csv")->check(fmt_validator);
  assoc->add_flag("--stamp", assoc_args.stamp, "embed a generation timestamp");

  InduceArgs induce_args;
  auto* induce = app.add_subcommand("induce", "induce the feature-to-form decision tree");
  induce->add_option("--codings", induce_args.codings, "coding CSV")->required();
  induce->add_option("--out", induce_args.out, "tree file path (default: stdout)");

  PredictArgs predict_args;
  auto* predict = app.add_subcommand("predict", "predict a form from feature values");
  predict->add_option("--tree", predict_args.tree, "tree file")->required();
  predict->add_option("--intentionality", predict_args.intentionality, "CON or UNC")
      ->required()
      ->check(CLI::IsMember({"CON", "UNC"}));
  predict->add_option("--awareness", predict_args.awareness, "AW or UNAW")
      ->required()
      ->check(CLI::IsMember({"AW", "UNAW"}));
  predict->add_option("--format", predict_args.format, "text or csv")
      ->check(fmt_validator);

  GenerateArgs generate_args;
  auto* generate = app.add_subcommand("generate", "render a preventative expression");
  auto* form_opt = generate->add_option("--form", generate_args.form, "DONT or NEG_TC")
                       ->check(CLI::IsMember({"DONT", "NEG_TC"}));
  generate->add_option("--variant", generate_args.variant,
                       "FULL, CONTRACTED, BE_CAREFUL or TAKE_CARE")
      ->check(CLI::IsMember({"FULL", "CONTRACTED", "BE_CAREFUL", "TAKE_CARE"}));
  generate->add_option("--action", generate_args.action, "verb phrase to prevent")
      ->required();
  generate->add_option("--trailing", generate_args.trailing, "purpose/reason clause");
  auto* tree_opt = generate->add_option("--tree", generate_args.tree,
                                        "tree file (predict the form)");
  generate->add_option("--intentionality", generate_args.intentionality, "CON or UNC")
      ->check(CLI::IsMember({"CON", "UNC"}));
  generate->add_option("--awareness", generate_args.awareness, "AW or UNAW")
      ->check(CLI::IsMember({"AW", "UNAW"}));
  tree_opt->excludes(form_opt);

  PipelineReportArgs report_args;
  auto* report = app.add_subcommand("report", "run the pipeline and print stage counts");
  report->add_option("--corpus", report_args.corpus, "directory of UTF-8 text files")
      ->required();
  report->add_option("--patterns", report_args.patterns, "pattern CSV");
  report->add_option("--cap", report_args.cap, "sample size cap")->default_val(100);
  report->add_option("--seed", report_args.seed, "sampling seed")->default_val(0);
  report->add_option("--overrides", report_args.overrides, "overrides CSV");
  report->add_option("--format", report_args.format, "text or csv")->check(fmt_validator);
  report->add_flag("--stamp", report_args.stamp, "embed a generation timestamp");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "preventkit: " << e.what() << "\n";
    std::cerr << "run 'preventkit --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (probe->parsed()) return run_probe(probe_args);
    if (sample->parsed()) return run_sample(sample_args);
    if (filter->parsed()) return run_filter(filter_args);
    if (agree->parsed()) return run_agree(agree_args);
    if (assoc->parsed()) return run_assoc(assoc_args);
    if (induce->parsed()) return run_induce(induce_args);
    if (predict->parsed()) return run_predict(predict_args);
    if (generate->parsed()) return run_generate(generate_args);
    if (report->parsed()) return run_report(report_args);
  } catch (const UsageError& e) {
    std::cerr << "preventkit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "preventkit: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}
