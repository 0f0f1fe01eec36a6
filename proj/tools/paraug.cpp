// Copyright 2026 The Paraug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// paraug command-line tool: augment / evaluate / stats / triage.
//
// Every subcommand prints a single JSON document on stdout; errors go to
// stderr as {"error":{"code","message"}}. Exit codes: 0 success, 1 usage
// error, 2 data or format error, 3 I/O error.

#include <chrono>
#include <cstdint>
#include <exception>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "paraug/baseline_da.hpp"
#include "paraug/boundary_da.hpp"
#include "paraug/corpus.hpp"
#include "paraug/corpus_io.hpp"
#include "paraug/errors.hpp"
#include "paraug/eval.hpp"
#include "paraug/manifest.hpp"
#include "paraug/mtl_da.hpp"
#include "paraug/sampling.hpp"
#include "paraug/version.hpp"

namespace {

using nlohmann::json;

// Bad flag combinations and values; exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void print_json_error(const std::string& code, const std::string& message) {
  const json j{{"error", {{"code", code}, {"message", message}}}};
  std::cerr << j.dump() << "\n";
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> items;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    while (!item.empty() && item.back() == ' ') item.pop_back();
    if (!item.empty()) items.push_back(std::move(item));
    start = end + 1;
  }
  return items;
}

std::vector<paraug::Sentence> load_sentences(const std::string& path) {
  std::vector<paraug::Sentence> sentences;
  for (const std::string& line :
       paraug::split_lines(paraug::read_text_file(path))) {
    sentences.push_back(paraug::tokenize(line));
  }
  return sentences;
}

struct AugmentOptions {
  std::string source_path;
  std::string target_path;
  std::string out_source;
  std::string out_target;
  std::string manifest_path;
  std::string config_path;
  std::string method;
  std::string tasks_csv;
  double alpha = 0.5;
  std::string unk = "UNK";
  std::string dict_path;
  std::string align_path;
  double p_max = 0.3;
  std::string eda_ops_csv;
  std::string thesaurus_path;
  std::string embeddings_path;
  std::uint64_t neighbor_rank = 1;
  std::uint64_t seed = 0;
  bool no_append = false;
  std::string source_tag = "src";
  std::string target_tag = "tgt";

  // CLI11 option handles, used to decide whether a config value applies.
  std::map<std::string, CLI::Option*> options;
};

// Fills options not given on the command line from the JSON config file;
// explicit flags always win. Config keys equal the long flag names without
// the leading dashes, plus "append-original" for the boolean.
void apply_config(AugmentOptions& o) {
  if (o.config_path.empty()) return;
  json config;
  try {
    config = json::parse(paraug::read_text_file(o.config_path));
  } catch (const json::exception& e) {
    throw paraug::FormatError("config-parse",
                              o.config_path + ": " + e.what());
  }
  if (!config.is_object()) {
    throw paraug::FormatError("config-parse",
                              o.config_path + ": top level must be an object");
  }
  const auto given = [&](const std::string& flag) {
    const auto it = o.options.find(flag);
    return it != o.options.end() && it->second->count() > 0;
  };
  try {
    const auto take_string = [&](const char* key, std::string& into) {
      if (!given(key) && config.contains(key)) {
        into = config.at(key).get<std::string>();
      }
    };
    const auto take_double = [&](const char* key, double& into) {
      if (!given(key) && config.contains(key)) {
        into = config.at(key).get<double>();
      }
    };
    take_string("source", o.source_path);
    take_string("target", o.target_path);
    take_string("out-source", o.out_source);
    take_string("out-target", o.out_target);
    take_string("manifest", o.manifest_path);
    take_string("method", o.method);
    take_string("unk", o.unk);
    take_string("dict", o.dict_path);
    take_string("align", o.align_path);
    take_string("thesaurus", o.thesaurus_path);
    take_string("embeddings", o.embeddings_path);
    take_string("source-tag", o.source_tag);
    take_string("target-tag", o.target_tag);
    take_double("alpha", o.alpha);
    take_double("p-max", o.p_max);
    if (!given("seed") && config.contains("seed")) {
      o.seed = config.at("seed").get<std::uint64_t>();
    }
    if (!given("neighbor-rank") && config.contains("neighbor-rank")) {
      o.neighbor_rank = config.at("neighbor-rank").get<std::uint64_t>();
    }
    if (!given("no-append-original") && config.contains("append-original")) {
      o.no_append = !config.at("append-original").get<bool>();
    }
    // List-valued keys accept either a JSON array of strings or a single
    // comma-separated string.
    const auto take_list = [&](const char* key, std::string& into_csv) {
      if (given(key) || !config.contains(key)) return;
      const json& value = config.at(key);
      if (value.is_string()) {
        into_csv = value.get<std::string>();
      } else {
        std::string joined;
        for (const auto& item : value) {
          if (!joined.empty()) joined += ',';
          joined += item.get<std::string>();
        }
        into_csv = joined;
      }
    };
    take_list("tasks", o.tasks_csv);
    take_list("eda-ops", o.eda_ops_csv);
  } catch (const json::exception& e) {
    throw paraug::FormatError("config-parse",
                              o.config_path + ": " + e.what());
  }
}

std::vector<paraug::MtlTask> parse_tasks(const std::string& csv) {
  std::vector<paraug::MtlTask> tasks;
  for (const std::string& name : split_csv(csv)) {
    const auto task = paraug::task_from_name(name);
    if (!task) throw UsageError("unknown task \"" + name + "\"");
    if (std::find(tasks.begin(), tasks.end(), *task) != tasks.end()) {
      throw UsageError("duplicate task \"" + name + "\"");
    }
    tasks.push_back(*task);
  }
  return tasks;
}

std::vector<paraug::EdaOp> parse_eda_ops(const std::string& csv) {
  std::vector<paraug::EdaOp> ops;
  for (const std::string& name : split_csv(csv)) {
    paraug::EdaOp op;
    if (name == "sr" || name == "synonym-replacement") {
      op = paraug::EdaOp::SynonymReplacement;
    } else if (name == "ri" || name == "random-insertion") {
      op = paraug::EdaOp::RandomInsertion;
    } else if (name == "rs" || name == "random-swap") {
      op = paraug::EdaOp::RandomSwap;
    } else if (name == "rd" || name == "random-deletion") {
      op = paraug::EdaOp::RandomDeletion;
    } else {
      throw UsageError("unknown EDA operation \"" + name + "\"");
    }
    if (std::find(ops.begin(), ops.end(), op) != ops.end()) {
      throw UsageError("duplicate EDA operation \"" + name + "\"");
    }
    ops.push_back(op);
  }
  return ops;
}

const char* eda_op_name(paraug::EdaOp op) {
  switch (op) {
    case paraug::EdaOp::SynonymReplacement: return "synonym-replacement";
    case paraug::EdaOp::RandomInsertion: return "random-insertion";
    case paraug::EdaOp::RandomSwap: return "random-swap";
    case paraug::EdaOp::RandomDeletion: return "random-deletion";
  }
  return "unknown";
}

int run_augment(AugmentOptions& o) {
  apply_config(o);
  if (o.method.empty()) throw UsageError("--method is required");
  if (o.method != "mtl" && o.method != "boundary" && o.method != "eda" &&
      o.method != "embed") {
    throw UsageError("--method must be one of mtl, boundary, eda, embed");
  }
  if (o.source_path.empty() || o.target_path.empty()) {
    throw UsageError("--source and --target are required");
  }
  if (o.out_source.empty() || o.out_target.empty()) {
    throw UsageError("--out-source and --out-target are required");
  }
  if (!(o.alpha >= 0.0 && o.alpha <= 1.0)) {
    throw UsageError("--alpha must lie in [0,1]");
  }
  if (!(o.p_max >= 0.0 && o.p_max <= 1.0)) {
    throw UsageError("--p-max must lie in [0,1]");
  }
  if (o.neighbor_rank == 0) {
    throw UsageError("--neighbor-rank must be at least 1");
  }
  if (o.manifest_path.empty()) o.manifest_path = o.out_source + ".manifest.json";

  const auto start = std::chrono::steady_clock::now();
  const paraug::ParallelCorpus corpus = paraug::load_parallel(
      o.source_path, o.target_path, o.source_tag, o.target_tag);
  const paraug::SeedSpec seed{o.seed};

  json params{{"method", o.method},
              {"append_original", !o.no_append},
              {"source_tag", o.source_tag},
              {"target_tag", o.target_tag}};
  paraug::ParallelCorpus synthetic;
  paraug::RunManifest manifest;

  if (o.method == "mtl") {
    paraug::MtlSpec spec;
    spec.tasks = parse_tasks(o.tasks_csv);
    if (spec.tasks.empty()) {
      throw UsageError("--tasks is required for method mtl");
    }
    spec.alpha = o.alpha;
    spec.unk_token = o.unk;
    if (!o.dict_path.empty()) {
      spec.dictionary = paraug::load_dictionary(o.dict_path);
      manifest.input_checksums[o.dict_path] = paraug::sha256_file(o.dict_path);
    }
    if (!o.align_path.empty()) {
      spec.alignments = paraug::load_alignments(o.align_path, corpus);
      manifest.input_checksums[o.align_path] =
          paraug::sha256_file(o.align_path);
    }
    json task_names = json::array();
    for (const auto task : spec.tasks) task_names.push_back(task_name(task));
    params["tasks"] = task_names;
    params["alpha"] = spec.alpha;
    params["unk"] = spec.unk_token;
    if (!o.dict_path.empty()) params["dict"] = o.dict_path;
    if (!o.align_path.empty()) params["align"] = o.align_path;
    synthetic = paraug::run_mtl(corpus, spec, seed);
  } else if (o.method == "boundary") {
    paraug::BoundarySpec spec;
    spec.p_max = o.p_max;
    spec.seed = seed;
    params["p_max"] = spec.p_max;
    synthetic = paraug::augment_boundary(corpus, spec);
  } else if (o.method == "eda") {
    paraug::EdaSpec spec;
    spec.alpha = o.alpha;
    if (!o.eda_ops_csv.empty()) {
      spec.operations = parse_eda_ops(o.eda_ops_csv);
      if (spec.operations.empty()) {
        throw UsageError("--eda-ops must name at least one operation");
      }
    }
    if (!o.thesaurus_path.empty()) {
      spec.synonym_source = paraug::load_thesaurus(o.thesaurus_path);
      manifest.input_checksums[o.thesaurus_path] =
          paraug::sha256_file(o.thesaurus_path);
      params["thesaurus"] = o.thesaurus_path;
    }
    json op_names = json::array();
    for (const auto op : spec.operations) op_names.push_back(eda_op_name(op));
    params["eda_ops"] = op_names;
    params["alpha"] = spec.alpha;
    synthetic = paraug::eda_augment(corpus, spec, seed);
  } else {
    if (o.embeddings_path.empty()) {
      throw UsageError("--embeddings is required for method embed");
    }
    paraug::EmbedReplaceSpec spec;
    spec.alpha = o.alpha;
    spec.embeddings = paraug::load_embeddings(o.embeddings_path);
    spec.neighbor_rank = o.neighbor_rank;
    manifest.input_checksums[o.embeddings_path] =
        paraug::sha256_file(o.embeddings_path);
    params["embeddings"] = o.embeddings_path;
    params["alpha"] = spec.alpha;
    params["neighbor_rank"] = spec.neighbor_rank;
    synthetic = paraug::embed_replace(corpus, spec, seed);
  }

  const paraug::ParallelCorpus combined =
      o.no_append ? synthetic : paraug::concat_corpora(corpus, synthetic);
  paraug::save_parallel(combined, o.out_source, o.out_target);

  manifest.tool_version = std::string(paraug::kVersion);
  manifest.method = o.method;
  manifest.parameters = params;
  manifest.master_seed = o.seed;
  manifest.input_pairs = corpus.size();
  manifest.output_pairs = combined.size();
  manifest.input_checksums[o.source_path] =
      paraug::sha256_file(o.source_path);
  manifest.input_checksums[o.target_path] =
      paraug::sha256_file(o.target_path);
  manifest.output_checksums[o.out_source] =
      paraug::sha256_file(o.out_source);
  manifest.output_checksums[o.out_target] =
      paraug::sha256_file(o.out_target);
  manifest.duration_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  const json manifest_json = manifest;
  paraug::write_text_file_atomic(o.manifest_path, manifest_json.dump(2) + "\n");
  emit(manifest_json);
  return 0;
}

int run_evaluate(const std::string& hyp_path, const std::string& ref_path,
                 bool percent) {
  const auto hypotheses = load_sentences(hyp_path);
  const auto references = load_sentences(ref_path);
  const paraug::BleuReport report = paraug::corpus_bleu(hypotheses, references);
  emit(json{{"score", percent ? report.score * 100.0 : report.score},
            {"scale", percent ? "0-100" : "0-1"},
            {"precisions", report.precisions},
            {"brevity_penalty", report.brevity_penalty},
            {"hyp_length", report.hyp_length},
            {"ref_length", report.ref_length},
            {"bucket", report.bucket}});
  return 0;
}

int run_stats(const std::string& source_path, const std::string& target_path,
              const std::string& source_tag, const std::string& target_tag) {
  const paraug::ParallelCorpus corpus = paraug::load_parallel(
      source_path, target_path, source_tag, target_tag);
  const paraug::CorpusStats stats = paraug::corpus_stats(corpus);
  const auto side = [](const paraug::SideStats& s) {
    return json{{"token_count", s.token_count},
                {"vocab_size", s.vocab_size},
                {"min_length", s.min_length},
                {"max_length", s.max_length},
                {"mean_length", s.mean_length}};
  };
  emit(json{{"pair_count", stats.pair_count},
            {"source", side(stats.source)},
            {"target", side(stats.target)}});
  return 0;
}

int run_triage(const std::string& hyp_path, const std::string& ref_path,
               double lo, double hi, const std::string& labels_path) {
  if (!(lo >= 0.0 && hi <= 1.0 && lo <= hi)) {
    throw UsageError("band must satisfy 0 <= lo <= hi <= 1");
  }
  const auto hypotheses = load_sentences(hyp_path);
  const auto references = load_sentences(ref_path);
  std::map<std::size_t, paraug::IssueCategory> labels;
  if (!labels_path.empty()) labels = paraug::load_labels(labels_path);
  const paraug::TriageReport report =
      paraug::triage(hypotheses, references, lo, hi, labels);
  json selected = json::array();
  for (const auto& [index, bleu] : report.selected) {
    selected.push_back(json{{"index", index}, {"bleu", bleu}});
  }
  json counts = json::object();
  for (const auto& [category, count] : report.counts) {
    counts[std::string(paraug::category_name(category))] = count;
  }
  emit(json{{"band", json::array({report.lo, report.hi})},
            {"selected", selected},
            {"counts", counts}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parallel-corpus data augmentation and evaluation toolkit"};
  app.require_subcommand(1);

  AugmentOptions aug;
  CLI::App* augment =
      app.add_subcommand("augment", "augment a parallel corpus");
  aug.options["source"] =
      augment->add_option("--source", aug.source_path, "source-side input");
  aug.options["target"] =
      augment->add_option("--target", aug.target_path, "target-side input");
  aug.options["out-source"] = augment->add_option(
      "--out-source", aug.out_source, "source-side output");
  aug.options["out-target"] = augment->add_option(
      "--out-target", aug.out_target, "target-side output");
  aug.options["manifest"] = augment->add_option(
      "--manifest", aug.manifest_path,
      "manifest path (default <out-source>.manifest.json)");
  augment->add_option("--config", aug.config_path,
                      "JSON config file; explicit flags win");
  aug.options["method"] = augment->add_option(
      "--method", aug.method, "one of mtl, boundary, eda, embed");
  aug.options["tasks"] = augment->add_option(
      "--tasks", aug.tasks_csv,
      "comma-separated MTL tasks: swap,token,source,reverse,replace");
  aug.options["alpha"] =
      augment->add_option("--alpha", aug.alpha, "affected-word fraction");
  aug.options["unk"] =
      augment->add_option("--unk", aug.unk, "placeholder token");
  aug.options["dict"] = augment->add_option(
      "--dict", aug.dict_path, "bilingual dictionary TSV for replace");
  aug.options["align"] = augment->add_option(
      "--align", aug.align_path, "Pharaoh alignment file for replace");
  aug.options["p-max"] = augment->add_option(
      "--p-max", aug.p_max, "boundary truncation proportion upper bound");
  aug.options["eda-ops"] = augment->add_option(
      "--eda-ops", aug.eda_ops_csv,
      "comma-separated EDA operations (sr,ri,rs,rd); default all");
  aug.options["thesaurus"] = augment->add_option(
      "--thesaurus", aug.thesaurus_path, "monolingual thesaurus TSV");
  aug.options["embeddings"] = augment->add_option(
      "--embeddings", aug.embeddings_path, "word2vec-text embeddings");
  aug.options["neighbor-rank"] = augment->add_option(
      "--neighbor-rank", aug.neighbor_rank, "embedding neighbor rank");
  aug.options["seed"] =
      augment->add_option("--seed", aug.seed, "master seed");
  aug.options["no-append-original"] = augment->add_flag(
      "--no-append-original", aug.no_append,
      "write only the synthetic corpus");
  aug.options["source-tag"] = augment->add_option(
      "--source-tag", aug.source_tag, "language tag of the source side");
  aug.options["target-tag"] = augment->add_option(
      "--target-tag", aug.target_tag, "language tag of the target side");

  std::string eval_hyp;
  std::string eval_ref;
  bool eval_percent = false;
  CLI::App* evaluate =
      app.add_subcommand("evaluate", "corpus BLEU-4 of hypotheses vs references");
  evaluate->add_option("--hyp", eval_hyp, "hypothesis file")->required();
  evaluate->add_option("--ref", eval_ref, "reference file")->required();
  evaluate->add_flag("--percent", eval_percent, "report the score times 100");

  std::string stats_source;
  std::string stats_target;
  std::string stats_source_tag = "src";
  std::string stats_target_tag = "tgt";
  CLI::App* stats = app.add_subcommand("stats", "corpus statistics");
  stats->add_option("--source", stats_source, "source-side file")->required();
  stats->add_option("--target", stats_target, "target-side file")->required();
  stats->add_option("--source-tag", stats_source_tag, "source language tag");
  stats->add_option("--target-tag", stats_target_tag, "target language tag");

  std::string triage_hyp;
  std::string triage_ref;
  std::string triage_labels;
  double triage_lo = 0.2;
  double triage_hi = 0.4;
  CLI::App* triage_cmd =
      app.add_subcommand("triage", "select pairs by sentence-BLEU band");
  triage_cmd->add_option("--hyp", triage_hyp, "hypothesis file")->required();
  triage_cmd->add_option("--ref", triage_ref, "reference file")->required();
  triage_cmd->add_option("--lo", triage_lo, "band lower bound (default 0.2)");
  triage_cmd->add_option("--hi", triage_hi, "band upper bound (default 0.4)");
  triage_cmd->add_option("--labels", triage_labels,
                         "issue-category labels TSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_json_error("usage", e.what());
    return 1;
  }

  try {
    if (augment->parsed()) return run_augment(aug);
    if (evaluate->parsed()) return run_evaluate(eval_hyp, eval_ref, eval_percent);
    if (stats->parsed()) {
      return run_stats(stats_source, stats_target, stats_source_tag,
                       stats_target_tag);
    }
    return run_triage(triage_hyp, triage_ref, triage_lo, triage_hi,
                      triage_labels);
  } catch (const UsageError& e) {
    print_json_error("usage", e.what());
    return 1;
  } catch (const paraug::IoError& e) {
    print_json_error(e.code(), e.what());
    return 3;
  } catch (const paraug::Error& e) {
    print_json_error(e.code(), e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    print_json_error("usage", e.what());
    return 1;
  } catch (const std::exception& e) {
    print_json_error("internal", e.what());
    return 2;
  }
}
