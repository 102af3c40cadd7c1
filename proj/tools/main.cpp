// Copyright 2026 The toxtrig Authors
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

// Command-line front end: corpus statistics, deterministic splits,
// dictionary building, dictionary/LLM extraction, prediction combination and
// evaluation. Predictions are written in the same standoff format as gold,
// so `evaluate` accepts either side and external scorers can consume runs.

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <thread>

#include <CLI11.hpp>

#include "toxtrig/alignment.hpp"
#include "toxtrig/combine.hpp"
#include "toxtrig/corpus.hpp"
#include "toxtrig/dictionary.hpp"
#include "toxtrig/errors.hpp"
#include "toxtrig/evaluation.hpp"
#include "toxtrig/io_util.hpp"
#include "toxtrig/llm_extractor.hpp"
#include "toxtrig/manifest.hpp"
#include "toxtrig/run_config.hpp"

namespace fs = std::filesystem;
using namespace toxtrig;

namespace {

bool directory_has_extension(const fs::path& dir, std::string_view ext) {
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ext)
      return true;
  return false;
}

bool directory_has_ann(const fs::path& dir) {
  return directory_has_extension(dir, ".ann");
}

bool directory_has_txt(const fs::path& dir) {
  return directory_has_extension(dir, ".txt");
}

// Gold is loaded when any .ann file is present; load_corpus then insists on
// one per document.
Corpus load_corpus_auto(const fs::path& dir) {
  if (!fs::is_directory(dir))
    throw IoError("'" + dir.string() + "' is not a directory");
  return load_corpus(dir, directory_has_ann(dir));
}

// Reads `<id>.ann` for every corpus document from a prediction directory,
// validating offsets against the document texts. Extra .ann files are
// rejected as unknown documents.
std::map<std::string, std::vector<Mention>> load_predictions(
    const fs::path& pred_dir, const Corpus& corpus) {
  if (!fs::is_directory(pred_dir))
    throw IoError("'" + pred_dir.string() + "' is not a directory");
  for (const auto& entry : fs::directory_iterator(pred_dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".ann")
      continue;
    const std::string id = entry.path().stem().string();
    if (corpus.find_document(id) == nullptr)
      throw Error("prediction file '" + id +
                  ".ann' names a document absent from the reference corpus");
  }
  std::map<std::string, std::vector<Mention>> predictions;
  for (const Document& doc : corpus.documents) {
    const fs::path ann = pred_dir / (doc.id + ".ann");
    if (!fs::exists(ann))
      throw IoError("missing prediction file '" + ann.string() + "'");
    predictions[doc.id] = parse_standoff(read_file(ann), doc);
  }
  return predictions;
}

void write_predictions(const fs::path& out_dir, const std::string& doc_id,
                       const std::vector<Mention>& mentions) {
  write_file(out_dir / (doc_id + ".ann"), write_standoff(mentions));
}

NormalizationPolicy policy_from_flags(bool no_case_fold,
                                      bool no_word_boundary) {
  NormalizationPolicy policy;
  policy.case_fold = !no_case_fold;
  policy.require_word_boundary = !no_word_boundary;
  return policy;
}

struct ExtractArgs {
  std::string strategy;
  fs::path in_dir;
  fs::path out_dir;
  fs::path config_file;
  fs::path replay_file;
  fs::path record_file;
  fs::path dict_file;
  fs::path train_dir;
  std::uint64_t seed = 0;
  std::size_t k = 0;
  bool seed_set = false;
  bool k_set = false;
  bool no_case_fold = false;
  bool no_word_boundary = false;
};

struct DocOutcome {
  std::vector<Mention> mentions;
  DocumentDiagnostics diagnostics;
};

DocOutcome run_llm_document(const Document& doc, const RunConfig& cfg,
                            const PromptTemplate& prompt,
                            std::span<const FewShotExample> examples,
                            CompletionClient& client,
                            const NormalizationPolicy& policy) {
  DocOutcome outcome;
  const auto sections =
      llm_extract_document(doc, cfg.request, prompt, examples, client);
  outcome.diagnostics.sections = sections.size();

  std::vector<std::pair<Section, PhraseSet>> per_section;
  per_section.reserve(sections.size());
  for (std::size_t i = 0; i < sections.size(); ++i) {
    const SectionExtraction& s = sections[i];
    if (!s.ok()) {
      outcome.diagnostics.failed_sections.push_back(i);
      outcome.diagnostics.errors.push_back(s.error);
    }
    per_section.emplace_back(s.section, s.phrases);
  }

  PhraseAlignment alignment = align_phrases(doc, per_section, policy);
  outcome.diagnostics.hallucinated = std::move(alignment.hallucinated);
  outcome.diagnostics.candidate_spans = alignment.spans.size();
  outcome.mentions = resolve_overlaps(alignment.spans, doc);
  outcome.diagnostics.kept_mentions = outcome.mentions.size();
  return outcome;
}

int run_extract(const ExtractArgs& args) {
  RunConfig cfg;
  if (!args.config_file.empty()) cfg = load_run_config(args.config_file);
  if (args.k_set) cfg.request.k = args.k;
  if (args.seed_set) cfg.request.seed = args.seed;

  const NormalizationPolicy policy =
      policy_from_flags(args.no_case_fold, args.no_word_boundary);
  const Corpus corpus = load_corpus(args.in_dir, /*with_gold=*/false);

  RunManifest manifest;
  manifest.strategy = args.strategy;
  manifest.corpus_digest = corpus_digest(corpus);
  manifest.inputs["in"] = args.in_dir.string();
  if (!args.config_file.empty())
    manifest.inputs["config"] = args.config_file.string();
  manifest.started_at = utc_timestamp();

  fs::create_directories(args.out_dir);

  if (args.strategy == "dict") {
    if (args.dict_file.empty())
      throw ConfigError("--strategy dict requires --dict FILE");
    if (!args.replay_file.empty() || !args.record_file.empty() ||
        !args.train_dir.empty())
      throw ConfigError(
          "--replay/--record/--train do not apply to --strategy dict");
    const Dictionary dict =
        Dictionary::from_text(read_file(args.dict_file), policy);
    manifest.inputs["dict"] = args.dict_file.string();
    manifest.seed = 0;
    manifest.config = cfg;
    for (const Document& doc : corpus.documents) {
      const std::vector<Mention> mentions = dict_extract(doc, dict);
      write_predictions(args.out_dir, doc.id, mentions);
      DocumentDiagnostics diag;
      diag.kept_mentions = mentions.size();
      diag.candidate_spans = mentions.size();
      manifest.documents[doc.id] = std::move(diag);
    }
    manifest.finished_at = utc_timestamp();
    write_file(args.out_dir / "run_manifest.json", manifest.to_pretty_json());
    return 0;
  }

  if (args.strategy == "zero-shot") {
    if (args.k_set && cfg.request.k != 0)
      throw ConfigError("zero-shot extraction uses k = 0");
    cfg.request.k = 0;
  } else if (args.strategy == "few-shot") {
    if (cfg.request.k == 0)
      throw ConfigError("few-shot extraction requires k >= 1");
  } else {
    throw ConfigError("unknown strategy '" + args.strategy + "'");
  }

  std::vector<FewShotExample> examples;
  if (cfg.request.k > 0) {
    if (args.train_dir.empty())
      throw ConfigError("few-shot extraction requires --train DIR");
    const Corpus train = load_corpus(args.train_dir, /*with_gold=*/true);
    examples = sample_examples(train, cfg.request.k, cfg.request.seed,
                               cfg.example_char_budget);
    manifest.inputs["train"] = args.train_dir.string();
  }

  std::unique_ptr<CompletionClient> base_client;
  std::unique_ptr<RecordingCompletionClient> recorder;
  CompletionClient* client = nullptr;
  if (!args.replay_file.empty()) {
    base_client = std::make_unique<ReplayCompletionClient>(args.replay_file);
    manifest.inputs["replay"] = args.replay_file.string();
    client = base_client.get();
  } else {
    const char* key = std::getenv("TOXTRIG_API_KEY");
    base_client = std::make_unique<HttpCompletionClient>(
        cfg.endpoint, cfg.completions_path, key != nullptr ? key : "",
        cfg.max_retries);
    client = base_client.get();
    if (!args.record_file.empty()) {
      recorder = std::make_unique<RecordingCompletionClient>(
          *base_client, args.record_file);
      manifest.inputs["record"] = args.record_file.string();
      client = recorder.get();
    }
  }

  manifest.seed = cfg.request.seed;
  manifest.config = cfg;
  const PromptTemplate prompt = PromptTemplate::standard(cfg.assertion_variant);

  // Bounded document-parallel workers; per-document results land in fixed
  // slots so output never depends on scheduling.
  std::vector<DocOutcome> outcomes(corpus.documents.size());
  std::vector<std::string> fatal(corpus.documents.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= corpus.documents.size()) break;
      try {
        outcomes[i] = run_llm_document(corpus.documents[i], cfg, prompt,
                                       examples, *client, policy);
      } catch (const std::exception& e) {
        fatal[i] = e.what();
      }
    }
  };
  const std::size_t n_workers =
      std::max<std::size_t>(1, std::min(cfg.parallelism,
                                        corpus.documents.size()));
  std::vector<std::thread> threads;
  threads.reserve(n_workers);
  for (std::size_t i = 0; i < n_workers; ++i) threads.emplace_back(worker);
  for (std::thread& t : threads) t.join();

  bool all_clean = true;
  for (std::size_t i = 0; i < corpus.documents.size(); ++i) {
    const Document& doc = corpus.documents[i];
    if (!fatal[i].empty()) {
      DocumentDiagnostics diag;
      diag.errors.push_back(fatal[i]);
      manifest.documents[doc.id] = std::move(diag);
      write_predictions(args.out_dir, doc.id, {});
      all_clean = false;
      continue;
    }
    if (!outcomes[i].diagnostics.clean()) all_clean = false;
    write_predictions(args.out_dir, doc.id, outcomes[i].mentions);
    manifest.documents[doc.id] = std::move(outcomes[i].diagnostics);
  }

  if (recorder != nullptr) recorder->flush();
  manifest.finished_at = utc_timestamp();
  write_file(args.out_dir / "run_manifest.json", manifest.to_pretty_json());

  if (!all_clean) {
    std::cerr << "extraction finished with per-document errors; see "
              << (args.out_dir / "run_manifest.json").string() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toxtrig: toxic habit trigger extraction for Spanish clinical "
               "case reports"};
  app.require_subcommand(1);

  // stats
  auto* stats_cmd =
      app.add_subcommand("stats", "Print corpus statistics (documents, "
                                  "sentences, mentions per type)");
  fs::path stats_in;
  stats_cmd->add_option("--in", stats_in, "corpus directory")->required();

  // split
  auto* split_cmd = app.add_subcommand(
      "split", "Deterministically split a corpus into train and holdout");
  fs::path split_in, split_out_train, split_out_dev;
  std::size_t split_holdout = 0;
  std::uint64_t split_seed = 0;
  split_cmd->add_option("--in", split_in, "corpus directory")->required();
  split_cmd->add_option("--holdout", split_holdout, "holdout document count")
      ->required();
  split_cmd->add_option("--seed", split_seed, "shuffle seed")->required();
  split_cmd->add_option("--out-train", split_out_train, "train output dir")
      ->required();
  split_cmd->add_option("--out-dev", split_out_dev, "holdout output dir")
      ->required();

  // build-dict
  auto* dict_cmd = app.add_subcommand(
      "build-dict", "Harvest an unambiguous surface-form dictionary from a "
                    "gold-annotated train corpus");
  fs::path dict_train, dict_out;
  double min_label_ratio = 1.0;
  bool dict_no_case_fold = false, dict_no_word_boundary = false;
  dict_cmd->add_option("--train", dict_train, "train corpus directory")
      ->required();
  dict_cmd->add_option("--min-label-ratio", min_label_ratio,
                       "minimum labeled/total occurrence ratio (default 1.0)");
  dict_cmd->add_option("--out", dict_out, "dictionary output file")
      ->required();
  dict_cmd->add_flag("--no-case-fold", dict_no_case_fold,
                     "match case-sensitively");
  dict_cmd->add_flag("--no-word-boundary", dict_no_word_boundary,
                     "allow matches inside words");

  // extract
  auto* extract_cmd = app.add_subcommand(
      "extract", "Extract trigger mentions and write one .ann per document "
                 "plus a run manifest");
  ExtractArgs ex;
  extract_cmd
      ->add_option("--strategy", ex.strategy, "dict | zero-shot | few-shot")
      ->required()
      ->check(CLI::IsMember({"dict", "zero-shot", "few-shot"}));
  extract_cmd->add_option("--in", ex.in_dir, "input corpus directory")
      ->required();
  extract_cmd->add_option("--out", ex.out_dir, "prediction output directory")
      ->required();
  extract_cmd->add_option("--config", ex.config_file, "run config file");
  auto* k_opt = extract_cmd->add_option("--k", ex.k, "few-shot example count");
  auto* seed_opt =
      extract_cmd->add_option("--seed", ex.seed, "example sampling seed");
  auto* replay_opt = extract_cmd->add_option(
      "--replay", ex.replay_file, "serve recorded responses from this file");
  auto* record_opt = extract_cmd->add_option(
      "--record", ex.record_file, "record live responses into this file");
  replay_opt->excludes(record_opt);
  extract_cmd->add_option("--dict", ex.dict_file,
                          "dictionary file (dict strategy)");
  extract_cmd->add_option("--train", ex.train_dir,
                          "train corpus for few-shot examples");
  extract_cmd->add_flag("--no-case-fold", ex.no_case_fold,
                        "match case-sensitively");
  extract_cmd->add_flag("--no-word-boundary", ex.no_word_boundary,
                        "allow matches inside words");

  // combine
  auto* combine_cmd = app.add_subcommand(
      "combine", "Merge two prediction directories into a hybrid run");
  fs::path comb_a, comb_b, comb_text, comb_out;
  std::string comb_policy = "union-shorter";
  combine_cmd->add_option("--a", comb_a, "first predictions (dictionary side)")
      ->required();
  combine_cmd->add_option("--b", comb_b, "second predictions (model side)")
      ->required();
  combine_cmd->add_option("--combine-policy", comb_policy,
                          "union-shorter | dict-priority | llm-priority");
  combine_cmd->add_option("--text", comb_text,
                          "directory holding the document .txt files "
                          "(defaults to --a, then --b)");
  combine_cmd->add_option("--out", comb_out, "output directory")->required();

  // evaluate
  auto* eval_cmd = app.add_subcommand(
      "evaluate", "Score predictions against gold annotations");
  fs::path eval_gold, eval_pred, eval_out;
  eval_cmd->add_option("--gold", eval_gold, "gold corpus directory")
      ->required();
  eval_cmd->add_option("--pred", eval_pred, "prediction directory")
      ->required();
  eval_cmd->add_option("--out", eval_out, "machine-readable report file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (stats_cmd->parsed()) {
      const Corpus corpus = load_corpus_auto(stats_in);
      std::cout << render_stats_table(corpus_stats(corpus));
      return 0;
    }

    if (split_cmd->parsed()) {
      const Corpus corpus = load_corpus_auto(split_in);
      const auto [train, dev] = split_corpus(corpus, split_holdout, split_seed);
      save_corpus(train, split_out_train, /*write_gold=*/true);
      save_corpus(dev, split_out_dev, /*write_gold=*/true);
      std::cout << "train: " << train.documents.size()
                << " documents -> " << split_out_train.string() << "\n"
                << "dev:   " << dev.documents.size() << " documents -> "
                << split_out_dev.string() << "\n";
      return 0;
    }

    if (dict_cmd->parsed()) {
      const Corpus train = load_corpus(dict_train, /*with_gold=*/true);
      const Dictionary dict = Dictionary::build(
          train, policy_from_flags(dict_no_case_fold, dict_no_word_boundary),
          min_label_ratio);
      write_file(dict_out, dict.to_text());
      std::cout << "wrote " << dict.size() << " entries to "
                << dict_out.string() << "\n";
      return 0;
    }

    if (extract_cmd->parsed()) {
      ex.k_set = k_opt->count() > 0;
      ex.seed_set = seed_opt->count() > 0;
      return run_extract(ex);
    }

    if (combine_cmd->parsed()) {
      const auto policy = combine_policy_from_string(comb_policy);
      if (!policy)
        throw ConfigError("unknown combine policy '" + comb_policy + "'");
      fs::path text_dir = comb_text;
      if (text_dir.empty())
        text_dir = directory_has_txt(comb_a) ? comb_a : comb_b;
      const Corpus corpus = load_corpus(text_dir, /*with_gold=*/false);
      if (corpus.documents.empty())
        throw IoError("no .txt documents found; pass --text DIR");
      fs::create_directories(comb_out);
      for (const Document& doc : corpus.documents) {
        const auto a = parse_standoff(read_file(comb_a / (doc.id + ".ann")),
                                      doc);
        const auto b = parse_standoff(read_file(comb_b / (doc.id + ".ann")),
                                      doc);
        write_predictions(comb_out, doc.id, combine(a, b, *policy, doc));
      }
      std::cout << "combined " << corpus.documents.size() << " documents -> "
                << comb_out.string() << "\n";
      return 0;
    }

    if (eval_cmd->parsed()) {
      const Corpus gold = load_corpus(eval_gold, /*with_gold=*/true);
      const auto predictions = load_predictions(eval_pred, gold);
      const EvalReport report = evaluate(gold, predictions);
      std::cout << report.to_table();
      if (!eval_out.empty()) write_file(eval_out, report.to_metrics_text());
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
