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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "toxtrig/corpus.hpp"
#include "toxtrig/errors.hpp"
#include "toxtrig/io_util.hpp"

using namespace toxtrig;
namespace fs = std::filesystem;

namespace {

const fs::path kMiniDir = fs::path(TOXTRIG_FIXTURE_DIR) / "mini";

// Scratch directory that cleans up after itself.
struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name)
      : path(fs::temp_directory_path() / ("toxtrig_test_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

Corpus synthetic_corpus(std::size_t n_docs) {
  Corpus corpus;
  corpus.has_gold = true;
  for (std::size_t i = 0; i < n_docs; ++i) {
    const std::string id = "doc" + std::to_string(1000 + i);
    corpus.documents.push_back({id, "Texto " + std::to_string(i) + "."});
    if (i % 3 == 0)
      corpus.gold[id] = {
          {id, TriggerType::Drug, 0, 5, "Texto"}};
  }
  return corpus;
}

}  // namespace

TEST_CASE("loads the bundled mini corpus with gold") {
  const Corpus corpus = load_corpus(kMiniDir, /*with_gold=*/true);
  REQUIRE(corpus.documents.size() == 2);
  CHECK(corpus.documents[0].id == "m01");
  CHECK(corpus.documents[1].id == "m02");
  CHECK(corpus.gold.at("m01").size() == 2);
  CHECK(corpus.gold.at("m02").size() == 1);
  CHECK(corpus.find_document("m02") != nullptr);
  CHECK(corpus.find_document("nope") == nullptr);
}

TEST_CASE("loads without gold when asked") {
  const Corpus corpus = load_corpus(kMiniDir, /*with_gold=*/false);
  CHECK(corpus.documents.size() == 2);
  CHECK(corpus.gold.empty());
  CHECK(!corpus.has_gold);
}

TEST_CASE("missing annotation files are reported by id") {
  TempDir dir("missing_ann");
  write_file(dir.path / "a.txt", "Texto.");
  try {
    load_corpus(dir.path, /*with_gold=*/true);
    FAIL("expected IoError");
  } catch (const IoError& e) {
    CHECK(std::string(e.what()).find("'a'") != std::string::npos);
  }
  CHECK(load_corpus(dir.path, /*with_gold=*/false).documents.size() == 1);
}

TEST_CASE("orphan .ann files are rejected") {
  TempDir dir("orphan");
  write_file(dir.path / "a.txt", "Texto.");
  write_file(dir.path / "b.ann", "");
  CHECK_THROWS_AS(load_corpus(dir.path, false), IoError);
}

TEST_CASE("a UTF-8 BOM is stripped from document text") {
  TempDir dir("bom");
  write_file(dir.path / "a.txt", "\xEF\xBB\xBFTexto.");
  const Corpus corpus = load_corpus(dir.path, false);
  CHECK(corpus.documents[0].text == "Texto.");
}

TEST_CASE("invalid UTF-8 in a document is rejected") {
  TempDir dir("bad_utf8");
  write_file(dir.path / "a.txt", "Tex\xC3to");
  CHECK_THROWS_AS(load_corpus(dir.path, false), ParseError);
}

TEST_CASE("save/load round-trips documents and gold") {
  const Corpus corpus = load_corpus(kMiniDir, true);
  TempDir dir("roundtrip");
  save_corpus(corpus, dir.path, /*write_gold=*/true);
  const Corpus reloaded = load_corpus(dir.path, true);
  CHECK(reloaded.documents == corpus.documents);
  CHECK(reloaded.gold == corpus.gold);
}

TEST_CASE("split is deterministic, disjoint and exhaustive") {
  const Corpus corpus = synthetic_corpus(97);
  const auto [train_a, dev_a] = split_corpus(corpus, 31, 42);
  const auto [train_b, dev_b] = split_corpus(corpus, 31, 42);
  CHECK(train_a.documents == train_b.documents);
  CHECK(dev_a.documents == dev_b.documents);
  CHECK(dev_a.documents.size() == 31);
  CHECK(train_a.documents.size() == 66);

  std::set<std::string> ids;
  for (const Document& d : train_a.documents) ids.insert(d.id);
  for (const Document& d : dev_a.documents) ids.insert(d.id);
  CHECK(ids.size() == 97);

  // gold follows its documents
  CHECK(train_a.total_mentions() + dev_a.total_mentions() ==
        corpus.total_mentions());
  for (const auto& [id, _] : dev_a.gold)
    CHECK(dev_a.find_document(id) != nullptr);

  const auto [train_c, _] = split_corpus(corpus, 31, 43);
  CHECK(train_c.documents != train_a.documents);
}

TEST_CASE("split sizes match the 1200 -> 900/300 configuration") {
  const auto [train, dev] = split_corpus(synthetic_corpus(1200), 300, 1);
  CHECK(train.documents.size() == 900);
  CHECK(dev.documents.size() == 300);
}

TEST_CASE("split rejects out-of-range holdouts") {
  const Corpus corpus = synthetic_corpus(5);
  CHECK_THROWS_AS(split_corpus(corpus, 5, 1), Error);
  CHECK_THROWS_AS(split_corpus(corpus, 0, 1), Error);
  CHECK_NOTHROW(split_corpus(corpus, 1, 1));
}

TEST_CASE("corpus statistics match hand counts on the mini corpus") {
  const CorpusStats stats = corpus_stats(load_corpus(kMiniDir, true));
  CHECK(stats.n_documents == 2);
  CHECK(stats.n_sentences == 5);
  CHECK(stats.n_mentions == 3);
  CHECK(stats.per_type[type_index(TriggerType::Drug)] == 2);
  CHECK(stats.per_type[type_index(TriggerType::Alcohol)] == 1);
  CHECK(stats.per_type[type_index(TriggerType::Tobacco)] == 0);
  CHECK(stats.per_type[type_index(TriggerType::Cannabis)] == 0);

  std::size_t sum = 0;
  for (std::size_t c : stats.per_type) sum += c;
  CHECK(sum == stats.n_mentions);
}

TEST_CASE("empty corpus statistics are all zero") {
  const CorpusStats stats = corpus_stats(Corpus{});
  CHECK(stats.n_documents == 0);
  CHECK(stats.n_sentences == 0);
  CHECK(stats.n_mentions == 0);
}

TEST_CASE("stats table lists every type") {
  const std::string table =
      render_stats_table(corpus_stats(load_corpus(kMiniDir, true)));
  for (TriggerType t : kAllTriggerTypes)
    CHECK(table.find(std::string(to_tag(t))) != std::string::npos);
  CHECK(table.find("Documents") != std::string::npos);
  CHECK(table.find("Sentences") != std::string::npos);
}

TEST_CASE("corpus digest tracks content") {
  Corpus a = load_corpus(kMiniDir, false);
  Corpus b = a;
  CHECK(corpus_digest(a) == corpus_digest(b));
  b.documents[0].text += " ";
  CHECK(corpus_digest(a) != corpus_digest(b));
}
