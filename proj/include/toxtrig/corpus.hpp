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

#ifndef TOXTRIG_CORPUS_HPP_
#define TOXTRIG_CORPUS_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "toxtrig/standoff.hpp"
#include "toxtrig/types.hpp"

namespace toxtrig {

// A set of case reports plus, optionally, their gold trigger annotations.
// Documents are kept sorted by id; gold mentions stay in annotation-file
// order (they may overlap if the source file says so).
struct Corpus {
  std::vector<Document> documents;
  std::map<std::string, std::vector<Mention>> gold;
  bool has_gold = false;

  const Document* find_document(std::string_view id) const;
  std::size_t total_mentions() const;
};

struct CorpusStats {
  std::size_t n_documents = 0;
  std::size_t n_sentences = 0;
  std::size_t n_mentions = 0;
  std::array<std::size_t, kTriggerTypeCount> per_type{};
};

// Loads `<id>.txt` (and `<id>.ann` when with_gold) from a directory,
// non-recursively. UTF-8 is enforced and a leading BOM is stripped; `.ann`
// files without a matching `.txt` are an error, as is a missing `.ann` when
// gold is requested.
Corpus load_corpus(const std::filesystem::path& directory, bool with_gold,
                   const StandoffOptions& options = {});

// Writes `<id>.txt` (byte-exact) and, when write_gold and the corpus carries
// gold, `<id>.ann` per document.
void save_corpus(const Corpus& corpus, const std::filesystem::path& directory,
                 bool write_gold);

// Deterministic split: returns (rest, holdout) where holdout has n_holdout
// documents. Gold mentions follow their documents. Equal seeds give equal
// partitions on every platform.
std::pair<Corpus, Corpus> split_corpus(const Corpus& corpus,
                                       std::size_t n_holdout,
                                       std::uint64_t seed);

CorpusStats corpus_stats(const Corpus& corpus);

std::string render_stats_table(const CorpusStats& stats);

// Content digest over (id, text) pairs in id order; identifies the corpus a
// run manifest refers to.
std::string corpus_digest(const Corpus& corpus);

}  // namespace toxtrig

#endif  // TOXTRIG_CORPUS_HPP_
