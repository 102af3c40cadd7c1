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

#include "toxtrig/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "toxtrig/errors.hpp"
#include "toxtrig/io_util.hpp"
#include "toxtrig/rng.hpp"
#include "toxtrig/segmentation.hpp"
#include "toxtrig/unicode.hpp"

namespace toxtrig {

namespace {

constexpr std::string_view kUtf8Bom = "\xEF\xBB\xBF";

std::string strip_bom(std::string text) {
  if (text.starts_with(kUtf8Bom)) text.erase(0, kUtf8Bom.size());
  return text;
}

}  // namespace

const Document* Corpus::find_document(std::string_view id) const {
  auto it = std::lower_bound(
      documents.begin(), documents.end(), id,
      [](const Document& d, std::string_view key) { return d.id < key; });
  if (it == documents.end() || it->id != id) return nullptr;
  return &*it;
}

std::size_t Corpus::total_mentions() const {
  std::size_t n = 0;
  for (const auto& [_, mentions] : gold) n += mentions.size();
  return n;
}

Corpus load_corpus(const std::filesystem::path& directory, bool with_gold,
                   const StandoffOptions& options) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(directory))
    throw IoError("'" + directory.string() + "' is not a directory");

  std::set<std::string> txt_ids;
  std::set<std::string> ann_ids;
  for (const auto& entry : fs::directory_iterator(directory)) {
    if (!entry.is_regular_file()) continue;
    const fs::path& p = entry.path();
    if (p.extension() == ".txt") {
      if (!txt_ids.insert(p.stem().string()).second)
        throw IoError("duplicate document id '" + p.stem().string() + "' in " +
                      directory.string());
    } else if (p.extension() == ".ann") {
      ann_ids.insert(p.stem().string());
    }
  }
  for (const std::string& id : ann_ids)
    if (!txt_ids.contains(id))
      throw IoError("orphan annotation file '" + id + ".ann' in " +
                    directory.string() + " (no matching .txt)");

  Corpus corpus;
  corpus.has_gold = with_gold;
  for (const std::string& id : txt_ids) {
    Document doc;
    doc.id = id;
    doc.text = strip_bom(read_file(directory / (id + ".txt")));
    uni::decode_utf8(doc.text);  // enforce valid UTF-8 up front
    if (with_gold) {
      const fs::path ann_path = directory / (id + ".ann");
      if (!fs::exists(ann_path))
        throw IoError("missing annotation file for document '" + id + "'");
      corpus.gold[id] =
          parse_standoff(strip_bom(read_file(ann_path)), doc, options);
    }
    corpus.documents.push_back(std::move(doc));
  }
  return corpus;
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& directory,
                 bool write_gold) {
  std::filesystem::create_directories(directory);
  for (const Document& doc : corpus.documents) {
    write_file(directory / (doc.id + ".txt"), doc.text);
    if (write_gold && corpus.has_gold) {
      std::vector<Mention> mentions;
      if (auto it = corpus.gold.find(doc.id); it != corpus.gold.end())
        mentions = it->second;
      std::sort(mentions.begin(), mentions.end(),
                [](const Mention& a, const Mention& b) {
                  return std::tie(a.start, a.end) < std::tie(b.start, b.end);
                });
      write_file(directory / (doc.id + ".ann"), write_standoff(mentions));
    }
  }
}

std::pair<Corpus, Corpus> split_corpus(const Corpus& corpus,
                                       std::size_t n_holdout,
                                       std::uint64_t seed) {
  if (n_holdout == 0 || n_holdout >= corpus.documents.size())
    throw Error("holdout size " + std::to_string(n_holdout) +
                " out of range for corpus of " +
                std::to_string(corpus.documents.size()) + " documents");

  std::vector<std::size_t> order(corpus.documents.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  deterministic_shuffle(order, seed);

  auto take = [&](std::size_t from, std::size_t to) {
    Corpus part;
    part.has_gold = corpus.has_gold;
    std::vector<std::size_t> picked(order.begin() + from, order.begin() + to);
    std::sort(picked.begin(), picked.end());
    for (std::size_t idx : picked) {
      const Document& doc = corpus.documents[idx];
      part.documents.push_back(doc);
      if (auto it = corpus.gold.find(doc.id); it != corpus.gold.end())
        part.gold[doc.id] = it->second;
    }
    return part;
  };

  Corpus holdout = take(0, n_holdout);
  Corpus rest = take(n_holdout, order.size());
  return {std::move(rest), std::move(holdout)};
}

CorpusStats corpus_stats(const Corpus& corpus) {
  CorpusStats stats;
  stats.n_documents = corpus.documents.size();
  for (const Document& doc : corpus.documents)
    stats.n_sentences += count_sentences(doc.text);
  for (const auto& [_, mentions] : corpus.gold)
    for (const Mention& m : mentions) {
      ++stats.n_mentions;
      ++stats.per_type[type_index(m.kind)];
    }
  return stats;
}

std::string render_stats_table(const CorpusStats& stats) {
  char buf[64];
  std::string out;
  auto row = [&](const char* label, std::size_t value) {
    std::snprintf(buf, sizeof(buf), "%-12s %8zu\n", label, value);
    out += buf;
  };
  row("Documents", stats.n_documents);
  row("Sentences", stats.n_sentences);
  row("Mentions", stats.n_mentions);
  for (TriggerType t : kAllTriggerTypes) {
    std::snprintf(buf, sizeof(buf), "  %-10s %8zu\n",
                  std::string(to_tag(t)).c_str(),
                  stats.per_type[type_index(t)]);
    out += buf;
  }
  return out;
}

std::string corpus_digest(const Corpus& corpus) {
  std::uint64_t h = 1469598103934665603ull;
  for (const Document& doc : corpus.documents) {
    h = fnv1a64(doc.id, h);
    h = fnv1a64(std::string_view("\0", 1), h);
    h = fnv1a64(doc.text, h);
    h = fnv1a64(std::string_view("\0", 1), h);
  }
  return "fnv1a64:" + to_hex(h);
}

}  // namespace toxtrig
