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

#include "toxtrig/dictionary.hpp"

#include <algorithm>
#include <map>

#include "toxtrig/alignment.hpp"
#include "toxtrig/errors.hpp"
#include "toxtrig/unicode.hpp"

namespace toxtrig {

namespace {

bool all_space(const std::u32string& chars) {
  return std::all_of(chars.begin(), chars.end(),
                     [](char32_t c) { return uni::is_space(c); });
}

}  // namespace

std::string Dictionary::normalize(std::string_view surface) const {
  std::u32string chars = uni::decode_utf8(surface);
  if (policy_.case_fold) chars = uni::fold(chars);
  return uni::encode_utf8(chars);
}

void Dictionary::insert(std::string_view surface, TriggerType kind) {
  Entry entry;
  entry.surface = normalize(surface);
  entry.chars = uni::decode_utf8(entry.surface);
  entry.kind = kind;
  if (entry.chars.empty() || all_space(entry.chars))
    throw IntegrityError("dictionary surface is empty or whitespace-only");

  auto it = std::lower_bound(entries_.begin(), entries_.end(), entry.surface,
                             [](const Entry& e, const std::string& key) {
                               return e.surface < key;
                             });
  if (it != entries_.end() && it->surface == entry.surface) {
    if (it->kind != kind)
      throw IntegrityError("conflicting types for dictionary surface '" +
                           entry.surface + "'");
    return;
  }
  entries_.insert(it, std::move(entry));
}

std::optional<TriggerType> Dictionary::lookup(std::string_view surface) const {
  const std::string key = normalize(surface);
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), key,
      [](const Entry& e, const std::string& k) { return e.surface < k; });
  if (it == entries_.end() || it->surface != key) return std::nullopt;
  return it->kind;
}

Dictionary Dictionary::build(const Corpus& train, NormalizationPolicy policy,
                             double min_label_ratio) {
  Dictionary dict(policy);

  struct Tally {
    std::array<std::size_t, kTriggerTypeCount> per_type{};
    std::size_t labeled() const {
      std::size_t n = 0;
      for (std::size_t c : per_type) n += c;
      return n;
    }
  };
  std::map<std::string, Tally> tallies;
  for (const auto& [_, mentions] : train.gold)
    for (const Mention& m : mentions) {
      const std::string key = dict.normalize(m.surface);
      const std::u32string kc = uni::decode_utf8(key);
      if (kc.empty() || all_space(kc)) continue;
      ++tallies[key].per_type[type_index(m.kind)];
    }

  std::vector<std::u32string> scan_texts;
  scan_texts.reserve(train.documents.size());
  for (const Document& doc : train.documents) {
    std::u32string chars = uni::decode_utf8(doc.text);
    scan_texts.push_back(policy.case_fold ? uni::fold(chars)
                                          : std::move(chars));
  }

  for (const auto& [key, tally] : tallies) {
    TriggerType kind = TriggerType::Tobacco;
    std::size_t types_seen = 0;
    for (TriggerType t : kAllTriggerTypes)
      if (tally.per_type[type_index(t)] > 0) {
        kind = t;
        ++types_seen;
      }
    if (types_seen != 1) continue;  // labeled with conflicting types

    const std::u32string key_chars = uni::decode_utf8(key);
    std::size_t total = 0;
    for (const std::u32string& text : scan_texts)
      total += find_occurrences_in_chars(text, key_chars,
                                         policy.require_word_boundary)
                   .size();
    const std::size_t labeled = tally.labeled();
    // Labeled occurrences can exceed findable ones (e.g. gold spans inside
    // longer words under a boundary policy); cap the ratio at 1.
    const std::size_t denom = std::max(total, labeled);
    if (static_cast<double>(labeled) + 1e-12 >=
        min_label_ratio * static_cast<double>(denom))
      dict.insert(key, kind);
  }
  return dict;
}

Dictionary Dictionary::from_text(std::string_view serialized,
                                 NormalizationPolicy policy) {
  Dictionary dict(policy);
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos < serialized.size()) {
    std::size_t eol = serialized.find('\n', pos);
    std::string_view line = eol == std::string_view::npos
                                ? serialized.substr(pos)
                                : serialized.substr(pos, eol - pos);
    pos = eol == std::string_view::npos ? serialized.size() : eol + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos)
      throw ParseError("dictionary line " + std::to_string(lineno) +
                       ": expected 'surface<TAB>TYPE'");
    const std::string_view surface = line.substr(0, tab);
    const std::string_view tag = line.substr(tab + 1);
    const auto kind = trigger_type_from_tag(tag);
    if (!kind)
      throw ParseError("dictionary line " + std::to_string(lineno) +
                       ": unknown trigger type '" + std::string(tag) + "'");
    if (dict.lookup(surface).has_value())
      throw ParseError("dictionary line " + std::to_string(lineno) +
                       ": duplicate surface '" + std::string(surface) + "'");
    dict.insert(surface, *kind);
  }
  return dict;
}

std::string Dictionary::to_text() const {
  std::string out;
  for (const Entry& e : entries_)
    out += e.surface + "\t" + std::string(to_tag(e.kind)) + "\n";
  return out;
}

std::vector<Mention> dict_extract(const Document& doc,
                                  const Dictionary& dict) {
  const NormalizationPolicy& policy = dict.policy();
  const std::u32string chars = uni::decode_utf8(doc.text);
  const std::u32string scan = policy.case_fold ? uni::fold(chars) : chars;

  std::vector<CandidateSpan> candidates;
  for (const Dictionary::Entry& entry : dict.entries())
    for (const auto& [s, e] : find_occurrences_in_chars(
             scan, entry.chars, policy.require_word_boundary))
      candidates.push_back(CandidateSpan{s, e, entry.kind, SpanSource::Dict});

  // Longer surfaces win; ties break toward the earlier start.
  std::sort(candidates.begin(), candidates.end(),
            [](const CandidateSpan& a, const CandidateSpan& b) {
              const std::size_t la = a.end - a.start;
              const std::size_t lb = b.end - b.start;
              if (la != lb) return la > lb;
              if (a.start != b.start) return a.start < b.start;
              return to_tag(a.kind) < to_tag(b.kind);
            });
  std::vector<CandidateSpan> kept;
  for (const CandidateSpan& c : candidates) {
    const bool clashes =
        std::any_of(kept.begin(), kept.end(), [&](const CandidateSpan& k) {
          return c.start < k.end && k.start < c.end;
        });
    if (!clashes) kept.push_back(c);
  }
  std::sort(kept.begin(), kept.end(),
            [](const CandidateSpan& a, const CandidateSpan& b) {
              return std::tie(a.start, a.end) < std::tie(b.start, b.end);
            });

  std::vector<Mention> mentions;
  mentions.reserve(kept.size());
  for (const CandidateSpan& c : kept)
    mentions.push_back(Mention{
        doc.id, c.kind, c.start, c.end,
        uni::encode_utf8(
            std::u32string_view(chars).substr(c.start, c.end - c.start))});
  return mentions;
}

}  // namespace toxtrig
