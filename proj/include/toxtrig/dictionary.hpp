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

#ifndef TOXTRIG_DICTIONARY_HPP_
#define TOXTRIG_DICTIONARY_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toxtrig/corpus.hpp"
#include "toxtrig/types.hpp"

namespace toxtrig {

// Gazetteer of unambiguous trigger surface forms harvested from a training
// corpus. Immutable once built; the normalization policy used at build time
// travels with the dictionary so matching uses the same rules.
class Dictionary {
 public:
  struct Entry {
    std::string surface;     // normalized UTF-8 key
    std::u32string chars;    // decoded key, pre-folded when case_fold is on
    TriggerType kind = TriggerType::Tobacco;
  };

  Dictionary() = default;
  explicit Dictionary(NormalizationPolicy policy) : policy_(policy) {}

  // Harvests surfaces from gold annotations. A surface enters the dictionary
  // iff (a) all its labeled occurrences agree on one type and (b) its labeled
  // occurrences cover at least min_label_ratio of all its occurrences in the
  // training texts (1.0 = strictly unambiguous). Empty gold gives an empty
  // dictionary.
  static Dictionary build(const Corpus& train, NormalizationPolicy policy,
                          double min_label_ratio = 1.0);

  // One `surface<TAB>TYPE` line per entry, sorted by surface, UTF-8, LF.
  static Dictionary from_text(std::string_view serialized,
                              NormalizationPolicy policy);
  std::string to_text() const;

  // Normalizes and inserts; conflicting or empty surfaces raise
  // IntegrityError.
  void insert(std::string_view surface, TriggerType kind);

  std::optional<TriggerType> lookup(std::string_view surface) const;

  const std::vector<Entry>& entries() const { return entries_; }
  const NormalizationPolicy& policy() const { return policy_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  std::string normalize(std::string_view surface) const;

 private:
  NormalizationPolicy policy_;
  std::vector<Entry> entries_;  // sorted by surface
};

// Matches every dictionary entry against the document under the dictionary's
// policy. Overlapping matches resolve to the longer surface, ties to the
// earlier start. Output is sorted by (start, end) and never overlaps.
std::vector<Mention> dict_extract(const Document& doc, const Dictionary& dict);

}  // namespace toxtrig

#endif  // TOXTRIG_DICTIONARY_HPP_
