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

#ifndef TOXTRIG_ALIGNMENT_HPP_
#define TOXTRIG_ALIGNMENT_HPP_

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "toxtrig/phrase_set.hpp"
#include "toxtrig/segmentation.hpp"
#include "toxtrig/types.hpp"

namespace toxtrig {

enum class SpanSource { Dict, Llm };

// A typed span proposal before overlap resolution.
struct CandidateSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  TriggerType kind = TriggerType::Tobacco;
  SpanSource source = SpanSource::Llm;

  bool operator==(const CandidateSpan&) const = default;
};

// All non-overlapping occurrences of phrase in text, left to right, under
// the policy. Case folding is per-character, so occurrence offsets always
// refer to the original text. With require_word_boundary a match may not
// start or end inside a letter sequence. Empty phrase yields no occurrences.
std::vector<std::pair<std::size_t, std::size_t>> find_occurrences(
    std::string_view text, std::string_view phrase,
    const NormalizationPolicy& policy);

// Same, over pre-decoded (and, for case-insensitive search, pre-folded)
// scalar sequences. Shared by the dictionary matcher.
std::vector<std::pair<std::size_t, std::size_t>> find_occurrences_in_chars(
    std::u32string_view text_chars, std::u32string_view phrase_chars,
    bool require_word_boundary);

struct PhraseAlignment {
  std::vector<CandidateSpan> spans;

  // Phrases the model returned that do not occur in their section.
  struct Hallucination {
    std::size_t section_index = 0;
    TriggerType kind = TriggerType::Tobacco;
    std::string phrase;
  };
  std::vector<Hallucination> hallucinated;
};

// Searches each phrase inside its own section, shifts hits into document
// coordinates, and deduplicates exact (start, end, kind) repeats. Phrases
// with no occurrence become diagnostics, not errors.
PhraseAlignment align_phrases(
    const Document& doc,
    std::span<const std::pair<Section, PhraseSet>> per_section,
    const NormalizationPolicy& policy = {});

// Overlap resolution: shorter spans win. Candidates are ordered by (length,
// start, type name) and kept greedily when they overlap no kept span;
// overlap ignores the type. Output mentions are sorted by (start, end) and
// carry the document slice as surface.
std::vector<Mention> resolve_overlaps(std::span<const CandidateSpan> spans,
                                      const Document& doc);

}  // namespace toxtrig

#endif  // TOXTRIG_ALIGNMENT_HPP_
