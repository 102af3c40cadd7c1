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

#include "toxtrig/alignment.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "toxtrig/errors.hpp"
#include "toxtrig/unicode.hpp"

namespace toxtrig {

std::vector<std::pair<std::size_t, std::size_t>> find_occurrences_in_chars(
    std::u32string_view text_chars, std::u32string_view phrase_chars,
    bool require_word_boundary) {
  std::vector<std::pair<std::size_t, std::size_t>> hits;
  if (phrase_chars.empty()) return hits;
  const std::size_t n = text_chars.size();
  const std::size_t m = phrase_chars.size();
  std::size_t from = 0;
  while (from + m <= n) {
    const std::size_t pos = text_chars.find(phrase_chars, from);
    if (pos == std::u32string_view::npos) break;
    bool ok = true;
    if (require_word_boundary) {
      // A match boundary must not sit inside a letter sequence.
      if (pos > 0 && uni::is_letter(text_chars[pos - 1]) &&
          uni::is_letter(text_chars[pos]))
        ok = false;
      const std::size_t end = pos + m;
      if (ok && end < n && uni::is_letter(text_chars[end]) &&
          uni::is_letter(text_chars[end - 1]))
        ok = false;
    }
    if (ok) {
      hits.emplace_back(pos, pos + m);
      from = pos + m;
    } else {
      from = pos + 1;
    }
  }
  return hits;
}

std::vector<std::pair<std::size_t, std::size_t>> find_occurrences(
    std::string_view text, std::string_view phrase,
    const NormalizationPolicy& policy) {
  if (phrase.empty()) return {};
  std::u32string text_chars = uni::decode_utf8(text);
  std::u32string phrase_chars = uni::decode_utf8(phrase);
  if (policy.case_fold) {
    // fold_char maps one scalar to one scalar, so folding never shifts
    // offsets relative to the original text.
    text_chars = uni::fold(text_chars);
    phrase_chars = uni::fold(phrase_chars);
  }
  return find_occurrences_in_chars(text_chars, phrase_chars,
                                   policy.require_word_boundary);
}

PhraseAlignment align_phrases(
    const Document& doc,
    std::span<const std::pair<Section, PhraseSet>> per_section,
    const NormalizationPolicy& policy) {
  for (const auto& [section, _] : per_section)
    if (uni::slice_utf8(doc.text, section.start, section.end) != section.text)
      throw IntegrityError("section " + std::to_string(section.start) + ".." +
                           std::to_string(section.end) +
                           " does not belong to document '" + doc.id + "'");

  PhraseAlignment out;
  std::set<std::tuple<std::size_t, std::size_t, TriggerType>> seen;
  for (std::size_t sec_idx = 0; sec_idx < per_section.size(); ++sec_idx) {
    const auto& [section, phrases] = per_section[sec_idx];
    for (TriggerType t : kAllTriggerTypes) {
      for (const std::string& phrase : phrases.of(t)) {
        const auto hits = find_occurrences(section.text, phrase, policy);
        if (hits.empty()) {
          out.hallucinated.push_back({sec_idx, t, phrase});
          continue;
        }
        for (const auto& [s, e] : hits) {
          const std::size_t start = section.start + s;
          const std::size_t end = section.start + e;
          if (seen.emplace(start, end, t).second)
            out.spans.push_back(CandidateSpan{start, end, t, SpanSource::Llm});
        }
      }
    }
  }
  return out;
}

std::vector<Mention> resolve_overlaps(std::span<const CandidateSpan> spans,
                                      const Document& doc) {
  const std::u32string chars = uni::decode_utf8(doc.text);
  for (const CandidateSpan& s : spans) {
    if (s.start >= s.end)
      throw IntegrityError("candidate span is empty: " +
                           std::to_string(s.start) + ".." +
                           std::to_string(s.end));
    if (s.end > chars.size())
      throw IntegrityError("candidate span " + std::to_string(s.start) +
                           ".." + std::to_string(s.end) +
                           " exceeds document length " +
                           std::to_string(chars.size()));
  }

  std::vector<CandidateSpan> order(spans.begin(), spans.end());
  std::sort(order.begin(), order.end(),
            [](const CandidateSpan& a, const CandidateSpan& b) {
              const std::size_t la = a.end - a.start;
              const std::size_t lb = b.end - b.start;
              if (la != lb) return la < lb;
              if (a.start != b.start) return a.start < b.start;
              return to_tag(a.kind) < to_tag(b.kind);
            });

  std::vector<CandidateSpan> kept;
  for (const CandidateSpan& c : order) {
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
