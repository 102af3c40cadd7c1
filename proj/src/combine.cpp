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

#include "toxtrig/combine.hpp"

#include <algorithm>
#include <tuple>

#include "toxtrig/alignment.hpp"
#include "toxtrig/errors.hpp"

namespace toxtrig {

std::string_view to_string(CombinePolicy policy) {
  switch (policy) {
    case CombinePolicy::UnionShorter:
      return "union-shorter";
    case CombinePolicy::DictPriority:
      return "dict-priority";
    case CombinePolicy::LlmPriority:
      return "llm-priority";
  }
  return "union-shorter";
}

std::optional<CombinePolicy> combine_policy_from_string(
    std::string_view name) {
  for (CombinePolicy p : {CombinePolicy::UnionShorter,
                          CombinePolicy::DictPriority,
                          CombinePolicy::LlmPriority})
    if (name == to_string(p)) return p;
  return std::nullopt;
}

namespace {

void check_same_document(const std::vector<Mention>& mentions,
                         const Document& doc) {
  for (const Mention& m : mentions)
    if (m.doc_id != doc.id)
      throw IntegrityError("combine inputs come from different documents: '" +
                           m.doc_id + "' vs '" + doc.id + "'");
}

std::vector<Mention> dedup_sorted(std::vector<Mention> mentions) {
  std::sort(mentions.begin(), mentions.end(),
            [](const Mention& a, const Mention& b) {
              return std::tie(a.start, a.end, a.kind) <
                     std::tie(b.start, b.end, b.kind);
            });
  mentions.erase(std::unique(mentions.begin(), mentions.end()),
                 mentions.end());
  return mentions;
}

std::vector<Mention> with_priority(const std::vector<Mention>& keep,
                                   const std::vector<Mention>& fill) {
  std::vector<Mention> out = dedup_sorted(keep);
  for (const Mention& m : fill) {
    const bool clashes =
        std::any_of(out.begin(), out.end(), [&](const Mention& k) {
          return m.start < k.end && k.start < m.end;
        });
    if (!clashes) out.push_back(m);
  }
  return dedup_sorted(std::move(out));
}

}  // namespace

std::vector<Mention> combine(const std::vector<Mention>& dict_mentions,
                             const std::vector<Mention>& llm_mentions,
                             CombinePolicy policy, const Document& doc) {
  check_same_document(dict_mentions, doc);
  check_same_document(llm_mentions, doc);

  switch (policy) {
    case CombinePolicy::UnionShorter: {
      std::vector<CandidateSpan> pool;
      pool.reserve(dict_mentions.size() + llm_mentions.size());
      for (const Mention& m : dict_mentions)
        pool.push_back(CandidateSpan{m.start, m.end, m.kind, SpanSource::Dict});
      for (const Mention& m : llm_mentions)
        pool.push_back(CandidateSpan{m.start, m.end, m.kind, SpanSource::Llm});
      return resolve_overlaps(pool, doc);
    }
    case CombinePolicy::DictPriority:
      return with_priority(dict_mentions, llm_mentions);
    case CombinePolicy::LlmPriority:
      return with_priority(llm_mentions, dict_mentions);
  }
  throw Error("unreachable combine policy");
}

}  // namespace toxtrig
