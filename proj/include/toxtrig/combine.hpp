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

#ifndef TOXTRIG_COMBINE_HPP_
#define TOXTRIG_COMBINE_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "toxtrig/types.hpp"

namespace toxtrig {

// How dictionary and model predictions for one document are merged.
//   UnionShorter: pool both lists and re-run shorter-span overlap resolution.
//   DictPriority / LlmPriority: keep the prioritized list, add members of the
//   other that overlap nothing kept.
enum class CombinePolicy { UnionShorter, DictPriority, LlmPriority };

std::string_view to_string(CombinePolicy policy);
std::optional<CombinePolicy> combine_policy_from_string(std::string_view name);

// Both inputs must belong to `doc` and be internally non-overlapping. Exact
// duplicates collapse; the output never overlaps and is sorted by
// (start, end).
std::vector<Mention> combine(const std::vector<Mention>& dict_mentions,
                             const std::vector<Mention>& llm_mentions,
                             CombinePolicy policy, const Document& doc);

}  // namespace toxtrig

#endif  // TOXTRIG_COMBINE_HPP_
