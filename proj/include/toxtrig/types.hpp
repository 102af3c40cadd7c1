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

#ifndef TOXTRIG_TYPES_HPP_
#define TOXTRIG_TYPES_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace toxtrig {

// The four trigger categories of the task.
enum class TriggerType { Tobacco, Alcohol, Cannabis, Drug };

inline constexpr std::size_t kTriggerTypeCount = 4;

inline constexpr std::array<TriggerType, kTriggerTypeCount> kAllTriggerTypes =
    {TriggerType::Tobacco, TriggerType::Alcohol, TriggerType::Cannabis,
     TriggerType::Drug};

constexpr std::size_t type_index(TriggerType t) {
  return static_cast<std::size_t>(t);
}

// Uppercase tag as it appears in standoff annotation files.
std::string_view to_tag(TriggerType t);

std::optional<TriggerType> trigger_type_from_tag(std::string_view tag);

// A clinical case report. `text` holds the source bytes exactly as read
// (UTF-8, BOM already stripped); every offset anywhere in the library refers
// to scalar-value positions in this text.
struct Document {
  std::string id;
  std::string text;

  bool operator==(const Document&) const = default;
};

// A typed trigger span. Offsets are half-open scalar-value positions into the
// owning document; `surface` always equals the text slice at those offsets.
struct Mention {
  std::string doc_id;
  TriggerType kind = TriggerType::Tobacco;
  std::size_t start = 0;
  std::size_t end = 0;
  std::string surface;

  bool operator==(const Mention&) const = default;
};

// Shared surface-matching policy for dictionary construction, dictionary
// extraction and phrase alignment. The same policy object must be used on
// both the build side and the match side of any dictionary.
struct NormalizationPolicy {
  bool case_fold = true;
  bool require_word_boundary = true;

  bool operator==(const NormalizationPolicy&) const = default;
};

}  // namespace toxtrig

#endif  // TOXTRIG_TYPES_HPP_
