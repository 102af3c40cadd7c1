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

#ifndef TOXTRIG_PHRASE_SET_HPP_
#define TOXTRIG_PHRASE_SET_HPP_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "toxtrig/types.hpp"

namespace toxtrig {

// The model's structured answer for one text section: one phrase list per
// trigger type. Phrases are non-empty after trimming; duplicates are allowed
// here and collapse later at span level.
struct PhraseSet {
  std::array<std::vector<std::string>, kTriggerTypeCount> by_type;

  std::vector<std::string>& of(TriggerType t) { return by_type[type_index(t)]; }
  const std::vector<std::string>& of(TriggerType t) const {
    return by_type[type_index(t)];
  }
  std::size_t total() const;
  bool empty() const { return total() == 0; }

  bool operator==(const PhraseSet&) const = default;
};

// Lowercase JSON key for a trigger type ("tobacco", ...).
std::string_view to_json_key(TriggerType t);

// Canonical JSON serialization with the four keys in type order.
std::string serialize_phrase_set(const PhraseSet& phrases);

// Validates and reads a response payload. The payload must be a JSON object
// carrying all four type keys as arrays; elements are plain strings, or
// {"phrase": ..., "assertion": ...} objects when assertion_variant is set
// (negated triggers are still mentions, so assertion labels are parsed and
// then dropped). Phrases are whitespace-trimmed; empties are discarded.
// Structural problems raise ParseError carrying the offending payload.
PhraseSet parse_phrase_set_payload(const std::string& payload,
                                   bool assertion_variant);

}  // namespace toxtrig

#endif  // TOXTRIG_PHRASE_SET_HPP_
