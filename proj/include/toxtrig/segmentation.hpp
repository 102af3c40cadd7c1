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

#ifndef TOXTRIG_SEGMENTATION_HPP_
#define TOXTRIG_SEGMENTATION_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace toxtrig {

// One piece of a case report, used as the unit of an extraction request.
// Offsets point into the owning document; text equals the document slice.
struct Section {
  std::size_t start = 0;
  std::size_t end = 0;
  std::string text;

  bool operator==(const Section&) const = default;
};

// Splits on runs of two or more consecutive line breaks ("\r\n" counts as
// one break). Separator runs belong to no section; each kept section is
// trimmed of surrounding whitespace and whitespace-only fragments are
// dropped. Offsets are scalar-value positions in the original text.
std::vector<Section> segment_sections(const std::string& text);

// Deterministic rule-based sentence count: a sentence ends at '.', '?', '!'
// or '…' followed by optional whitespace and then an uppercase letter, '¿',
// '¡' or end of text; a line break also ends a sentence in progress; a
// trailing unterminated fragment counts as one sentence.
std::size_t count_sentences(const std::string& text);

}  // namespace toxtrig

#endif  // TOXTRIG_SEGMENTATION_HPP_
