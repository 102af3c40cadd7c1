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

#ifndef TOXTRIG_STANDOFF_HPP_
#define TOXTRIG_STANDOFF_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "toxtrig/types.hpp"

namespace toxtrig {

// Standoff annotation format, one record per line:
//
//   T<n><TAB><TAG> <start> <end><TAB><surface>
//
// Offsets count scalar values in the document text. The surface field is the
// text slice with newlines and tabs replaced by spaces, so records stay
// line-structured even when a span crosses a line break; parsing validates
// the field against the slice and always stores the true slice in
// Mention::surface. Lines whose id does not start with 'T' (attributes,
// notes, relations) and trigger lines carrying tags outside the tag map are
// skipped, not errors.

std::map<std::string, TriggerType, std::less<>> default_tag_map();

struct StandoffOptions {
  std::map<std::string, TriggerType, std::less<>> tag_map = default_tag_map();
  // When set, receives one note per skipped line (debugging aid).
  std::vector<std::string>* skipped_note_sink = nullptr;
};

// Parses trigger annotations for one document, in file order. Malformed
// trigger lines raise ParseError with the line number; offset/surface
// mismatches raise IntegrityError naming the annotation id.
std::vector<Mention> parse_standoff(std::string_view ann_content,
                                    const Document& doc,
                                    const StandoffOptions& options = {});

// Emits mentions of a single document as standoff records, ids numbered from
// 1 in input order, LF line endings, trailing newline when non-empty.
// Mentions must be sorted by (start, end) and share one doc_id; violating
// spans raise IntegrityError.
std::string write_standoff(const std::vector<Mention>& mentions);

// Replaces '\n', '\r' and '\t' by ' '. Applied to the surface field when
// writing; parse compares against the sanitized slice.
std::string sanitize_surface_field(std::string_view surface);

}  // namespace toxtrig

#endif  // TOXTRIG_STANDOFF_HPP_
