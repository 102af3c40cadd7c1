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

#ifndef TOXTRIG_UNICODE_HPP_
#define TOXTRIG_UNICODE_HPP_

#include <cstddef>
#include <string>
#include <string_view>

namespace toxtrig::uni {

// All span offsets in this library count Unicode scalar values, never bytes.
// Text is stored as UTF-8 and converted to char32_t sequences wherever
// offset arithmetic happens.

// Decodes strictly: overlong forms, surrogates, values above U+10FFFF and
// truncated sequences raise ParseError.
std::u32string decode_utf8(std::string_view bytes);

std::string encode_utf8(std::u32string_view chars);

// Number of scalar values in a UTF-8 string (validates as it counts).
std::size_t utf8_length(std::string_view bytes);

// UTF-8 bytes of text[char_start..char_end). Throws IntegrityError when the
// range exceeds the text.
std::string slice_utf8(std::string_view bytes, std::size_t char_start,
                       std::size_t char_end);

// Per-character case folding covering Latin (incl. Latin-1 and Extended-A),
// Greek and Cyrillic letter ranges. One scalar maps to one scalar, so folded
// text always has the same length as its source and offsets stay aligned.
char32_t fold_char(char32_t c);
std::u32string fold(std::u32string_view chars);

// Alphabetic test over the same ranges fold_char knows about; used for word
// boundary decisions. Covers áéíóúüñ and friends.
bool is_letter(char32_t c);

// True when c changes under fold_char, i.e. c is an uppercase letter.
bool is_upper(char32_t c);

bool is_space(char32_t c);

}  // namespace toxtrig::uni

#endif  // TOXTRIG_UNICODE_HPP_
