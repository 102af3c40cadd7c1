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

#include "toxtrig/unicode.hpp"

#include <array>

#include "toxtrig/errors.hpp"

namespace toxtrig::uni {

namespace {

constexpr std::array<char32_t, 5> kMinForLength = {0, 0, 0x80, 0x800, 0x10000};

[[noreturn]] void bad_utf8(std::size_t offset, const char* what) {
  throw ParseError("invalid UTF-8: " + std::string(what) + " at byte offset " +
                   std::to_string(offset));
}

}  // namespace

std::u32string decode_utf8(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  const std::size_t n = bytes.size();
  while (i < n) {
    const unsigned char b0 = static_cast<unsigned char>(bytes[i]);
    char32_t cp = 0;
    std::size_t len = 0;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      bad_utf8(i, "bad lead byte");
    }
    if (i + len > n) bad_utf8(i, "truncated sequence");
    for (std::size_t k = 1; k < len; ++k) {
      const unsigned char bk = static_cast<unsigned char>(bytes[i + k]);
      if ((bk & 0xC0) != 0x80) bad_utf8(i + k, "bad continuation byte");
      cp = (cp << 6) | (bk & 0x3F);
    }
    if (cp < kMinForLength[len]) bad_utf8(i, "overlong encoding");
    if (cp > 0x10FFFF) bad_utf8(i, "scalar above U+10FFFF");
    if (cp >= 0xD800 && cp <= 0xDFFF) bad_utf8(i, "surrogate scalar");
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string encode_utf8(std::u32string_view chars) {
  std::string out;
  out.reserve(chars.size());
  for (char32_t cp : chars) {
    if (cp >= 0xD800 && cp <= 0xDFFF)
      throw IntegrityError("cannot encode surrogate scalar");
    if (cp <= 0x7F) {
      out.push_back(static_cast<char>(cp));
    } else if (cp <= 0x7FF) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp <= 0xFFFF) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp <= 0x10FFFF) {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      throw IntegrityError("cannot encode scalar above U+10FFFF");
    }
  }
  return out;
}

std::size_t utf8_length(std::string_view bytes) {
  return decode_utf8(bytes).size();
}

std::string slice_utf8(std::string_view bytes, std::size_t char_start,
                       std::size_t char_end) {
  if (char_start > char_end)
    throw IntegrityError("slice start exceeds slice end");
  std::size_t i = 0;
  std::size_t chars = 0;
  std::size_t byte_start = bytes.size();
  std::size_t byte_end = bytes.size();
  if (char_start == 0) byte_start = 0;
  while (i < bytes.size()) {
    const unsigned char b = static_cast<unsigned char>(bytes[i]);
    std::size_t len = 1;
    if ((b & 0xE0) == 0xC0)
      len = 2;
    else if ((b & 0xF0) == 0xE0)
      len = 3;
    else if ((b & 0xF8) == 0xF0)
      len = 4;
    else if (b >= 0x80)
      bad_utf8(i, "bad lead byte");
    i += len;
    ++chars;
    if (chars == char_start) byte_start = i;
    if (chars == char_end) {
      byte_end = i;
      break;
    }
  }
  if (chars < char_end)
    throw IntegrityError("slice range [" + std::to_string(char_start) + ", " +
                         std::to_string(char_end) + ") exceeds text length " +
                         std::to_string(chars));
  return std::string(bytes.substr(byte_start, byte_end - byte_start));
}

char32_t fold_char(char32_t c) {
  if (c >= U'A' && c <= U'Z') return c + 32;
  if (c >= 0x00C0 && c <= 0x00DE && c != 0x00D7) return c + 32;  // À..Þ sans ×
  if (c == 0x0178) return 0x00FF;                                // Ÿ -> ÿ
  if (c >= 0x0100 && c <= 0x0137) return (c % 2 == 0) ? c + 1 : c;
  if (c >= 0x0139 && c <= 0x0148) return (c % 2 == 1) ? c + 1 : c;
  if (c >= 0x014A && c <= 0x0177) return (c % 2 == 0) ? c + 1 : c;
  if (c >= 0x0179 && c <= 0x017E) return (c % 2 == 1) ? c + 1 : c;
  if (c >= 0x0391 && c <= 0x03A9 && c != 0x03A2) return c + 32;  // Greek
  if (c >= 0x0410 && c <= 0x042F) return c + 32;                 // Cyrillic
  if (c >= 0x0400 && c <= 0x040F) return c + 80;
  return c;
}

std::u32string fold(std::u32string_view chars) {
  std::u32string out(chars);
  for (char32_t& c : out) c = fold_char(c);
  return out;
}

bool is_letter(char32_t c) {
  struct Range {
    char32_t lo, hi;
  };
  // Latin, Latin-1, Latin Extended, IPA, Greek, Cyrillic. Enough for the
  // Spanish corpora this toolkit targets plus common stray alphabets.
  static constexpr Range kRanges[] = {
      {0x0041, 0x005A}, {0x0061, 0x007A}, {0x00AA, 0x00AA}, {0x00B5, 0x00B5},
      {0x00BA, 0x00BA}, {0x00C0, 0x00D6}, {0x00D8, 0x00F6}, {0x00F8, 0x02AF},
      {0x0370, 0x03FF}, {0x0400, 0x04FF},
  };
  for (const Range& r : kRanges)
    if (c >= r.lo && c <= r.hi) return true;
  return false;
}

bool is_upper(char32_t c) { return fold_char(c) != c; }

bool is_space(char32_t c) {
  switch (c) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case U'\v':
    case U'\f':
    case 0x00A0:
      return true;
    default:
      return false;
  }
}

}  // namespace toxtrig::uni
