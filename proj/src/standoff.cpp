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

#include "toxtrig/standoff.hpp"

#include <charconv>

#include "toxtrig/errors.hpp"
#include "toxtrig/unicode.hpp"

namespace toxtrig {

namespace {

bool parse_size(std::string_view token, std::size_t& out) {
  if (token.empty()) return false;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      parts.push_back(s.substr(pos));
      break;
    }
    parts.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return parts;
}

[[noreturn]] void malformed(std::size_t lineno, const std::string& why) {
  throw ParseError("standoff line " + std::to_string(lineno) + ": " + why);
}

}  // namespace

std::map<std::string, TriggerType, std::less<>> default_tag_map() {
  std::map<std::string, TriggerType, std::less<>> m;
  for (TriggerType t : kAllTriggerTypes) m.emplace(std::string(to_tag(t)), t);
  return m;
}

std::string sanitize_surface_field(std::string_view surface) {
  std::string out(surface);
  for (char& c : out)
    if (c == '\n' || c == '\r' || c == '\t') c = ' ';
  return out;
}

std::vector<Mention> parse_standoff(std::string_view ann_content,
                                    const Document& doc,
                                    const StandoffOptions& options) {
  const std::u32string chars = uni::decode_utf8(doc.text);
  std::vector<Mention> mentions;

  auto skip_note = [&](std::size_t lineno, std::string_view what) {
    if (options.skipped_note_sink != nullptr)
      options.skipped_note_sink->push_back(
          "line " + std::to_string(lineno) + ": skipped " + std::string(what));
  };

  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= ann_content.size()) {
    std::size_t eol = ann_content.find('\n', pos);
    std::string_view line = eol == std::string_view::npos
                                ? ann_content.substr(pos)
                                : ann_content.substr(pos, eol - pos);
    pos = eol == std::string_view::npos ? ann_content.size() + 1 : eol + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line[0] != 'T') {
      skip_note(lineno, "non-trigger line");
      continue;
    }

    const auto fields = split(line, '\t');
    if (fields.size() != 3)
      malformed(lineno, "expected 3 tab-separated fields, got " +
                            std::to_string(fields.size()));
    const std::string_view id = fields[0];
    if (id.size() < 2)
      malformed(lineno, "annotation id too short: '" + std::string(id) + "'");
    for (std::size_t i = 1; i < id.size(); ++i)
      if (id[i] < '0' || id[i] > '9')
        malformed(lineno, "annotation id is not T<n>: '" + std::string(id) +
                              "'");

    const auto span_fields = split(fields[1], ' ');
    if (span_fields.size() != 3)
      malformed(lineno,
                "expected '<TAG> <start> <end>', got '" +
                    std::string(fields[1]) + "'");
    const std::string_view tag = span_fields[0];
    auto tag_it = options.tag_map.find(tag);
    if (tag_it == options.tag_map.end()) {
      // Unknown tags belong to other annotation layers of the corpus.
      skip_note(lineno, "trigger tag '" + std::string(tag) + "'");
      continue;
    }
    std::size_t start = 0;
    std::size_t end = 0;
    if (!parse_size(span_fields[1], start) || !parse_size(span_fields[2], end))
      malformed(lineno, "offsets are not non-negative integers: '" +
                            std::string(fields[1]) + "'");

    if (start >= end)
      throw IntegrityError("annotation " + std::string(id) + ": empty span " +
                           std::to_string(start) + ".." + std::to_string(end));
    if (end > chars.size())
      throw IntegrityError("annotation " + std::string(id) + ": span " +
                           std::to_string(start) + ".." + std::to_string(end) +
                           " exceeds document length " +
                           std::to_string(chars.size()));

    const std::string slice = uni::encode_utf8(
        std::u32string_view(chars).substr(start, end - start));
    if (sanitize_surface_field(slice) != fields[2])
      throw IntegrityError("annotation " + std::string(id) +
                           ": surface field '" + std::string(fields[2]) +
                           "' does not match document slice '" + slice + "'");

    mentions.push_back(
        Mention{doc.id, tag_it->second, start, end, slice});
  }
  return mentions;
}

std::string write_standoff(const std::vector<Mention>& mentions) {
  std::string out;
  for (std::size_t i = 0; i < mentions.size(); ++i) {
    const Mention& m = mentions[i];
    if (m.start >= m.end)
      throw IntegrityError("mention " + std::to_string(i + 1) +
                           ": empty span");
    if (m.surface.empty())
      throw IntegrityError("mention " + std::to_string(i + 1) +
                           ": empty surface");
    if (i > 0) {
      const Mention& prev = mentions[i - 1];
      if (prev.doc_id != m.doc_id)
        throw IntegrityError("mentions span multiple documents: '" +
                             prev.doc_id + "' and '" + m.doc_id + "'");
      if (m.start < prev.start || (m.start == prev.start && m.end < prev.end))
        throw IntegrityError("mentions are not sorted by (start, end)");
    }
    out += "T" + std::to_string(i + 1) + "\t" + std::string(to_tag(m.kind)) +
           " " + std::to_string(m.start) + " " + std::to_string(m.end) + "\t" +
           sanitize_surface_field(m.surface) + "\n";
  }
  return out;
}

}  // namespace toxtrig
