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

#ifndef TOXTRIG_IO_UTIL_HPP_
#define TOXTRIG_IO_UTIL_HPP_

#include <filesystem>
#include <string>
#include <string_view>

namespace toxtrig {

// Reads a whole file as bytes; throws IoError when unreadable.
std::string read_file(const std::filesystem::path& path);

// Writes bytes, creating parent directories as needed; throws IoError.
void write_file(const std::filesystem::path& path, std::string_view content);

// FNV-1a 64-bit, used for corpus digests and prompt hashing.
std::uint64_t fnv1a64(std::string_view bytes,
                      std::uint64_t seed = 1469598103934665603ull);

std::string to_hex(std::uint64_t value);

}  // namespace toxtrig

#endif  // TOXTRIG_IO_UTIL_HPP_
