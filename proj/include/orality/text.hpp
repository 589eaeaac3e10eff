/*
 * Copyright 2026 The Orality Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace orality::text {

// ASCII-only case folding; bytes >= 0x80 pass through unchanged.
std::string to_lower(std::string_view s);
std::string to_upper(std::string_view s);

std::string_view trim(std::string_view s);

// Splits on runs of ASCII whitespace; no empty pieces.
std::vector<std::string_view> split_whitespace(std::string_view s);

// Splits on a single delimiter, keeping empty pieces.
std::vector<std::string_view> split(std::string_view s, char delim);

// Splits into lines, accepting LF and CRLF.
std::vector<std::string_view> lines(std::string_view s);

// Lowercases, trims and collapses internal whitespace to single spaces.
std::string normalize_entry(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

bool is_lowercase(std::string_view s);

// Whole file as bytes. Throws InputError when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace orality::text
