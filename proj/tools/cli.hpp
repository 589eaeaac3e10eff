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
#include <iosfwd>

#include "orality/document.hpp"

namespace orality::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,
  kExitStrict = 2,
};

/// Loads .conllu, .txt, .jsonl or .transcript files as a document.
/// Transcripts become plain text, one turn per paragraph.
Document load_document(const std::filesystem::path& path);

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace orality::cli
