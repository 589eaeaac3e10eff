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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orality/report.hpp"

namespace orality {

enum class TableFormat { csv, markdown };

std::optional<TableFormat> parse_table_format(std::string_view name);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Fixed four decimals, half away from zero on the shortest decimal form of
/// the value (0.02655 -> "0.0266"). Non-finite values render as "NA".
std::string format_decimal(double value);

inline constexpr std::string_view kAbsentCell = "NA";

/// Metrics as rows, corpora as columns:
///   documents, <metric>..., [<metric>_sd...], corpus_weighted_sum,
///   corpus_sd_of_weighted_sums, cohesion_value, [correlation_with_<name>...]
Table comparison_table(const ComparisonReport& report, bool include_sd = false);

/// One row per document: document, parse_level, tokens, words, sentences,
/// then every metric.
Table document_table(std::span<const MetricsReport> reports);

/// RFC 4180 (quotes only where needed, CRLF line ends).
std::string render_csv(const Table& table);
std::string render_markdown(const Table& table);
std::string render_table(const Table& table, TableFormat format);
std::string render_table(const ComparisonReport& report, TableFormat format,
                         bool include_sd = false);

/// Reads back a pipe table produced by render_markdown.
Table parse_markdown_table(std::string_view text);

}  // namespace orality
