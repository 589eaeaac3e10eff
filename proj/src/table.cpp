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

#include "orality/table.hpp"

#include <charconv>
#include <cmath>

#include "orality/error.hpp"
#include "orality/text.hpp"

namespace orality {

namespace {

constexpr int kDecimals = 4;

std::string cell(const std::optional<double>& v) {
  return v ? format_decimal(*v) : std::string(kAbsentCell);
}

// Adds one unit in the last place of a string of decimal digits.
void increment_digits(std::string& digits) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] == '9') {
      digits[i] = '0';
    } else {
      ++digits[i];
      return;
    }
  }
  digits.insert(digits.begin(), '1');
}

bool needs_quotes(std::string_view s) {
  return s.find_first_of(",\"\r\n") != std::string_view::npos;
}

std::string csv_field(std::string_view s) {
  if (!needs_quotes(s)) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string md_cell(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out.push_back(' ');
    else out.push_back(c);
  }
  return out;
}

std::vector<std::string> split_md_row(std::string_view line) {
  std::string_view t = text::trim(line);
  if (t.empty() || t.front() != '|') throw InputError("markdown: not a table row");
  t.remove_prefix(1);
  std::vector<std::string> cells;
  std::string current;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == '\\' && i + 1 < t.size() && t[i + 1] == '|') {
      current.push_back('|');
      ++i;
    } else if (t[i] == '|') {
      cells.emplace_back(text::trim(current));
      current.clear();
    } else {
      current.push_back(t[i]);
    }
  }
  if (!text::trim(current).empty()) {
    throw InputError("markdown: row does not end with '|'");
  }
  return cells;
}

}  // namespace

std::optional<TableFormat> parse_table_format(std::string_view name) {
  if (name == "csv") return TableFormat::csv;
  if (name == "markdown" || name == "md") return TableFormat::markdown;
  return std::nullopt;
}

std::string format_decimal(double value) {
  if (!std::isfinite(value)) return std::string(kAbsentCell);
  char buf[512];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), std::fabs(value),
                                 std::chars_format::fixed);
  if (ec != std::errc()) return std::string(kAbsentCell);
  std::string_view shortest(buf, static_cast<std::size_t>(end - buf));

  auto dot = shortest.find('.');
  std::string int_part(shortest.substr(0, dot));
  std::string frac = dot == std::string_view::npos ? std::string()
                                                   : std::string(shortest.substr(dot + 1));
  bool round_up = frac.size() > kDecimals && frac[kDecimals] >= '5';
  frac.resize(kDecimals, '0');
  std::string digits = int_part + frac;
  if (round_up) increment_digits(digits);
  std::string out = digits.substr(0, digits.size() - kDecimals) + "." +
                    digits.substr(digits.size() - kDecimals);
  bool is_zero = digits.find_first_not_of('0') == std::string::npos;
  if (value < 0 && !is_zero) out.insert(out.begin(), '-');
  return out;
}

Table comparison_table(const ComparisonReport& report, bool include_sd) {
  Table t;
  t.header.push_back("metric");
  for (const CorpusSummary& c : report.corpora) t.header.push_back(c.name);

  auto add_row = [&](std::string label, auto&& cell_for) {
    std::vector<std::string> row{std::move(label)};
    for (std::size_t i = 0; i < report.corpora.size(); ++i) {
      row.push_back(cell_for(i, report.corpora[i]));
    }
    t.rows.push_back(std::move(row));
  };

  add_row("documents", [](std::size_t, const CorpusSummary& c) {
    return std::to_string(c.document_count);
  });
  for (Metric m : all_metrics()) {
    add_row(std::string(metric_name(m)),
            [m](std::size_t, const CorpusSummary& c) { return cell(c.stat(m).mean); });
  }
  if (include_sd) {
    for (Metric m : all_metrics()) {
      add_row(std::string(metric_name(m)) + "_sd",
              [m](std::size_t, const CorpusSummary& c) { return cell(c.stat(m).sd); });
    }
  }
  add_row("corpus_weighted_sum", [](std::size_t, const CorpusSummary& c) {
    return c.pooled_connectives ? format_decimal(c.pooled_connectives->weighted_sum)
                                : std::string(kAbsentCell);
  });
  add_row("corpus_sd_of_weighted_sums", [](std::size_t, const CorpusSummary& c) {
    return c.cohesion ? format_decimal(c.cohesion->std_dev) : std::string(kAbsentCell);
  });
  add_row("cohesion_value", [](std::size_t, const CorpusSummary& c) {
    return c.cohesion ? format_decimal(c.cohesion->cohesion_value)
                      : std::string(kAbsentCell);
  });
  if (report.correlations) {
    const auto& matrix = *report.correlations;
    for (std::size_t j = 0; j < report.corpora.size(); ++j) {
      add_row("correlation_with_" + report.corpora[j].name,
              [&](std::size_t i, const CorpusSummary&) { return cell(matrix[i][j]); });
    }
  }
  return t;
}

Table document_table(std::span<const MetricsReport> reports) {
  Table t;
  t.header = {"document", "parse_level", "tokens", "words", "sentences"};
  for (Metric m : all_metrics()) t.header.emplace_back(metric_name(m));
  for (const MetricsReport& r : reports) {
    std::vector<std::string> row = {r.id, std::string(to_string(r.parse_level)),
                                    std::to_string(r.token_count),
                                    std::to_string(r.word_count),
                                    std::to_string(r.sentence_count)};
    for (Metric m : all_metrics()) row.push_back(cell(r.value(m)));
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string render_csv(const Table& table) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out.push_back(',');
      out += csv_field(cells[i]);
    }
    out += "\r\n";
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
  return out;
}

std::string render_markdown(const Table& table) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    out += "|";
    for (const std::string& c : cells) out += " " + md_cell(c) + " |";
    out += "\n";
  };
  line(table.header);
  out += "|";
  for (std::size_t i = 0; i < table.header.size(); ++i) out += i ? " ---: |" : " --- |";
  out += "\n";
  for (const auto& row : table.rows) line(row);
  return out;
}

std::string render_table(const Table& table, TableFormat format) {
  return format == TableFormat::csv ? render_csv(table) : render_markdown(table);
}

std::string render_table(const ComparisonReport& report, TableFormat format,
                         bool include_sd) {
  if (report.corpora.empty()) throw InputError("empty comparison report");
  return render_table(comparison_table(report, include_sd), format);
}

Table parse_markdown_table(std::string_view source) {
  Table t;
  std::vector<std::string_view> all = text::lines(source);
  std::vector<std::string_view> rows;
  for (std::string_view l : all) {
    if (!text::trim(l).empty()) rows.push_back(l);
  }
  if (rows.size() < 2) throw InputError("markdown: table needs a header and separator");
  t.header = split_md_row(rows[0]);
  std::vector<std::string> separator = split_md_row(rows[1]);
  if (separator.size() != t.header.size()) {
    throw InputError("markdown: separator width differs from header");
  }
  for (std::size_t i = 2; i < rows.size(); ++i) {
    std::vector<std::string> cells = split_md_row(rows[i]);
    if (cells.size() != t.header.size()) {
      throw InputError("markdown: row " + std::to_string(i - 1) + " has " +
                       std::to_string(cells.size()) + " cells");
    }
    t.rows.push_back(std::move(cells));
  }
  return t;
}

}  // namespace orality
