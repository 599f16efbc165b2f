/*
 * Copyright 2026 The mmwcg Authors
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

#ifndef MMWCG_REPORT_HPP
#define MMWCG_REPORT_HPP

#include <mmwcg/experiment.hpp>
#include <mmwcg/stats.hpp>

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mmwcg {

inline constexpr std::string_view kRunsCsvHeader =
	"sweep_value,scheme,seed,sum_rate_bps,iterations,nash_certified,wall_time_ms";
inline constexpr std::string_view kSummaryCsvHeader =
	"sweep_value,scheme,n,mean_bps,stddev_bps,ci95_half_width_bps,cg_improvement";

/// Quotes a CSV field when it holds a comma, quote, CR or LF (RFC 4180).
std::string csv_field(std::string_view value);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

/// Per-run CSV with kRunsCsvHeader. Without wall time, the last column is
/// dropped from header and rows, which makes the text reproducible.
std::string runs_to_csv(std::span<const RunRecord> records, bool include_wall_time = true);

/// Parses text produced by runs_to_csv (with wall time). Throws ConfigError.
std::vector<RunRecord> runs_from_csv(std::string_view text);

/// Summary CSV with kSummaryCsvHeader; cg_improvement empty where undefined.
std::string summary_to_csv(std::span<const SummaryRow> rows);

/// {"runs": [...], "summary": [...]} with the CSV column names as keys.
std::string results_to_json(std::span<const RunRecord> records, std::span<const SummaryRow> rows);

enum class OutputFormat
{
	Csv,
	CsvAndJson
};

struct EmittedFiles
{
	std::filesystem::path runs_csv;
	std::filesystem::path summary_csv;
	std::optional<std::filesystem::path> json;
};

/// Writes runs.csv, summary.csv and optionally results.json into \p out_dir,
/// creating it if needed. I/O failures throw Error naming the file.
EmittedFiles emit(std::span<const RunRecord> records,
                  std::span<const SummaryRow> rows,
                  const std::filesystem::path& out_dir,
                  OutputFormat format = OutputFormat::CsvAndJson);

} // namespace mmwcg

#endif // MMWCG_REPORT_HPP
