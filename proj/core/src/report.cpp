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

#include <mmwcg/error.hpp>
#include <mmwcg/report.hpp>

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

namespace mmwcg {

namespace {

void write_file(const std::filesystem::path& path, const std::string& content)
{
	std::ofstream out(path, std::ios::binary);
	if (!out)
	{
		throw Error("cannot open '" + path.string() + "' for writing");
	}
	out << content;
	out.flush();
	if (!out)
	{
		throw Error("write failed for '" + path.string() + "'");
	}
}

std::vector<std::string> split_csv_line(std::string_view line)
{
	std::vector<std::string> fields;
	std::string cur;
	bool quoted = false;
	for (std::size_t i = 0; i < line.size(); ++i)
	{
		const char c = line[i];
		if (quoted)
		{
			if (c == '"' && i + 1 < line.size() && line[i + 1] == '"')
			{
				cur += '"';
				++i;
			}
			else if (c == '"')
			{
				quoted = false;
			}
			else
			{
				cur += c;
			}
		}
		else if (c == '"')
		{
			quoted = true;
		}
		else if (c == ',')
		{
			fields.push_back(std::move(cur));
			cur.clear();
		}
		else
		{
			cur += c;
		}
	}
	fields.push_back(std::move(cur));
	return fields;
}

template <typename T>
T parse_number(const std::string& text, std::string_view what)
{
	T value{};
	const auto* end = text.data() + text.size();
	const auto [ptr, ec] = std::from_chars(text.data(), end, value);
	if (ec != std::errc() || ptr != end)
	{
		throw ConfigError("bad " + std::string(what) + " '" + text + "' in runs CSV");
	}
	return value;
}

} // namespace

std::string csv_field(std::string_view value)
{
	if (value.find_first_of(",\"\r\n") == std::string_view::npos)
	{
		return std::string(value);
	}
	std::string out = "\"";
	for (char c : value)
	{
		if (c == '"')
		{
			out += '"';
		}
		out += c;
	}
	out += '"';
	return out;
}

std::string format_double(double value)
{
	char buf[64];
	const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
	return std::string(buf, ptr);
}

std::string runs_to_csv(std::span<const RunRecord> records, bool include_wall_time)
{
	std::string out;
	if (include_wall_time)
	{
		out += kRunsCsvHeader;
	}
	else
	{
		out += kRunsCsvHeader.substr(0, kRunsCsvHeader.rfind(','));
	}
	out += '\n';
	for (const RunRecord& r : records)
	{
		out += std::to_string(r.sweep_value);
		out += ',';
		out += csv_field(to_string(r.scheme));
		out += ',';
		out += std::to_string(r.seed);
		out += ',';
		out += format_double(r.sum_rate_bps);
		out += ',';
		out += std::to_string(r.iterations);
		out += ',';
		out += r.nash_certified ? "true" : "false";
		if (include_wall_time)
		{
			out += ',';
			out += format_double(r.wall_time_ms);
		}
		out += '\n';
	}
	return out;
}

std::vector<RunRecord> runs_from_csv(std::string_view text)
{
	std::vector<RunRecord> out;
	std::size_t pos = 0;
	bool header = true;
	while (pos < text.size())
	{
		std::size_t end = text.find('\n', pos);
		if (end == std::string_view::npos)
		{
			end = text.size();
		}
		std::string_view line = text.substr(pos, end - pos);
		pos = end + 1;
		if (!line.empty() && line.back() == '\r')
		{
			line.remove_suffix(1);
		}
		if (header)
		{
			if (line != kRunsCsvHeader)
			{
				throw ConfigError("unexpected runs CSV header '" + std::string(line) + "'");
			}
			header = false;
			continue;
		}
		if (line.empty())
		{
			continue;
		}
		const auto f = split_csv_line(line);
		if (f.size() != 7)
		{
			throw ConfigError("runs CSV row with " + std::to_string(f.size()) + " fields");
		}
		RunRecord r;
		r.sweep_value = parse_number<int>(f[0], "sweep_value");
		r.scheme = scheme_from_string(f[1]);
		r.seed = parse_number<std::uint64_t>(f[2], "seed");
		r.sum_rate_bps = parse_number<double>(f[3], "sum_rate_bps");
		r.iterations = parse_number<std::int64_t>(f[4], "iterations");
		if (f[5] != "true" && f[5] != "false")
		{
			throw ConfigError("bad nash_certified '" + f[5] + "' in runs CSV");
		}
		r.nash_certified = f[5] == "true";
		r.wall_time_ms = parse_number<double>(f[6], "wall_time_ms");
		out.push_back(r);
	}
	if (header)
	{
		throw ConfigError("runs CSV is empty");
	}
	return out;
}

std::string summary_to_csv(std::span<const SummaryRow> rows)
{
	std::string out(kSummaryCsvHeader);
	out += '\n';
	for (const SummaryRow& r : rows)
	{
		out += std::to_string(r.sweep_value);
		out += ',';
		out += csv_field(to_string(r.scheme));
		out += ',';
		out += std::to_string(r.n);
		out += ',';
		out += format_double(r.mean);
		out += ',';
		out += format_double(r.stddev);
		out += ',';
		out += format_double(r.ci95_half_width);
		out += ',';
		if (r.cg_improvement)
		{
			out += format_double(*r.cg_improvement);
		}
		out += '\n';
	}
	return out;
}

std::string results_to_json(std::span<const RunRecord> records, std::span<const SummaryRow> rows)
{
	using nlohmann::json;
	json runs = json::array();
	for (const RunRecord& r : records)
	{
		runs.push_back({{"sweep_value", r.sweep_value},
		                {"scheme", std::string(to_string(r.scheme))},
		                {"seed", r.seed},
		                {"sum_rate_bps", r.sum_rate_bps},
		                {"iterations", r.iterations},
		                {"nash_certified", r.nash_certified},
		                {"wall_time_ms", r.wall_time_ms}});
	}
	json summary = json::array();
	for (const SummaryRow& s : rows)
	{
		summary.push_back({{"sweep_value", s.sweep_value},
		                   {"scheme", std::string(to_string(s.scheme))},
		                   {"n", s.n},
		                   {"mean_bps", s.mean},
		                   {"stddev_bps", s.stddev},
		                   {"ci95_half_width_bps", s.ci95_half_width},
		                   {"cg_improvement", s.cg_improvement ? json(*s.cg_improvement) : json(nullptr)}});
	}
	return json{{"runs", runs}, {"summary", summary}}.dump(2) + "\n";
}

EmittedFiles emit(std::span<const RunRecord> records,
                  std::span<const SummaryRow> rows,
                  const std::filesystem::path& out_dir,
                  OutputFormat format)
{
	std::error_code ec;
	std::filesystem::create_directories(out_dir, ec);
	if (ec)
	{
		throw Error("cannot create output directory '" + out_dir.string() + "': " + ec.message());
	}
	EmittedFiles files;
	files.runs_csv = out_dir / "runs.csv";
	files.summary_csv = out_dir / "summary.csv";
	write_file(files.runs_csv, runs_to_csv(records));
	write_file(files.summary_csv, summary_to_csv(rows));
	if (format == OutputFormat::CsvAndJson)
	{
		files.json = out_dir / "results.json";
		write_file(*files.json, results_to_json(records, rows));
	}
	return files;
}

} // namespace mmwcg
