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

#include <mmwcg/config.hpp>
#include <mmwcg/error.hpp>
#include <mmwcg/experiment.hpp>
#include <mmwcg/report.hpp>
#include <mmwcg/stats.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

using mmwcg::ExperimentConfig;
using mmwcg::RunRecord;
using mmwcg::Scheme;

ExperimentConfig small_config(int reps = 4)
{
	ExperimentConfig c;
	c.num_replications = reps;
	c.base_seed = 11;
	c.sweep = mmwcg::SweepSpec{mmwcg::SweepVariable::NumSubchannels, {5, 7}};
	return c;
}

std::string slurp(const std::filesystem::path& p)
{
	std::ifstream in(p);
	std::ostringstream oss;
	oss << in.rdbuf();
	return oss.str();
}

TEST(ConfigTest, DefaultsAndRoundTrip)
{
	const auto c = mmwcg::parse_experiment_config("{}");
	EXPECT_EQ(c.scenario.num_subchannels, 9);
	EXPECT_EQ(c.num_replications, 200);
	EXPECT_FALSE(c.game.stall_threshold.has_value());
	const auto again = mmwcg::parse_experiment_config(mmwcg::experiment_config_to_json(small_config()));
	EXPECT_EQ(again.num_replications, 4);
	ASSERT_TRUE(again.sweep.has_value());
	EXPECT_EQ(again.sweep->values, (std::vector<int>{5, 7}));
}

TEST(ConfigTest, RejectsBrokenInput)
{
	const char* bad[] = {
		"not json",
		R"({"scenario": {"num_cellz": 3}})",
		R"({"scenario": {"num_cells": "three"}})",
		R"({"scenario": {"num_subchannels": 0}})",
		R"({"radio": {"transceiver_efficiency": 1.5}})",
		R"({"experiment": {"schemes": ["CG", "XX"]}})",
		R"({"experiment": {"num_replications": 0}})",
		R"({"sweep": {"variable": "num_cells", "values": [1]}})",
		R"({"sweep": {"variable": "num_subchannels", "values": []}})",
		R"({"game": {"stall_threshold": -1}})",
	};
	for (const char* text : bad)
	{
		EXPECT_THROW(mmwcg::parse_experiment_config(text), mmwcg::ConfigError) << text;
	}
	EXPECT_THROW(mmwcg::load_experiment_config("/nonexistent/cfg.json"), mmwcg::ConfigError);
}

TEST(ConfigTest, ShippedConfigsLoad)
{
	for (const char* name : {"subchannel_sweep.json", "d2d_sweep.json"})
	{
		EXPECT_NO_THROW(mmwcg::load_experiment_config(std::string(MMWCG_SOURCE_DIR "/configs/") + name)) << name;
	}
}

TEST(SeedTest, SchemesShareScenarioAndStart)
{
	const auto a = mmwcg::replication_seeds(1, 9, 0);
	EXPECT_EQ(a.replication, mmwcg::replication_seeds(1, 9, 0).replication);
	EXPECT_NE(a.replication, mmwcg::replication_seeds(1, 9, 1).replication);
	EXPECT_NE(a.replication, mmwcg::replication_seeds(1, 8, 0).replication);
	EXPECT_NE(a.scenario, a.allocation);
	EXPECT_NE(a.allocation, a.game);

	const auto cfg = small_config();
	const auto ra = mmwcg::run_point_detailed(cfg, 7, Scheme::RA, 2);
	const auto cg = mmwcg::run_point_detailed(cfg, 7, Scheme::CG, 2);
	EXPECT_EQ(ra.record.seed, cg.record.seed);
	EXPECT_DOUBLE_EQ(cg.trace.initial_utility, ra.record.sum_rate_bps);
	EXPECT_GE(cg.record.sum_rate_bps, ra.record.sum_rate_bps);
	EXPECT_TRUE(cg.record.nash_certified);
	EXPECT_EQ(ra.record.iterations, 0);
}

TEST(ExperimentTest, ScenarioFollowsSweepVariable)
{
	auto cfg = small_config();
	EXPECT_EQ(mmwcg::scenario_for(cfg, 7, 0).num_subchannels, 7);
	cfg.sweep = mmwcg::SweepSpec{mmwcg::SweepVariable::NumD2DLinks, {10}};
	const auto s = mmwcg::scenario_for(cfg, 10, 0);
	EXPECT_EQ(s.num_d2d_links(), 10u);
	EXPECT_EQ(s.num_subchannels, 9);
	cfg.sweep.reset();
	EXPECT_EQ(mmwcg::base_sweep_value(cfg), 9);
}

TEST(ExperimentTest, SweepOrderingAndJobsInvariance)
{
	const auto cfg = small_config(3);
	const auto one = mmwcg::run_sweep(cfg, 1);
	const auto many = mmwcg::run_sweep(cfg, 4);
	ASSERT_EQ(one.size(), 2u * 3u * 3u);
	EXPECT_EQ(mmwcg::runs_to_csv(one, false), mmwcg::runs_to_csv(many, false));
	EXPECT_EQ(one.front().sweep_value, 5);
	EXPECT_EQ(one.front().scheme, Scheme::CG);
	EXPECT_EQ(one[3].scheme, Scheme::PCG);
	EXPECT_EQ(one.back().sweep_value, 7);
	EXPECT_EQ(one.back().scheme, Scheme::RA);

	const auto point = mmwcg::run_replications(cfg, 7, 2);
	ASSERT_EQ(point.size(), 9u);
	EXPECT_EQ(mmwcg::runs_to_csv(point, false), mmwcg::runs_to_csv(std::span(one).subspan(9), false));
}

TEST(StatsTest, SummaryOfKnownSample)
{
	std::vector<RunRecord> r;
	for (double v : {2.0, 4.0, 6.0})
	{
		r.push_back({5, Scheme::CG, 0, v});
	}
	for (double v : {1.0, 2.0, 3.0})
	{
		r.push_back({5, Scheme::RA, 0, v});
	}
	r.push_back({6, Scheme::RA, 0, 8.0});
	const auto rows = mmwcg::summarize(r);
	ASSERT_EQ(rows.size(), 3u);
	EXPECT_DOUBLE_EQ(rows[0].mean, 4.0);
	EXPECT_DOUBLE_EQ(rows[0].stddev, 2.0);
	// t(0.975, 2) = 4.302652729696142
	EXPECT_NEAR(rows[0].ci95_half_width, 4.302652729696142 * 2.0 / std::sqrt(3.0), 1e-6);
	EXPECT_FALSE(rows[0].cg_improvement.has_value());
	ASSERT_TRUE(rows[1].cg_improvement.has_value());
	EXPECT_DOUBLE_EQ(*rows[1].cg_improvement, 1.0);
	EXPECT_EQ(rows[2].n, 1u);
	EXPECT_EQ(rows[2].ci95_half_width, 0.0);
	EXPECT_FALSE(rows[2].cg_improvement.has_value());
	EXPECT_THROW(mmwcg::summarize({}), mmwcg::EmptyInput);
}

TEST(StatsTest, StudentQuantiles)
{
	EXPECT_NEAR(mmwcg::student_t_quantile(0.975, 1), 12.706204736432095, 1e-6);
	EXPECT_NEAR(mmwcg::student_t_quantile(0.975, 199), 1.971956544249395, 1e-6);
}

TEST(StatsTest, PairedComparison)
{
	const std::vector<double> a{3, 4, 5, 6};
	const std::vector<double> b{1, 2, 3, 4.5};
	const auto c = mmwcg::paired_comparison(a, b);
	EXPECT_DOUBLE_EQ(c.mean_difference, 1.875);
	EXPECT_TRUE(c.a_significantly_greater());
	const auto rev = mmwcg::paired_comparison(b, a);
	EXPECT_FALSE(rev.a_significantly_greater());
}

TEST(StatsTest, Spearman)
{
	const std::vector<double> x{1, 2, 3, 4, 5};
	EXPECT_DOUBLE_EQ(mmwcg::spearman(x, std::vector<double>{10, 20, 30, 40, 50}), 1.0);
	EXPECT_DOUBLE_EQ(mmwcg::spearman(x, std::vector<double>{5, 4, 3, 2, 1}), -1.0);
	// Ties take average ranks: y ranks (1.5, 1.5, 3, 4, 5).
	EXPECT_NEAR(mmwcg::spearman(x, std::vector<double>{7, 7, 8, 9, 10}), 0.9746794344808963, 1e-12);
}

TEST(ReportTest, CsvFieldQuoting)
{
	EXPECT_EQ(mmwcg::csv_field("CG"), "CG");
	EXPECT_EQ(mmwcg::csv_field("a,b"), "\"a,b\"");
	EXPECT_EQ(mmwcg::csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
	EXPECT_EQ(mmwcg::format_double(0.1), "0.1");
	EXPECT_EQ(std::stod(mmwcg::format_double(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(ReportTest, EmitRoundTrip)
{
	const auto cfg = small_config(2);
	const auto records = mmwcg::run_sweep(cfg, 1);
	const auto rows = mmwcg::summarize(records);
	const auto dir = std::filesystem::temp_directory_path() / "mmwcg_emit_test";
	std::filesystem::remove_all(dir);
	const auto files = mmwcg::emit(records, rows, dir);
	ASSERT_TRUE(files.json.has_value());

	const auto runs_text = slurp(files.runs_csv);
	EXPECT_EQ(runs_text.substr(0, runs_text.find('\n')), mmwcg::kRunsCsvHeader);
	const auto parsed = mmwcg::runs_from_csv(runs_text);
	ASSERT_EQ(parsed.size(), records.size());
	for (std::size_t i = 0; i < parsed.size(); ++i)
	{
		EXPECT_EQ(parsed[i].sum_rate_bps, records[i].sum_rate_bps);
		EXPECT_EQ(parsed[i].seed, records[i].seed);
		EXPECT_EQ(parsed[i].scheme, records[i].scheme);
		EXPECT_EQ(parsed[i].nash_certified, records[i].nash_certified);
	}

	const auto summary_text = slurp(files.summary_csv);
	EXPECT_EQ(summary_text.substr(0, summary_text.find('\n')), mmwcg::kSummaryCsvHeader);
	EXPECT_EQ(std::count(summary_text.begin(), summary_text.end(), '\n'), 1 + 2 * 3);
	EXPECT_NE(slurp(*files.json).find("\"summary\""), std::string::npos);
	std::filesystem::remove_all(dir);
}

TEST(ReportTest, RunsCsvRejectsGarbage)
{
	EXPECT_THROW(mmwcg::runs_from_csv("nope\n1,2"), mmwcg::ConfigError);
	EXPECT_THROW(mmwcg::runs_from_csv(std::string(mmwcg::kRunsCsvHeader) + "\n5,ZZ,1,2,3,true,4\n"), mmwcg::ConfigError);
}

} // namespace
