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

// Command line front end: run, sweep, oracle, validate, generate.

#include <mmwcg/baselines.hpp>
#include <mmwcg/config.hpp>
#include <mmwcg/error.hpp>
#include <mmwcg/experiment.hpp>
#include <mmwcg/game.hpp>
#include <mmwcg/report.hpp>
#include <mmwcg/scenario.hpp>
#include <mmwcg/stats.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

namespace {

enum ExitCode : int
{
	kOk = 0,
	kConfigError = 1,
	kRuntimeError = 2,
	kOracleBudget = 3
};

constexpr const char* kOutDirEnv = "MMWCG_OUT_DIR";

struct CommonOptions
{
	std::string config_path;
	std::string out_dir;
	std::optional<std::uint64_t> seed;
	unsigned jobs{1};
	std::string format{"csv+json"};
};

mmwcg::ExperimentConfig load_config(const CommonOptions& opt)
{
	mmwcg::ExperimentConfig cfg;
	if (!opt.config_path.empty())
	{
		cfg = mmwcg::load_experiment_config(opt.config_path);
	}
	if (opt.seed)
	{
		cfg.base_seed = *opt.seed;
	}
	return cfg;
}

std::filesystem::path output_dir(const CommonOptions& opt)
{
	if (!opt.out_dir.empty())
	{
		return opt.out_dir;
	}
	if (const char* env = std::getenv(kOutDirEnv); env && *env)
	{
		return env;
	}
	return "results";
}

mmwcg::OutputFormat output_format(const std::string& name)
{
	if (name == "csv")
	{
		return mmwcg::OutputFormat::Csv;
	}
	if (name == "csv+json")
	{
		return mmwcg::OutputFormat::CsvAndJson;
	}
	throw mmwcg::ConfigError("unknown format '" + name + "' (csv or csv+json)");
}

void print_summary(const std::vector<mmwcg::SummaryRow>& rows)
{
	std::cout << std::left << std::setw(8) << "value" << std::setw(8) << "scheme" << std::setw(6) << "n"
	          << std::setw(16) << "mean [Gb/s]" << std::setw(14) << "ci95 [Gb/s]" << "CG gain" << '\n';
	for (const auto& r : rows)
	{
		std::cout << std::left << std::setw(8) << r.sweep_value << std::setw(8) << mmwcg::to_string(r.scheme)
		          << std::setw(6) << r.n << std::setw(16) << std::fixed << std::setprecision(4) << r.mean / 1e9
		          << std::setw(14) << r.ci95_half_width / 1e9;
		if (r.cg_improvement)
		{
			std::cout << std::setprecision(2) << 100.0 * *r.cg_improvement << " %";
		}
		std::cout << '\n';
	}
	std::cout.unsetf(std::ios::floatfield);
}

void add_common(CLI::App* cmd, CommonOptions& opt, bool config_required)
{
	auto* c = cmd->add_option("--config,-c", opt.config_path, "Experiment config (JSON)");
	if (config_required)
	{
		c->required();
	}
	c->check(CLI::ExistingFile);
	cmd->add_option("--out-dir,-o", opt.out_dir, std::string("Output directory (default: $") + kOutDirEnv + " or ./results)");
	cmd->add_option("--seed", opt.seed, "Override experiment.base_seed");
	cmd->add_option("--jobs,-j", opt.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
	cmd->add_option("--format", opt.format, "csv or csv+json")->check(CLI::IsMember({"csv", "csv+json"}));
}

int cmd_run(const CommonOptions& opt, std::optional<int> value, bool traces)
{
	const auto cfg = load_config(opt);
	const int point = value.value_or(mmwcg::base_sweep_value(cfg));
	const auto records = mmwcg::run_replications(cfg, point, opt.jobs);
	const auto rows = mmwcg::summarize(records);
	const auto out = output_dir(opt);
	const auto files = mmwcg::emit(records, rows, out, output_format(opt.format));

	if (traces)
	{
		std::filesystem::create_directories(out / "traces");
		for (mmwcg::Scheme s : cfg.schemes)
		{
			if (s == mmwcg::Scheme::RA)
			{
				continue;
			}
			for (int r = 0; r < cfg.num_replications; ++r)
			{
				const auto result = mmwcg::run_point_detailed(cfg, point, s, r);
				const auto path = out / "traces" / (std::string(mmwcg::to_string(s)) + "_rep" + std::to_string(r) + ".csv");
				std::ofstream f(path, std::ios::binary);
				f << mmwcg::trace_to_csv(result.trace);
				if (!f)
				{
					throw mmwcg::Error("cannot write '" + path.string() + "'");
				}
			}
		}
	}

	print_summary(rows);
	std::cout << "wrote " << files.runs_csv.string() << " and " << files.summary_csv.string() << '\n';
	return kOk;
}

int cmd_sweep(const CommonOptions& opt)
{
	const auto cfg = load_config(opt);
	if (!cfg.sweep)
	{
		throw mmwcg::ConfigError("config has no sweep section");
	}
	const auto records = mmwcg::run_sweep(cfg, opt.jobs);
	const auto rows = mmwcg::summarize(records);
	const auto files = mmwcg::emit(records, rows, output_dir(opt), output_format(opt.format));
	print_summary(rows);
	std::cout << "wrote " << files.runs_csv.string() << " and " << files.summary_csv.string() << '\n';
	return kOk;
}

int cmd_oracle(const std::string& scenario_path, const std::string& config_path, std::uint64_t budget)
{
	mmwcg::ExperimentConfig cfg;
	if (!config_path.empty())
	{
		cfg = mmwcg::load_experiment_config(config_path);
	}
	const auto scenario = mmwcg::load_scenario(scenario_path);
	if (const auto v = mmwcg::validate_scenario(scenario, cfg.scenario.d2d_max_distance); !v.empty())
	{
		throw mmwcg::ConfigError("scenario is invalid: " + v.front().message);
	}
	const auto result = mmwcg::brute_force_optimal(scenario, cfg.radio.to_model(), budget);

	nlohmann::json coalitions = nlohmann::json::array();
	for (int s = 0; s < result.partition.num_slots(); ++s)
	{
		const auto m = result.partition.members(s);
		coalitions.push_back(std::vector<int>(m.begin(), m.end()));
	}
	const nlohmann::json out = {{"assignment", result.assignment},
	                            {"coalitions", coalitions},
	                            {"utility_bps", result.utility},
	                            {"feasible_assignments", result.feasible_assignments}};
	std::cout << out.dump(2) << '\n';
	return kOk;
}

int cmd_validate(const std::string& config_path, const std::string& scenario_path)
{
	mmwcg::ExperimentConfig cfg;
	if (!config_path.empty())
	{
		cfg = mmwcg::load_experiment_config(config_path);
		std::cout << "config ok: " << config_path << '\n';
	}
	if (!scenario_path.empty())
	{
		const auto scenario = mmwcg::load_scenario(scenario_path);
		const auto violations = mmwcg::validate_scenario(scenario, cfg.scenario.d2d_max_distance);
		for (const auto& v : violations)
		{
			std::cout << mmwcg::to_string(v.kind) << " [" << v.subject << "]: " << v.message << '\n';
		}
		if (!violations.empty())
		{
			return kConfigError;
		}
		std::cout << "scenario ok: " << scenario_path << '\n';
	}
	return kOk;
}

int cmd_generate(const CommonOptions& opt, std::optional<int> value, int replication, const std::string& output)
{
	const auto cfg = load_config(opt);
	const int point = value.value_or(mmwcg::base_sweep_value(cfg));
	const auto scenario = mmwcg::scenario_for(cfg, point, replication);
	if (output.empty() || output == "-")
	{
		std::cout << mmwcg::scenario_to_json(scenario);
	}
	else
	{
		mmwcg::save_scenario(scenario, output);
	}
	return kOk;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"Sub-channel allocation for mmWave small cells with D2D links via coalition formation"};
	app.require_subcommand(1);

	CommonOptions run_opt;
	std::optional<int> run_value;
	bool run_traces = false;
	auto* run = app.add_subcommand("run", "Replicate one configuration point for every scheme");
	add_common(run, run_opt, false);
	run->add_option("--value", run_value, "Sweep-variable value to run (default: as in the config)");
	run->add_flag("--traces", run_traces, "Also write per-run utility traces of CG/PCG");

	CommonOptions sweep_opt;
	auto* sweep = app.add_subcommand("sweep", "Run the sweep defined in the config");
	add_common(sweep, sweep_opt, true);

	std::string oracle_scenario;
	std::string oracle_config;
	std::uint64_t oracle_budget = mmwcg::kDefaultOracleBudget;
	auto* oracle = app.add_subcommand("oracle", "Brute-force optimal allocation of a saved scenario");
	oracle->add_option("--scenario,-s", oracle_scenario, "Scenario JSON")->required()->check(CLI::ExistingFile);
	oracle->add_option("--config,-c", oracle_config, "Experiment config for radio parameters")->check(CLI::ExistingFile);
	oracle->add_option("--budget", oracle_budget, "Maximum number of assignments to enumerate");

	std::string validate_config;
	std::string validate_scenario_path;
	auto* validate = app.add_subcommand("validate", "Check a config and/or a scenario file");
	validate->add_option("--config,-c", validate_config, "Experiment config")->check(CLI::ExistingFile);
	validate->add_option("--scenario,-s", validate_scenario_path, "Scenario JSON")->check(CLI::ExistingFile);

	CommonOptions gen_opt;
	std::optional<int> gen_value;
	int gen_replication = 0;
	std::string gen_output;
	auto* generate = app.add_subcommand("generate", "Write the scenario of one replication as JSON");
	add_common(generate, gen_opt, false);
	generate->add_option("--value", gen_value, "Sweep-variable value (default: as in the config)");
	generate->add_option("--replication,-r", gen_replication, "Replication index")->check(CLI::NonNegativeNumber);
	generate->add_option("--output", gen_output, "Output path ('-' for stdout)");

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::ParseError& e)
	{
		const int rc = app.exit(e);
		return rc == 0 ? kOk : kConfigError;
	}

	try
	{
		if (*run)
		{
			return cmd_run(run_opt, run_value, run_traces);
		}
		if (*sweep)
		{
			return cmd_sweep(sweep_opt);
		}
		if (*oracle)
		{
			return cmd_oracle(oracle_scenario, oracle_config, oracle_budget);
		}
		if (*validate)
		{
			if (validate_config.empty() && validate_scenario_path.empty())
			{
				std::cerr << "validate: give --config and/or --scenario\n";
				return kConfigError;
			}
			return cmd_validate(validate_config, validate_scenario_path);
		}
		if (*generate)
		{
			return cmd_generate(gen_opt, gen_value, gen_replication, gen_output);
		}
	}
	catch (const mmwcg::ConfigError& e)
	{
		std::cerr << "config error: " << e.what() << '\n';
		return kConfigError;
	}
	catch (const mmwcg::InstanceTooLarge& e)
	{
		std::cerr << "oracle budget exceeded: " << e.what() << '\n';
		return kOracleBudget;
	}
	catch (const std::exception& e)
	{
		std::cerr << "error: " << e.what() << '\n';
		return kRuntimeError;
	}
	return kOk;
}
