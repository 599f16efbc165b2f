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

#include <mmwcg/baselines.hpp>
#include <mmwcg/error.hpp>
#include <mmwcg/experiment.hpp>
#include <mmwcg/rng.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

namespace mmwcg {

namespace {

enum SeedStream : std::uint64_t
{
	kScenarioStream = 1,
	kAllocationStream = 2,
	kGameStream = 3
};

/// Runs task(0..count-1) on up to \p jobs threads; rethrows the first failure.
template <typename Task>
void parallel_for(std::size_t count, unsigned jobs, Task task)
{
	const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
	if (workers <= 1)
	{
		for (std::size_t i = 0; i < count; ++i)
		{
			task(i);
		}
		return;
	}

	std::atomic<std::size_t> next{0};
	std::exception_ptr failure;
	std::mutex failure_mutex;
	{
		std::vector<std::jthread> pool;
		pool.reserve(workers);
		for (unsigned w = 0; w < workers; ++w)
		{
			pool.emplace_back([&] {
				for (std::size_t i = next++; i < count; i = next++)
				{
					try
					{
						task(i);
					}
					catch (...)
					{
						std::lock_guard lock(failure_mutex);
						if (!failure)
						{
							failure = std::current_exception();
						}
						next = count;
					}
				}
			});
		}
	}
	if (failure)
	{
		std::rethrow_exception(failure);
	}
}

} // namespace

ReplicationSeeds replication_seeds(std::uint64_t base_seed, int sweep_value, int replication_index)
{
	ReplicationSeeds s;
	s.replication = derive_seed(base_seed, {static_cast<std::uint64_t>(static_cast<std::int64_t>(sweep_value)),
	                                        static_cast<std::uint64_t>(static_cast<std::int64_t>(replication_index))});
	s.scenario = derive_seed(s.replication, {kScenarioStream});
	s.allocation = derive_seed(s.replication, {kAllocationStream});
	s.game = derive_seed(s.replication, {kGameStream});
	return s;
}

int base_sweep_value(const ExperimentConfig& config)
{
	if (config.sweep && config.sweep->variable == SweepVariable::NumD2DLinks)
	{
		return config.scenario.num_d2d_links;
	}
	return config.scenario.num_subchannels;
}

ScenarioConfig scenario_config_at(const ExperimentConfig& config, int sweep_value)
{
	ScenarioConfig sc = config.scenario;
	if (config.sweep && config.sweep->variable == SweepVariable::NumD2DLinks)
	{
		sc.num_d2d_links = sweep_value;
	}
	else
	{
		sc.num_subchannels = sweep_value;
	}
	return sc;
}

Scenario scenario_for(const ExperimentConfig& config, int sweep_value, int replication_index)
{
	ScenarioConfig sc = scenario_config_at(config, sweep_value);
	sc.rng_seed = replication_seeds(config.base_seed, sweep_value, replication_index).scenario;
	return generate_scenario(sc);
}

PointResult run_point_detailed(const ExperimentConfig& config, int sweep_value, Scheme scheme, int replication_index)
{
	const auto start = std::chrono::steady_clock::now();
	const ReplicationSeeds seeds = replication_seeds(config.base_seed, sweep_value, replication_index);

	ScenarioConfig sc = scenario_config_at(config, sweep_value);
	sc.rng_seed = seeds.scenario;
	const CoalitionGame game(generate_scenario(sc), config.radio.to_model());

	GameConfig gc = config.game;
	gc.rng_seed = seeds.game;

	PointResult out;
	out.record.sweep_value = sweep_value;
	out.record.scheme = scheme;
	out.record.seed = seeds.replication;

	switch (scheme)
	{
		case Scheme::RA:
			out.partition = random_allocation(game.scenario(), seeds.allocation);
			out.record.sum_rate_bps = game.partition_utility(out.partition);
			break;
		case Scheme::PCG:
		case Scheme::CG:
		{
			FormationResult r = scheme == Scheme::CG ? cg_allocation(game, gc, seeds.allocation)
			                                         : pcg_allocation(game, gc, seeds.allocation);
			out.record.sum_rate_bps = r.trace.final_utility();
			out.record.iterations = r.trace.iterations;
			out.record.nash_certified = r.trace.nash_certified;
			out.partition = std::move(r.partition);
			out.trace = std::move(r.trace);
			break;
		}
	}

	out.record.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
	return out;
}

RunRecord run_point(const ExperimentConfig& config, int sweep_value, Scheme scheme, int replication_index)
{
	return run_point_detailed(config, sweep_value, scheme, replication_index).record;
}

std::vector<RunRecord> run_replications(const ExperimentConfig& config, int sweep_value, unsigned jobs)
{
	const auto reps = static_cast<std::size_t>(config.num_replications);
	const std::size_t schemes = config.schemes.size();
	std::vector<RunRecord> out(reps * schemes);
	parallel_for(reps, jobs, [&](std::size_t r) {
		for (std::size_t s = 0; s < schemes; ++s)
		{
			out[s * reps + r] = run_point(config, sweep_value, config.schemes[s], static_cast<int>(r));
		}
	});
	return out;
}

std::vector<RunRecord> run_sweep(const ExperimentConfig& config, unsigned jobs)
{
	if (!config.sweep)
	{
		throw ConfigError("run_sweep needs a sweep section");
	}
	const auto& values = config.sweep->values;
	const auto reps = static_cast<std::size_t>(config.num_replications);
	const std::size_t schemes = config.schemes.size();
	std::vector<RunRecord> out(values.size() * schemes * reps);

	parallel_for(values.size() * reps, jobs, [&](std::size_t task) {
		const std::size_t v = task / reps;
		const std::size_t r = task % reps;
		for (std::size_t s = 0; s < schemes; ++s)
		{
			out[(v * schemes + s) * reps + r] = run_point(config, values[v], config.schemes[s], static_cast<int>(r));
		}
	});
	return out;
}

} // namespace mmwcg
