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
#include <mmwcg/game.hpp>
#include <mmwcg/scenario.hpp>

#include <benchmark/benchmark.h>

namespace {

mmwcg::Scenario make_scenario(int subchannels, int d2d, std::uint64_t seed = 1)
{
	mmwcg::ScenarioConfig c;
	c.num_subchannels = subchannels;
	c.num_d2d_links = d2d;
	c.rng_seed = seed;
	return mmwcg::generate_scenario(c);
}

void BM_GameConstruction(benchmark::State& state)
{
	const auto s = make_scenario(9, static_cast<int>(state.range(0)));
	const auto model = mmwcg::ChannelModel::defaults();
	for (auto _ : state)
	{
		mmwcg::CoalitionGame g(s, model);
		benchmark::DoNotOptimize(g.signal_power(0));
	}
}
BENCHMARK(BM_GameConstruction)->Arg(5)->Arg(15);

void BM_PartitionUtility(benchmark::State& state)
{
	const auto s = make_scenario(9, 5);
	const mmwcg::CoalitionGame g(s, mmwcg::ChannelModel::defaults());
	const auto p = mmwcg::random_allocation(s, 1);
	for (auto _ : state)
	{
		benchmark::DoNotOptimize(g.partition_utility(p));
	}
}
BENCHMARK(BM_PartitionUtility);

void BM_NashCheck(benchmark::State& state)
{
	const auto s = make_scenario(9, 5);
	const mmwcg::CoalitionGame g(s, mmwcg::ChannelModel::defaults());
	const auto stable = mmwcg::cg_allocation(g, {}, 1).partition;
	for (auto _ : state)
	{
		benchmark::DoNotOptimize(g.is_nash_stable(stable));
	}
}
BENCHMARK(BM_NashCheck);

void BM_CoalitionFormation(benchmark::State& state)
{
	const auto s = make_scenario(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
	const mmwcg::CoalitionGame g(s, mmwcg::ChannelModel::defaults());
	std::uint64_t seed = 0;
	for (auto _ : state)
	{
		mmwcg::GameConfig cfg;
		cfg.rng_seed = ++seed;
		benchmark::DoNotOptimize(mmwcg::cg_allocation(g, cfg, seed).trace.iterations);
	}
}
BENCHMARK(BM_CoalitionFormation)->Args({5, 5})->Args({9, 5})->Args({9, 15})->Unit(benchmark::kMillisecond);

void BM_PartialFormation(benchmark::State& state)
{
	const auto s = make_scenario(9, 5);
	const mmwcg::CoalitionGame g(s, mmwcg::ChannelModel::defaults());
	std::uint64_t seed = 0;
	for (auto _ : state)
	{
		mmwcg::GameConfig cfg;
		cfg.rng_seed = ++seed;
		benchmark::DoNotOptimize(mmwcg::pcg_allocation(g, cfg, seed).trace.iterations);
	}
}
BENCHMARK(BM_PartialFormation)->Unit(benchmark::kMillisecond);

void BM_BruteForceOracle(benchmark::State& state)
{
	mmwcg::ScenarioConfig c;
	c.num_cells = 2;
	c.num_access_links = 4;
	c.num_d2d_links = static_cast<int>(state.range(0));
	c.num_subchannels = 2;
	c.region_radius = 30;
	const auto s = mmwcg::generate_scenario(c);
	const auto model = mmwcg::ChannelModel::defaults();
	for (auto _ : state)
	{
		benchmark::DoNotOptimize(mmwcg::brute_force_optimal(s, model).utility);
	}
}
BENCHMARK(BM_BruteForceOracle)->Arg(2)->Arg(6)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
