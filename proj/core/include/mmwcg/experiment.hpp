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

#ifndef MMWCG_EXPERIMENT_HPP
#define MMWCG_EXPERIMENT_HPP

#include <mmwcg/config.hpp>
#include <mmwcg/game.hpp>
#include <mmwcg/partition.hpp>
#include <mmwcg/scenario.hpp>

#include <cstdint>
#include <vector>

namespace mmwcg {

struct RunRecord
{
	int sweep_value{0};
	Scheme scheme{Scheme::CG};
	std::uint64_t seed{0};
	double sum_rate_bps{0};
	std::int64_t iterations{0};
	bool nash_certified{false};
	double wall_time_ms{0};
};

/**
 * Seeds of one replication.
 *
 * replication = derive_seed(base_seed, {sweep_value, replication_index})
 * scenario    = derive_seed(replication, {1})
 * allocation  = derive_seed(replication, {2})   random access/D2D placement
 * game        = derive_seed(replication, {3})   switch probes of CG and PCG
 *
 * None depends on the scheme, so every scheme of a replication sees the same
 * scenario and the same initial partition.
 */
struct ReplicationSeeds
{
	std::uint64_t replication{0};
	std::uint64_t scenario{0};
	std::uint64_t allocation{0};
	std::uint64_t game{0};
};

ReplicationSeeds replication_seeds(std::uint64_t base_seed, int sweep_value, int replication_index);

/// Value of the swept variable in the config as written (num_subchannels
/// when there is no sweep).
int base_sweep_value(const ExperimentConfig& config);

/// Scenario configuration of one sweep point, seed not yet set.
ScenarioConfig scenario_config_at(const ExperimentConfig& config, int sweep_value);

Scenario scenario_for(const ExperimentConfig& config, int sweep_value, int replication_index);

struct PointResult
{
	RunRecord record;
	Partition partition;
	/// Empty for RA.
	UtilityTrace trace;
};

PointResult run_point_detailed(const ExperimentConfig& config, int sweep_value, Scheme scheme, int replication_index);

RunRecord run_point(const ExperimentConfig& config, int sweep_value, Scheme scheme, int replication_index);

/// All schemes and replications at one sweep value, ordered by scheme then replication.
std::vector<RunRecord> run_replications(const ExperimentConfig& config, int sweep_value, unsigned jobs = 1);

/**
 * Every (sweep value, scheme, replication) combination. Records are ordered
 * by sweep value, then scheme in config order, then replication; the result
 * does not depend on \p jobs apart from wall times.
 */
std::vector<RunRecord> run_sweep(const ExperimentConfig& config, unsigned jobs = 1);

} // namespace mmwcg

#endif // MMWCG_EXPERIMENT_HPP
