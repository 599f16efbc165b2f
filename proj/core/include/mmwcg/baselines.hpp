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

#ifndef MMWCG_BASELINES_HPP
#define MMWCG_BASELINES_HPP

#include <mmwcg/channel.hpp>
#include <mmwcg/game.hpp>
#include <mmwcg/partition.hpp>
#include <mmwcg/scenario.hpp>

#include <cstdint>
#include <vector>

namespace mmwcg {

/**
 * \brief Random sub-channel allocation (RA).
 *
 * Links are visited in id order. A D2D link gets a uniform slot; an access
 * link gets a uniform slot among those not yet holding an access link of its
 * base station. Throws InfeasibleScenario if no such slot is left.
 */
Partition random_allocation(const Scenario& scenario, std::uint64_t seed);

/**
 * \brief Partial coalition game (PCG).
 *
 * Starts from random_allocation(scenario, allocation_seed), freezes the
 * access links there and lets only the D2D links play the formation game.
 */
FormationResult pcg_allocation(const CoalitionGame& game, const GameConfig& config, std::uint64_t allocation_seed);

/// Full coalition game (CG) started from random_allocation(scenario, allocation_seed).
FormationResult cg_allocation(const CoalitionGame& game, const GameConfig& config, std::uint64_t allocation_seed);

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

struct OracleResult
{
	Partition partition;
	std::vector<int> assignment;
	double utility{0};
	std::uint64_t feasible_assignments{0};
};

/**
 * \brief Exhaustive search for the utility-maximizing feasible partition.
 *
 * Enumerates all |C|^|links| slot vectors in lexicographic order and keeps
 * the first one that strictly beats the incumbent, so ties resolve to the
 * lexicographically smallest assignment. Utilities come from
 * oracle_utility(), which shares no code with CoalitionGame.
 *
 * Throws InstanceTooLarge when |C|^|links| exceeds \p budget.
 */
OracleResult brute_force_optimal(const Scenario& scenario,
                                 const ChannelModel& model,
                                 std::uint64_t budget = kDefaultOracleBudget);

/// Sum rate of a slot-per-link assignment, evaluated straight from the link
/// budget formulas. Infeasible assignments are evaluated all the same.
double oracle_utility(const Scenario& scenario, const ChannelModel& model, const std::vector<int>& assignment);

} // namespace mmwcg

#endif // MMWCG_BASELINES_HPP
