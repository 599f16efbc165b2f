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
#include <mmwcg/rng.hpp>

#include <algorithm>

namespace mmwcg {

Partition random_allocation(const Scenario& scenario, std::uint64_t seed)
{
	const int slots = scenario.num_subchannels;
	if (slots < 1)
	{
		throw InfeasibleScenario("scenario has no sub-channels");
	}
	Rng rng(seed);
	std::vector<int> assignment(scenario.links.size(), 0);
	// used[bs * slots + c]: base station bs already has an access link on c
	std::vector<char> used(scenario.base_stations.size() * static_cast<std::size_t>(slots), 0);
	std::vector<int> free_slots;
	free_slots.reserve(static_cast<std::size_t>(slots));

	for (std::size_t l = 0; l < scenario.links.size(); ++l)
	{
		const Link& link = scenario.links[l];
		if (!link.is_access())
		{
			assignment[l] = static_cast<int>(rng.index(static_cast<std::size_t>(slots)));
			continue;
		}
		const auto bs = static_cast<std::size_t>(*link.bs_id);
		free_slots.clear();
		for (int c = 0; c < slots; ++c)
		{
			if (!used[bs * static_cast<std::size_t>(slots) + static_cast<std::size_t>(c)])
			{
				free_slots.push_back(c);
			}
		}
		if (free_slots.empty())
		{
			throw InfeasibleScenario("base station " + std::to_string(bs) + " has more access links than sub-channels");
		}
		const int c = free_slots[rng.index(free_slots.size())];
		used[bs * static_cast<std::size_t>(slots) + static_cast<std::size_t>(c)] = 1;
		assignment[l] = c;
	}
	return Partition(std::move(assignment), slots);
}

FormationResult pcg_allocation(const CoalitionGame& game, const GameConfig& config, std::uint64_t allocation_seed)
{
	return run_coalition_formation(game, config, random_allocation(game.scenario(), allocation_seed), MoveScope::D2DOnly);
}

FormationResult cg_allocation(const CoalitionGame& game, const GameConfig& config, std::uint64_t allocation_seed)
{
	return run_coalition_formation(game, config, random_allocation(game.scenario(), allocation_seed), MoveScope::AllLinks);
}

} // namespace mmwcg
