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
#include <mmwcg/partition.hpp>

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace mmwcg {

Partition::Partition(std::size_t num_links, int num_slots)
	: Partition(std::vector<int>(num_links, 0), num_slots)
{
}

Partition::Partition(std::vector<int> assignment, int num_slots)
	: assignment_(std::move(assignment)), coalitions_(static_cast<std::size_t>(std::max(num_slots, 0)))
{
	if (num_slots < 1)
	{
		throw std::invalid_argument("a partition needs at least one slot");
	}
	for (std::size_t l = 0; l < assignment_.size(); ++l)
	{
		const int s = assignment_[l];
		if (s < 0 || s >= num_slots)
		{
			throw std::invalid_argument("slot " + std::to_string(s) + " of link " + std::to_string(l) + " out of range");
		}
		coalitions_[static_cast<std::size_t>(s)].push_back(static_cast<LinkId>(l));
	}
}

void Partition::move(LinkId link, int slot)
{
	auto& from = coalitions_.at(static_cast<std::size_t>(assignment_.at(static_cast<std::size_t>(link))));
	auto& to = coalitions_.at(static_cast<std::size_t>(slot));
	from.erase(std::lower_bound(from.begin(), from.end(), link));
	to.insert(std::lower_bound(to.begin(), to.end(), link), link);
	assignment_[static_cast<std::size_t>(link)] = slot;
}

bool is_feasible_move(const Partition& partition, const SwitchMove& move, const Scenario& scenario)
{
	if (move.to_coalition == move.from_coalition || move.to_coalition < 0 || move.to_coalition >= partition.num_slots())
	{
		return false;
	}
	if (move.link_id < 0 || static_cast<std::size_t>(move.link_id) >= partition.num_links()
	    || partition.slot_of(move.link_id) != move.from_coalition)
	{
		return false;
	}
	const Link& link = scenario.links[static_cast<std::size_t>(move.link_id)];
	if (!link.is_access())
	{
		return true;
	}
	for (LinkId other : partition.members(move.to_coalition))
	{
		const Link& o = scenario.links[static_cast<std::size_t>(other)];
		if (o.is_access() && o.bs_id == link.bs_id)
		{
			return false;
		}
	}
	return true;
}

Partition apply_switch(const Partition& partition, const SwitchMove& move, const Scenario& scenario)
{
	if (!is_feasible_move(partition, move, scenario))
	{
		throw InfeasibleMove("link " + std::to_string(move.link_id) + " cannot switch from coalition "
		                     + std::to_string(move.from_coalition) + " to " + std::to_string(move.to_coalition));
	}
	Partition next = partition;
	next.move(move.link_id, move.to_coalition);
	return next;
}

std::vector<std::string> validate_partition(const Partition& partition, const Scenario& scenario)
{
	std::vector<std::string> problems;
	if (partition.num_links() != scenario.links.size())
	{
		problems.push_back("partition covers " + std::to_string(partition.num_links()) + " links, scenario has "
		                   + std::to_string(scenario.links.size()));
		return problems;
	}
	if (partition.num_slots() != scenario.num_subchannels)
	{
		problems.push_back("partition has " + std::to_string(partition.num_slots()) + " slots, scenario has "
		                   + std::to_string(scenario.num_subchannels) + " sub-channels");
	}

	std::vector<int> seen(partition.num_links(), 0);
	for (int s = 0; s < partition.num_slots(); ++s)
	{
		std::vector<NodeId> bss;
		for (LinkId l : partition.members(s))
		{
			++seen[static_cast<std::size_t>(l)];
			if (partition.slot_of(l) != s)
			{
				problems.push_back("link " + std::to_string(l) + " listed in slot " + std::to_string(s)
				                   + " but assigned to " + std::to_string(partition.slot_of(l)));
			}
			const Link& link = scenario.links[static_cast<std::size_t>(l)];
			if (link.is_access() && link.bs_id)
			{
				bss.push_back(*link.bs_id);
			}
		}
		std::sort(bss.begin(), bss.end());
		if (std::adjacent_find(bss.begin(), bss.end()) != bss.end())
		{
			problems.push_back("slot " + std::to_string(s) + " holds two access links of one base station");
		}
	}
	for (std::size_t l = 0; l < seen.size(); ++l)
	{
		if (seen[l] != 1)
		{
			problems.push_back("link " + std::to_string(l) + " appears in " + std::to_string(seen[l]) + " coalitions");
		}
	}
	return problems;
}

std::string partition_to_json(const Partition& partition)
{
	nlohmann::json coalitions = nlohmann::json::array();
	for (int s = 0; s < partition.num_slots(); ++s)
	{
		const auto m = partition.members(s);
		coalitions.push_back(std::vector<LinkId>(m.begin(), m.end()));
	}
	nlohmann::json root = {{"num_subchannels", partition.num_slots()}, {"coalitions", std::move(coalitions)}};
	return root.dump(2) + "\n";
}

Partition partition_from_json(std::string_view text)
{
	try
	{
		const auto root = nlohmann::json::parse(text);
		const int slots = root.at("num_subchannels").get<int>();
		const auto& coalitions = root.at("coalitions");
		if (static_cast<int>(coalitions.size()) != slots)
		{
			throw ConfigError("coalition count does not match num_subchannels");
		}
		std::size_t n = 0;
		for (const auto& c : coalitions)
		{
			n += c.size();
		}
		std::vector<int> assignment(n, -1);
		for (int s = 0; s < slots; ++s)
		{
			for (const auto& jl : coalitions[static_cast<std::size_t>(s)])
			{
				const auto l = jl.get<LinkId>();
				if (l < 0 || static_cast<std::size_t>(l) >= n || assignment[static_cast<std::size_t>(l)] != -1)
				{
					throw ConfigError("link ids in a partition must be dense and unique");
				}
				assignment[static_cast<std::size_t>(l)] = s;
			}
		}
		return Partition(std::move(assignment), slots);
	}
	catch (const nlohmann::json::exception& e)
	{
		throw ConfigError(std::string("malformed partition: ") + e.what());
	}
}

} // namespace mmwcg
