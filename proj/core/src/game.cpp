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
#include <mmwcg/game.hpp>

#include <algorithm>
#include <sstream>

namespace mmwcg {

bool strictly_improves(double candidate, double baseline) noexcept
{
	return candidate > baseline * (1.0 + kImprovementTolerance);
}

CoalitionGame::CoalitionGame(Scenario scenario, ChannelModel model)
	: scenario_(std::move(scenario)), model_(std::move(model))
{
	model_.radio.validate();
	const std::size_t n = scenario_.links.size();
	signal_.resize(n);
	cross_.assign(n * n, 0.0);

	std::vector<Beam> tx_beams;
	std::vector<Beam> rx_beams;
	tx_beams.reserve(n);
	rx_beams.reserve(n);
	for (const Link& l : scenario_.links)
	{
		const Point2D& tx = scenario_.tx_position(l);
		const Point2D& rx = scenario_.rx_position(l);
		tx_beams.push_back(Beam::toward(tx, rx));
		rx_beams.push_back(Beam::toward(rx, tx));
	}

	const RadioParams& radio = model_.radio;
	for (std::size_t v = 0; v < n; ++v)
	{
		const Link& lv = scenario_.links[v];
		const AntennaPattern& tx_pat = model_.antenna(lv.tx_node.kind);
		const AntennaPattern& rx_pat = model_.antenna(lv.rx_node.kind);
		const Point2D& tx = scenario_.tx_position(lv);
		const Point2D& rx = scenario_.rx_position(lv);
		signal_[v] = received_power(radio,
		                            directional_gain(tx_pat, tx_beams[v], rx),
		                            directional_gain(rx_pat, rx_beams[v], tx),
		                            distance(tx, rx));

		for (std::size_t u = 0; u < n; ++u)
		{
			if (u == v)
			{
				continue;
			}
			const Link& lu = scenario_.links[u];
			if (lu.is_access() && lv.is_access() && lu.bs_id == lv.bs_id)
			{
				continue;
			}
			if (scenario_.tx_position(lu) == rx)
			{
				std::ostringstream oss;
				oss << "transmitter of link " << lu.id << " coincides with the receiver of link " << lv.id;
				throw DomainError(oss.str());
			}
			cross_[v * n + u] = interference_power(radio,
			                                       tx_beams[u],
			                                       rx,
			                                       rx_beams[v],
			                                       model_.antenna(lu.tx_node.kind),
			                                       rx_pat);
		}
	}
}

double CoalitionGame::member_rate(std::span<const LinkId> coalition, LinkId link) const
{
	const std::size_t n = num_players();
	const double* row = cross_.data() + static_cast<std::size_t>(link) * n;
	double interference_sum = 0;
	for (LinkId u : coalition)
	{
		if (u != link)
		{
			interference_sum += row[static_cast<std::size_t>(u)];
		}
	}
	return link_rate(sinr(signal_[static_cast<std::size_t>(link)], interference_sum, model_.radio), model_.radio);
}

double CoalitionGame::member_rate(const Partition& partition, LinkId link) const
{
	return member_rate(partition.members(partition.slot_of(link)), link);
}

double CoalitionGame::coalition_value(std::span<const LinkId> members) const
{
	double total = 0;
	for (LinkId v : members)
	{
		total += member_rate(members, v);
	}
	return total;
}

double CoalitionGame::coalition_value(const Partition& partition, int slot) const
{
	return coalition_value(partition.members(slot));
}

double CoalitionGame::partition_utility(const Partition& partition) const
{
	double total = 0;
	for (int s = 0; s < partition.num_slots(); ++s)
	{
		total += coalition_value(partition, s);
	}
	return total;
}

CoalitionGame::PairValues CoalitionGame::pair_values(const Partition& partition, const SwitchMove& move) const
{
	const auto from = partition.members(move.from_coalition);
	const auto to = partition.members(move.to_coalition);

	std::vector<LinkId> from_after;
	from_after.reserve(from.size());
	std::copy_if(from.begin(), from.end(), std::back_inserter(from_after), [&](LinkId l) { return l != move.link_id; });

	std::vector<LinkId> to_after(to.begin(), to.end());
	to_after.insert(std::lower_bound(to_after.begin(), to_after.end(), move.link_id), move.link_id);

	return {coalition_value(from) + coalition_value(to), coalition_value(from_after) + coalition_value(to_after)};
}

bool CoalitionGame::prefers(const Partition& partition, const SwitchMove& move) const
{
	const auto v = pair_values(partition, move);
	return strictly_improves(v.after, v.before);
}

bool CoalitionGame::weakly_prefers(const Partition& partition, const SwitchMove& move) const
{
	const auto v = pair_values(partition, move);
	return !strictly_improves(v.before, v.after);
}

std::vector<int> CoalitionGame::candidate_targets(const Partition& partition, LinkId link) const
{
	std::vector<int> out;
	const int from = partition.slot_of(link);
	bool empty_taken = false;
	for (int s = 0; s < partition.num_slots(); ++s)
	{
		if (s == from)
		{
			continue;
		}
		if (partition.empty(s))
		{
			if (!empty_taken)
			{
				out.push_back(s);
				empty_taken = true;
			}
			continue;
		}
		if (is_feasible_move(partition, {link, from, s}, scenario_))
		{
			out.push_back(s);
		}
	}
	return out;
}

std::vector<LinkId> CoalitionGame::movable_links(MoveScope scope) const
{
	std::vector<LinkId> out;
	for (const Link& l : scenario_.links)
	{
		if (scope == MoveScope::AllLinks || !l.is_access())
		{
			out.push_back(l.id);
		}
	}
	return out;
}

std::optional<SwitchMove> CoalitionGame::find_improving_move(const Partition& partition, MoveScope scope) const
{
	for (LinkId l : movable_links(scope))
	{
		const int from = partition.slot_of(l);
		for (int to : candidate_targets(partition, l))
		{
			const SwitchMove move{l, from, to};
			if (prefers(partition, move))
			{
				return move;
			}
		}
	}
	return std::nullopt;
}

bool CoalitionGame::is_nash_stable(const Partition& partition, MoveScope scope) const
{
	return !find_improving_move(partition, scope).has_value();
}

} // namespace mmwcg
