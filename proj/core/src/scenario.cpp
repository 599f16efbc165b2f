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
#include <mmwcg/rng.hpp>
#include <mmwcg/scenario.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace mmwcg {

namespace {

constexpr int kNearestBsAttempts = 10000;

Point2D uniform_in_disk(Rng& rng, const Point2D& center, double radius)
{
	for (;;)
	{
		const double x = rng.uniform(-1.0, 1.0);
		const double y = rng.uniform(-1.0, 1.0);
		if (x * x + y * y <= 1.0)
		{
			return {center.x + radius * x, center.y + radius * y};
		}
	}
}

bool inside(const Point2D& p, double radius)
{
	return p.x * p.x + p.y * p.y <= radius * radius;
}

std::size_t nearest_bs(const std::vector<BaseStation>& bss, const Point2D& p)
{
	std::size_t best = 0;
	double best_d = std::numeric_limits<double>::infinity();
	for (std::size_t b = 0; b < bss.size(); ++b)
	{
		const double d = distance(bss[b].position, p);
		if (d < best_d)
		{
			best_d = d;
			best = b;
		}
	}
	return best;
}

Point2D place_access_ue(Rng& rng, const std::vector<BaseStation>& bss, std::size_t target, double region_radius)
{
	for (int attempt = 0; attempt < kNearestBsAttempts; ++attempt)
	{
		const Point2D p = uniform_in_disk(rng, {0, 0}, region_radius);
		if (nearest_bs(bss, p) == target && p != bss[target].position)
		{
			return p;
		}
	}

	// Voronoi cell of the target is tiny: draw close to the station instead.
	double half_gap = region_radius;
	for (std::size_t b = 0; b < bss.size(); ++b)
	{
		if (b != target)
		{
			half_gap = std::min(half_gap, 0.5 * distance(bss[b].position, bss[target].position));
		}
	}
	if (!(half_gap > 0))
	{
		throw InfeasibleScenario("base stations " + std::to_string(target) + " and a neighbour coincide");
	}
	for (;;)
	{
		const Point2D p = uniform_in_disk(rng, bss[target].position, half_gap);
		if (inside(p, region_radius) && p != bss[target].position
		    && distance(p, bss[target].position) < half_gap)
		{
			return p;
		}
	}
}

} // namespace

double distance(const Point2D& a, const Point2D& b) noexcept
{
	return std::hypot(a.x - b.x, a.y - b.y);
}

double bearing(const Point2D& from, const Point2D& to) noexcept
{
	return std::atan2(to.y - from.y, to.x - from.x);
}

const Point2D& Scenario::position(const NodeRef& node) const
{
	if (node.kind == NodeKind::BaseStation)
	{
		return base_stations.at(static_cast<std::size_t>(node.id)).position;
	}
	return users.at(static_cast<std::size_t>(node.id)).position;
}

std::size_t Scenario::num_access_links() const noexcept
{
	return static_cast<std::size_t>(std::count_if(links.begin(), links.end(), [](const Link& l) { return l.is_access(); }));
}

std::size_t Scenario::num_d2d_links() const noexcept
{
	return links.size() - num_access_links();
}

void ScenarioConfig::validate() const
{
	if (!(region_radius > 0) || !std::isfinite(region_radius))
	{
		throw ConfigError("region_radius must be positive");
	}
	if (!(d2d_max_distance > 0) || !std::isfinite(d2d_max_distance))
	{
		throw ConfigError("d2d_max_distance must be positive");
	}
	if (num_cells < 0 || num_access_links < 0 || num_d2d_links < 0)
	{
		throw ConfigError("link and cell counts must be non-negative");
	}
	if (num_subchannels < 1)
	{
		throw ConfigError("num_subchannels must be at least 1");
	}
	if (num_access_links > 0 && num_cells == 0)
	{
		throw ConfigError("access links need at least one cell");
	}
}

Scenario generate_scenario(const ScenarioConfig& config)
{
	config.validate();

	if (config.num_access_links > 0)
	{
		const int per_cell = (config.num_access_links + config.num_cells - 1) / config.num_cells;
		if (per_cell > config.num_subchannels)
		{
			std::ostringstream oss;
			oss << config.num_access_links << " access links over " << config.num_cells
			    << " cells put " << per_cell << " on one base station, more than the "
			    << config.num_subchannels << " sub-channels";
			throw InfeasibleScenario(oss.str());
		}
	}

	Rng rng(config.rng_seed);
	Scenario s;
	s.num_subchannels = config.num_subchannels;

	for (int b = 0; b < config.num_cells; ++b)
	{
		s.base_stations.push_back({b, uniform_in_disk(rng, {0, 0}, config.region_radius)});
	}

	for (int a = 0; a < config.num_access_links; ++a)
	{
		const auto target = static_cast<std::size_t>(a % config.num_cells);
		const NodeId ue = static_cast<NodeId>(s.users.size());
		s.users.push_back({ue, place_access_ue(rng, s.base_stations, target, config.region_radius)});
		const NodeId bs = static_cast<NodeId>(target);
		s.links.push_back({a, LinkKind::Access, {NodeKind::UserEquipment, ue}, {NodeKind::BaseStation, bs}, bs});
	}

	for (int d = 0; d < config.num_d2d_links; ++d)
	{
		const Point2D tx = uniform_in_disk(rng, {0, 0}, config.region_radius);
		Point2D rx;
		do
		{
			rx = uniform_in_disk(rng, tx, config.d2d_max_distance);
		} while (!inside(rx, config.region_radius) || rx == tx);

		const NodeId tx_id = static_cast<NodeId>(s.users.size());
		s.users.push_back({tx_id, tx});
		s.users.push_back({tx_id + 1, rx});
		const LinkId id = config.num_access_links + d;
		s.links.push_back({id, LinkKind::D2D, {NodeKind::UserEquipment, tx_id}, {NodeKind::UserEquipment, tx_id + 1}, std::nullopt});
	}

	return s;
}

std::string_view to_string(ViolationKind kind) noexcept
{
	switch (kind)
	{
		case ViolationKind::InvalidSubchannelCount: return "InvalidSubchannelCount";
		case ViolationKind::NonFinitePosition: return "NonFinitePosition";
		case ViolationKind::NonDenseId: return "NonDenseId";
		case ViolationKind::DanglingNode: return "DanglingNode";
		case ViolationKind::SelfLink: return "SelfLink";
		case ViolationKind::AccessEndpoint: return "AccessEndpoint";
		case ViolationKind::D2DEndpoint: return "D2DEndpoint";
		case ViolationKind::BsIdMismatch: return "BsIdMismatch";
		case ViolationKind::D2DTooLong: return "D2DTooLong";
		case ViolationKind::BsOverloaded: return "BsOverloaded";
	}
	return "Unknown";
}

std::vector<Violation> validate_scenario(const Scenario& s, double d2d_max_distance)
{
	std::vector<Violation> out;
	auto add = [&out](ViolationKind kind, int subject, std::string msg) {
		out.push_back({kind, subject, std::move(msg)});
	};

	if (s.num_subchannels < 1)
	{
		add(ViolationKind::InvalidSubchannelCount, -1, "num_subchannels must be at least 1");
	}

	auto finite = [](const Point2D& p) { return std::isfinite(p.x) && std::isfinite(p.y); };
	for (std::size_t i = 0; i < s.base_stations.size(); ++i)
	{
		const auto& b = s.base_stations[i];
		if (b.id != static_cast<NodeId>(i))
		{
			add(ViolationKind::NonDenseId, b.id, "base station at index " + std::to_string(i) + " has id " + std::to_string(b.id));
		}
		if (!finite(b.position))
		{
			add(ViolationKind::NonFinitePosition, b.id, "base station position is not finite");
		}
	}
	for (std::size_t i = 0; i < s.users.size(); ++i)
	{
		const auto& u = s.users[i];
		if (u.id != static_cast<NodeId>(i))
		{
			add(ViolationKind::NonDenseId, u.id, "user at index " + std::to_string(i) + " has id " + std::to_string(u.id));
		}
		if (!finite(u.position))
		{
			add(ViolationKind::NonFinitePosition, u.id, "user position is not finite");
		}
	}

	auto exists = [&s](const NodeRef& n) {
		const auto count = n.kind == NodeKind::BaseStation ? s.base_stations.size() : s.users.size();
		return n.id >= 0 && static_cast<std::size_t>(n.id) < count;
	};

	std::vector<int> per_bs(s.base_stations.size(), 0);
	for (std::size_t i = 0; i < s.links.size(); ++i)
	{
		const Link& l = s.links[i];
		if (l.id != static_cast<LinkId>(i))
		{
			add(ViolationKind::NonDenseId, l.id, "link at index " + std::to_string(i) + " has id " + std::to_string(l.id));
		}
		if (!exists(l.tx_node) || !exists(l.rx_node))
		{
			add(ViolationKind::DanglingNode, l.id, "link references a missing node");
			continue;
		}
		if (l.tx_node == l.rx_node)
		{
			add(ViolationKind::SelfLink, l.id, "link transmitter equals its receiver");
			continue;
		}
		if (l.is_access())
		{
			if (l.tx_node.kind != NodeKind::UserEquipment || l.rx_node.kind != NodeKind::BaseStation)
			{
				add(ViolationKind::AccessEndpoint, l.id, "access link must go from a user to a base station");
				continue;
			}
			if (!l.bs_id || *l.bs_id != l.rx_node.id)
			{
				add(ViolationKind::BsIdMismatch, l.id, "bs_id must equal the receiving base station");
				continue;
			}
			++per_bs[static_cast<std::size_t>(l.rx_node.id)];
		}
		else
		{
			if (l.tx_node.kind != NodeKind::UserEquipment || l.rx_node.kind != NodeKind::UserEquipment)
			{
				add(ViolationKind::D2DEndpoint, l.id, "D2D link endpoints must be users");
				continue;
			}
			if (l.bs_id)
			{
				add(ViolationKind::BsIdMismatch, l.id, "D2D link must not carry a bs_id");
			}
			const double len = distance(s.tx_position(l), s.rx_position(l));
			if (len > d2d_max_distance)
			{
				std::ostringstream oss;
				oss << "D2D link length " << len << " m exceeds " << d2d_max_distance << " m";
				add(ViolationKind::D2DTooLong, l.id, oss.str());
			}
		}
	}

	for (std::size_t b = 0; b < per_bs.size(); ++b)
	{
		if (per_bs[b] > s.num_subchannels)
		{
			add(ViolationKind::BsOverloaded, static_cast<int>(b),
			    "base station " + std::to_string(b) + " serves " + std::to_string(per_bs[b])
			        + " access links but only " + std::to_string(s.num_subchannels) + " sub-channels exist");
		}
	}
	return out;
}

} // namespace mmwcg
