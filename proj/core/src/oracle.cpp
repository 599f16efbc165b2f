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

// Straight-line evaluation of the link budget for the exhaustive oracle.
// Deliberately avoids channel.cpp and game.cpp so the two can cross-check.

#include <mmwcg/baselines.hpp>
#include <mmwcg/error.hpp>

#include <cmath>
#include <numbers>

namespace mmwcg {

namespace {

struct Geometry
{
	double tx_x, tx_y, rx_x, rx_y;
	const AntennaPattern* tx_ant;
	const AntennaPattern* rx_ant;
	bool access;
	int bs;
};

double pattern_gain(const AntennaPattern& a, double off)
{
	if (off <= a.main_lobe_width / 2)
	{
		const double g = a.max_gain * std::pow(10.0, -0.301 * std::pow(2 * off / a.half_power_beamwidth, 2));
		return g > a.side_lobe_gain ? g : a.side_lobe_gain;
	}
	return a.side_lobe_gain;
}

// Angle between the ray (ox,oy)->(ax,ay) and the ray (ox,oy)->(tx,ty), in [0, pi].
double angle_between(double ox, double oy, double ax, double ay, double tx, double ty)
{
	const double ux = ax - ox, uy = ay - oy;
	const double vx = tx - ox, vy = ty - oy;
	const double cross = ux * vy - uy * vx;
	const double dot = ux * vx + uy * vy;
	return std::abs(std::atan2(cross, dot));
}

std::vector<Geometry> geometry(const Scenario& s, const ChannelModel& m)
{
	std::vector<Geometry> g;
	for (const Link& l : s.links)
	{
		const Point2D t = l.tx_node.kind == NodeKind::BaseStation ? s.base_stations.at(l.tx_node.id).position : s.users.at(l.tx_node.id).position;
		const Point2D r = l.rx_node.kind == NodeKind::BaseStation ? s.base_stations.at(l.rx_node.id).position : s.users.at(l.rx_node.id).position;
		g.push_back({t.x, t.y, r.x, r.y,
		             l.tx_node.kind == NodeKind::BaseStation ? &m.bs_antenna : &m.ue_antenna,
		             l.rx_node.kind == NodeKind::BaseStation ? &m.bs_antenna : &m.ue_antenna,
		             l.is_access(), l.bs_id.value_or(-1)});
	}
	return g;
}

double utility_of(const std::vector<Geometry>& g, const ChannelModel& m, const std::vector<int>& assignment)
{
	const RadioParams& p = m.radio;
	const double lambda_ratio = p.carrier_wavelength / (4 * std::numbers::pi);
	const double k0 = lambda_ratio * lambda_ratio;
	const double noise = p.noise_psd * p.subchannel_bandwidth_hz;

	double total = 0;
	for (std::size_t v = 0; v < g.size(); ++v)
	{
		const Geometry& a = g[v];
		const double d = std::sqrt((a.tx_x - a.rx_x) * (a.tx_x - a.rx_x) + (a.tx_y - a.rx_y) * (a.tx_y - a.rx_y));
		const double signal = k0 * a.tx_ant->max_gain * a.rx_ant->max_gain * std::pow(d, -p.path_loss_exponent) * p.tx_power_watts;

		double interference = 0;
		for (std::size_t u = 0; u < g.size(); ++u)
		{
			if (u == v || assignment[u] != assignment[v])
			{
				continue;
			}
			const Geometry& b = g[u];
			const double gt = pattern_gain(*b.tx_ant, angle_between(b.tx_x, b.tx_y, b.rx_x, b.rx_y, a.rx_x, a.rx_y));
			const double gr = pattern_gain(*a.rx_ant, angle_between(a.rx_x, a.rx_y, a.tx_x, a.tx_y, b.tx_x, b.tx_y));
			const double duv = std::sqrt((b.tx_x - a.rx_x) * (b.tx_x - a.rx_x) + (b.tx_y - a.rx_y) * (b.tx_y - a.rx_y));
			interference += p.mui_factor * k0 * gt * gr * std::pow(duv, -p.path_loss_exponent) * p.tx_power_watts;
		}
		total += p.transceiver_efficiency * p.subchannel_bandwidth_hz * std::log2(1 + signal / (noise + interference));
	}
	return total;
}

bool feasible(const std::vector<Geometry>& g, const std::vector<int>& assignment)
{
	for (std::size_t i = 0; i < g.size(); ++i)
	{
		if (!g[i].access)
		{
			continue;
		}
		for (std::size_t j = i + 1; j < g.size(); ++j)
		{
			if (g[j].access && g[j].bs == g[i].bs && assignment[j] == assignment[i])
			{
				return false;
			}
		}
	}
	return true;
}

} // namespace

double oracle_utility(const Scenario& scenario, const ChannelModel& model, const std::vector<int>& assignment)
{
	return utility_of(geometry(scenario, model), model, assignment);
}

OracleResult brute_force_optimal(const Scenario& scenario, const ChannelModel& model, std::uint64_t budget)
{
	const std::size_t n = scenario.links.size();
	const auto c = static_cast<std::uint64_t>(scenario.num_subchannels);
	if (c < 1)
	{
		throw InfeasibleScenario("scenario has no sub-channels");
	}
	std::uint64_t count = 1;
	for (std::size_t i = 0; i < n; ++i)
	{
		if (count > budget / c)
		{
			throw InstanceTooLarge(std::to_string(c) + "^" + std::to_string(n) + " assignments exceed the budget of "
			                       + std::to_string(budget));
		}
		count *= c;
	}

	const auto g = geometry(scenario, model);
	std::vector<int> assignment(n, 0);
	OracleResult best;
	bool found = false;
	for (std::uint64_t k = 0; k < count; ++k)
	{
		if (k > 0)
		{
			// odometer increment, last position fastest: lexicographic order
			for (std::size_t pos = n; pos-- > 0;)
			{
				if (++assignment[pos] < static_cast<int>(c))
				{
					break;
				}
				assignment[pos] = 0;
			}
		}
		if (!feasible(g, assignment))
		{
			continue;
		}
		++best.feasible_assignments;
		const double u = utility_of(g, model, assignment);
		if (!found || u > best.utility * (1 + 1e-12))
		{
			best.utility = u;
			best.assignment = assignment;
			found = true;
		}
	}
	if (!found)
	{
		throw InfeasibleScenario("no feasible assignment exists");
	}
	best.partition = Partition(best.assignment, static_cast<int>(c));
	return best;
}

} // namespace mmwcg
