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
#include <mmwcg/scenario.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace mmwcg {

namespace {

using nlohmann::json;

json point_json(const Point2D& p)
{
	return {{"x", p.x}, {"y", p.y}};
}

Point2D point_from(const json& j)
{
	return {j.at("x").get<double>(), j.at("y").get<double>()};
}

json node_json(const NodeRef& n)
{
	return {{"kind", n.kind == NodeKind::BaseStation ? "BaseStation" : "UserEquipment"}, {"id", n.id}};
}

NodeRef node_from(const json& j)
{
	const auto kind = j.at("kind").get<std::string>();
	NodeRef n;
	if (kind == "BaseStation")
	{
		n.kind = NodeKind::BaseStation;
	}
	else if (kind == "UserEquipment")
	{
		n.kind = NodeKind::UserEquipment;
	}
	else
	{
		throw ConfigError("unknown node kind '" + kind + "'");
	}
	n.id = j.at("id").get<NodeId>();
	return n;
}

} // namespace

std::string scenario_to_json(const Scenario& s)
{
	json bss = json::array();
	for (const auto& b : s.base_stations)
	{
		bss.push_back({{"id", b.id}, {"position", point_json(b.position)}});
	}
	json ues = json::array();
	for (const auto& u : s.users)
	{
		ues.push_back({{"id", u.id}, {"position", point_json(u.position)}});
	}
	json links = json::array();
	for (const auto& l : s.links)
	{
		json jl = {{"id", l.id},
		           {"kind", l.is_access() ? "Access" : "D2D"},
		           {"tx_node", node_json(l.tx_node)},
		           {"rx_node", node_json(l.rx_node)}};
		jl["bs_id"] = l.bs_id ? json(*l.bs_id) : json(nullptr);
		links.push_back(std::move(jl));
	}
	json root = {{"base_stations", std::move(bss)},
	             {"users", std::move(ues)},
	             {"links", std::move(links)},
	             {"num_subchannels", s.num_subchannels}};
	return root.dump(2) + "\n";
}

Scenario scenario_from_json(std::string_view text)
{
	try
	{
		const json root = json::parse(text);
		Scenario s;
		for (const auto& jb : root.at("base_stations"))
		{
			s.base_stations.push_back({jb.at("id").get<NodeId>(), point_from(jb.at("position"))});
		}
		for (const auto& ju : root.at("users"))
		{
			s.users.push_back({ju.at("id").get<NodeId>(), point_from(ju.at("position"))});
		}
		for (const auto& jl : root.at("links"))
		{
			Link l;
			l.id = jl.at("id").get<LinkId>();
			const auto kind = jl.at("kind").get<std::string>();
			if (kind == "Access")
			{
				l.kind = LinkKind::Access;
			}
			else if (kind == "D2D")
			{
				l.kind = LinkKind::D2D;
			}
			else
			{
				throw ConfigError("unknown link kind '" + kind + "'");
			}
			l.tx_node = node_from(jl.at("tx_node"));
			l.rx_node = node_from(jl.at("rx_node"));
			if (jl.contains("bs_id") && !jl.at("bs_id").is_null())
			{
				l.bs_id = jl.at("bs_id").get<NodeId>();
			}
			s.links.push_back(l);
		}
		s.num_subchannels = root.at("num_subchannels").get<int>();
		return s;
	}
	catch (const json::exception& e)
	{
		throw ConfigError(std::string("malformed scenario: ") + e.what());
	}
}

Scenario load_scenario(const std::string& path)
{
	std::ifstream in(path);
	if (!in)
	{
		throw ConfigError("cannot open scenario file '" + path + "'");
	}
	std::ostringstream oss;
	oss << in.rdbuf();
	return scenario_from_json(oss.str());
}

void save_scenario(const Scenario& scenario, const std::string& path)
{
	std::ofstream out(path, std::ios::binary);
	if (!out)
	{
		throw Error("cannot write scenario file '" + path + "'");
	}
	out << scenario_to_json(scenario);
	if (!out)
	{
		throw Error("write failed for '" + path + "'");
	}
}

} // namespace mmwcg
