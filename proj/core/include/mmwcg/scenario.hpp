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

#ifndef MMWCG_SCENARIO_HPP
#define MMWCG_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mmwcg {

/// Position on the plane, in meters.
struct Point2D
{
	double x{0};
	double y{0};

	friend bool operator==(const Point2D&, const Point2D&) = default;
};

double distance(const Point2D& a, const Point2D& b) noexcept;

/// Bearing of \p to seen from \p from, in (-pi, pi].
double bearing(const Point2D& from, const Point2D& to) noexcept;

using NodeId = int;
using LinkId = int;

struct BaseStation
{
	NodeId id{0};
	Point2D position;

	friend bool operator==(const BaseStation&, const BaseStation&) = default;
};

struct UserEquipment
{
	NodeId id{0};
	Point2D position;

	friend bool operator==(const UserEquipment&, const UserEquipment&) = default;
};

enum class NodeKind
{
	BaseStation,
	UserEquipment
};

struct NodeRef
{
	NodeKind kind{NodeKind::UserEquipment};
	NodeId id{0};

	friend bool operator==(const NodeRef&, const NodeRef&) = default;
};

enum class LinkKind
{
	Access,
	D2D
};

struct Link
{
	LinkId id{0};
	LinkKind kind{LinkKind::D2D};
	NodeRef tx_node;
	NodeRef rx_node;
	/// Serving base station; set iff kind == Access.
	std::optional<NodeId> bs_id;

	bool is_access() const noexcept { return kind == LinkKind::Access; }

	friend bool operator==(const Link&, const Link&) = default;
};

/**
 * \brief A network instance: nodes, links and the number of sub-channels.
 *
 * Node and link ids are dense: the element with id k is stored at index k.
 * The set of players of the allocation game is the set of links.
 */
struct Scenario
{
	std::vector<BaseStation> base_stations;
	std::vector<UserEquipment> users;
	std::vector<Link> links;
	int num_subchannels{1};

	const Point2D& position(const NodeRef& node) const;
	const Point2D& tx_position(const Link& link) const { return position(link.tx_node); }
	const Point2D& rx_position(const Link& link) const { return position(link.rx_node); }

	std::size_t num_access_links() const noexcept;
	std::size_t num_d2d_links() const noexcept;

	friend bool operator==(const Scenario&, const Scenario&) = default;
};

inline constexpr double kDefaultRegionRadius = 100.0;
inline constexpr double kDefaultD2dMaxDistance = 5.0;

struct ScenarioConfig
{
	double region_radius{kDefaultRegionRadius};
	int num_cells{3};
	int num_access_links{15};
	int num_d2d_links{5};
	double d2d_max_distance{kDefaultD2dMaxDistance};
	int num_subchannels{9};
	std::uint64_t rng_seed{0};

	/// Throws ConfigError naming the first offending field.
	void validate() const;
};

/**
 * \brief Draws a random topology inside a disk centered at the origin.
 *
 * Base stations are uniform in the disk. Access link k is assigned to base
 * station k mod num_cells; its transmitter is drawn uniformly in the disk
 * until the base station it is nearest to is the assigned one. D2D
 * transmitters are uniform in the disk and each receiver is uniform in the
 * disk of radius d2d_max_distance around its transmitter, redrawn until it
 * lies inside the region. Every link gets its own user equipment(s).
 *
 * Ids: access links come first (0 .. A-1), D2D links after them. User ids
 * follow creation order.
 *
 * Throws InfeasibleScenario if some base station would carry more than
 * num_subchannels access links.
 */
Scenario generate_scenario(const ScenarioConfig& config);

enum class ViolationKind
{
	InvalidSubchannelCount,
	NonFinitePosition,
	NonDenseId,
	DanglingNode,
	SelfLink,
	AccessEndpoint,
	D2DEndpoint,
	BsIdMismatch,
	D2DTooLong,
	BsOverloaded
};

std::string_view to_string(ViolationKind kind) noexcept;

struct Violation
{
	ViolationKind kind;
	/// Link or node id the violation refers to (-1 when scenario-wide).
	int subject{-1};
	std::string message;
};

/// Checks every scenario invariant; an empty result means the scenario is well-formed.
std::vector<Violation> validate_scenario(const Scenario& scenario,
                                         double d2d_max_distance = kDefaultD2dMaxDistance);

/// JSON text with the field names of the types above.
std::string scenario_to_json(const Scenario& scenario);

/// Inverse of scenario_to_json. Throws ConfigError on malformed input.
Scenario scenario_from_json(std::string_view text);

Scenario load_scenario(const std::string& path);
void save_scenario(const Scenario& scenario, const std::string& path);

} // namespace mmwcg

#endif // MMWCG_SCENARIO_HPP
