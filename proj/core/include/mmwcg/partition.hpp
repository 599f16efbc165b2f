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

#ifndef MMWCG_PARTITION_HPP
#define MMWCG_PARTITION_HPP

#include <mmwcg/scenario.hpp>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mmwcg {

/**
 * \brief Assignment of every link to one of |C| coalition slots.
 *
 * Slot c is the coalition of links sharing sub-channel c. Slots may be empty.
 * Members of each slot are kept sorted by link id, so two partitions with the
 * same assignment compare equal and serialize identically.
 */
class Partition
{
public:
	Partition() = default;

	/// All links in slot 0.
	Partition(std::size_t num_links, int num_slots);

	/// From a slot index per link. Throws std::invalid_argument on out-of-range slots.
	Partition(std::vector<int> assignment, int num_slots);

	int num_slots() const noexcept { return static_cast<int>(coalitions_.size()); }
	std::size_t num_links() const noexcept { return assignment_.size(); }

	int slot_of(LinkId link) const { return assignment_.at(static_cast<std::size_t>(link)); }
	std::span<const LinkId> members(int slot) const { return coalitions_.at(static_cast<std::size_t>(slot)); }
	const std::vector<int>& assignment() const noexcept { return assignment_; }
	bool empty(int slot) const { return members(slot).empty(); }

	/// Moves \p link into \p slot in place. No feasibility check.
	void move(LinkId link, int slot);

	friend bool operator==(const Partition& a, const Partition& b) { return a.assignment_ == b.assignment_ && a.coalitions_.size() == b.coalitions_.size(); }

private:
	std::vector<int> assignment_;
	std::vector<std::vector<LinkId>> coalitions_;
};

/// A single link leaving one coalition for another.
struct SwitchMove
{
	LinkId link_id{0};
	int from_coalition{0};
	int to_coalition{0};

	friend bool operator==(const SwitchMove&, const SwitchMove&) = default;
};

/// True iff target != source and, for an access link, its base station
/// is not already serving an access link in the target coalition.
bool is_feasible_move(const Partition& partition, const SwitchMove& move, const Scenario& scenario);

/// Copy of \p partition with the move applied. Throws InfeasibleMove if
/// the move is malformed or breaks the base-station constraint.
Partition apply_switch(const Partition& partition, const SwitchMove& move, const Scenario& scenario);

/// Problems with a partition w.r.t. a scenario: size mismatch, coverage,
/// or two same-BS access links in one coalition. Empty when valid.
std::vector<std::string> validate_partition(const Partition& partition, const Scenario& scenario);

/// {"num_subchannels": C, "coalitions": [[ids of slot 0], ...]}
std::string partition_to_json(const Partition& partition);
Partition partition_from_json(std::string_view text);

} // namespace mmwcg

#endif // MMWCG_PARTITION_HPP
