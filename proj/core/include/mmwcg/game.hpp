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

#ifndef MMWCG_GAME_HPP
#define MMWCG_GAME_HPP

#include <mmwcg/channel.hpp>
#include <mmwcg/partition.hpp>
#include <mmwcg/scenario.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mmwcg {

/// Relative margin a utility must clear to count as a strict improvement.
inline constexpr double kImprovementTolerance = 1e-12;

/// candidate > baseline * (1 + kImprovementTolerance)
bool strictly_improves(double candidate, double baseline) noexcept;

/// Which links may be selected to switch coalitions.
enum class MoveScope
{
	AllLinks,
	D2DOnly
};

/**
 * \brief Sub-channel allocation as a coalitional game with transferable utility.
 *
 * Players are the links of a scenario; the value of a coalition is the sum
 * rate of its members when they share one sub-channel. The constructor
 * evaluates every desired-signal power and every pairwise interference power
 * once, so coalition values only cost O(k^2) for k members.
 *
 * Pairs of access links served by the same base station can never share a
 * coalition; their interference entry is left at zero.
 */
class CoalitionGame
{
public:
	/// Throws DomainError if a transmitter sits on a receiver it could interfere with.
	CoalitionGame(Scenario scenario, ChannelModel model);

	const Scenario& scenario() const noexcept { return scenario_; }
	const ChannelModel& model() const noexcept { return model_; }
	std::size_t num_players() const noexcept { return scenario_.links.size(); }
	int num_slots() const noexcept { return scenario_.num_subchannels; }

	double signal_power(LinkId link) const { return signal_.at(static_cast<std::size_t>(link)); }

	/// Interference power the transmitter of \p from causes at the receiver of \p to.
	double interference(LinkId from, LinkId to) const
	{
		return cross_[static_cast<std::size_t>(to) * num_players() + static_cast<std::size_t>(from)];
	}

	/// Rate of \p link when it shares a sub-channel with the other ids in \p coalition.
	double member_rate(std::span<const LinkId> coalition, LinkId link) const;
	double member_rate(const Partition& partition, LinkId link) const;

	/// Sum rate of the members; \p members must be sorted ascending.
	double coalition_value(std::span<const LinkId> members) const;
	double coalition_value(const Partition& partition, int slot) const;

	/// Sum of all coalition values, slot 0 first.
	double partition_utility(const Partition& partition) const;

	/// Value of the two coalitions touched by \p move, before and after it.
	struct PairValues
	{
		double before{0};
		double after{0};
	};
	PairValues pair_values(const Partition& partition, const SwitchMove& move) const;

	/// The moving link strictly prefers the target coalition: the two touched
	/// coalitions together are worth more after the switch than before.
	bool prefers(const Partition& partition, const SwitchMove& move) const;

	/// As prefers, with a non-strict comparison.
	bool weakly_prefers(const Partition& partition, const SwitchMove& move) const;

	/**
	 * Distinct feasible targets for \p link: every non-empty coalition other
	 * than its own that admits it, plus the lowest-index empty slot if any.
	 * Empty slots are interchangeable, so one stands for all of them.
	 */
	std::vector<int> candidate_targets(const Partition& partition, LinkId link) const;

	/// Links selectable under \p scope, ascending.
	std::vector<LinkId> movable_links(MoveScope scope) const;

	/// First improving feasible move in (link id, slot) order, if any.
	std::optional<SwitchMove> find_improving_move(const Partition& partition, MoveScope scope = MoveScope::AllLinks) const;

	/// No selectable link has a feasible switch it strictly prefers.
	bool is_nash_stable(const Partition& partition, MoveScope scope = MoveScope::AllLinks) const;

private:
	Scenario scenario_;
	ChannelModel model_;
	std::vector<double> signal_;
	/// cross_[victim * n + interferer]
	std::vector<double> cross_;
};

struct GameConfig
{
	std::int64_t max_iterations{1'000'000};
	/// Consecutive non-accepting probes before an exhaustive scan;
	/// unset means 50 * |players| * |slots|.
	std::optional<std::int64_t> stall_threshold;
	std::uint64_t rng_seed{0};
	bool enable_two_step{true};

	void validate() const;
	std::int64_t effective_stall_threshold(std::size_t num_players, int num_slots) const;
};

enum class MoveKind
{
	Single,
	TwoStep,
	Scan
};

std::string_view to_string(MoveKind kind) noexcept;

struct TraceEntry
{
	std::int64_t iteration{0};
	MoveKind kind{MoveKind::Single};
	double utility{0};
};

struct UtilityTrace
{
	double initial_utility{0};
	/// One entry per accepted move, in order.
	std::vector<TraceEntry> entries;
	std::int64_t iterations{0};
	bool hit_iteration_limit{false};
	bool nash_certified{false};

	double final_utility() const noexcept { return entries.empty() ? initial_utility : entries.back().utility; }
};

/// "iteration,kind,utility_bps" rows, one per accepted move.
std::string trace_to_csv(const UtilityTrace& trace);

struct FormationResult
{
	Partition partition;
	UtilityTrace trace;
};

/**
 * \brief Coalition formation by random switch operations.
 *
 * Each iteration draws a selectable link uniformly and a target uniformly
 * from candidate_targets(). An improving switch is applied at once. If it is
 * not improving and two-step moves are enabled, the switch is applied
 * tentatively, a second link and target are drawn in the tentative partition,
 * and both switches are kept iff the resulting total utility beats the
 * current one.
 *
 * After stall_threshold consecutive iterations without an accepted move, an
 * exhaustive scan either finds and applies an improving switch or certifies
 * the partition Nash-stable, which ends the run. Reaching max_iterations also
 * ends it; the final partition is scanned then as well and
 * hit_iteration_limit is set.
 *
 * Throws InvalidInitialPartition if \p initial is not a valid partition of
 * the game's scenario.
 */
FormationResult run_coalition_formation(const CoalitionGame& game,
                                        const GameConfig& config,
                                        const Partition& initial,
                                        MoveScope scope = MoveScope::AllLinks);

} // namespace mmwcg

#endif // MMWCG_GAME_HPP
