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
#include <mmwcg/rng.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mmwcg {

namespace {

/// Current partition with cached coalition values.
class FormationState
{
public:
	FormationState(const CoalitionGame& game, Partition initial)
		: game_(game), partition_(std::move(initial)), values_(static_cast<std::size_t>(partition_.num_slots()))
	{
		for (int s = 0; s < partition_.num_slots(); ++s)
		{
			values_[static_cast<std::size_t>(s)] = game_.coalition_value(partition_, s);
		}
	}

	const Partition& partition() const noexcept { return partition_; }
	double value(int slot) const { return values_[static_cast<std::size_t>(slot)]; }
	const std::vector<double>& values() const noexcept { return values_; }

	/// Sum in slot order, so it matches CoalitionGame::partition_utility bit for bit.
	static double total(const std::vector<double>& values)
	{
		return std::accumulate(values.begin(), values.end(), 0.0);
	}
	double total() const { return total(values_); }

	/// Values of (from \ l, to + l) without touching the partition.
	std::pair<double, double> values_after(LinkId link, int from, int to)
	{
		const auto f = partition_.members(from);
		scratch_from_.clear();
		std::copy_if(f.begin(), f.end(), std::back_inserter(scratch_from_), [link](LinkId l) { return l != link; });
		const auto t = partition_.members(to);
		scratch_to_.assign(t.begin(), t.end());
		scratch_to_.insert(std::lower_bound(scratch_to_.begin(), scratch_to_.end(), link), link);
		return {game_.coalition_value(scratch_from_), game_.coalition_value(scratch_to_)};
	}

	void move(LinkId link, int to, double from_value, double to_value)
	{
		const int from = partition_.slot_of(link);
		partition_.move(link, to);
		values_[static_cast<std::size_t>(from)] = from_value;
		values_[static_cast<std::size_t>(to)] = to_value;
	}

	void restore(LinkId link, int slot, std::vector<double> values)
	{
		partition_.move(link, slot);
		values_ = std::move(values);
	}

	void set_values(std::vector<double> values) { values_ = std::move(values); }

private:
	const CoalitionGame& game_;
	Partition partition_;
	std::vector<double> values_;
	std::vector<LinkId> scratch_from_;
	std::vector<LinkId> scratch_to_;
};

} // namespace

void GameConfig::validate() const
{
	if (max_iterations < 1)
	{
		throw ConfigError("max_iterations must be positive");
	}
	if (stall_threshold && *stall_threshold < 1)
	{
		throw ConfigError("stall_threshold must be positive");
	}
}

std::int64_t GameConfig::effective_stall_threshold(std::size_t num_players, int num_slots) const
{
	if (stall_threshold)
	{
		return *stall_threshold;
	}
	return std::max<std::int64_t>(1, 50 * static_cast<std::int64_t>(num_players) * num_slots);
}

std::string_view to_string(MoveKind kind) noexcept
{
	switch (kind)
	{
		case MoveKind::Single: return "single";
		case MoveKind::TwoStep: return "two_step";
		case MoveKind::Scan: return "scan";
	}
	return "unknown";
}

std::string trace_to_csv(const UtilityTrace& trace)
{
	std::ostringstream oss;
	oss.precision(17);
	oss << "iteration,kind,utility_bps\n";
	for (const auto& e : trace.entries)
	{
		oss << e.iteration << ',' << to_string(e.kind) << ',' << e.utility << '\n';
	}
	return oss.str();
}

FormationResult run_coalition_formation(const CoalitionGame& game,
                                        const GameConfig& config,
                                        const Partition& initial,
                                        MoveScope scope)
{
	config.validate();
	if (const auto problems = validate_partition(initial, game.scenario()); !problems.empty())
	{
		throw InvalidInitialPartition("initial partition rejected: " + problems.front());
	}

	FormationState state(game, initial);
	UtilityTrace trace;
	trace.initial_utility = state.total();

	const std::vector<LinkId> movable = game.movable_links(scope);
	const std::int64_t stall_limit = config.effective_stall_threshold(game.num_players(), game.num_slots());
	Rng rng(config.rng_seed);

	auto record = [&](std::int64_t iteration, MoveKind kind) {
		trace.entries.push_back({iteration, kind, state.total()});
	};

	if (movable.empty() || game.num_players() <= 1)
	{
		trace.nash_certified = game.is_nash_stable(state.partition(), scope);
		return {state.partition(), std::move(trace)};
	}

	std::int64_t stall = 0;
	bool certified = false;
	while (trace.iterations < config.max_iterations)
	{
		const std::int64_t iteration = ++trace.iterations;
		bool accepted = false;

		const LinkId link = movable[rng.index(movable.size())];
		const int from = state.partition().slot_of(link);
		const std::vector<int> targets = game.candidate_targets(state.partition(), link);
		if (!targets.empty())
		{
			const int to = targets[rng.index(targets.size())];
			const auto [from_after, to_after] = state.values_after(link, from, to);

			if (strictly_improves(from_after + to_after, state.value(from) + state.value(to)))
			{
				state.move(link, to, from_after, to_after);
				record(iteration, MoveKind::Single);
				accepted = true;
			}
			else if (config.enable_two_step)
			{
				const double current_total = state.total();
				std::vector<double> saved = state.values();
				state.move(link, to, from_after, to_after);

				const LinkId second = movable[rng.index(movable.size())];
				const int second_from = state.partition().slot_of(second);
				const std::vector<int> second_targets = game.candidate_targets(state.partition(), second);
				bool kept = false;
				if (!second_targets.empty())
				{
					const int second_to = second_targets[rng.index(second_targets.size())];
					const auto [sf, st] = state.values_after(second, second_from, second_to);
					std::vector<double> candidate = state.values();
					candidate[static_cast<std::size_t>(second_from)] = sf;
					candidate[static_cast<std::size_t>(second_to)] = st;
					if (strictly_improves(FormationState::total(candidate), current_total))
					{
						state.move(second, second_to, sf, st);
						record(iteration, MoveKind::TwoStep);
						kept = true;
					}
				}
				if (!kept)
				{
					state.restore(link, from, std::move(saved));
				}
				accepted = kept;
			}
		}

		if (accepted)
		{
			stall = 0;
			continue;
		}
		if (++stall < stall_limit)
		{
			continue;
		}

		stall = 0;
		const auto improving = game.find_improving_move(state.partition(), scope);
		if (!improving)
		{
			certified = true;
			break;
		}
		const auto [fa, ta] = state.values_after(improving->link_id, improving->from_coalition, improving->to_coalition);
		state.move(improving->link_id, improving->to_coalition, fa, ta);
		record(iteration, MoveKind::Scan);
	}

	if (!certified)
	{
		trace.hit_iteration_limit = true;
		certified = game.is_nash_stable(state.partition(), scope);
	}
	trace.nash_certified = certified;
	return {state.partition(), std::move(trace)};
}

} // namespace mmwcg
