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

#include "test_support.hpp"

#include <mmwcg/baselines.hpp>
#include <mmwcg/error.hpp>
#include <mmwcg/game.hpp>

#include <gtest/gtest.h>

namespace {

using mmwcg::ChannelModel;
using mmwcg::CoalitionGame;
using mmwcg::GameConfig;
using mmwcg::Partition;
using mmwcg::testing::ScenarioBuilder;

// Reference values from tests/oracles/phy_oracle.py.
constexpr double kDuelTogether = 5298852983.088893;
constexpr double kDuelApart = 16456807872.100843;

mmwcg::Scenario small_two_cell(std::uint64_t seed)
{
	mmwcg::ScenarioConfig c;
	c.num_cells = 2;
	c.num_access_links = 4;
	c.num_d2d_links = 2;
	c.num_subchannels = 2;
	c.region_radius = 30;
	c.rng_seed = seed;
	return mmwcg::generate_scenario(c);
}

mmwcg::Scenario default_scenario(std::uint64_t seed)
{
	mmwcg::ScenarioConfig c;
	c.rng_seed = seed;
	return mmwcg::generate_scenario(c);
}

bool strictly_increasing(const mmwcg::UtilityTrace& t)
{
	double prev = t.initial_utility;
	for (const auto& e : t.entries)
	{
		if (!(e.utility > prev))
		{
			return false;
		}
		prev = e.utility;
	}
	return true;
}

TEST(FormationTest, SinglePlayerIsStableAtOnce)
{
	ScenarioBuilder b(3);
	b.d2d({0, 0}, {2, 0});
	const CoalitionGame g(b.get(), ChannelModel::defaults());
	const auto r = mmwcg::run_coalition_formation(g, {}, Partition(1, 3));
	EXPECT_TRUE(r.trace.entries.empty());
	EXPECT_TRUE(r.trace.nash_certified);
	EXPECT_FALSE(r.trace.hit_iteration_limit);
	EXPECT_EQ(r.partition, Partition(1, 3));
}

TEST(FormationTest, DuelSeparates)
{
	const CoalitionGame g(mmwcg::testing::duel_scenario(), ChannelModel::defaults());
	const Partition start(2, 2);
	EXPECT_NEAR(g.partition_utility(start), kDuelTogether, 1e-9 * kDuelTogether);
	EXPECT_FALSE(g.is_nash_stable(start));
	const auto r = mmwcg::run_coalition_formation(g, {}, start);
	EXPECT_NE(r.partition.slot_of(0), r.partition.slot_of(1));
	EXPECT_NEAR(r.trace.final_utility(), kDuelApart, 1e-9 * kDuelApart);
	EXPECT_TRUE(r.trace.nash_certified);
}

TEST(FormationTest, SmallInstancesReachStableOutcomesBelowOptimum)
{
	const auto model = ChannelModel::defaults();
	for (std::uint64_t seed = 0; seed < 30; ++seed)
	{
		const auto s = small_two_cell(seed);
		const CoalitionGame g(s, model);
		GameConfig cfg;
		cfg.rng_seed = seed;
		const auto r = mmwcg::cg_allocation(g, cfg, seed + 1000);
		const auto best = mmwcg::brute_force_optimal(s, model);
		ASSERT_TRUE(r.trace.nash_certified) << "seed " << seed;
		EXPECT_TRUE(g.is_nash_stable(r.partition)) << "seed " << seed;
		EXPECT_LE(r.trace.final_utility(), best.utility * (1 + 1e-9)) << "seed " << seed;
		EXPECT_GE(r.trace.final_utility(), r.trace.initial_utility);
		EXPECT_TRUE(mmwcg::validate_partition(r.partition, s).empty());
	}
}

TEST(FormationTest, TraceIsStrictlyIncreasingAndMatchesPartition)
{
	for (std::uint64_t seed = 0; seed < 10; ++seed)
	{
		const CoalitionGame g(default_scenario(seed), ChannelModel::defaults());
		GameConfig cfg;
		cfg.rng_seed = seed;
		const auto r = mmwcg::cg_allocation(g, cfg, seed);
		EXPECT_TRUE(strictly_increasing(r.trace));
		const double u = g.partition_utility(r.partition);
		EXPECT_NEAR(r.trace.final_utility(), u, 1e-9 * u);
		for (std::size_t i = 1; i < r.trace.entries.size(); ++i)
		{
			EXPECT_GE(r.trace.entries[i].iteration, r.trace.entries[i - 1].iteration);
		}
	}
}

TEST(FormationTest, SameSeedSameOutcome)
{
	const CoalitionGame g(default_scenario(7), ChannelModel::defaults());
	GameConfig cfg;
	cfg.rng_seed = 42;
	const auto a = mmwcg::cg_allocation(g, cfg, 3);
	const auto b = mmwcg::cg_allocation(g, cfg, 3);
	EXPECT_EQ(a.partition, b.partition);
	EXPECT_EQ(a.trace.iterations, b.trace.iterations);
	EXPECT_EQ(mmwcg::trace_to_csv(a.trace), mmwcg::trace_to_csv(b.trace));
}

TEST(FormationTest, WithoutTwoStepStillStable)
{
	const CoalitionGame g(default_scenario(11), ChannelModel::defaults());
	GameConfig cfg;
	cfg.enable_two_step = false;
	const auto r = mmwcg::cg_allocation(g, cfg, 5);
	EXPECT_TRUE(r.trace.nash_certified);
	for (const auto& e : r.trace.entries)
	{
		EXPECT_NE(e.kind, mmwcg::MoveKind::TwoStep);
	}
}

TEST(FormationTest, RejectsInvalidInitialPartition)
{
	const auto s = small_two_cell(1);
	const CoalitionGame g(s, ChannelModel::defaults());
	EXPECT_THROW(mmwcg::run_coalition_formation(g, {}, Partition(s.links.size() - 1, 2)),
	             mmwcg::InvalidInitialPartition);
	// All links in one slot puts two access links of a base station together.
	EXPECT_THROW(mmwcg::run_coalition_formation(g, {}, Partition(s.links.size(), 2)),
	             mmwcg::InvalidInitialPartition);
}

TEST(FormationTest, IterationLimitIsReported)
{
	const CoalitionGame g(default_scenario(3), ChannelModel::defaults());
	GameConfig cfg;
	cfg.max_iterations = 3;
	const auto r = mmwcg::cg_allocation(g, cfg, 3);
	EXPECT_TRUE(r.trace.hit_iteration_limit);
	EXPECT_EQ(r.trace.iterations, 3);
	EXPECT_EQ(r.trace.nash_certified, g.is_nash_stable(r.partition));
}

TEST(FormationTest, D2DOnlyScopeNeverMovesAccessLinks)
{
	const auto s = default_scenario(9);
	const CoalitionGame g(s, ChannelModel::defaults());
	const Partition start = mmwcg::random_allocation(s, 9);
	const auto r = mmwcg::run_coalition_formation(g, {}, start, mmwcg::MoveScope::D2DOnly);
	for (const auto& l : s.links)
	{
		if (l.is_access())
		{
			EXPECT_EQ(r.partition.slot_of(l.id), start.slot_of(l.id));
		}
	}
	EXPECT_TRUE(g.is_nash_stable(r.partition, mmwcg::MoveScope::D2DOnly));
}

TEST(GameConfigTest, Validation)
{
	GameConfig cfg;
	EXPECT_EQ(cfg.effective_stall_threshold(20, 9), 50 * 20 * 9);
	cfg.stall_threshold = 7;
	EXPECT_EQ(cfg.effective_stall_threshold(20, 9), 7);
	cfg.stall_threshold = 0;
	EXPECT_THROW(cfg.validate(), mmwcg::ConfigError);
	cfg = {};
	cfg.max_iterations = 0;
	EXPECT_THROW(cfg.validate(), mmwcg::ConfigError);
}

TEST(TraceCsvTest, Format)
{
	mmwcg::UtilityTrace t;
	t.initial_utility = 1;
	t.entries = {{4, mmwcg::MoveKind::Single, 2.5}, {9, mmwcg::MoveKind::Scan, 3}};
	EXPECT_EQ(mmwcg::trace_to_csv(t), "iteration,kind,utility_bps\n4,single,2.5\n9,scan,3\n");
}

} // namespace
