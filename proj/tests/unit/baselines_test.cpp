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

#include <gtest/gtest.h>

#include <set>

namespace {

using mmwcg::ChannelModel;
using mmwcg::CoalitionGame;
using mmwcg::Partition;
using mmwcg::testing::ScenarioBuilder;

constexpr double kDuelApart = 16456807872.100843;

mmwcg::Scenario generated(std::uint64_t seed, int access, int d2d, int slots = 9, int cells = 3)
{
	mmwcg::ScenarioConfig c;
	c.num_cells = cells;
	c.num_access_links = access;
	c.num_d2d_links = d2d;
	c.num_subchannels = slots;
	c.rng_seed = seed;
	return mmwcg::generate_scenario(c);
}

TEST(RandomAllocationTest, AlwaysFeasible)
{
	for (std::uint64_t seed = 0; seed < 50; ++seed)
	{
		const auto s = generated(seed, 15, 5, 5);
		EXPECT_TRUE(mmwcg::validate_partition(mmwcg::random_allocation(s, seed), s).empty());
	}
}

TEST(RandomAllocationTest, SingleSlotD2DOnly)
{
	ScenarioBuilder b(1);
	b.d2d({0, 0}, {1, 0});
	b.d2d({5, 0}, {6, 0});
	EXPECT_EQ(mmwcg::random_allocation(b.get(), 3), Partition(2, 1));
}

TEST(RandomAllocationTest, FullBaseStationUsesEverySlot)
{
	ScenarioBuilder b(3);
	const auto bs = b.base_station({0, 0});
	b.access({5, 0}, bs);
	b.access({0, 5}, bs);
	b.access({-5, 0}, bs);
	for (std::uint64_t seed = 0; seed < 20; ++seed)
	{
		const auto p = mmwcg::random_allocation(b.get(), seed);
		const auto& a = p.assignment();
		EXPECT_EQ(std::set<int>(a.begin(), a.end()).size(), 3u);
	}
}

TEST(RandomAllocationTest, DeterministicPerSeed)
{
	const auto s = generated(4, 15, 5);
	EXPECT_EQ(mmwcg::random_allocation(s, 77), mmwcg::random_allocation(s, 77));
	bool differs = false;
	for (std::uint64_t seed = 0; seed < 5 && !differs; ++seed)
	{
		differs = !(mmwcg::random_allocation(s, seed) == mmwcg::random_allocation(s, 77));
	}
	EXPECT_TRUE(differs);
}

TEST(PcgTest, NoD2DLinksLeavesRandomAllocation)
{
	const auto s = generated(5, 15, 0);
	const CoalitionGame g(s, ChannelModel::defaults());
	const auto r = mmwcg::pcg_allocation(g, {}, 21);
	EXPECT_EQ(r.partition, mmwcg::random_allocation(s, 21));
	EXPECT_TRUE(r.trace.entries.empty());
}

TEST(PcgTest, NoAccessLinksMatchesFullGame)
{
	const auto s = generated(6, 0, 6, 4);
	const CoalitionGame g(s, ChannelModel::defaults());
	mmwcg::GameConfig cfg;
	cfg.rng_seed = 8;
	const auto pcg = mmwcg::pcg_allocation(g, cfg, 2);
	const auto cg = mmwcg::cg_allocation(g, cfg, 2);
	EXPECT_EQ(pcg.partition, cg.partition);
	EXPECT_EQ(pcg.trace.final_utility(), cg.trace.final_utility());
}

TEST(PcgTest, AccessLinksKeepRandomSlots)
{
	for (std::uint64_t seed = 0; seed < 10; ++seed)
	{
		const auto s = generated(seed, 15, 5);
		const CoalitionGame g(s, ChannelModel::defaults());
		const auto ra = mmwcg::random_allocation(s, seed);
		const auto r = mmwcg::pcg_allocation(g, {}, seed);
		for (const auto& l : s.links)
		{
			if (l.is_access())
			{
				EXPECT_EQ(r.partition.slot_of(l.id), ra.slot_of(l.id));
			}
		}
		EXPECT_TRUE(r.trace.nash_certified);
		EXPECT_GE(r.trace.final_utility(), g.partition_utility(ra) * (1 - 1e-12));
	}
}

TEST(OracleTest, SingleLink)
{
	ScenarioBuilder b(3);
	b.d2d({0, 0}, {2, 0});
	const auto r = mmwcg::brute_force_optimal(b.get(), ChannelModel::defaults());
	EXPECT_EQ(r.assignment, (std::vector<int>{0}));
	EXPECT_EQ(r.feasible_assignments, 3u);
}

TEST(OracleTest, DuelTiesResolveLexicographically)
{
	const auto r = mmwcg::brute_force_optimal(mmwcg::testing::duel_scenario(), ChannelModel::defaults());
	EXPECT_EQ(r.assignment, (std::vector<int>{0, 1}));
	EXPECT_NEAR(r.utility, kDuelApart, 1e-9 * kDuelApart);
	EXPECT_EQ(r.partition, Partition({0, 1}, 2));
}

TEST(OracleTest, CountsOnlyFeasibleAssignments)
{
	ScenarioBuilder b(2);
	const auto bs = b.base_station({0, 0});
	b.access({5, 0}, bs);
	b.access({0, 5}, bs);
	b.d2d({9, 9}, {10, 9});
	const auto r = mmwcg::brute_force_optimal(b.get(), ChannelModel::defaults());
	EXPECT_EQ(r.feasible_assignments, 4u); // 2 orderings of the access pair x 2 D2D slots
}

TEST(OracleTest, DominatesHeuristics)
{
	const auto model = ChannelModel::defaults();
	for (std::uint64_t seed = 0; seed < 10; ++seed)
	{
		const auto s = generated(seed, 4, 2, 2, 2);
		const CoalitionGame g(s, model);
		const auto best = mmwcg::brute_force_optimal(s, model);
		const double tol = 1 + 1e-9;
		EXPECT_LE(g.partition_utility(mmwcg::random_allocation(s, seed)), best.utility * tol);
		EXPECT_LE(mmwcg::pcg_allocation(g, {}, seed).trace.final_utility(), best.utility * tol);
		EXPECT_LE(mmwcg::cg_allocation(g, {}, seed).trace.final_utility(), best.utility * tol);
		EXPECT_NEAR(g.partition_utility(best.partition), best.utility, 1e-9 * best.utility);
		EXPECT_TRUE(g.is_nash_stable(best.partition));
	}
}

TEST(OracleTest, BudgetExceeded)
{
	const auto s = generated(1, 15, 5);
	EXPECT_THROW(mmwcg::brute_force_optimal(s, ChannelModel::defaults()), mmwcg::InstanceTooLarge);
	const auto duel = mmwcg::testing::duel_scenario();
	EXPECT_THROW(mmwcg::brute_force_optimal(duel, ChannelModel::defaults(), 3), mmwcg::InstanceTooLarge);
	EXPECT_NO_THROW(mmwcg::brute_force_optimal(duel, ChannelModel::defaults(), 4));
}

} // namespace
