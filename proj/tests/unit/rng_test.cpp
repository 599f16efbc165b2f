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

#include <mmwcg/rng.hpp>

#include <gtest/gtest.h>

#include <array>
#include <set>

namespace {

TEST(RngTest, SameSeedSameSequence)
{
	mmwcg::Rng a(42);
	mmwcg::Rng b(42);
	for (int i = 0; i < 1000; ++i)
	{
		ASSERT_EQ(a.next(), b.next());
	}
}

TEST(RngTest, SplitMixReferenceValues)
{
	// First outputs of SplitMix64 seeded with 0, as published with the algorithm.
	std::uint64_t state = 0;
	EXPECT_EQ(mmwcg::splitmix64(state), 0xe220a8397b1dcdafULL);
	EXPECT_EQ(mmwcg::splitmix64(state), 0x6e789e6aa1b965f4ULL);
	EXPECT_EQ(mmwcg::splitmix64(state), 0x06c45d188009454fULL);
}

TEST(RngTest, DeriveSeedDependsOnEveryTag)
{
	const auto base = mmwcg::derive_seed(7, {1, 2});
	EXPECT_EQ(base, mmwcg::derive_seed(7, {1, 2}));
	EXPECT_NE(base, mmwcg::derive_seed(7, {2, 1}));
	EXPECT_NE(base, mmwcg::derive_seed(8, {1, 2}));
	EXPECT_NE(base, mmwcg::derive_seed(7, {1, 3}));
}

TEST(RngTest, UniformStaysInRange)
{
	mmwcg::Rng rng(3);
	for (int i = 0; i < 10000; ++i)
	{
		const double u = rng.uniform01();
		ASSERT_GE(u, 0.0);
		ASSERT_LT(u, 1.0);
	}
}

TEST(RngTest, IndexIsRoughlyUniform)
{
	mmwcg::Rng rng(11);
	std::array<int, 7> counts{};
	constexpr int kDraws = 70000;
	for (int i = 0; i < kDraws; ++i)
	{
		const auto k = rng.index(counts.size());
		ASSERT_LT(k, counts.size());
		++counts[k];
	}
	// chi-square with 6 dof; 22.46 is the 0.999 quantile
	double chi2 = 0;
	for (int c : counts)
	{
		const double e = kDraws / 7.0;
		chi2 += (c - e) * (c - e) / e;
	}
	EXPECT_LT(chi2, 22.46);
}

TEST(RngTest, IndexOfOneIsZero)
{
	mmwcg::Rng rng(5);
	for (int i = 0; i < 100; ++i)
	{
		EXPECT_EQ(rng.index(1), 0u);
	}
}

} // namespace
