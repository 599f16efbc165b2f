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

#include <cassert>

namespace mmwcg {

std::uint64_t splitmix64(std::uint64_t& state) noexcept
{
	state += 0x9e3779b97f4a7c15ULL;
	std::uint64_t z = state;
	z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
	z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
	return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t parent, std::initializer_list<std::uint64_t> tags) noexcept
{
	std::uint64_t s = parent;
	for (std::uint64_t t : tags)
	{
		std::uint64_t state = s ^ t;
		s = splitmix64(state);
	}
	return s;
}

Rng::Rng(std::uint64_t seed)
{
	std::uint64_t state = seed;
	engine_.seed(splitmix64(state));
}

double Rng::uniform01()
{
	return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi)
{
	return lo + (hi - lo) * uniform01();
}

std::size_t Rng::index(std::size_t n)
{
	assert(n > 0);
	const auto range = static_cast<std::uint64_t>(n);
	// 2^64 mod range: draws below it would bias the residues
	const std::uint64_t threshold = (0 - range) % range;
	for (;;)
	{
		const std::uint64_t r = engine_();
		if (r >= threshold)
		{
			return static_cast<std::size_t>(r % range);
		}
	}
}

} // namespace mmwcg
