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

#ifndef MMWCG_RNG_HPP
#define MMWCG_RNG_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace mmwcg {

/// One step of the SplitMix64 generator (Steele, Lea, Flood 2014).
/// Advances \p state and returns the mixed output.
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// Derives a child seed from a parent seed and a sequence of integer tags.
///
/// The derivation folds every tag into a SplitMix64 state:
///   s := parent; for each tag t: s := splitmix64(s ^ t)
/// which makes it a pure, platform independent function of its inputs.
std::uint64_t derive_seed(std::uint64_t parent, std::initializer_list<std::uint64_t> tags) noexcept;

/**
 * \brief Portable seedable random source.
 *
 * The engine is std::mt19937_64, whose output sequence is fixed by the C++
 * standard. The engine is seeded with the first SplitMix64 output of the user
 * seed. Distributions are implemented here rather than taken from <random>,
 * since the standard distributions are allowed to differ between library
 * implementations:
 *  - uniform01() uses the top 53 bits of one engine draw;
 *  - index(n) rejects draws below 2^64 mod n and reduces the rest modulo n,
 *    so it is exactly uniform on [0, n).
 */
class Rng
{
public:
	explicit Rng(std::uint64_t seed);

	std::uint64_t next() { return engine_(); }

	/// Uniform double in [0, 1).
	double uniform01();

	/// Uniform double in [lo, hi).
	double uniform(double lo, double hi);

	/// Uniform integer in [0, n). Requires n > 0.
	std::size_t index(std::size_t n);

private:
	std::mt19937_64 engine_;
};

} // namespace mmwcg

#endif // MMWCG_RNG_HPP
