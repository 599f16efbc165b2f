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

#ifndef MMWCG_CONFIG_HPP
#define MMWCG_CONFIG_HPP

#include <mmwcg/channel.hpp>
#include <mmwcg/game.hpp>
#include <mmwcg/scenario.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mmwcg {

enum class Scheme
{
	CG,
	PCG,
	RA
};

std::string_view to_string(Scheme scheme) noexcept;
/// Throws ConfigError for anything but "CG", "PCG" or "RA".
Scheme scheme_from_string(std::string_view name);

enum class SweepVariable
{
	NumSubchannels,
	NumD2DLinks
};

std::string_view to_string(SweepVariable variable) noexcept;

struct SweepSpec
{
	SweepVariable variable{SweepVariable::NumSubchannels};
	std::vector<int> values;
};

/// Radio settings in configuration units (dBm, dBm/MHz, MHz, mm, degrees).
struct RadioConfig
{
	double tx_power_dbm{30};
	double path_loss_exponent{2};
	double carrier_wavelength_mm{5};
	double mui_factor{1};
	double noise_psd_dbm_per_mhz{-134};
	double subchannel_bandwidth_mhz{540};
	double transceiver_efficiency{0.5};
	double bs_beamwidth_deg{30};
	double ue_beamwidth_deg{30};

	/// Converts to linear SI units. Throws DomainError on out-of-range values.
	ChannelModel to_model() const;
};

struct ExperimentConfig
{
	ScenarioConfig scenario;
	RadioConfig radio;
	GameConfig game;
	std::vector<Scheme> schemes{Scheme::CG, Scheme::PCG, Scheme::RA};
	int num_replications{200};
	std::uint64_t base_seed{1};
	std::optional<SweepSpec> sweep;

	/// Throws ConfigError on the first broken invariant.
	void validate() const;

	bool has_scheme(Scheme s) const noexcept;
};

/**
 * Parses the JSON experiment file. Sections: "scenario", "radio", "game",
 * "experiment" and an optional "sweep". Omitted keys keep their defaults
 * (the reference radio setting); unknown keys are rejected. The result is validated.
 */
ExperimentConfig parse_experiment_config(std::string_view text);
ExperimentConfig load_experiment_config(const std::string& path);
std::string experiment_config_to_json(const ExperimentConfig& config);

} // namespace mmwcg

#endif // MMWCG_CONFIG_HPP
