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

#include <mmwcg/config.hpp>
#include <mmwcg/error.hpp>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace mmwcg {

namespace {

using nlohmann::json;

void reject_unknown(const json& section, std::string_view name, std::initializer_list<std::string_view> known)
{
	if (!section.is_object())
	{
		throw ConfigError("section '" + std::string(name) + "' must be an object");
	}
	for (const auto& item : section.items())
	{
		if (std::find(known.begin(), known.end(), item.key()) == known.end())
		{
			throw ConfigError("unknown key '" + item.key() + "' in section '" + std::string(name) + "'");
		}
	}
}

template <typename T>
void read(const json& section, const char* key, T& out)
{
	if (section.contains(key))
	{
		out = section.at(key).get<T>();
	}
}

SweepVariable sweep_variable_from(const std::string& name)
{
	if (name == "num_subchannels")
	{
		return SweepVariable::NumSubchannels;
	}
	if (name == "num_d2d_links")
	{
		return SweepVariable::NumD2DLinks;
	}
	throw ConfigError("unknown sweep variable '" + name + "'");
}

} // namespace

std::string_view to_string(Scheme scheme) noexcept
{
	switch (scheme)
	{
		case Scheme::CG: return "CG";
		case Scheme::PCG: return "PCG";
		case Scheme::RA: return "RA";
	}
	return "?";
}

Scheme scheme_from_string(std::string_view name)
{
	if (name == "CG")
	{
		return Scheme::CG;
	}
	if (name == "PCG")
	{
		return Scheme::PCG;
	}
	if (name == "RA")
	{
		return Scheme::RA;
	}
	throw ConfigError("unknown scheme '" + std::string(name) + "'");
}

std::string_view to_string(SweepVariable variable) noexcept
{
	return variable == SweepVariable::NumSubchannels ? "num_subchannels" : "num_d2d_links";
}

ChannelModel RadioConfig::to_model() const
{
	ChannelModel m;
	m.radio.tx_power_watts = dbm_to_watts(tx_power_dbm);
	m.radio.path_loss_exponent = path_loss_exponent;
	m.radio.carrier_wavelength = carrier_wavelength_mm * 1e-3;
	m.radio.mui_factor = mui_factor;
	m.radio.noise_psd = dbm_to_watts(noise_psd_dbm_per_mhz) / 1e6;
	m.radio.subchannel_bandwidth_hz = subchannel_bandwidth_mhz * 1e6;
	m.radio.transceiver_efficiency = transceiver_efficiency;
	m.radio.validate();
	m.bs_antenna = pattern_from_beamwidth(degrees_to_radians(bs_beamwidth_deg));
	m.ue_antenna = pattern_from_beamwidth(degrees_to_radians(ue_beamwidth_deg));
	return m;
}

bool ExperimentConfig::has_scheme(Scheme s) const noexcept
{
	return std::find(schemes.begin(), schemes.end(), s) != schemes.end();
}

void ExperimentConfig::validate() const
{
	scenario.validate();
	game.validate();
	try
	{
		(void) radio.to_model();
	}
	catch (const DomainError& e)
	{
		throw ConfigError(std::string("radio: ") + e.what());
	}
	if (schemes.empty())
	{
		throw ConfigError("at least one scheme is required");
	}
	if (std::set<Scheme>(schemes.begin(), schemes.end()).size() != schemes.size())
	{
		throw ConfigError("schemes must not repeat");
	}
	if (num_replications < 1)
	{
		throw ConfigError("num_replications must be at least 1");
	}
	if (sweep)
	{
		if (sweep->values.empty())
		{
			throw ConfigError("sweep needs at least one value");
		}
		const int floor = sweep->variable == SweepVariable::NumD2DLinks ? 0 : 1;
		for (std::size_t i = 0; i < sweep->values.size(); ++i)
		{
			if (sweep->values[i] < floor)
			{
				throw ConfigError("sweep value " + std::to_string(sweep->values[i]) + " below " + std::to_string(floor));
			}
			if (i > 0 && sweep->values[i] <= sweep->values[i - 1])
			{
				throw ConfigError("sweep values must be strictly increasing");
			}
		}
	}
}

ExperimentConfig parse_experiment_config(std::string_view text)
{
	ExperimentConfig cfg;
	try
	{
		const json root = json::parse(text);
		reject_unknown(root, "<root>", {"scenario", "radio", "game", "experiment", "sweep"});

		if (root.contains("scenario"))
		{
			const auto& s = root.at("scenario");
			reject_unknown(s, "scenario", {"region_radius_m", "num_cells", "num_access_links", "num_d2d_links", "d2d_max_distance_m", "num_subchannels"});
			read(s, "region_radius_m", cfg.scenario.region_radius);
			read(s, "num_cells", cfg.scenario.num_cells);
			read(s, "num_access_links", cfg.scenario.num_access_links);
			read(s, "num_d2d_links", cfg.scenario.num_d2d_links);
			read(s, "d2d_max_distance_m", cfg.scenario.d2d_max_distance);
			read(s, "num_subchannels", cfg.scenario.num_subchannels);
		}
		if (root.contains("radio"))
		{
			const auto& r = root.at("radio");
			reject_unknown(r, "radio", {"tx_power_dbm", "path_loss_exponent", "carrier_wavelength_mm", "mui_factor", "noise_psd_dbm_per_mhz", "subchannel_bandwidth_mhz", "transceiver_efficiency", "bs_beamwidth_deg", "ue_beamwidth_deg"});
			read(r, "tx_power_dbm", cfg.radio.tx_power_dbm);
			read(r, "path_loss_exponent", cfg.radio.path_loss_exponent);
			read(r, "carrier_wavelength_mm", cfg.radio.carrier_wavelength_mm);
			read(r, "mui_factor", cfg.radio.mui_factor);
			read(r, "noise_psd_dbm_per_mhz", cfg.radio.noise_psd_dbm_per_mhz);
			read(r, "subchannel_bandwidth_mhz", cfg.radio.subchannel_bandwidth_mhz);
			read(r, "transceiver_efficiency", cfg.radio.transceiver_efficiency);
			read(r, "bs_beamwidth_deg", cfg.radio.bs_beamwidth_deg);
			read(r, "ue_beamwidth_deg", cfg.radio.ue_beamwidth_deg);
		}
		if (root.contains("game"))
		{
			const auto& g = root.at("game");
			reject_unknown(g, "game", {"max_iterations", "stall_threshold", "enable_two_step"});
			read(g, "max_iterations", cfg.game.max_iterations);
			if (g.contains("stall_threshold") && !g.at("stall_threshold").is_null())
			{
				cfg.game.stall_threshold = g.at("stall_threshold").get<std::int64_t>();
			}
			read(g, "enable_two_step", cfg.game.enable_two_step);
		}
		if (root.contains("experiment"))
		{
			const auto& e = root.at("experiment");
			reject_unknown(e, "experiment", {"schemes", "num_replications", "base_seed"});
			if (e.contains("schemes"))
			{
				cfg.schemes.clear();
				for (const auto& s : e.at("schemes"))
				{
					cfg.schemes.push_back(scheme_from_string(s.get<std::string>()));
				}
			}
			read(e, "num_replications", cfg.num_replications);
			read(e, "base_seed", cfg.base_seed);
		}
		if (root.contains("sweep") && !root.at("sweep").is_null())
		{
			const auto& w = root.at("sweep");
			reject_unknown(w, "sweep", {"variable", "values"});
			SweepSpec spec;
			spec.variable = sweep_variable_from(w.at("variable").get<std::string>());
			spec.values = w.at("values").get<std::vector<int>>();
			cfg.sweep = std::move(spec);
		}
	}
	catch (const json::exception& e)
	{
		throw ConfigError(std::string("malformed config: ") + e.what());
	}
	cfg.validate();
	return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path)
{
	std::ifstream in(path);
	if (!in)
	{
		throw ConfigError("cannot open config file '" + path + "'");
	}
	std::ostringstream oss;
	oss << in.rdbuf();
	try
	{
		return parse_experiment_config(oss.str());
	}
	catch (const ConfigError& e)
	{
		throw ConfigError(path + ": " + e.what());
	}
}

std::string experiment_config_to_json(const ExperimentConfig& cfg)
{
	json schemes = json::array();
	for (Scheme s : cfg.schemes)
	{
		schemes.push_back(std::string(to_string(s)));
	}
	json root = {
		{"scenario",
		 {{"region_radius_m", cfg.scenario.region_radius},
		  {"num_cells", cfg.scenario.num_cells},
		  {"num_access_links", cfg.scenario.num_access_links},
		  {"num_d2d_links", cfg.scenario.num_d2d_links},
		  {"d2d_max_distance_m", cfg.scenario.d2d_max_distance},
		  {"num_subchannels", cfg.scenario.num_subchannels}}},
		{"radio",
		 {{"tx_power_dbm", cfg.radio.tx_power_dbm},
		  {"path_loss_exponent", cfg.radio.path_loss_exponent},
		  {"carrier_wavelength_mm", cfg.radio.carrier_wavelength_mm},
		  {"mui_factor", cfg.radio.mui_factor},
		  {"noise_psd_dbm_per_mhz", cfg.radio.noise_psd_dbm_per_mhz},
		  {"subchannel_bandwidth_mhz", cfg.radio.subchannel_bandwidth_mhz},
		  {"transceiver_efficiency", cfg.radio.transceiver_efficiency},
		  {"bs_beamwidth_deg", cfg.radio.bs_beamwidth_deg},
		  {"ue_beamwidth_deg", cfg.radio.ue_beamwidth_deg}}},
		{"game",
		 {{"max_iterations", cfg.game.max_iterations},
		  {"stall_threshold", cfg.game.stall_threshold ? json(*cfg.game.stall_threshold) : json(nullptr)},
		  {"enable_two_step", cfg.game.enable_two_step}}},
		{"experiment", {{"schemes", schemes}, {"num_replications", cfg.num_replications}, {"base_seed", cfg.base_seed}}},
	};
	if (cfg.sweep)
	{
		root["sweep"] = {{"variable", std::string(to_string(cfg.sweep->variable))}, {"values", cfg.sweep->values}};
	}
	return root.dump(2) + "\n";
}

} // namespace mmwcg
