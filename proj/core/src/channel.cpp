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

#include <mmwcg/channel.hpp>
#include <mmwcg/error.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mmwcg {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMainLobeFactor = 2.6;

} // namespace

double dbm_to_watts(double dbm) noexcept
{
	return std::pow(10.0, dbm / 10.0) * 1e-3;
}

double watts_to_dbm(double watts) noexcept
{
	return 10.0 * std::log10(watts * 1e3);
}

double db_to_linear(double db) noexcept
{
	return std::pow(10.0, db / 10.0);
}

double linear_to_db(double linear) noexcept
{
	return 10.0 * std::log10(linear);
}

double degrees_to_radians(double deg) noexcept
{
	return deg * std::numbers::pi / 180.0;
}

double RadioParams::k0() const noexcept
{
	const double r = carrier_wavelength / (4.0 * std::numbers::pi);
	return r * r;
}

double RadioParams::noise_power() const noexcept
{
	return noise_psd * subchannel_bandwidth_hz;
}

void RadioParams::validate() const
{
	auto positive = [](double v) { return v > 0 && std::isfinite(v); };
	if (!positive(tx_power_watts) || !positive(path_loss_exponent) || !positive(carrier_wavelength)
	    || !positive(noise_psd) || !positive(subchannel_bandwidth_hz))
	{
		throw DomainError("radio parameters must be strictly positive");
	}
	if (!(mui_factor >= 0) || !std::isfinite(mui_factor))
	{
		throw DomainError("mui_factor must be non-negative");
	}
	if (!(transceiver_efficiency > 0 && transceiver_efficiency <= 1))
	{
		throw DomainError("transceiver_efficiency must lie in (0, 1]");
	}
}

RadioParams RadioParams::defaults()
{
	RadioParams p;
	p.tx_power_watts = dbm_to_watts(30.0);
	p.path_loss_exponent = 2.0;
	p.carrier_wavelength = 0.005;
	p.mui_factor = 1.0;
	p.noise_psd = dbm_to_watts(-134.0) / 1e6;
	p.subchannel_bandwidth_hz = 540e6;
	p.transceiver_efficiency = 0.5;
	return p;
}

double AntennaPattern::gain(double offset) const noexcept
{
	const double a = std::abs(offset);
	if (a <= 0.5 * main_lobe_width)
	{
		const double u = 2.0 * a / half_power_beamwidth;
		return std::max(max_gain * std::pow(10.0, -0.301 * u * u), side_lobe_gain);
	}
	return side_lobe_gain;
}

AntennaPattern pattern_from_beamwidth(double half_power_beamwidth)
{
	// the main lobe (2.6 beamwidths) must stay narrower than the full circle
	if (!(half_power_beamwidth > 0 && half_power_beamwidth < std::numbers::pi && kMainLobeFactor * half_power_beamwidth < kTwoPi))
	{
		std::ostringstream oss;
		oss << "half-power beamwidth " << half_power_beamwidth << " rad outside (0, 2 pi / 2.6)";
		throw DomainError(oss.str());
	}
	const double root = 1.6162 / std::sin(0.5 * half_power_beamwidth);
	const double degrees = half_power_beamwidth * 180.0 / std::numbers::pi;

	AntennaPattern p;
	p.half_power_beamwidth = half_power_beamwidth;
	p.main_lobe_width = kMainLobeFactor * half_power_beamwidth;
	p.max_gain = root * root;
	p.side_lobe_gain = db_to_linear(-0.4111 * std::log(degrees) - 10.579);
	return p;
}

double normalize_angle(double angle) noexcept
{
	double a = std::fmod(angle, kTwoPi);
	if (a < 0)
	{
		a += kTwoPi;
	}
	return a >= kTwoPi ? 0.0 : a;
}

Beam Beam::toward(const Point2D& owner, const Point2D& target)
{
	if (owner == target)
	{
		throw DomainError("cannot aim a beam at its own position");
	}
	return {owner, normalize_angle(bearing(owner, target))};
}

double directional_gain(const AntennaPattern& pattern, const Beam& beam, const Point2D& target)
{
	if (beam.owner_position == target)
	{
		throw DomainError("gain toward a coincident point is undefined");
	}
	double offset = normalize_angle(bearing(beam.owner_position, target) - beam.boresight_angle);
	if (offset > std::numbers::pi)
	{
		offset = kTwoPi - offset;
	}
	return pattern.gain(offset);
}

double received_power(const RadioParams& params, double gt, double gr, double distance)
{
	if (!(distance > 0))
	{
		throw DomainError("received power needs a positive distance");
	}
	return params.k0() * gt * gr * std::pow(distance, -params.path_loss_exponent) * params.tx_power_watts;
}

double interference_power(const RadioParams& params,
                          const Beam& interferer_beam,
                          const Point2D& victim_rx,
                          const Beam& victim_rx_beam,
                          const AntennaPattern& tx_pattern,
                          const AntennaPattern& rx_pattern)
{
	const Point2D& u = interferer_beam.owner_position;
	if (u == victim_rx)
	{
		throw DomainError("interferer and victim receiver coincide");
	}
	const double gt = directional_gain(tx_pattern, interferer_beam, victim_rx);
	const double gr = directional_gain(rx_pattern, victim_rx_beam, u);
	return params.mui_factor * received_power(params, gt, gr, distance(u, victim_rx));
}

double sinr(double signal_watts, double interference_sum_watts, const RadioParams& params) noexcept
{
	return signal_watts / (params.noise_power() + interference_sum_watts);
}

double link_rate(double sinr_value, const RadioParams& params) noexcept
{
	return params.transceiver_efficiency * params.subchannel_bandwidth_hz * std::log2(1.0 + sinr_value);
}

ChannelModel ChannelModel::defaults()
{
	const AntennaPattern beam30 = pattern_from_beamwidth(degrees_to_radians(30.0));
	return {RadioParams::defaults(), beam30, beam30};
}

} // namespace mmwcg
