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

#ifndef MMWCG_CHANNEL_HPP
#define MMWCG_CHANNEL_HPP

#include <mmwcg/scenario.hpp>

#include <numbers>

namespace mmwcg {

double dbm_to_watts(double dbm) noexcept;
double watts_to_dbm(double watts) noexcept;
double db_to_linear(double db) noexcept;
double linear_to_db(double linear) noexcept;
double degrees_to_radians(double deg) noexcept;

/**
 * \brief Physical-layer constants of the directional link budget.
 *
 * Everything is kept in linear SI units; decibel quantities are converted
 * when a configuration is parsed.
 */
struct RadioParams
{
	double tx_power_watts{1.0};
	double path_loss_exponent{2.0};
	double carrier_wavelength{0.005};
	double mui_factor{1.0};
	/// One-sided noise power spectral density, W/Hz.
	double noise_psd{3.981071705534972e-23};
	double subchannel_bandwidth_hz{540e6};
	double transceiver_efficiency{0.5};

	/// (lambda / 4 pi)^2
	double k0() const noexcept;
	/// N0 * W0, in watts.
	double noise_power() const noexcept;

	/// Throws DomainError if a field breaks its range.
	void validate() const;

	/// Reference setting: 30 dBm, n = 2, rho = 1, -134 dBm/MHz, 540 MHz, 60 GHz, eta = 0.5.
	static RadioParams defaults();
};

/**
 * \brief Gaussian main lobe with a flat side-lobe floor (IEEE 802.15.3c).
 *
 * Inside the main lobe, |offset| <= main_lobe_width / 2, the gain is
 * max_gain * 10^(-0.301 (2 offset / half_power_beamwidth)^2), never below the
 * side-lobe level; outside it is side_lobe_gain. Angles in radians, gains
 * linear.
 */
struct AntennaPattern
{
	double half_power_beamwidth{0};
	double main_lobe_width{0};
	double max_gain{1};
	double side_lobe_gain{1};

	/// Gain at an angular offset from boresight.
	double gain(double offset) const noexcept;
};

/// Builds the 802.15.3c pattern for a half-power beamwidth in radians. The
/// beamwidth must lie in (0, 2 pi / 2.6) so the main lobe fits in a circle.
/// The side-lobe level -0.4111 ln(theta) - 10.579 dB takes theta in degrees.
AntennaPattern pattern_from_beamwidth(double half_power_beamwidth);

struct Beam
{
	Point2D owner_position;
	/// Normalized to [0, 2 pi).
	double boresight_angle{0};

	/// Beam at \p owner pointing at \p target. Throws DomainError if they coincide.
	static Beam toward(const Point2D& owner, const Point2D& target);
};

double normalize_angle(double angle) noexcept;

/// Pattern evaluated in the direction of \p target.
double directional_gain(const AntennaPattern& pattern, const Beam& beam, const Point2D& target);

/// k0 gt gr d^-n Pt
double received_power(const RadioParams& params, double gt, double gr, double distance);

/// Power that the transmitter owning \p interferer_beam (aimed at its own
/// receiver) delivers to a victim receiver whose beam stays aimed at its own
/// transmitter, scaled by the multi-user interference factor.
double interference_power(const RadioParams& params,
                          const Beam& interferer_beam,
                          const Point2D& victim_rx,
                          const Beam& victim_rx_beam,
                          const AntennaPattern& tx_pattern,
                          const AntennaPattern& rx_pattern);

double sinr(double signal_watts, double interference_sum_watts, const RadioParams& params) noexcept;

/// eta W0 log2(1 + sinr), bits per second.
double link_rate(double sinr_value, const RadioParams& params) noexcept;

/// Radio constants plus the antenna used by each node class.
struct ChannelModel
{
	RadioParams radio;
	AntennaPattern bs_antenna;
	AntennaPattern ue_antenna;

	const AntennaPattern& antenna(NodeKind kind) const noexcept
	{
		return kind == NodeKind::BaseStation ? bs_antenna : ue_antenna;
	}

	/// Reference radio and 30 degree beams at both node classes.
	static ChannelModel defaults();
};

} // namespace mmwcg

#endif // MMWCG_CHANNEL_HPP
