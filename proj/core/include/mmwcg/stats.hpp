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

#ifndef MMWCG_STATS_HPP
#define MMWCG_STATS_HPP

#include <mmwcg/experiment.hpp>

#include <optional>
#include <span>
#include <vector>

namespace mmwcg {

struct SummaryRow
{
	int sweep_value{0};
	Scheme scheme{Scheme::CG};
	std::size_t n{0};
	double mean{0};
	/// Sample standard deviation; 0 for a single record.
	double stddev{0};
	/// Student-t 95% half-width of the mean; 0 for a single record.
	double ci95_half_width{0};
	/// (mean_CG - mean) / mean for non-CG rows whose sweep value also has CG records.
	std::optional<double> cg_improvement;
};

/// One row per (sweep value, scheme), in order of first appearance.
/// Throws EmptyInput when \p records is empty.
std::vector<SummaryRow> summarize(std::span<const RunRecord> records);

/// Quantile of Student's t distribution.
double student_t_quantile(double probability, double degrees_of_freedom);

struct PairedComparison
{
	std::size_t n{0};
	double mean_difference{0};
	double ci95_low{0};
	double ci95_high{0};

	/// The whole two-sided 95% interval of (a - b) lies above zero.
	bool a_significantly_greater() const noexcept { return ci95_low > 0; }
};

/// Paired t interval for a[i] - b[i]. Needs equal sizes of at least 2.
PairedComparison paired_comparison(std::span<const double> a, std::span<const double> b);

/// Spearman rank correlation with average ranks for ties.
double spearman(std::span<const double> x, std::span<const double> y);

} // namespace mmwcg

#endif // MMWCG_STATS_HPP
