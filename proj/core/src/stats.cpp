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

#include <mmwcg/error.hpp>
#include <mmwcg/stats.hpp>

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace mmwcg {

namespace {

struct Moments
{
	double mean{0};
	double stddev{0};
	double ci95{0};
};

Moments moments(std::span<const double> xs)
{
	Moments m;
	const auto n = static_cast<double>(xs.size());
	m.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
	if (xs.size() < 2)
	{
		return m;
	}
	double ss = 0;
	for (double x : xs)
	{
		ss += (x - m.mean) * (x - m.mean);
	}
	m.stddev = std::sqrt(ss / (n - 1));
	m.ci95 = student_t_quantile(0.975, n - 1) * m.stddev / std::sqrt(n);
	return m;
}

std::vector<double> ranks(std::span<const double> xs)
{
	std::vector<std::size_t> order(xs.size());
	std::iota(order.begin(), order.end(), 0);
	std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
	std::vector<double> r(xs.size());
	for (std::size_t i = 0; i < order.size();)
	{
		std::size_t j = i;
		while (j + 1 < order.size() && xs[order[j + 1]] == xs[order[i]])
		{
			++j;
		}
		const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
		for (std::size_t k = i; k <= j; ++k)
		{
			r[order[k]] = avg;
		}
		i = j + 1;
	}
	return r;
}

} // namespace

double student_t_quantile(double probability, double degrees_of_freedom)
{
	return boost::math::quantile(boost::math::students_t(degrees_of_freedom), probability);
}

std::vector<SummaryRow> summarize(std::span<const RunRecord> records)
{
	if (records.empty())
	{
		throw EmptyInput("no records to summarize");
	}

	std::vector<std::pair<int, Scheme>> keys;
	std::map<std::pair<int, Scheme>, std::vector<double>> samples;
	for (const RunRecord& r : records)
	{
		const auto key = std::make_pair(r.sweep_value, r.scheme);
		auto [it, inserted] = samples.try_emplace(key);
		if (inserted)
		{
			keys.push_back(key);
		}
		it->second.push_back(r.sum_rate_bps);
	}

	std::vector<SummaryRow> rows;
	for (const auto& key : keys)
	{
		const auto& xs = samples.at(key);
		const Moments m = moments(xs);
		SummaryRow row;
		row.sweep_value = key.first;
		row.scheme = key.second;
		row.n = xs.size();
		row.mean = m.mean;
		row.stddev = m.stddev;
		row.ci95_half_width = m.ci95;
		rows.push_back(row);
	}

	for (auto& row : rows)
	{
		if (row.scheme == Scheme::CG)
		{
			continue;
		}
		const auto cg = std::find_if(rows.begin(), rows.end(), [&](const SummaryRow& o) {
			return o.scheme == Scheme::CG && o.sweep_value == row.sweep_value;
		});
		if (cg != rows.end() && row.mean != 0)
		{
			row.cg_improvement = (cg->mean - row.mean) / row.mean;
		}
	}
	return rows;
}

PairedComparison paired_comparison(std::span<const double> a, std::span<const double> b)
{
	if (a.size() != b.size() || a.size() < 2)
	{
		throw EmptyInput("paired comparison needs two equally sized samples of at least two values");
	}
	std::vector<double> d(a.size());
	for (std::size_t i = 0; i < a.size(); ++i)
	{
		d[i] = a[i] - b[i];
	}
	const Moments m = moments(d);
	return {d.size(), m.mean, m.mean - m.ci95, m.mean + m.ci95};
}

double spearman(std::span<const double> x, std::span<const double> y)
{
	if (x.size() != y.size() || x.size() < 2)
	{
		throw EmptyInput("spearman needs two equally sized samples of at least two values");
	}
	const auto rx = ranks(x);
	const auto ry = ranks(y);
	const auto n = static_cast<double>(x.size());
	const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
	const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
	double sxy = 0, sxx = 0, syy = 0;
	for (std::size_t i = 0; i < rx.size(); ++i)
	{
		sxy += (rx[i] - mx) * (ry[i] - my);
		sxx += (rx[i] - mx) * (rx[i] - mx);
		syy += (ry[i] - my) * (ry[i] - my);
	}
	if (sxx == 0 || syy == 0)
	{
		return 0;
	}
	return sxy / std::sqrt(sxx * syy);
}

} // namespace mmwcg
