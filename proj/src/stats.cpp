// SPDX-License-Identifier: Apache-2.0
//
// chanstat - time-varying channel statistics from multi-band sounder data
// Copyright (C) 2026 The chanstat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "chanstat/stats.hpp"
#include "chanstat/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace chanstat
{
namespace
{
// Exactly constant, as opposed to a mean that merely rounds away from the values.
bool constant(std::span<const double> v)
{
    return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
}
} // namespace

double pearson(std::span<const double> x, std::span<const double> y)
{
    if (x.size() != y.size())
        throw Error(ErrorCode::DegenerateInput, "sequences differ in length (" + std::to_string(x.size()) + " vs " +
                                                    std::to_string(y.size()) + ")");
    if (x.size() < 2)
        throw Error(ErrorCode::DegenerateInput, "correlation needs at least two points");
    if (constant(x) || constant(y))
        throw Error(ErrorCode::DegenerateInput, "correlation of a constant sequence is undefined");

    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;

    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw Error(ErrorCode::DegenerateInput, "correlation of a constant sequence is undefined");
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::pair<double, double> mean_std(std::span<const double> values)
{
    if (values.empty())
        throw Error(ErrorCode::DegenerateInput, "mean of an empty sequence");
    if (constant(values))
        return {values.front(), 0.0};
    double mean = 0.0;
    for (double v : values)
        mean += v;
    mean /= static_cast<double>(values.size());
    double sq = 0.0;
    for (double v : values)
        sq += (v - mean) * (v - mean);
    return {mean, std::sqrt(sq / static_cast<double>(values.size()))};
}

std::optional<double> kfactor_db(const RegionMetrics &metrics)
{
    if (!metrics.valid || !metrics.k_factor_linear)
        return std::nullopt;
    return 10.0 * std::log10(*metrics.k_factor_linear);
}

BandSummary summarize_band(std::span<const RegionMetrics> metrics, const BandId &band, double reference_rho,
                           KUnits k_units)
{
    // Sorting by region index makes the reduction order, and so the rounding,
    // independent of the order regions were handed in.
    std::vector<const RegionMetrics *> valid;
    std::size_t invalid = 0;
    for (const auto &m : metrics)
    {
        if (m.valid && m.k_factor_linear && std::isfinite(m.rms_delay_spread_s))
            valid.push_back(&m);
        else
            ++invalid;
    }
    std::sort(valid.begin(), valid.end(),
              [](const RegionMetrics *a, const RegionMetrics *b) { return a->region_index < b->region_index; });
    if (valid.size() < 2)
        throw Error(ErrorCode::TooFewValidRegions, "band " + band.label + " has " + std::to_string(valid.size()) +
                                                       " valid regions, need at least 2");

    std::vector<double> k_db, k_lin, ds;
    for (const auto *m : valid)
    {
        k_db.push_back(*kfactor_db(*m));
        k_lin.push_back(*m->k_factor_linear);
        ds.push_back(m->rms_delay_spread_s);
    }

    BandSummary s;
    s.band = band;
    std::tie(s.k_mean_db, s.k_std_db) = mean_std(k_db);
    std::tie(s.ds_mean_s, s.ds_std_s) = mean_std(ds);
    s.valid_region_count = valid.size();
    s.invalid_region_count = invalid;
    s.reference_rho = reference_rho;
    try
    {
        s.rho = pearson(k_units == KUnits::Db ? k_db : k_lin, ds);
    }
    catch (const Error &e)
    {
        if (e.code() != ErrorCode::DegenerateInput)
            throw;
    }
    return s;
}

std::vector<std::pair<double, double>> ecdf(std::span<const double> values)
{
    if (values.empty())
        throw Error(ErrorCode::DegenerateInput, "ECDF of an empty sequence");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    std::vector<std::pair<double, double>> out;
    for (std::size_t i = 0; i < sorted.size(); ++i)
    {
        if (i + 1 < sorted.size() && sorted[i + 1] == sorted[i])
            continue;
        out.emplace_back(sorted[i], static_cast<double>(i + 1) / n);
    }
    return out;
}

} // namespace chanstat
