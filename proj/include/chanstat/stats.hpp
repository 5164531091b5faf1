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

#ifndef CHANSTAT_STATS_HPP
#define CHANSTAT_STATS_HPP

#include "chanstat/model.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace chanstat
{

// Urban-micro correlation between K-factor and delay spread in the 3GPP model.
inline constexpr double reference_rho_3gpp = -0.7;

enum class KUnits
{
    Db,
    Linear
};

struct BandSummary
{
    BandId band;
    double k_mean_db = 0.0;
    double k_std_db = 0.0;
    double ds_mean_s = 0.0;
    double ds_std_s = 0.0;
    std::optional<double> rho; // undefined when either series is constant
    std::size_t valid_region_count = 0;
    std::size_t invalid_region_count = 0;
    double reference_rho = reference_rho_3gpp;
};

// Pearson product-moment correlation.
double pearson(std::span<const double> x, std::span<const double> y);

// Population mean and standard deviation.
std::pair<double, double> mean_std(std::span<const double> values);

// Statistics over the valid regions; invalid ones are excluded and counted.
BandSummary summarize_band(std::span<const RegionMetrics> metrics, const BandId &band,
                           double reference_rho = reference_rho_3gpp, KUnits k_units = KUnits::Db);

// Sorted distinct values with F(v) = #{x <= v} / n.
std::vector<std::pair<double, double>> ecdf(std::span<const double> values);

std::optional<double> kfactor_db(const RegionMetrics &metrics);

} // namespace chanstat

#endif
