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

#include "chanstat/kfactor.hpp"
#include "chanstat/error.hpp"

#include <algorithm>
#include <cmath>

namespace chanstat
{

RMatrix channel_power(const RegionCtf &region)
{
    RMatrix power(region.samples.rows(), region.samples.cols());
    const auto in = region.samples.values();
    auto out = power.values();
    for (std::size_t i = 0; i < in.size(); ++i)
        out[i] = abs2(in[i]);
    return power;
}

MomentSummary moments(const RMatrix &power)
{
    if (power.empty())
        throw Error(ErrorCode::InvalidArgument, "moments of an empty power matrix");
    const auto values = power.values();
    const double count = static_cast<double>(values.size());

    double sum = 0.0;
    for (double p : values)
        sum += p;
    const double mean = sum / count;

    double sq = 0.0;
    for (double p : values)
        sq += (p - mean) * (p - mean);

    return MomentSummary{mean, std::sqrt(sq / count), values.size()};
}

RegionMetrics kfactor_from_moments(const MomentSummary &m, std::size_t region_index)
{
    RegionMetrics r;
    r.region_index = region_index;
    r.mean_power = m.mean_power;

    const double radicand = m.mean_power * m.mean_power - m.power_rms_fluctuation * m.power_rms_fluctuation;
    if (radicand < 0.0)
    {
        // More fluctuation than a Rayleigh channel can produce; no MoM solution.
        r.constant_power = 0.0;
        r.fluctuating_power = m.mean_power;
        return r;
    }
    r.constant_power = std::sqrt(radicand);
    r.fluctuating_power = m.mean_power - r.constant_power;
    if (r.fluctuating_power <= 0.0 || r.constant_power <= 0.0)
    {
        r.fluctuating_power = std::max(r.fluctuating_power, 0.0);
        return r;
    }
    r.k_factor_linear = r.constant_power / r.fluctuating_power;
    r.k_factor_db = 10.0 * std::log10(*r.k_factor_linear);
    r.valid = true;
    return r;
}

RegionMetrics estimate_kfactor(const RegionCtf &region)
{
    return kfactor_from_moments(moments(channel_power(region)), region.region_index);
}

} // namespace chanstat
