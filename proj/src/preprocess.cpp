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

#include "chanstat/preprocess.hpp"
#include "chanstat/error.hpp"
#include "chanstat/fft.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace chanstat
{
namespace
{

void unitary(CMatrix &m, fft::Direction dir)
{
    fft::columns(m, dir);
    const double scale = 1.0 / std::sqrt(static_cast<double>(m.rows()));
    for (auto &v : m.values())
        v *= scale;
}

double max_power(const CMatrix &m)
{
    double peak = 0.0;
    for (const auto &v : m.values())
        peak = std::max(peak, abs2(v));
    return peak;
}

double to_db(double p) { return p > 0.0 ? 10.0 * std::log10(p) : -std::numeric_limits<double>::infinity(); }

} // namespace

std::vector<RegionCtf> partition_regions(const Ctf &ctf)
{
    const auto &cfg = ctf.config();
    const std::size_t count = region_count(cfg);
    const std::size_t len = cfg.snapshots_per_region;
    const std::size_t K = cfg.num_subcarriers;
    std::vector<RegionCtf> regions;
    regions.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
    {
        CMatrix block(K, len);
        std::copy_n(ctf.samples().data() + i * len * K, len * K, block.data());
        regions.push_back({ctf.band(), i, std::move(block)});
    }
    return regions;
}

RegionCir to_delay_domain(const RegionCtf &region)
{
    RegionCir cir{region.band, region.region_index, region.samples};
    unitary(cir.samples, fft::Direction::Inverse);
    return cir;
}

RegionCtf to_frequency_domain(const RegionCir &cir)
{
    RegionCtf region{cir.band, cir.region_index, cir.samples};
    unitary(region.samples, fft::Direction::Forward);
    return region;
}

double noise_floor(const RegionCir &cir)
{
    const auto values = cir.samples.values();
    if (values.empty())
        throw Error(ErrorCode::InvalidArgument, "noise floor of an empty region");
    std::vector<double> power(values.size());
    std::transform(values.begin(), values.end(), power.begin(), [](const cplx &v) { return abs2(v); });

    const std::size_t mid = power.size() / 2;
    std::nth_element(power.begin(), power.begin() + static_cast<std::ptrdiff_t>(mid), power.end());
    double median = power[mid];
    if (power.size() % 2 == 0)
    {
        const double lower = *std::max_element(power.begin(), power.begin() + static_cast<std::ptrdiff_t>(mid));
        median = 0.5 * (lower + median);
    }
    return to_db(median);
}

double peak_power_db(const RegionCir &cir) { return to_db(max_power(cir.samples)); }

DynamicRangeReport dynamic_range(const RegionCir &cir, double noise_floor_db)
{
    const double peak = max_power(cir.samples);
    if (peak == 0.0)
        throw Error(ErrorCode::AllZeroRegion, "region " + std::to_string(cir.region_index) + " is identically zero");
    DynamicRangeReport r;
    r.noise_floor_db = noise_floor_db;
    r.peak_power_db = to_db(peak);
    r.dynamic_range_db = r.peak_power_db - (noise_floor_db + noise_margin_db);
    r.degenerate = !(r.dynamic_range_db > 0.0);
    return r;
}

DynamicRangeReport dynamic_range(const RegionCir &cir) { return dynamic_range(cir, noise_floor(cir)); }

double common_dynamic_range(std::span<const DynamicRangeReport> reports)
{
    if (reports.empty())
        throw Error(ErrorCode::InvalidArgument, "no dynamic range reports");
    double dr = std::numeric_limits<double>::infinity();
    for (const auto &r : reports)
        dr = std::min(dr, r.dynamic_range_db);
    return dr;
}

namespace
{

// Zeroes every sample below peak * 10^(-dr/10). The comparison is linear,
// the same test as 10 log10 p < peak_db - dr without a logarithm per sample,
// and it does not depend on an overall scale of the input.
void threshold_in_place(CMatrix &m, double dr_db)
{
    if (std::isnan(dr_db))
        throw Error(ErrorCode::InvalidArgument, "dynamic range is NaN");
    if (dr_db == std::numeric_limits<double>::infinity())
        return;
    const double level = max_power(m) * std::pow(10.0, -dr_db / 10.0);
    for (auto &v : m.values())
        if (abs2(v) < level)
            v = cplx{};
}

} // namespace

RegionCir apply_threshold(const RegionCir &cir, double dr_db)
{
    RegionCir out = cir;
    threshold_in_place(out.samples, dr_db);
    return out;
}

RegionCtf denoise_region(const RegionCtf &region, double dr_db)
{
    // Unnormalised round trip; the threshold is scale-free so the 1/K of the
    // unitary pair is applied once at the end.
    RegionCtf out = region;
    fft::columns(out.samples, fft::Direction::Inverse);
    threshold_in_place(out.samples, dr_db);
    fft::columns(out.samples, fft::Direction::Forward);
    const double scale = 1.0 / static_cast<double>(out.samples.rows());
    for (auto &v : out.samples.values())
        v *= scale;
    return out;
}

RegionCtf denoise_cir(RegionCir cir, double dr_db)
{
    threshold_in_place(cir.samples, dr_db);
    unitary(cir.samples, fft::Direction::Forward);
    return RegionCtf{std::move(cir.band), cir.region_index, std::move(cir.samples)};
}

} // namespace chanstat
