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

#include "chanstat/pipeline.hpp"
#include "chanstat/error.hpp"
#include "chanstat/kfactor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace chanstat
{
namespace
{

double median(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    const std::size_t mid = v.size() / 2;
    return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

std::string fmt(double v)
{
    std::ostringstream s;
    s << v;
    return s.str();
}

} // namespace

RegionWindow select_regions(const SoundingConfig &cfg, double t_start_s, double t_end_s)
{
    const double span = region_duration(cfg);
    const double total = static_cast<double>(cfg.num_snapshots) * cfg.snapshot_interval_s;
    const double tol = 1e-9;
    if (!std::isfinite(t_start_s) || !std::isfinite(t_end_s) || t_start_s < -tol || t_end_s <= t_start_s ||
        t_end_s > total + tol * std::max(1.0, total))
        throw Error(ErrorCode::WindowOutOfRange, "analysis window [" + fmt(t_start_s) + ", " + fmt(t_end_s) +
                                                     ") s is not inside the measurement [0, " + fmt(total) + ") s");
    const auto first = static_cast<std::size_t>(std::max(0.0, std::ceil(t_start_s / span - tol)));
    auto end = static_cast<std::size_t>(std::floor(t_end_s / span + tol));
    end = std::min(end, region_count(cfg));
    if (end <= first)
        throw Error(ErrorCode::WindowOutOfRange, "analysis window [" + fmt(t_start_s) + ", " + fmt(t_end_s) +
                                                     ") s holds no complete stationarity region");
    return {first, end - first};
}

RegionMetrics analyze_region(const RegionCtf &region, const TaperSet &tapers, const SoundingConfig &cfg,
                             std::optional<double> dr_db)
{
    std::optional<RegionCtf> denoised;
    if (dr_db)
        denoised = denoise_region(region, *dr_db);
    const RegionCtf &processed = denoised ? *denoised : region;
    RegionMetrics m = estimate_kfactor(processed);
    try
    {
        m.rms_delay_spread_s = rms_delay_spread(pdp(processed, tapers, cfg));
    }
    catch (const Error &e)
    {
        if (e.code() != ErrorCode::ZeroPdp)
            throw;
        m.rms_delay_spread_s = std::numeric_limits<double>::quiet_NaN();
        m.valid = false;
    }
    return m;
}

AnalysisResult analyze(std::span<CtfSource *const> sources, const AnalysisOptions &options)
{
    if (sources.empty())
        throw Error(ErrorCode::InvalidArgument, "no input bands");

    std::vector<CtfSource *> bands(sources.begin(), sources.end());
    std::sort(bands.begin(), bands.end(),
              [](const CtfSource *a, const CtfSource *b) { return a->band().label < b->band().label; });

    const SoundingConfig &ref = bands.front()->config();
    std::set<std::string> labels;
    for (const auto *src : bands)
    {
        const auto &cfg = src->config();
        if (!labels.insert(src->band().label).second)
            throw Error(ErrorCode::BandMismatch, "band label '" + src->band().label + "' appears twice");
        if (cfg.num_snapshots != ref.num_snapshots || cfg.snapshots_per_region != ref.snapshots_per_region ||
            cfg.snapshot_interval_s != ref.snapshot_interval_s)
            throw Error(ErrorCode::BandMismatch, "band '" + src->band().label +
                                                     "' differs from '" + bands.front()->band().label +
                                                     "' in snapshot count, interval or region length");
    }

    AnalysisResult result;
    result.window = select_regions(ref, options.t_start_s, options.t_end_s);
    const auto [first, count] = result.window;

    const std::size_t dropped = ref.num_snapshots - region_count(ref) * ref.snapshots_per_region;
    if (dropped > 0)
        result.notes.push_back(std::to_string(dropped) +
                               " trailing snapshots do not fill a stationarity region and were discarded");
    result.notes.push_back("taper half-bandwidths NW_time = " + fmt(options.nw_time) + ", NW_freq = " +
                           fmt(options.nw_freq) + " are assumed values");

    // Pass 1: per-band dynamic range as the median over the band's regions.
    std::vector<DynamicRangeReport> band_reports;
    if (options.threshold)
    {
        for (auto *src : bands)
        {
            std::vector<double> floors, peaks;
            for (std::size_t i = first; i < first + count; ++i)
            {
                const RegionCir cir = src->region_cir(i);
                const double peak = peak_power_db(cir);
                if (!std::isfinite(peak))
                    continue;
                floors.push_back(noise_floor(cir));
                peaks.push_back(peak);
            }
            DynamicRangeReport band_dr{};
            if (floors.empty())
            {
                band_dr.noise_floor_db = band_dr.peak_power_db = -std::numeric_limits<double>::infinity();
                band_dr.dynamic_range_db = std::numeric_limits<double>::infinity();
                result.notes.push_back("band " + src->band().label + ": every region is identically zero");
            }
            else
            {
                std::vector<double> ranges(floors.size());
                const double global_floor = median(floors);
                for (std::size_t r = 0; r < floors.size(); ++r)
                {
                    const double nf = options.noise_floor_scope == NoiseFloorScope::Global ? global_floor : floors[r];
                    ranges[r] = peaks[r] - (nf + noise_margin_db);
                }
                band_dr.noise_floor_db = global_floor;
                band_dr.peak_power_db = median(peaks);
                band_dr.dynamic_range_db = median(ranges);
                band_dr.degenerate = !(band_dr.dynamic_range_db > 0.0);
            }
            band_reports.push_back(band_dr);
        }
        result.common_dr_db = common_dynamic_range(band_reports);
        if (!(*result.common_dr_db > 0.0))
        {
            result.notes.push_back("common dynamic range " + fmt(*result.common_dr_db) +
                                   " dB is not positive; thresholding skipped");
            result.common_dr_db.reset();
        }
    }

    // Pass 2: denoise with the common dynamic range and estimate.
    for (std::size_t b = 0; b < bands.size(); ++b)
    {
        auto *src = bands[b];
        const auto &cfg = src->config();
        const TaperSet tapers = make_tapers(cfg, options.nw_time, options.nw_freq);

        BandAnalysis band;
        band.band = src->band();
        if (options.threshold)
            band.dynamic_range = band_reports[b];
        for (std::size_t i = first; i < first + count; ++i)
        {
            const RegionCtf processed = result.common_dr_db ? denoise_cir(src->region_cir(i), *result.common_dr_db)
                                                            : src->region(i);
            band.regions.push_back(analyze_region(processed, tapers, cfg, std::nullopt));
            band.t_center_s.push_back(region_center_time(cfg, i));
        }
        try
        {
            band.summary = summarize_band(band.regions, band.band, options.reference_rho, options.k_units);
            if (!band.summary->rho)
                result.notes.push_back("band " + band.band.label + ": correlation undefined (constant series)");
        }
        catch (const Error &e)
        {
            if (e.code() != ErrorCode::TooFewValidRegions)
                throw;
            band.summary_error = e.what();
            result.notes.push_back(e.what());
        }
        result.bands.push_back(std::move(band));
    }
    return result;
}

} // namespace chanstat
