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

#ifndef CHANSTAT_PIPELINE_HPP
#define CHANSTAT_PIPELINE_HPP

#include "chanstat/dispersion.hpp"
#include "chanstat/preprocess.hpp"
#include "chanstat/source.hpp"
#include "chanstat/stats.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace chanstat
{

enum class NoiseFloorScope
{
    Region, // median per stationarity region
    Global  // median of the per-region floors of a band
};

struct AnalysisOptions
{
    double t_start_s = 12.0;
    double t_end_s = 20.0;
    bool threshold = true;
    NoiseFloorScope noise_floor_scope = NoiseFloorScope::Region;
    KUnits k_units = KUnits::Db;
    double nw_time = default_time_halfbandwidth;
    double nw_freq = default_freq_halfbandwidth;
    double reference_rho = reference_rho_3gpp;
};

// Regions [first, first + count) lying entirely inside [t_start, t_end).
struct RegionWindow
{
    std::size_t first = 0;
    std::size_t count = 0;
};

RegionWindow select_regions(const SoundingConfig &cfg, double t_start_s, double t_end_s);

inline double region_center_time(const SoundingConfig &cfg, std::size_t region)
{
    return (static_cast<double>(region) + 0.5) * region_duration(cfg);
}

// K-factor and RMS delay spread of one region. With a dynamic range the region
// is denoised in the delay domain first.
RegionMetrics analyze_region(const RegionCtf &region, const TaperSet &tapers, const SoundingConfig &cfg,
                             std::optional<double> dr_db);

struct BandAnalysis
{
    BandId band;
    std::vector<RegionMetrics> regions;
    std::vector<double> t_center_s;
    std::optional<DynamicRangeReport> dynamic_range; // band median, absent without thresholding
    std::optional<BandSummary> summary;
    std::string summary_error;
};

struct AnalysisResult
{
    std::vector<BandAnalysis> bands; // sorted by band label
    std::optional<double> common_dr_db;
    RegionWindow window;
    std::vector<std::string> notes;
};

AnalysisResult analyze(std::span<CtfSource *const> sources, const AnalysisOptions &options);

} // namespace chanstat

#endif
