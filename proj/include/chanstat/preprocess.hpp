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

#ifndef CHANSTAT_PREPROCESS_HPP
#define CHANSTAT_PREPROCESS_HPP

#include "chanstat/model.hpp"

#include <span>
#include <vector>

namespace chanstat
{

// Margin between the median noise floor and the lowest level kept.
inline constexpr double noise_margin_db = 6.0;

struct DynamicRangeReport
{
    double noise_floor_db = 0.0;
    double peak_power_db = 0.0;
    double dynamic_range_db = 0.0; // peak - (noise floor + 6 dB)
    bool degenerate = false;       // dynamic range <= 0
};

std::vector<RegionCtf> partition_regions(const Ctf &ctf);

// Unitary inverse DFT over subcarriers: h[tau] = K^-1/2 sum_k H[k] e^{+j2pi k tau/K}.
RegionCir to_delay_domain(const RegionCtf &region);

// Unitary forward DFT over delay, the exact inverse of to_delay_domain.
RegionCtf to_frequency_domain(const RegionCir &cir);

// 10 log10 of the median sample power. -inf when more than half the samples
// are exactly zero.
double noise_floor(const RegionCir &cir);

double peak_power_db(const RegionCir &cir);

DynamicRangeReport dynamic_range(const RegionCir &cir);
DynamicRangeReport dynamic_range(const RegionCir &cir, double noise_floor_db);

// Smallest dynamic range across bands.
double common_dynamic_range(std::span<const DynamicRangeReport> reports);

// Zeroes every sample whose power is more than dr_db below the region peak.
RegionCir apply_threshold(const RegionCir &cir, double dr_db);

// Delay-domain denoising of one region: IDFT, threshold, DFT.
RegionCtf denoise_region(const RegionCtf &region, double dr_db);

// Threshold and DFT for a region already in the delay domain.
RegionCtf denoise_cir(RegionCir cir, double dr_db);

} // namespace chanstat

#endif
