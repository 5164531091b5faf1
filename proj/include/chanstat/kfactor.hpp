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

#ifndef CHANSTAT_KFACTOR_HPP
#define CHANSTAT_KFACTOR_HPP

#include "chanstat/model.hpp"

namespace chanstat
{

struct MomentSummary
{
    double mean_power = 0.0;
    double power_rms_fluctuation = 0.0; // population RMS deviation of |H|^2
    std::size_t sample_count = 0;
};

// |H[k,n]|^2 elementwise.
RMatrix channel_power(const RegionCtf &region);

MomentSummary moments(const RMatrix &power);

// Method-of-moments Rician K-factor of a region from the pooled power samples:
//
//   |V|^2   = sqrt(mean^2 - rms^2)
//   sigma^2 = mean - |V|^2
//   K       = |V|^2 / sigma^2
//
// A negative radicand or sigma^2 <= 0 marks the region invalid and leaves K
// undefined. rms_delay_spread_s is left at zero.
RegionMetrics estimate_kfactor(const RegionCtf &region);
RegionMetrics kfactor_from_moments(const MomentSummary &m, std::size_t region_index = 0);

} // namespace chanstat

#endif
