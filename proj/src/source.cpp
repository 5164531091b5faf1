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

#include "chanstat/source.hpp"
#include "chanstat/error.hpp"
#include "chanstat/fft.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace chanstat
{

namespace
{

void check_region(const SoundingConfig &cfg, std::size_t index)
{
    if (index >= region_count(cfg))
        throw Error(ErrorCode::InvalidArgument, "region index " + std::to_string(index) + " out of range (" +
                                                    std::to_string(region_count(cfg)) + " regions)");
}

} // namespace

CMatrix CtfSource::delay_snapshots(std::size_t first, std::size_t count)
{
    CMatrix m = snapshots(first, count);
    fft::columns(m, fft::Direction::Inverse);
    const double scale = 1.0 / std::sqrt(static_cast<double>(m.rows()));
    for (auto &v : m.values())
        v *= scale;
    return m;
}

RegionCtf CtfSource::region(std::size_t index)
{
    const auto &cfg = config();
    check_region(cfg, index);
    return RegionCtf{band(), index, snapshots(index * cfg.snapshots_per_region, cfg.snapshots_per_region)};
}

RegionCir CtfSource::region_cir(std::size_t index)
{
    const auto &cfg = config();
    check_region(cfg, index);
    return RegionCir{band(), index, delay_snapshots(index * cfg.snapshots_per_region, cfg.snapshots_per_region)};
}

CMatrix column_block(const CMatrix &m, std::size_t first, std::size_t count)
{
    if (first + count > m.cols())
        throw Error(ErrorCode::InvalidArgument, "snapshot block [" + std::to_string(first) + ", " +
                                                    std::to_string(first + count) + ") exceeds " +
                                                    std::to_string(m.cols()) + " snapshots");
    CMatrix out(m.rows(), count);
    std::copy_n(m.data() + first * m.rows(), count * m.rows(), out.data());
    return out;
}

CMatrix MemoryCtfSource::snapshots(std::size_t first, std::size_t count)
{
    return column_block(ctf_.samples(), first, count);
}

} // namespace chanstat
