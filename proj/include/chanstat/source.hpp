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

#ifndef CHANSTAT_SOURCE_HPP
#define CHANSTAT_SOURCE_HPP

#include "chanstat/model.hpp"

#include <cstddef>

namespace chanstat
{

// Anything that can hand out blocks of consecutive CTF snapshots. A full
// measurement band (311 x 960000 samples) does not fit comfortably in memory,
// so the analysis pipeline pulls one stationarity region at a time.
class CtfSource
{
public:
    virtual ~CtfSource() = default;

    virtual const BandId &band() const = 0;
    virtual const SoundingConfig &config() const = 0;

    // Snapshots [first, first + count) as a K x count matrix.
    virtual CMatrix snapshots(std::size_t first, std::size_t count) = 0;

    // Unitary inverse DFT over subcarriers of the same block. Sources that
    // synthesise in the delay domain override this to skip a transform pair.
    virtual CMatrix delay_snapshots(std::size_t first, std::size_t count);

    RegionCtf region(std::size_t index);
    RegionCir region_cir(std::size_t index);
};

class MemoryCtfSource final : public CtfSource
{
public:
    explicit MemoryCtfSource(const Ctf &ctf) : ctf_(ctf) {}

    const BandId &band() const override { return ctf_.band(); }
    const SoundingConfig &config() const override { return ctf_.config(); }
    CMatrix snapshots(std::size_t first, std::size_t count) override;

private:
    const Ctf &ctf_;
};

// Copies snapshot columns [first, first + count) out of a matrix.
CMatrix column_block(const CMatrix &m, std::size_t first, std::size_t count);

} // namespace chanstat

#endif
