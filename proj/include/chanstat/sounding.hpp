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

#ifndef CHANSTAT_SOUNDING_HPP
#define CHANSTAT_SOUNDING_HPP

#include "chanstat/model.hpp"

#include <filesystem>
#include <span>
#include <vector>

namespace chanstat
{

// Known transmit amplitudes X[k].
class TransmitSequence
{
public:
    explicit TransmitSequence(std::vector<cplx> amplitudes);
    std::span<const cplx> amplitudes() const noexcept { return amplitudes_; }
    std::size_t size() const noexcept { return amplitudes_.size(); }

private:
    std::vector<cplx> amplitudes_;
};

// RF chain response H_RF[k] measured back-to-back through attenuators.
class CalibrationProfile
{
public:
    CalibrationProfile(std::vector<cplx> rf_response, BandId band);
    std::span<const cplx> rf_response() const noexcept { return rf_response_; }
    const BandId &band() const noexcept { return band_; }
    std::size_t size() const noexcept { return rf_response_.size(); }

private:
    std::vector<cplx> rf_response_;
    BandId band_;
};

// Mean of symbols 1..N_sym-1 of a K x N_sym snapshot; symbol 0 is the cyclic
// prefix and is dropped.
std::vector<cplx> average_symbols(const CMatrix &snapshot, std::size_t symbols_per_snapshot);

// H[k] = Y[k] / (X[k] H_RF[k]) for one snapshot column, in place.
void ls_estimate_column(std::span<cplx> y, const TransmitSequence &x, const CalibrationProfile &cal);

// Column-wise least-squares estimate of the CTF.
CMatrix ls_estimate(const CMatrix &y, const TransmitSequence &x, const CalibrationProfile &cal);
Ctf ls_estimate(const CMatrix &y, const TransmitSequence &x, const CalibrationProfile &cal,
                const SoundingConfig &cfg);

// Calibration file: RF response plus the transmit sequence it was measured with.
struct CalibrationData
{
    CalibrationProfile profile;
    TransmitSequence tx;
};

CalibrationData load_calibration(const std::filesystem::path &path);
void save_calibration(const std::filesystem::path &path, const CalibrationProfile &profile,
                      const TransmitSequence &tx);

} // namespace chanstat

#endif
