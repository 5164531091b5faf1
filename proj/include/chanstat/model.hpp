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

#ifndef CHANSTAT_MODEL_HPP
#define CHANSTAT_MODEL_HPP

#include "chanstat/matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace chanstat
{

// Sounder and evaluation parameters for one frequency band.
// max_relative_velocity_mps, snapshot_duration_s and measurement_duration_s are
// metadata; nothing computes with them beyond consistency checks.
struct SoundingConfig
{
    double carrier_frequency_hz = 0.0;
    std::size_t num_subcarriers = 0;
    double subcarrier_spacing_hz = 0.0;
    double bandwidth_hz = 0.0;
    double symbol_duration_s = 0.0;
    std::size_t symbols_per_snapshot = 0;
    double snapshot_interval_s = 0.0;
    double snapshot_duration_s = 0.0;
    std::size_t num_snapshots = 0;
    double measurement_duration_s = 0.0;
    double max_relative_velocity_mps = 0.0;
    double stationarity_window_s = 0.0;
    std::size_t snapshots_per_region = 0;
    std::size_t time_tapers = 0;
    std::size_t freq_tapers = 0;

    bool operator==(const SoundingConfig &) const = default;
};

struct BandId
{
    std::string label;
    double carrier_frequency_hz = 0.0;

    bool operator==(const BandId &) const = default;
};

// Time-variant channel transfer function H[k,n] of one band (K x N).
class Ctf
{
public:
    Ctf(BandId band, SoundingConfig config, CMatrix samples);

    const BandId &band() const noexcept { return band_; }
    const SoundingConfig &config() const noexcept { return config_; }
    const CMatrix &samples() const noexcept { return samples_; }

private:
    BandId band_;
    SoundingConfig config_;
    CMatrix samples_;
};

// One stationarity region H^(i)[k,n], K x N_stat.
struct RegionCtf
{
    BandId band;
    std::size_t region_index = 0;
    CMatrix samples;
};

// Delay-domain view H^(i)[tau, n] of one region, K x N_stat.
struct RegionCir
{
    BandId band;
    std::size_t region_index = 0;
    CMatrix samples;
};

struct RegionMetrics
{
    std::size_t region_index = 0;
    std::optional<double> k_factor_linear;
    std::optional<double> k_factor_db;
    double constant_power = 0.0;    // |V|^2
    double fluctuating_power = 0.0; // sigma^2
    double mean_power = 0.0;
    double rms_delay_spread_s = 0.0;
    bool valid = false;
};

// Parameters of the multi-band measurement campaign for the given carrier.
SoundingConfig measurement_config(double carrier_frequency_hz);

// Carrier labels used throughout, e.g. "3.2GHz".
std::vector<BandId> measurement_bands();

SoundingConfig validate_config(const SoundingConfig &cfg);

std::size_t region_count(const SoundingConfig &cfg);

std::vector<double> delay_axis(const SoundingConfig &cfg);
std::vector<double> doppler_axis(const SoundingConfig &cfg);

// Duration of one stationarity region as realised on the snapshot grid.
inline double region_duration(const SoundingConfig &cfg)
{
    return static_cast<double>(cfg.snapshots_per_region) * cfg.snapshot_interval_s;
}

void to_json(nlohmann::json &j, const SoundingConfig &cfg);
void from_json(const nlohmann::json &j, SoundingConfig &cfg);
void to_json(nlohmann::json &j, const BandId &band);
void from_json(const nlohmann::json &j, BandId &band);

SoundingConfig parse_config(const std::string &json_text);
std::string serialize_config(const SoundingConfig &cfg);

} // namespace chanstat

#endif
