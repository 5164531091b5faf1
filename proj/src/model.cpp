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

#include "chanstat/model.hpp"
#include "chanstat/error.hpp"

#include <array>
#include <cmath>
#include <set>
#include <sstream>

namespace chanstat
{

std::string_view to_string(ErrorCode code)
{
    switch (code)
    {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::OddRegionLength: return "OddRegionLength";
    case ErrorCode::TapOutOfRange: return "TapOutOfRange";
    case ErrorCode::ZeroTransmitAmplitude: return "ZeroTransmitAmplitude";
    case ErrorCode::WrongSymbolCount: return "WrongSymbolCount";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroDivisor: return "ZeroDivisor";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ZeroMagnitudeEntry: return "ZeroMagnitudeEntry";
    case ErrorCode::AllZeroRegion: return "AllZeroRegion";
    case ErrorCode::InvalidTaperOrder: return "InvalidTaperOrder";
    case ErrorCode::ZeroPdp: return "ZeroPdp";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::TooFewValidRegions: return "TooFewValidRegions";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::BandMismatch: return "BandMismatch";
    case ErrorCode::WindowOutOfRange: return "WindowOutOfRange";
    }
    return "Unknown";
}

Ctf::Ctf(BandId band, SoundingConfig config, CMatrix samples)
    : band_(std::move(band)), config_(std::move(config)), samples_(std::move(samples))
{
    if (samples_.rows() != config_.num_subcarriers || samples_.cols() != config_.num_snapshots)
    {
        std::ostringstream msg;
        msg << "CTF is " << samples_.rows() << " x " << samples_.cols() << ", config expects "
            << config_.num_subcarriers << " x " << config_.num_snapshots;
        throw Error(ErrorCode::DimensionMismatch, msg.str());
    }
    for (const auto &v : samples_.values())
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw Error(ErrorCode::InvalidArgument, "CTF contains non-finite samples");
}

SoundingConfig measurement_config(double carrier_frequency_hz)
{
    SoundingConfig cfg;
    cfg.carrier_frequency_hz = carrier_frequency_hz;
    cfg.num_subcarriers = 311;
    cfg.subcarrier_spacing_hz = 500e3;
    cfg.bandwidth_hz = 155.5e6;
    cfg.symbol_duration_s = 2e-6;
    cfg.symbols_per_snapshot = 5;
    cfg.snapshot_interval_s = 31.25e-6;
    cfg.snapshot_duration_s = 10e-6;
    cfg.num_snapshots = 960000;
    cfg.measurement_duration_s = 30.0;
    cfg.stationarity_window_s = 0.1;
    cfg.snapshots_per_region = 3200;
    cfg.time_tapers = 2;
    cfg.freq_tapers = 1;

    // Maximum resolvable relative velocity per band.
    if (std::abs(carrier_frequency_hz - 3.2e9) < 1e6)
        cfg.max_relative_velocity_mps = 1500.0;
    else if (std::abs(carrier_frequency_hz - 34.3e9) < 1e6)
        cfg.max_relative_velocity_mps = 140.0;
    else if (std::abs(carrier_frequency_hz - 62.35e9) < 1e6)
        cfg.max_relative_velocity_mps = 77.0;
    return cfg;
}

std::vector<BandId> measurement_bands()
{
    return {{"3.2GHz", 3.2e9}, {"34.3GHz", 34.3e9}, {"62.35GHz", 62.35e9}};
}

namespace
{
bool within_relative(double value, double reference, double tol)
{
    return std::abs(value - reference) <= tol * std::abs(reference);
}
} // namespace

SoundingConfig validate_config(const SoundingConfig &cfg)
{
    std::vector<std::string> problems;
    auto require = [&](bool ok, const std::string &what)
    {
        if (!ok)
            problems.push_back(what);
    };
    auto positive = [&](double v, const char *name)
    {
        require(std::isfinite(v) && v > 0.0, std::string(name) + " must be positive and finite");
    };

    positive(cfg.carrier_frequency_hz, "carrier_frequency_hz");
    positive(cfg.subcarrier_spacing_hz, "subcarrier_spacing_hz");
    positive(cfg.bandwidth_hz, "bandwidth_hz");
    positive(cfg.symbol_duration_s, "symbol_duration_s");
    positive(cfg.snapshot_interval_s, "snapshot_interval_s");
    positive(cfg.snapshot_duration_s, "snapshot_duration_s");
    positive(cfg.measurement_duration_s, "measurement_duration_s");
    positive(cfg.stationarity_window_s, "stationarity_window_s");
    require(std::isfinite(cfg.max_relative_velocity_mps) && cfg.max_relative_velocity_mps >= 0.0,
            "max_relative_velocity_mps must be non-negative and finite");

    require(cfg.num_subcarriers >= 2, "num_subcarriers must be at least 2");
    require(cfg.symbols_per_snapshot >= 2, "symbols_per_snapshot must be at least 2");
    require(cfg.time_tapers >= 1, "time_tapers must be at least 1");
    require(cfg.freq_tapers >= 1, "freq_tapers must be at least 1");

    const double k = static_cast<double>(cfg.num_subcarriers);
    if (cfg.num_subcarriers > 0 && cfg.subcarrier_spacing_hz > 0.0 && cfg.bandwidth_hz > 0.0)
        require(within_relative(cfg.bandwidth_hz, k * cfg.subcarrier_spacing_hz, 0.005),
                "bandwidth_hz must equal num_subcarriers * subcarrier_spacing_hz within 0.5%");

    if (cfg.snapshot_interval_s > 0.0 && cfg.stationarity_window_s > 0.0)
    {
        const double expected = std::round(cfg.stationarity_window_s / cfg.snapshot_interval_s);
        require(static_cast<double>(cfg.snapshots_per_region) == expected,
                "snapshots_per_region must equal round(stationarity_window_s / snapshot_interval_s) = " +
                    std::to_string(static_cast<long long>(expected)));
    }
    require(cfg.num_snapshots >= cfg.snapshots_per_region,
            "num_snapshots must be at least snapshots_per_region");
    require(cfg.snapshots_per_region >= cfg.time_tapers * cfg.freq_tapers,
            "snapshots_per_region must be at least time_tapers * freq_tapers");
    require(cfg.snapshots_per_region >= 1, "snapshots_per_region must be at least 1");

    if (cfg.snapshot_interval_s > 0.0 && cfg.measurement_duration_s > 0.0)
        require(within_relative(cfg.measurement_duration_s,
                                static_cast<double>(cfg.num_snapshots) * cfg.snapshot_interval_s, 0.005),
                "measurement_duration_s must equal num_snapshots * snapshot_interval_s within 0.5%");

    if (!problems.empty())
    {
        std::string msg = "invalid sounding config:";
        for (const auto &p : problems)
            msg += "\n  - " + p;
        throw Error(ErrorCode::InvalidConfig, msg);
    }
    return cfg;
}

std::size_t region_count(const SoundingConfig &cfg)
{
    if (cfg.snapshots_per_region == 0)
        return 0;
    return cfg.num_snapshots / cfg.snapshots_per_region;
}

std::vector<double> delay_axis(const SoundingConfig &cfg)
{
    std::vector<double> axis(cfg.num_subcarriers);
    for (std::size_t l = 0; l < axis.size(); ++l)
        axis[l] = static_cast<double>(l) / cfg.bandwidth_hz;
    return axis;
}

std::vector<double> doppler_axis(const SoundingConfig &cfg)
{
    const std::size_t n = cfg.snapshots_per_region;
    if (n % 2 != 0)
        throw Error(ErrorCode::OddRegionLength,
                    "snapshots_per_region = " + std::to_string(n) + " is odd; the Doppler axis needs an even length");
    const double resolution = 1.0 / (static_cast<double>(n) * cfg.snapshot_interval_s);
    std::vector<double> axis(n);
    const auto half = static_cast<long long>(n / 2);
    for (std::size_t j = 0; j < n; ++j)
        axis[j] = static_cast<double>(static_cast<long long>(j) - half) * resolution;
    return axis;
}

// ---- JSON -----------------------------------------------------------------

namespace
{
constexpr std::array config_keys = {
    "carrier_frequency_hz", "num_subcarriers", "subcarrier_spacing_hz", "bandwidth_hz",
    "symbol_duration_s", "symbols_per_snapshot", "snapshot_interval_s", "snapshot_duration_s",
    "num_snapshots", "measurement_duration_s", "max_relative_velocity_mps", "stationarity_window_s",
    "snapshots_per_region", "time_tapers", "freq_tapers"};

void check_keys(const nlohmann::json &j, std::span<const char *const> allowed, const char *what)
{
    if (!j.is_object())
        throw Error(ErrorCode::ParseError, std::string(what) + " must be a JSON object");
    std::set<std::string> known(allowed.begin(), allowed.end());
    for (const auto &item : j.items())
        if (!known.contains(item.key()))
            throw Error(ErrorCode::ParseError, std::string(what) + ": unknown key '" + item.key() + "'");
    for (const auto &key : known)
        if (!j.contains(key))
            throw Error(ErrorCode::ParseError, std::string(what) + ": missing key '" + key + "'");
}

double get_real(const nlohmann::json &j, const char *key)
{
    const auto &v = j.at(key);
    if (!v.is_number())
        throw Error(ErrorCode::ParseError, std::string("'") + key + "' must be a number");
    return v.get<double>();
}

std::size_t get_count(const nlohmann::json &j, const char *key)
{
    const auto &v = j.at(key);
    if (!v.is_number_unsigned())
        throw Error(ErrorCode::ParseError, std::string("'") + key + "' must be a non-negative integer");
    return v.get<std::size_t>();
}
} // namespace

void to_json(nlohmann::json &j, const SoundingConfig &cfg)
{
    j = nlohmann::json{
        {"carrier_frequency_hz", cfg.carrier_frequency_hz},
        {"num_subcarriers", cfg.num_subcarriers},
        {"subcarrier_spacing_hz", cfg.subcarrier_spacing_hz},
        {"bandwidth_hz", cfg.bandwidth_hz},
        {"symbol_duration_s", cfg.symbol_duration_s},
        {"symbols_per_snapshot", cfg.symbols_per_snapshot},
        {"snapshot_interval_s", cfg.snapshot_interval_s},
        {"snapshot_duration_s", cfg.snapshot_duration_s},
        {"num_snapshots", cfg.num_snapshots},
        {"measurement_duration_s", cfg.measurement_duration_s},
        {"max_relative_velocity_mps", cfg.max_relative_velocity_mps},
        {"stationarity_window_s", cfg.stationarity_window_s},
        {"snapshots_per_region", cfg.snapshots_per_region},
        {"time_tapers", cfg.time_tapers},
        {"freq_tapers", cfg.freq_tapers}};
}

void from_json(const nlohmann::json &j, SoundingConfig &cfg)
{
    check_keys(j, config_keys, "sounding config");
    cfg.carrier_frequency_hz = get_real(j, "carrier_frequency_hz");
    cfg.num_subcarriers = get_count(j, "num_subcarriers");
    cfg.subcarrier_spacing_hz = get_real(j, "subcarrier_spacing_hz");
    cfg.bandwidth_hz = get_real(j, "bandwidth_hz");
    cfg.symbol_duration_s = get_real(j, "symbol_duration_s");
    cfg.symbols_per_snapshot = get_count(j, "symbols_per_snapshot");
    cfg.snapshot_interval_s = get_real(j, "snapshot_interval_s");
    cfg.snapshot_duration_s = get_real(j, "snapshot_duration_s");
    cfg.num_snapshots = get_count(j, "num_snapshots");
    cfg.measurement_duration_s = get_real(j, "measurement_duration_s");
    cfg.max_relative_velocity_mps = get_real(j, "max_relative_velocity_mps");
    cfg.stationarity_window_s = get_real(j, "stationarity_window_s");
    cfg.snapshots_per_region = get_count(j, "snapshots_per_region");
    cfg.time_tapers = get_count(j, "time_tapers");
    cfg.freq_tapers = get_count(j, "freq_tapers");
}

void to_json(nlohmann::json &j, const BandId &band)
{
    j = nlohmann::json{{"label", band.label}, {"carrier_frequency_hz", band.carrier_frequency_hz}};
}

void from_json(const nlohmann::json &j, BandId &band)
{
    constexpr std::array keys = {"label", "carrier_frequency_hz"};
    check_keys(j, keys, "band");
    if (!j.at("label").is_string())
        throw Error(ErrorCode::ParseError, "band label must be a string");
    band.label = j.at("label").get<std::string>();
    band.carrier_frequency_hz = get_real(j, "carrier_frequency_hz");
}

SoundingConfig parse_config(const std::string &json_text)
{
    nlohmann::json j;
    try
    {
        j = nlohmann::json::parse(json_text);
    }
    catch (const nlohmann::json::exception &e)
    {
        throw Error(ErrorCode::ParseError, std::string("sounding config: ") + e.what());
    }
    return j.get<SoundingConfig>();
}

std::string serialize_config(const SoundingConfig &cfg)
{
    return nlohmann::json(cfg).dump(2);
}

} // namespace chanstat
