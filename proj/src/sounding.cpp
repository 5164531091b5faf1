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

#include "chanstat/sounding.hpp"
#include "chanstat/error.hpp"
#include "chanstat/io.hpp"

#include <cmath>
#include <string>

namespace chanstat
{
namespace
{
constexpr double min_divisor = 1e-12;
}

TransmitSequence::TransmitSequence(std::vector<cplx> amplitudes) : amplitudes_(std::move(amplitudes))
{
    for (std::size_t k = 0; k < amplitudes_.size(); ++k)
        if (!(std::abs(amplitudes_[k]) > 0.0) || !std::isfinite(std::abs(amplitudes_[k])))
            throw Error(ErrorCode::ZeroTransmitAmplitude,
                        "transmit amplitude at subcarrier " + std::to_string(k) + " is zero or non-finite");
}

CalibrationProfile::CalibrationProfile(std::vector<cplx> rf_response, BandId band)
    : rf_response_(std::move(rf_response)), band_(std::move(band))
{
    for (std::size_t k = 0; k < rf_response_.size(); ++k)
        if (!(std::abs(rf_response_[k]) > 0.0) || !std::isfinite(std::abs(rf_response_[k])))
            throw Error(ErrorCode::ZeroMagnitudeEntry,
                        "calibration entry at subcarrier " + std::to_string(k) + " is zero or non-finite");
}

std::vector<cplx> average_symbols(const CMatrix &snapshot, std::size_t symbols_per_snapshot)
{
    if (symbols_per_snapshot < 2 || snapshot.cols() != symbols_per_snapshot)
        throw Error(ErrorCode::WrongSymbolCount, "snapshot has " + std::to_string(snapshot.cols()) +
                                                     " symbols, expected " + std::to_string(symbols_per_snapshot) +
                                                     " (at least 2)");
    std::vector<cplx> mean(snapshot.rows());
    for (std::size_t s = 1; s < snapshot.cols(); ++s)
    {
        const auto sym = snapshot.col(s);
        for (std::size_t k = 0; k < mean.size(); ++k)
            mean[k] += sym[k];
    }
    const double scale = 1.0 / static_cast<double>(snapshot.cols() - 1);
    for (auto &v : mean)
        v *= scale;
    return mean;
}

void ls_estimate_column(std::span<cplx> y, const TransmitSequence &x, const CalibrationProfile &cal)
{
    if (y.size() != x.size() || y.size() != cal.size())
        throw Error(ErrorCode::DimensionMismatch, "received column has " + std::to_string(y.size()) +
                                                      " subcarriers, transmit sequence " + std::to_string(x.size()) +
                                                      ", calibration " + std::to_string(cal.size()));
    const auto tx = x.amplitudes();
    const auto rf = cal.rf_response();
    for (std::size_t k = 0; k < y.size(); ++k)
    {
        const cplx divisor = tx[k] * rf[k];
        if (std::abs(divisor) < min_divisor)
            throw Error(ErrorCode::ZeroDivisor, "|X H_RF| below 1e-12 at subcarrier " + std::to_string(k));
        y[k] /= divisor;
    }
}

CMatrix ls_estimate(const CMatrix &y, const TransmitSequence &x, const CalibrationProfile &cal)
{
    CMatrix h = y;
    for (std::size_t n = 0; n < h.cols(); ++n)
        ls_estimate_column(h.col(n), x, cal);
    return h;
}

Ctf ls_estimate(const CMatrix &y, const TransmitSequence &x, const CalibrationProfile &cal, const SoundingConfig &cfg)
{
    return Ctf(cal.band(), cfg, ls_estimate(y, x, cal));
}

CalibrationData load_calibration(const std::filesystem::path &path)
{
    std::ifstream in;
    const auto c = io::open_container(in, path, io::calibration_magic);
    const auto &h = c.header;
    if (!h.contains("format_version") || h.at("format_version") != io::format_version || !h.contains("layout") ||
        h.at("layout") != io::calibration_layout || !h.contains("band") || !h.contains("num_subcarriers") ||
        !h.at("num_subcarriers").is_number_unsigned())
        throw Error(ErrorCode::ParseError, "'" + path.string() + "': not a calibration header");
    const auto K = h.at("num_subcarriers").get<std::size_t>();
    if (c.payload_values != 2 * static_cast<std::uint64_t>(K))
        throw Error(ErrorCode::ParseError, "'" + path.string() + "': payload holds " +
                                               std::to_string(c.payload_values) + " complex values, expected " +
                                               std::to_string(2 * K));
    BandId band;
    try
    {
        band = h.at("band").get<BandId>();
    }
    catch (const Error &e)
    {
        throw Error(ErrorCode::ParseError, "'" + path.string() + "': " + e.what());
    }
    std::vector<cplx> rf(K), tx(K);
    io::read_complex(in, rf);
    io::read_complex(in, tx);
    return CalibrationData{CalibrationProfile(std::move(rf), std::move(band)), TransmitSequence(std::move(tx))};
}

void save_calibration(const std::filesystem::path &path, const CalibrationProfile &profile, const TransmitSequence &tx)
{
    if (profile.size() != tx.size())
        throw Error(ErrorCode::DimensionMismatch, "calibration and transmit sequence lengths differ");
    auto out = io::open_for_write(path);
    const nlohmann::json header{{"format_version", io::format_version},
                                {"layout", io::calibration_layout},
                                {"band", profile.band()},
                                {"num_subcarriers", profile.size()}};
    io::write_container_header(out, io::calibration_magic, header);
    io::write_complex(out, profile.rf_response());
    io::write_complex(out, tx.amplitudes());
    out.close();
    if (!out)
        throw Error(ErrorCode::IoError, "writing '" + path.string() + "' failed");
}

} // namespace chanstat
