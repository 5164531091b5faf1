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

#ifndef CHANSTAT_IO_HPP
#define CHANSTAT_IO_HPP

#include "chanstat/model.hpp"
#include "chanstat/source.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <span>
#include <string>

#include <json.hpp>

namespace chanstat::io
{

// Binary container shared by the snapshot, CTF and calibration files:
//
//   8 bytes   magic
//   4 bytes   header length L, unsigned little-endian
//   L bytes   UTF-8 JSON header
//   payload   little-endian IEEE-754 float32 (re, im) pairs
inline constexpr std::uint32_t format_version = 1;
inline constexpr char snapshot_magic[8] = {'C', 'H', 'S', 'T', 'S', 'N', 'A', 'P'};
inline constexpr char ctf_magic[8] = {'C', 'H', 'S', 'T', 'C', 'T', 'F', '0'};
inline constexpr char calibration_magic[8] = {'C', 'H', 'S', 'T', 'C', 'A', 'L', '0'};

inline constexpr const char *snapshot_layout = "snapshot/symbol/subcarrier";
inline constexpr const char *ctf_layout = "snapshot/subcarrier";
inline constexpr const char *calibration_layout = "rf_response/tx_sequence";

struct Container
{
    nlohmann::json header;
    std::uint64_t payload_offset = 0;
    std::uint64_t payload_values = 0; // complex values present in the file
};

// Reads magic and header; validates that exactly expected_values complex
// values follow (ParseError otherwise).
Container open_container(std::ifstream &in, const std::filesystem::path &path, const char (&magic)[8]);

void write_container_header(std::ofstream &out, const char (&magic)[8], const nlohmann::json &header);

void write_complex(std::ofstream &out, std::span<const cplx> values);
void read_complex(std::ifstream &in, std::span<cplx> values);

nlohmann::json measurement_header(const char *layout, const BandId &band, const SoundingConfig &cfg);

std::ofstream open_for_write(const std::filesystem::path &path);

// Raw sounder snapshots, N x N_sym x K.
class SnapshotWriter
{
public:
    SnapshotWriter(const std::filesystem::path &path, const BandId &band, const SoundingConfig &cfg);
    void write(const CMatrix &snapshot);
    void close();

private:
    std::filesystem::path path_;
    std::ofstream out_;
    SoundingConfig cfg_;
    std::size_t written_ = 0;
};

class SnapshotReader
{
public:
    explicit SnapshotReader(const std::filesystem::path &path);
    const BandId &band() const noexcept { return band_; }
    const SoundingConfig &config() const noexcept { return cfg_; }
    CMatrix read(std::size_t index);

private:
    std::ifstream in_;
    Container container_;
    BandId band_;
    SoundingConfig cfg_;
};

class CtfWriter
{
public:
    CtfWriter(const std::filesystem::path &path, const BandId &band, const SoundingConfig &cfg);
    void write(std::span<const cplx> snapshot);
    void close();

private:
    std::filesystem::path path_;
    std::ofstream out_;
    SoundingConfig cfg_;
    std::size_t written_ = 0;
};

class CtfReader final : public CtfSource
{
public:
    explicit CtfReader(const std::filesystem::path &path);
    const BandId &band() const override { return band_; }
    const SoundingConfig &config() const override { return cfg_; }
    CMatrix snapshots(std::size_t first, std::size_t count) override;

private:
    std::ifstream in_;
    Container container_;
    BandId band_;
    SoundingConfig cfg_;
};

void write_ctf(const std::filesystem::path &path, const Ctf &ctf);
Ctf read_ctf(const std::filesystem::path &path);

} // namespace chanstat::io

#endif
