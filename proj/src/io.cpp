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

#include "chanstat/io.hpp"
#include "chanstat/error.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <vector>

namespace chanstat::io
{
namespace
{

void put_u32(char *dst, std::uint32_t v)
{
    for (int i = 0; i < 4; ++i)
        dst[i] = static_cast<char>((v >> (8 * i)) & 0xffu);
}

std::uint32_t get_u32(const char *src)
{
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i)
        v |= static_cast<std::uint32_t>(static_cast<unsigned char>(src[i])) << (8 * i);
    return v;
}

std::string describe(const std::filesystem::path &path) { return "'" + path.string() + "'"; }

void check_layout(const nlohmann::json &header, const char *layout, const std::filesystem::path &path)
{
    if (!header.contains("format_version") || header.at("format_version") != format_version)
        throw Error(ErrorCode::ParseError, describe(path) + ": unsupported format_version");
    if (!header.contains("layout") || header.at("layout") != layout)
        throw Error(ErrorCode::ParseError, describe(path) + ": expected sample layout '" + layout + "'");
}

void check_payload(const Container &c, std::uint64_t expected, const std::filesystem::path &path)
{
    if (c.payload_values != expected)
        throw Error(ErrorCode::ParseError, describe(path) + ": payload holds " + std::to_string(c.payload_values) +
                                               " complex values, header implies " + std::to_string(expected));
}

void parse_measurement(const Container &c, const char *layout, const std::filesystem::path &path, BandId &band,
                       SoundingConfig &cfg)
{
    check_layout(c.header, layout, path);
    for (const char *key : {"band", "config"})
        if (!c.header.contains(key))
            throw Error(ErrorCode::ParseError, describe(path) + ": header lacks '" + key + "'");
    try
    {
        band = c.header.at("band").get<BandId>();
        cfg = validate_config(c.header.at("config").get<SoundingConfig>());
    }
    catch (const Error &e)
    {
        throw Error(ErrorCode::ParseError, describe(path) + ": " + e.what());
    }
}

} // namespace

std::ofstream open_for_write(const std::filesystem::path &path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(ErrorCode::IoError, "cannot open " + describe(path) + " for writing");
    return out;
}

void write_container_header(std::ofstream &out, const char (&magic)[8], const nlohmann::json &header)
{
    const std::string text = header.dump();
    char prefix[12];
    std::memcpy(prefix, magic, 8);
    put_u32(prefix + 8, static_cast<std::uint32_t>(text.size()));
    out.write(prefix, sizeof prefix);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

Container open_container(std::ifstream &in, const std::filesystem::path &path, const char (&magic)[8])
{
    in.open(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::IoError, "cannot open " + describe(path));
    std::error_code ec;
    const auto file_size = std::filesystem::file_size(path, ec);
    if (ec)
        throw Error(ErrorCode::IoError, "cannot stat " + describe(path) + ": " + ec.message());

    char prefix[12];
    if (file_size < sizeof prefix || !in.read(prefix, sizeof prefix))
        throw Error(ErrorCode::ParseError, describe(path) + ": file too short for a header");
    if (std::memcmp(prefix, magic, 8) != 0)
        throw Error(ErrorCode::ParseError, describe(path) + ": wrong file type (magic mismatch)");
    const std::uint32_t header_len = get_u32(prefix + 8);
    if (sizeof prefix + static_cast<std::uint64_t>(header_len) > file_size)
        throw Error(ErrorCode::ParseError, describe(path) + ": header length exceeds file size");

    std::string text(header_len, '\0');
    in.read(text.data(), header_len);

    Container c;
    try
    {
        c.header = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::exception &e)
    {
        throw Error(ErrorCode::ParseError, describe(path) + ": malformed header: " + e.what());
    }
    c.payload_offset = sizeof prefix + header_len;
    const std::uint64_t payload_bytes = file_size - c.payload_offset;
    if (payload_bytes % 8 != 0)
        throw Error(ErrorCode::ParseError, describe(path) + ": payload of " + std::to_string(payload_bytes) +
                                               " bytes is not a whole number of complex float32 values");
    c.payload_values = payload_bytes / 8;
    return c;
}

void write_complex(std::ofstream &out, std::span<const cplx> values)
{
    std::vector<char> buf(values.size() * 8);
    for (std::size_t i = 0; i < values.size(); ++i)
    {
        put_u32(buf.data() + 8 * i, std::bit_cast<std::uint32_t>(static_cast<float>(values[i].real())));
        put_u32(buf.data() + 8 * i + 4, std::bit_cast<std::uint32_t>(static_cast<float>(values[i].imag())));
    }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out)
        throw Error(ErrorCode::IoError, "write failed");
}

void read_complex(std::ifstream &in, std::span<cplx> values)
{
    std::vector<char> buf(values.size() * 8);
    if (!in.read(buf.data(), static_cast<std::streamsize>(buf.size())))
        throw Error(ErrorCode::ParseError, "unexpected end of payload");
    for (std::size_t i = 0; i < values.size(); ++i)
    {
        const float re = std::bit_cast<float>(get_u32(buf.data() + 8 * i));
        const float im = std::bit_cast<float>(get_u32(buf.data() + 8 * i + 4));
        values[i] = cplx(re, im);
    }
}

nlohmann::json measurement_header(const char *layout, const BandId &band, const SoundingConfig &cfg)
{
    return nlohmann::json{{"format_version", format_version}, {"layout", layout}, {"band", band}, {"config", cfg}};
}

// ---- snapshots -----------------------------------------------------------------

SnapshotWriter::SnapshotWriter(const std::filesystem::path &path, const BandId &band, const SoundingConfig &cfg)
    : path_(path), out_(open_for_write(path)), cfg_(cfg)
{
    write_container_header(out_, snapshot_magic, measurement_header(snapshot_layout, band, cfg));
}

void SnapshotWriter::write(const CMatrix &snapshot)
{
    if (snapshot.rows() != cfg_.num_subcarriers || snapshot.cols() != cfg_.symbols_per_snapshot)
        throw Error(ErrorCode::DimensionMismatch, "snapshot must be K x N_sym");
    if (written_ == cfg_.num_snapshots)
        throw Error(ErrorCode::DimensionMismatch, "more snapshots than the header declares");
    write_complex(out_, snapshot.values());
    ++written_;
}

void SnapshotWriter::close()
{
    if (written_ != cfg_.num_snapshots)
        throw Error(ErrorCode::DimensionMismatch, describe(path_) + ": wrote " + std::to_string(written_) +
                                                      " of " + std::to_string(cfg_.num_snapshots) + " snapshots");
    out_.close();
    if (!out_)
        throw Error(ErrorCode::IoError, "closing " + describe(path_) + " failed");
}

SnapshotReader::SnapshotReader(const std::filesystem::path &path)
{
    container_ = open_container(in_, path, snapshot_magic);
    parse_measurement(container_, snapshot_layout, path, band_, cfg_);
    check_payload(container_,
                  static_cast<std::uint64_t>(cfg_.num_snapshots) * cfg_.symbols_per_snapshot * cfg_.num_subcarriers,
                  path);
}

CMatrix SnapshotReader::read(std::size_t index)
{
    if (index >= cfg_.num_snapshots)
        throw Error(ErrorCode::InvalidArgument, "snapshot index out of range");
    const std::uint64_t per = static_cast<std::uint64_t>(cfg_.symbols_per_snapshot) * cfg_.num_subcarriers;
    in_.clear();
    in_.seekg(static_cast<std::streamoff>(container_.payload_offset + 8 * per * index));
    CMatrix out(cfg_.num_subcarriers, cfg_.symbols_per_snapshot);
    read_complex(in_, out.values());
    return out;
}

// ---- CTF ----------------------------------------------------------------------

CtfWriter::CtfWriter(const std::filesystem::path &path, const BandId &band, const SoundingConfig &cfg)
    : path_(path), out_(open_for_write(path)), cfg_(cfg)
{
    write_container_header(out_, ctf_magic, measurement_header(ctf_layout, band, cfg));
}

void CtfWriter::write(std::span<const cplx> snapshot)
{
    if (snapshot.size() != cfg_.num_subcarriers)
        throw Error(ErrorCode::DimensionMismatch, "CTF snapshot must have K values");
    if (written_ == cfg_.num_snapshots)
        throw Error(ErrorCode::DimensionMismatch, "more snapshots than the header declares");
    write_complex(out_, snapshot);
    ++written_;
}

void CtfWriter::close()
{
    if (written_ != cfg_.num_snapshots)
        throw Error(ErrorCode::DimensionMismatch, describe(path_) + ": wrote " + std::to_string(written_) +
                                                      " of " + std::to_string(cfg_.num_snapshots) + " snapshots");
    out_.close();
    if (!out_)
        throw Error(ErrorCode::IoError, "closing " + describe(path_) + " failed");
}

CtfReader::CtfReader(const std::filesystem::path &path)
{
    container_ = open_container(in_, path, ctf_magic);
    parse_measurement(container_, ctf_layout, path, band_, cfg_);
    check_payload(container_, static_cast<std::uint64_t>(cfg_.num_snapshots) * cfg_.num_subcarriers, path);
}

CMatrix CtfReader::snapshots(std::size_t first, std::size_t count)
{
    if (first + count > cfg_.num_snapshots)
        throw Error(ErrorCode::InvalidArgument, "snapshot block exceeds file");
    in_.clear();
    in_.seekg(static_cast<std::streamoff>(container_.payload_offset + 8ull * cfg_.num_subcarriers * first));
    CMatrix out(cfg_.num_subcarriers, count);
    read_complex(in_, out.values());
    return out;
}

void write_ctf(const std::filesystem::path &path, const Ctf &ctf)
{
    CtfWriter w(path, ctf.band(), ctf.config());
    for (std::size_t n = 0; n < ctf.samples().cols(); ++n)
        w.write(ctf.samples().col(n));
    w.close();
}

Ctf read_ctf(const std::filesystem::path &path)
{
    CtfReader r(path);
    return Ctf(r.band(), r.config(), r.snapshots(0, r.config().num_snapshots));
}

} // namespace chanstat::io
