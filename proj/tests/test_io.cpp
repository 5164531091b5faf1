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

#include <catch2/catch_amalgamated.hpp>

#include "chanstat/error.hpp"
#include "chanstat/io.hpp"
#include "chanstat/synth.hpp"
#include "test_util.hpp"

#include <cstring>
#include <fstream>

using namespace chanstat;

namespace
{
CMatrix as_float(const CMatrix &m)
{
    CMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.size(); ++i)
        out.values()[i] = {static_cast<float>(m.values()[i].real()), static_cast<float>(m.values()[i].imag())};
    return out;
}

std::vector<char> slurp(const std::filesystem::path &p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}
} // namespace

TEST_CASE("CTF files round trip")
{
    testutil::TempDir dir("ctf");
    const auto cfg = testutil::small_config(12, 8, 3, 5);
    const Ctf ctf(BandId{"62.35GHz", 62.35e9}, cfg, testutil::random_matrix(12, cfg.num_snapshots, 3));
    io::write_ctf(dir.path / "a.ctf", ctf);
    const auto back = io::read_ctf(dir.path / "a.ctf");
    CHECK(back.band() == ctf.band());
    CHECK(back.config() == cfg);
    CHECK(back.samples() == as_float(ctf.samples()));

    // rewriting what was read gives identical bytes
    io::write_ctf(dir.path / "b.ctf", back);
    io::write_ctf(dir.path / "c.ctf", io::read_ctf(dir.path / "b.ctf"));
    CHECK(slurp(dir.path / "b.ctf") == slurp(dir.path / "c.ctf"));

    // the file starts with the magic and carries float32 little-endian pairs
    const auto bytes = slurp(dir.path / "a.ctf");
    CHECK(std::memcmp(bytes.data(), io::ctf_magic, 8) == 0);
    std::uint32_t hlen = 0;
    for (int i = 3; i >= 0; --i)
        hlen = (hlen << 8) | static_cast<unsigned char>(bytes[8 + i]);
    const auto header = nlohmann::json::parse(std::string(bytes.data() + 12, hlen));
    CHECK(header.at("format_version") == 1);
    CHECK(header.at("layout") == io::ctf_layout);
    CHECK(bytes.size() == 12 + hlen + 8 * 12 * cfg.num_snapshots);
    float first_re = 0.0f;
    std::memcpy(&first_re, bytes.data() + 12 + hlen, 4);
    CHECK(first_re == static_cast<float>(ctf.samples()(0, 0).real()));
}

TEST_CASE("CtfReader streams blocks")
{
    testutil::TempDir dir("ctf_reader");
    const auto cfg = testutil::small_config(8, 4, 5);
    const Ctf ctf(BandId{"x", 3.2e9}, cfg, testutil::random_matrix(8, cfg.num_snapshots, 4));
    io::write_ctf(dir.path / "a.ctf", ctf);
    io::CtfReader reader(dir.path / "a.ctf");
    const auto expect = as_float(ctf.samples());
    const auto region = reader.region(3);
    CHECK(region.region_index == 3);
    CHECK(region.samples == column_block(expect, 12, 4));
    CHECK(reader.snapshots(1, 2) == column_block(expect, 1, 2));
    CHECK_THROWS_AS(reader.region(5), Error);
}

TEST_CASE("Truncated payload names both lengths")
{
    testutil::TempDir dir("truncated");
    const auto cfg = testutil::small_config(8, 4, 2);
    io::write_ctf(dir.path / "a.ctf", Ctf(BandId{"x", 3.2e9}, cfg, CMatrix(8, 8, 1.0)));
    const auto full = std::filesystem::file_size(dir.path / "a.ctf");
    std::filesystem::resize_file(dir.path / "a.ctf", full - 8 * 3);
    try
    {
        io::read_ctf(dir.path / "a.ctf");
        FAIL("truncated file accepted");
    }
    catch (const Error &e)
    {
        CHECK(e.code() == ErrorCode::ParseError);
        const std::string msg = e.what();
        CHECK(msg.find("61") != std::string::npos);
        CHECK(msg.find("64") != std::string::npos);
    }

    std::filesystem::resize_file(dir.path / "a.ctf", 5);
    CHECK_THROWS_AS(io::read_ctf(dir.path / "a.ctf"), Error);
}

TEST_CASE("Wrong file types are rejected")
{
    testutil::TempDir dir("magic");
    const auto cfg = testutil::small_config(8, 4, 1);
    io::write_ctf(dir.path / "a.ctf", Ctf(BandId{"x", 3.2e9}, cfg, CMatrix(8, 4, 1.0)));
    try
    {
        io::SnapshotReader r(dir.path / "a.ctf");
        FAIL("CTF file read as snapshots");
    }
    catch (const Error &e)
    {
        CHECK(e.code() == ErrorCode::ParseError);
    }
    try
    {
        io::read_ctf(dir.path / "missing.ctf");
        FAIL("missing file opened");
    }
    catch (const Error &e)
    {
        CHECK(e.code() == ErrorCode::IoError);
    }
}

TEST_CASE("Snapshot files round trip")
{
    testutil::TempDir dir("snap");
    const auto cfg = testutil::small_config(6, 4, 1);
    const BandId band{"3.2GHz", 3.2e9};
    std::vector<CMatrix> snaps;
    {
        io::SnapshotWriter w(dir.path / "a.snap", band, cfg);
        for (std::size_t n = 0; n < cfg.num_snapshots; ++n)
        {
            snaps.push_back(as_float(testutil::random_matrix(6, cfg.symbols_per_snapshot, 10 + n)));
            w.write(snaps.back());
        }
        w.close();
    }
    io::SnapshotReader r(dir.path / "a.snap");
    CHECK(r.band() == band);
    CHECK(r.config() == cfg);
    for (std::size_t n : {3, 0, 2, 1})
        CHECK(r.read(n) == snaps[n]);

    // wrong shape
    io::SnapshotWriter w(dir.path / "b.snap", band, cfg);
    CHECK_THROWS_AS(w.write(CMatrix(6, 4)), Error);
    // closing early leaves a short payload behind
    CHECK_THROWS_AS(w.close(), Error);
}
