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

#include "chanstat/cli.hpp"
#include "chanstat/error.hpp"
#include "chanstat/io.hpp"
#include "chanstat/sounding.hpp"
#include "chanstat/synth.hpp"
#include "test_util.hpp"

#include <fstream>

using namespace chanstat;
using namespace chanstat::cli;
using Catch::Matchers::WithinAbs;

namespace
{
std::vector<char> slurp(const Path &p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_text(const Path &p, const std::string &text)
{
    std::ofstream out(p);
    out << text;
}

Path write_small_config(const Path &dir, double fc = 3.2e9)
{
    auto cfg = testutil::small_config(32, 16, 300);
    cfg.carrier_frequency_hz = fc;
    const Path p = dir / "config.json";
    write_text(p, serialize_config(cfg));
    return p;
}

Path summary_file(const Path &dir, const std::string &name, const std::vector<std::vector<std::string>> &rows)
{
    CsvTable t{summary_columns, rows};
    const Path p = dir / name;
    write_csv(p, t);
    return p;
}
} // namespace

TEST_CASE("Numbers survive the text round trip")
{
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::uint64_t> bits;
    for (int i = 0; i < 2000; ++i)
    {
        const double v = std::bit_cast<double>(bits(rng));
        if (std::isnan(v))
            continue;
        CHECK(parse_number(format_number(v)) == v);
    }
    for (double v : {0.0, -0.0, 0.1, 1e-300, 12.05, -1.0 / 3.0, std::numeric_limits<double>::infinity(),
                     -std::numeric_limits<double>::infinity()})
    {
        CHECK(parse_number(format_number(v)) == v);
        CHECK(std::signbit(parse_number(format_number(v))) == std::signbit(v));
    }
    CHECK(format_number(std::nan("")) == "nan");
    CHECK(std::isnan(parse_number("nan")));
    CHECK(format_number(10.0) == "10");
    CHECK_THROWS_AS(parse_number("1.5x"), Error);
    CHECK_THROWS_AS(parse_number(""), Error);
}

TEST_CASE("CSV round trip")
{
    testutil::TempDir dir("csv");
    const CsvTable t{{"a", "b", "c"}, {{"1", "", "x"}, {"2.5", "nan", ""}}};
    write_csv(dir.path / "t.csv", t);
    const auto back = read_csv(dir.path / "t.csv");
    CHECK(back.header == t.header);
    CHECK(back.rows == t.rows);

    write_text(dir.path / "empty.csv", "");
    try
    {
        read_csv(dir.path / "empty.csv");
        FAIL("empty file accepted");
    }
    catch (const Error &e)
    {
        CHECK(e.code() == ErrorCode::ParseError);
    }
    write_text(dir.path / "ragged.csv", "a,b\n1\n");
    CHECK_THROWS_AS(read_csv(dir.path / "ragged.csv"), Error);
}

TEST_CASE("Rician preset writes constant ground truth")
{
    testutil::TempDir dir("sim_rician");
    SimulateOptions o;
    o.preset = "rician-10db";
    o.config_path = write_small_config(dir.path);
    o.output = dir.path / "r.snap";
    const auto r = cmd_simulate(o);
    CHECK(r.calibration == dir.path / "r.cal");
    CHECK(r.truth == dir.path / "r_truth.csv");
    const auto truth = read_csv(r.truth);
    CHECK(truth.header == std::vector<std::string>{"region_index", "t_center_s", "k_true_db", "sigma_tau_true_ns"});
    REQUIRE(truth.rows.size() == 300);
    for (const auto &row : truth.rows)
        CHECK(parse_number(row[2]) == 10.0);

    o.preset = "rayleigh";
    CHECK_THROWS_AS(cmd_simulate(o), Error);
}

TEST_CASE("Simulate, process and analyze are deterministic")
{
    testutil::TempDir dir("determinism");
    auto run = [&](const std::string &tag)
    {
        SimulateOptions o;
        o.config_path = write_small_config(dir.path);
        o.seed = 42;
        o.output = dir.path / (tag + ".snap");
        cmd_simulate(o);
        cmd_process(o.output, dir.path / (tag + ".cal"), dir.path / (tag + ".ctf"));
        AnalyzeOptions a;
        a.inputs = {dir.path / (tag + ".ctf")};
        a.output_dir = dir.path / (tag + "_out");
        a.plot = true;
        return cmd_analyze(a);
    };
    const auto first = run("a");
    const auto second = run("b");
    for (const auto *ext : {".snap", ".cal", ".ctf", "_truth.csv"})
        CHECK(slurp(dir.path / (std::string("a") + ext)) == slurp(dir.path / (std::string("b") + ext)));
    REQUIRE(first.files.size() == second.files.size());
    for (std::size_t i = 0; i < first.files.size(); ++i)
    {
        CHECK(first.files[i].filename() == second.files[i].filename());
        CHECK(slurp(first.files[i]) == slurp(second.files[i]));
    }

    // header carried through processing unchanged
    io::SnapshotReader snap(dir.path / "a.snap");
    io::CtfReader ctf(dir.path / "a.ctf");
    CHECK(snap.config() == ctf.config());
    CHECK(snap.band() == ctf.band());
}

TEST_CASE("Analyze writes the documented tables")
{
    testutil::TempDir dir("analyze");
    SimulateOptions o;
    o.config_path = write_small_config(dir.path);
    o.output = dir.path / "a.snap";
    cmd_simulate(o);
    cmd_process(o.output, dir.path / "a.cal", dir.path / "a.ctf");
    AnalyzeOptions a;
    a.inputs = {dir.path / "a.ctf"};
    a.output_dir = dir.path / "out";
    const auto r = cmd_analyze(a);

    const auto regions = read_csv(dir.path / "out" / "regions_3.2GHz.csv");
    CHECK(regions.header[0] == "region_index");
    CHECK(regions.header[1] == "t_center_s");
    CHECK(regions.header[2] == "k_db");
    CHECK(regions.rows.size() == 80);
    CHECK(regions.rows.front()[0] == "120");

    const auto summary = read_csv(dir.path / "out" / "summary.csv");
    CHECK(summary.header == summary_columns);
    REQUIRE(summary.rows.size() == 1);
    CHECK(summary.rows[0][0] == "3.2GHz");
    CHECK(parse_number(summary.rows[0][6]) == -0.7);

    const auto cdf = read_csv(dir.path / "out" / "cdf_k_3.2GHz.csv");
    CHECK(parse_number(cdf.rows.back()[1]) == 1.0);
    CHECK_FALSE(std::filesystem::exists(dir.path / "out" / "k_factor_time.svg"));

    // metrics written to the CSV equal the in-memory values exactly
    for (std::size_t i = 0; i < regions.rows.size(); ++i)
    {
        const auto &m = r.analysis.bands[0].regions[i];
        CHECK(parse_number(regions.rows[i][5]) == m.rms_delay_spread_s * 1e9);
        if (m.valid)
            CHECK(parse_number(regions.rows[i][2]) == *m.k_factor_db);
    }

    a.analysis.t_end_s = 40.0;
    try
    {
        cmd_analyze(a);
        FAIL("window beyond the measurement accepted");
    }
    catch (const Error &e)
    {
        CHECK(e.code() == ErrorCode::WindowOutOfRange);
    }
}

TEST_CASE("Noiseless processing recovers the channel")
{
    testutil::TempDir dir("noiseless");
    const auto cfg = testutil::small_config(16, 8, 2);
    const BandId band{"3.2GHz", 3.2e9};

    // unit channel, unit hardware: every step is exact in single precision
    {
        io::SnapshotWriter w(dir.path / "u.snap", band, cfg);
        const std::vector<cplx> ones(16, 1.0);
        for (std::size_t n = 0; n < cfg.num_snapshots; ++n)
            w.write(synth::synth_received_snapshot(ones, ones, ones, std::numeric_limits<double>::infinity(), 5, 1, n));
        w.close();
        save_calibration(dir.path / "u.cal", CalibrationProfile(ones, band), TransmitSequence(ones));
    }
    cmd_process(dir.path / "u.snap", dir.path / "u.cal", dir.path / "u.ctf");
    const auto unit = io::read_ctf(dir.path / "u.ctf");
    for (const auto &v : unit.samples().values())
        CHECK(std::abs(v - cplx(1.0)) <= 1e-9);

    // general channel through the simulate path: float32 storage bounds the error
    SimulateOptions o;
    o.config_path = write_small_config(dir.path);
    o.snr_db = std::numeric_limits<double>::infinity();
    o.output = dir.path / "d.snap";
    cmd_simulate(o);
    cmd_process(o.output, dir.path / "d.cal", dir.path / "d.ctf");
    const auto got = io::read_ctf(dir.path / "d.ctf");
    synth::DrivebyGenerator gen(got.config(), got.band(), synth::default_driveby_scenario(got.band(), o.seed));
    const auto expect = gen.snapshots(0, got.config().num_snapshots);
    CHECK(testutil::relative_difference(got.samples(), expect) < 1e-6);
}

TEST_CASE("Process rejects mismatched inputs")
{
    testutil::TempDir dir("mismatch");
    SimulateOptions o;
    o.config_path = write_small_config(dir.path);
    o.output = dir.path / "a.snap";
    cmd_simulate(o);

    const std::vector<cplx> ones32(32, 1.0), ones31(31, 1.0);
    save_calibration(dir.path / "other.cal", CalibrationProfile(ones32, BandId{"34.3GHz", 34.3e9}),
                     TransmitSequence(ones32));
    try
    {
        cmd_process(o.output, dir.path / "other.cal", dir.path / "x.ctf");
        FAIL("band mismatch accepted");
    }
    catch (const Error &e)
    {
        CHECK(e.code() == ErrorCode::BandMismatch);
    }

    save_calibration(dir.path / "short.cal", CalibrationProfile(ones31, BandId{"3.2GHz", 3.2e9}),
                     TransmitSequence(ones31));
    try
    {
        cmd_process(o.output, dir.path / "short.cal", dir.path / "x.ctf");
        FAIL("dimension mismatch accepted");
    }
    catch (const Error &e)
    {
        CHECK(e.code() == ErrorCode::DimensionMismatch);
    }
}

TEST_CASE("Report table")
{
    testutil::TempDir dir("report");
    const auto a = summary_file(dir.path, "a.csv", {{"62.35GHz", "5", "3", "131.48", "50", "-0.769", "-0.7", "0"}});
    const auto b = summary_file(dir.path, "b.csv",
                                {{"34.3GHz", "4", "4", "119.63", "49", "-0.703", "-0.7", "2"},
                                 {"3.2GHz", "4.93", "3.98", "123.66", "49.5", "-0.498", "-0.7", "0"}});
    const auto text = cmd_report({a, b});

    std::vector<std::string> lines;
    std::istringstream s(text);
    for (std::string line; std::getline(s, line);)
        lines.push_back(line);
    REQUIRE(lines.size() == 5);
    CHECK(lines[2].rfind("| 3.2GHz |", 0) == 0);
    CHECK(lines[3].rfind("| 34.3GHz |", 0) == 0);
    CHECK(lines[4].rfind("| 62.35GHz |", 0) == 0);
    CHECK(lines[3].find("| 0.003 |") != std::string::npos);
    CHECK(lines[3].find("| -0.700 |") != std::string::npos);

    write_text(dir.path / "empty.csv", "");
    try
    {
        cmd_report({dir.path / "empty.csv"});
        FAIL("empty summary accepted");
    }
    catch (const Error &e)
    {
        CHECK(e.code() == ErrorCode::ParseError);
    }
    CHECK_THROWS_AS(cmd_report({a, a}), Error);

    // an undefined correlation is shown as such
    const auto c = summary_file(dir.path, "c.csv", {{"x", "1", "0", "10", "0", "nan", "-0.7", "0"}});
    CHECK(cmd_report({c}).find("n/a") != std::string::npos);
}
