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
#include "chanstat/sounding.hpp"
#include "chanstat/synth.hpp"
#include "test_util.hpp"

#include <fstream>

using namespace chanstat;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("Symbol averaging drops the cyclic prefix")
{
    const cplx c(0.3, -1.2);
    CMatrix snap(6, 5, c);
    CHECK(average_symbols(snap, 5) == std::vector<cplx>(6, c));

    for (std::size_t k = 0; k < 6; ++k)
        snap(k, 0) = cplx(1e6, -1e6 * static_cast<double>(k));
    CHECK(average_symbols(snap, 5) == std::vector<cplx>(6, c));

    try
    {
        average_symbols(snap, 4);
        FAIL("wrong symbol count accepted");
    }
    catch (const Error &e)
    {
        CHECK(e.code() == ErrorCode::WrongSymbolCount);
    }
}

TEST_CASE("Symbol averaging reduces noise variance fourfold")
{
    auto rng = synth::make_rng(17, 0, 0);
    const double sigma2 = 2.0;
    const std::size_t trials = 10000;
    double acc = 0.0;
    for (std::size_t t = 0; t < trials; ++t)
    {
        CMatrix snap(1, 5);
        for (std::size_t s = 0; s < 5; ++s)
            snap(0, s) = synth::complex_gaussian(rng, sigma2);
        acc += std::norm(average_symbols(snap, 5)[0]);
    }
    CHECK_THAT(acc / static_cast<double>(trials), WithinRel(sigma2 / 4.0, 0.1));
}

TEST_CASE("Least-squares estimate")
{
    const BandId band{"b", 1e9};
    CMatrix y(1, 1, 6.0);
    CHECK(ls_estimate(y, TransmitSequence({2.0}), CalibrationProfile({3.0}, band))(0, 0) == cplx(1.0, 0.0));

    const std::size_t K = 16;
    std::vector<cplx> x(K), rf(K);
    for (std::size_t k = 0; k < K; ++k)
    {
        x[k] = std::polar(1.0, 0.7 * static_cast<double>(k));
        rf[k] = std::polar(0.5 + 0.01 * static_cast<double>(k), -0.2 * static_cast<double>(k));
    }
    CMatrix yy(K, 3);
    for (std::size_t n = 0; n < 3; ++n)
        for (std::size_t k = 0; k < K; ++k)
            yy(k, n) = x[k] * rf[k];
    const auto h = ls_estimate(yy, TransmitSequence(x), CalibrationProfile(rf, band));
    for (const auto &v : h.values())
        CHECK(std::abs(v - cplx(1.0, 0.0)) < 1e-12);

    CHECK_THROWS_AS(ls_estimate(CMatrix(K - 1, 1), TransmitSequence(x), CalibrationProfile(rf, band)), Error);
}

TEST_CASE("Zero entries are rejected")
{
    const BandId band{"b", 1e9};
    try
    {
        TransmitSequence({1.0, 0.0});
        FAIL("zero transmit amplitude accepted");
    }
    catch (const Error &e)
    {
        CHECK(e.code() == ErrorCode::ZeroTransmitAmplitude);
    }
    try
    {
        CalibrationProfile({1.0, 1.0, 0.0, 1.0}, band);
        FAIL("zero calibration entry accepted");
    }
    catch (const Error &e)
    {
        CHECK(e.code() == ErrorCode::ZeroMagnitudeEntry);
        CHECK(std::string(e.what()).find('2') != std::string::npos);
    }
}

TEST_CASE("Round trip through received symbols at 40 dB")
{
    const auto cfg = testutil::small_config(64, 32, 1);
    const std::vector<synth::TapSpec> taps = {{0.0, 1.0, 0.0, synth::TapKind::Rayleigh},
                                              {4.0 / cfg.bandwidth_hz, 0.5, 0.0, synth::TapKind::Rayleigh},
                                              {9.0 / cfg.bandwidth_hz, 0.2, 0.0, synth::TapKind::Rayleigh}};
    const auto ctf = synth::gen_tdl(cfg, taps, 4);
    std::vector<cplx> x(64), rf(64);
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> ph(0.0, 6.28);
    for (std::size_t k = 0; k < 64; ++k)
    {
        x[k] = std::polar(1.0, ph(rng));
        rf[k] = std::polar(0.5 + 0.2 * std::cos(0.3 * static_cast<double>(k)), ph(rng));
    }
    const auto raw = synth::synth_received(ctf, x, rf, 40.0, 8);
    REQUIRE(raw.snapshots.size() == cfg.num_snapshots);

    const TransmitSequence tx(x);
    const CalibrationProfile cal(rf, ctf.band());
    CMatrix est(64, cfg.num_snapshots);
    for (std::size_t n = 0; n < cfg.num_snapshots; ++n)
    {
        auto h = average_symbols(raw.snapshots[n], cfg.symbols_per_snapshot);
        ls_estimate_column(h, tx, cal);
        std::copy(h.begin(), h.end(), est.col(n).begin());
    }
    CHECK(testutil::relative_difference(est, ctf.samples()) < 0.02);
}

TEST_CASE("Calibration files round trip")
{
    testutil::TempDir dir("calibration");
    const BandId band{"34.3GHz", 34.3e9};
    std::vector<cplx> rf = {{0.1, 0.2}, {-0.3, 0.5}, {1.0, 0.0}}, x = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}};
    save_calibration(dir.path / "a.cal", CalibrationProfile(rf, band), TransmitSequence(x));
    const auto back = load_calibration(dir.path / "a.cal");
    CHECK(back.profile.band() == band);
    // float32 payload: values representable in single precision survive exactly
    for (std::size_t k = 0; k < 3; ++k)
    {
        const cplx got = back.profile.rf_response()[k];
        CHECK(got.real() == static_cast<double>(static_cast<float>(rf[k].real())));
        CHECK(got.imag() == static_cast<double>(static_cast<float>(rf[k].imag())));
        CHECK(back.tx.amplitudes()[k] == x[k]);
    }

    // second round trip is bit exact
    save_calibration(dir.path / "b.cal", back.profile, back.tx);
    const auto again = load_calibration(dir.path / "b.cal");
    CHECK(std::equal(again.profile.rf_response().begin(), again.profile.rf_response().end(),
                     back.profile.rf_response().begin()));

    save_calibration(dir.path / "unit.cal", CalibrationProfile(std::vector<cplx>(5, 1.0), band),
                     TransmitSequence(std::vector<cplx>(5, 1.0)));
    const auto unit = load_calibration(dir.path / "unit.cal");
    for (const auto &v : unit.profile.rf_response())
        CHECK(v == cplx(1.0, 0.0));
}

TEST_CASE("Calibration file with a zero entry")
{
    testutil::TempDir dir("calibration_zero");
    // write the container by hand, bypassing the CalibrationProfile check
    std::vector<cplx> payload = {1.0, 1.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0};
    {
        auto out = io::open_for_write(dir.path / "z.cal");
        io::write_container_header(out, io::calibration_magic,
                                   {{"format_version", 1},
                                    {"layout", io::calibration_layout},
                                    {"band", BandId{"b", 1e9}},
                                    {"num_subcarriers", 4}});
        io::write_complex(out, payload);
    }
    try
    {
        load_calibration(dir.path / "z.cal");
        FAIL("zero entry accepted");
    }
    catch (const Error &e)
    {
        CHECK(e.code() == ErrorCode::ZeroMagnitudeEntry);
        CHECK(std::string(e.what()).find('2') != std::string::npos);
    }
}
