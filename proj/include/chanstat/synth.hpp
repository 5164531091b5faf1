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

#ifndef CHANSTAT_SYNTH_HPP
#define CHANSTAT_SYNTH_HPP

#include "chanstat/model.hpp"
#include "chanstat/source.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

namespace chanstat::synth
{

enum class TapKind
{
    Deterministic,
    Rayleigh
};

struct TapSpec
{
    double delay_s = 0.0;
    double power = 1.0; // linear
    double doppler_hz = 0.0;
    TapKind kind = TapKind::Deterministic;
};

// Piecewise-linear function of time given by (time_s, value) breakpoints in
// increasing time order; constant beyond the end points.
class PowerTrace
{
public:
    PowerTrace() = default;
    explicit PowerTrace(std::vector<std::pair<double, double>> points);

    double at(double t) const;
    const std::vector<std::pair<double, double>> &points() const noexcept { return points_; }
    bool covers(double t0, double t1) const;

private:
    std::vector<std::pair<double, double>> points_;
};

// Vehicle pass-by: one line-of-sight tap plus an exponentially decaying
// diffuse tail, each following its own power trace (dB).
struct DrivebyScenario
{
    double duration_s = 30.0;
    PowerTrace los_power_db;
    PowerTrace diffuse_power_db;
    double diffuse_decay_s = 150e-9;
    std::uint64_t seed = 0;

    double los_delay_s = 0.0;     // snapped to the delay grid
    double los_doppler_hz = 0.0;
    double diffuse_extent = 4.0;  // tail length in decay constants
    std::optional<double> noise_power_db; // AWGN per CTF sample, absent = noiseless
};

struct GroundTruth
{
    std::vector<double> k_factor_db;
    std::vector<double> rms_delay_spread_s;
};

// SplitMix64 bit generator. Seeding is a single word, so a fresh generator
// per snapshot costs nothing.
class Rng
{
public:
    using result_type = std::uint64_t;
    explicit Rng(std::uint64_t state) : state_(state) {}
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }
    result_type operator()();

private:
    std::uint64_t state_;
};

// Counter-based seeding: the generator for (seed, stream, index) does not
// depend on which other snapshots were generated or in what order.
Rng make_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

// Circularly-symmetric complex Gaussian with E|z|^2 = variance.
cplx complex_gaussian(Rng &rng, double variance);

void validate_taps(const SoundingConfig &cfg, std::span<const TapSpec> taps);

// Channel taps for snapshots [first, first + count).
CMatrix tdl_block(const SoundingConfig &cfg, std::span<const TapSpec> taps, std::uint64_t seed,
                  std::uint64_t stream, std::size_t first, std::size_t count);

// Adds CN(0, noise_power) to every sample; column c is snapshot first + c.
void add_awgn(CMatrix &block, double noise_power, std::uint64_t seed, std::size_t first);

BandId band_for(const SoundingConfig &cfg);

Ctf gen_rician_iid(const SoundingConfig &cfg, double k_true_db, double mean_power, std::uint64_t seed);
Ctf gen_rician_iid(const SoundingConfig &cfg, const BandId &band, double k_true_db, double mean_power,
                   std::uint64_t seed);

Ctf gen_tdl(const SoundingConfig &cfg, std::span<const TapSpec> taps, std::uint64_t seed);

// Power-weighted second central moment of tap delays.
double rms_delay_spread_of(std::span<const TapSpec> taps);

class RicianGenerator final : public CtfSource
{
public:
    RicianGenerator(SoundingConfig cfg, BandId band, double k_true_db, double mean_power, std::uint64_t seed);

    const BandId &band() const override { return band_; }
    const SoundingConfig &config() const override { return cfg_; }
    CMatrix snapshots(std::size_t first, std::size_t count) override;

    double constant_amplitude() const noexcept { return los_amplitude_; }
    double fluctuating_power() const noexcept { return diffuse_power_; }

private:
    SoundingConfig cfg_;
    BandId band_;
    double los_amplitude_;
    double diffuse_power_;
    std::uint64_t seed_;
};

class DrivebyGenerator final : public CtfSource
{
public:
    DrivebyGenerator(SoundingConfig cfg, BandId band, DrivebyScenario scenario);

    const BandId &band() const override { return band_; }
    const SoundingConfig &config() const override { return cfg_; }
    CMatrix snapshots(std::size_t first, std::size_t count) override;
    CMatrix delay_snapshots(std::size_t first, std::size_t count) override;

    // Tap set used for snapshots of region i (powers held at the region centre).
    std::vector<TapSpec> region_taps(std::size_t region) const;
    GroundTruth ground_truth() const;
    const DrivebyScenario &scenario() const noexcept { return scenario_; }

private:
    SoundingConfig cfg_;
    BandId band_;
    DrivebyScenario scenario_;
};

std::pair<Ctf, GroundTruth> gen_driveby(const SoundingConfig &cfg, const DrivebyScenario &scenario);

// Pass-by shaped after the measured trend: LOS negligible before 12 s, a
// strong LOS burst around 12.5 s that fades towards 20 s, static afterwards.
// Small per-band offsets keep the three bands distinct.
DrivebyScenario default_driveby_scenario(const BandId &band, std::uint64_t seed);

// One raw sounder snapshot: K x N_sym received symbols, symbol 0 is a copy of
// symbol 1 standing in for the cyclic prefix.
CMatrix synth_received_snapshot(std::span<const cplx> channel, std::span<const cplx> tx_sequence,
                                std::span<const cplx> rf_calibration, double snr_db, std::size_t symbols,
                                std::uint64_t seed, std::size_t snapshot_index);

struct RawSnapshots
{
    BandId band;
    SoundingConfig config;
    std::vector<CMatrix> snapshots; // each K x N_sym
};

RawSnapshots synth_received(const Ctf &ctf, std::span<const cplx> tx_sequence, std::span<const cplx> rf_calibration,
                            double snr_db, std::uint64_t seed);

void to_json(nlohmann::json &j, const DrivebyScenario &s);
void from_json(const nlohmann::json &j, DrivebyScenario &s);

} // namespace chanstat::synth

#endif
