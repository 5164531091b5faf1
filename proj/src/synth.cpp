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

#include "chanstat/synth.hpp"
#include "chanstat/error.hpp"
#include "chanstat/fft.hpp"

#include <boost/random/normal_distribution.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

namespace chanstat::synth
{
namespace
{

constexpr std::uint64_t stream_taps = 1;
constexpr std::uint64_t stream_noise = 2;
constexpr std::uint64_t stream_rician = 3;
constexpr std::uint64_t stream_received = 4;

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

// Integer delay bin of a tap if it sits on the 1/(K df) grid.
std::optional<std::size_t> grid_bin(const SoundingConfig &cfg, double delay_s)
{
    const double pos = delay_s * static_cast<double>(cfg.num_subcarriers) * cfg.subcarrier_spacing_hz;
    const double bin = std::round(pos);
    if (std::abs(pos - bin) > 1e-9 * std::max(1.0, bin))
        return std::nullopt;
    return static_cast<std::size_t>(bin);
}

cplx phasor(double cycles) { return std::polar(1.0, 2.0 * std::numbers::pi * cycles); }

} // namespace

namespace
{

// Complex amplitude of one tap at snapshot n. Draws from rng only for
// Rayleigh taps.
cplx tap_amplitude(const SoundingConfig &cfg, const TapSpec &tap, Rng &rng, std::size_t n)
{
    cplx a = tap.kind == TapKind::Deterministic ? cplx(std::sqrt(tap.power), 0.0)
                                                : std::sqrt(tap.power) * complex_gaussian(rng, 1.0);
    if (tap.doppler_hz != 0.0)
        a *= phasor(tap.doppler_hz * static_cast<double>(n) * cfg.snapshot_interval_s);
    return a;
}

} // namespace

Rng::result_type Rng::operator()()
{
    const std::uint64_t out = splitmix64(state_);
    state_ += 0x9e3779b97f4a7c15ULL;
    return out;
}

Rng make_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
{
    std::uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ stream);
    h = splitmix64(h ^ index);
    return Rng(h);
}

cplx complex_gaussian(Rng &rng, double variance)
{
    boost::random::normal_distribution<double> normal(0.0, std::sqrt(variance / 2.0));
    const double re = normal(rng);
    const double im = normal(rng);
    return {re, im};
}

// ---- PowerTrace ------------------------------------------------------------

PowerTrace::PowerTrace(std::vector<std::pair<double, double>> points) : points_(std::move(points))
{
    if (points_.empty())
        throw Error(ErrorCode::InvalidArgument, "power trace needs at least one breakpoint");
    for (std::size_t i = 0; i < points_.size(); ++i)
    {
        if (!std::isfinite(points_[i].first) || !std::isfinite(points_[i].second))
            throw Error(ErrorCode::InvalidArgument, "power trace breakpoints must be finite");
        if (i > 0 && points_[i].first <= points_[i - 1].first)
            throw Error(ErrorCode::InvalidArgument, "power trace times must be strictly increasing");
    }
}

double PowerTrace::at(double t) const
{
    if (points_.empty())
        throw Error(ErrorCode::InvalidArgument, "empty power trace");
    if (t <= points_.front().first)
        return points_.front().second;
    if (t >= points_.back().first)
        return points_.back().second;
    auto hi = std::upper_bound(points_.begin(), points_.end(), t,
                               [](double v, const auto &p) { return v < p.first; });
    auto lo = hi - 1;
    const double w = (t - lo->first) / (hi->first - lo->first);
    return lo->second + w * (hi->second - lo->second);
}

bool PowerTrace::covers(double t0, double t1) const
{
    return !points_.empty() && points_.front().first <= t0 && points_.back().first >= t1;
}

// ---- taps --------------------------------------------------------------------

void validate_taps(const SoundingConfig &cfg, std::span<const TapSpec> taps)
{
    if (taps.empty())
        throw Error(ErrorCode::TapOutOfRange, "tap list is empty");
    const double max_delay = static_cast<double>(cfg.num_subcarriers) / cfg.bandwidth_hz;
    const double max_doppler = 1.0 / (2.0 * cfg.snapshot_interval_s);
    for (std::size_t i = 0; i < taps.size(); ++i)
    {
        const auto &t = taps[i];
        std::ostringstream msg;
        msg << "tap " << i << ": ";
        if (!(t.delay_s >= 0.0 && t.delay_s < max_delay))
            msg << "delay " << t.delay_s << " s outside [0, " << max_delay << ")";
        else if (!(t.power > 0.0 && std::isfinite(t.power)))
            msg << "power " << t.power << " must be positive";
        else if (!(std::abs(t.doppler_hz) < max_doppler))
            msg << "Doppler " << t.doppler_hz << " Hz outside (-" << max_doppler << ", " << max_doppler << ")";
        else
            continue;
        throw Error(ErrorCode::TapOutOfRange, msg.str());
    }
}

CMatrix tdl_block(const SoundingConfig &cfg, std::span<const TapSpec> taps, std::uint64_t seed,
                  std::uint64_t stream, std::size_t first, std::size_t count)
{
    const std::size_t K = cfg.num_subcarriers;
    std::vector<std::optional<std::size_t>> bins(taps.size());
    bool any_on_grid = false, any_off_grid = false;
    for (std::size_t l = 0; l < taps.size(); ++l)
    {
        bins[l] = grid_bin(cfg, taps[l].delay_s);
        if (bins[l] && *bins[l] >= K)
            bins[l].reset();
        (bins[l] ? any_on_grid : any_off_grid) = true;
    }

    // On-grid taps are collected per delay bin and transformed in one batch;
    // off-grid taps are evaluated directly on the subcarrier grid.
    CMatrix delay(K, count);
    CMatrix direct(any_off_grid ? K : 0, any_off_grid ? count : 0);
    for (std::size_t c = 0; c < count; ++c)
    {
        const std::size_t n = first + c;
        auto rng = make_rng(seed, stream, n);
        for (std::size_t l = 0; l < taps.size(); ++l)
        {
            const auto &tap = taps[l];
            const cplx a = tap_amplitude(cfg, tap, rng, n);
            if (bins[l])
                delay(*bins[l], c) += a;
            else
                for (std::size_t k = 0; k < K; ++k)
                    direct(k, c) += a * phasor(-static_cast<double>(k) * cfg.subcarrier_spacing_hz * tap.delay_s);
        }
    }
    if (any_on_grid)
        fft::columns(delay, fft::Direction::Forward);
    else
        std::fill(delay.values().begin(), delay.values().end(), cplx{});
    if (any_off_grid)
        for (std::size_t i = 0; i < delay.size(); ++i)
            delay.values()[i] += direct.values()[i];
    return delay;
}

void add_awgn(CMatrix &block, double noise_power, std::uint64_t seed, std::size_t first)
{
    if (noise_power <= 0.0)
        return;
    for (std::size_t c = 0; c < block.cols(); ++c)
    {
        auto rng = make_rng(seed, stream_noise, first + c);
        boost::random::normal_distribution<double> normal(0.0, std::sqrt(noise_power / 2.0));
        for (auto &v : block.col(c))
        {
            const double re = normal(rng);
            const double im = normal(rng);
            v += cplx(re, im);
        }
    }
}

BandId band_for(const SoundingConfig &cfg)
{
    for (const auto &b : measurement_bands())
        if (std::abs(b.carrier_frequency_hz - cfg.carrier_frequency_hz) < 1e6)
            return b;
    std::ostringstream label;
    label << cfg.carrier_frequency_hz / 1e9 << "GHz";
    return {label.str(), cfg.carrier_frequency_hz};
}

double rms_delay_spread_of(std::span<const TapSpec> taps)
{
    double total = 0.0, mean = 0.0;
    for (const auto &t : taps)
    {
        total += t.power;
        mean += t.power * t.delay_s;
    }
    if (total <= 0.0)
        return 0.0;
    mean /= total;
    double second = 0.0;
    for (const auto &t : taps)
        second += t.power * (t.delay_s - mean) * (t.delay_s - mean);
    return std::sqrt(second / total);
}

// ---- Rician i.i.d. -------------------------------------------------------------

RicianGenerator::RicianGenerator(SoundingConfig cfg, BandId band, double k_true_db, double mean_power,
                                 std::uint64_t seed)
    : cfg_(validate_config(cfg)), band_(std::move(band)), seed_(seed)
{
    if (!(mean_power > 0.0) || !std::isfinite(mean_power))
        throw Error(ErrorCode::InvalidArgument, "mean_power must be positive and finite");
    if (std::isnan(k_true_db))
        throw Error(ErrorCode::InvalidArgument, "k_true_db is NaN");
    double los_power;
    if (k_true_db == std::numeric_limits<double>::infinity())
        los_power = mean_power;
    else
    {
        const double k = db_to_linear(k_true_db);
        los_power = mean_power * k / (1.0 + k);
    }
    diffuse_power_ = mean_power - los_power;
    los_amplitude_ = std::sqrt(los_power);
}

CMatrix RicianGenerator::snapshots(std::size_t first, std::size_t count)
{
    CMatrix out(cfg_.num_subcarriers, count);
    for (std::size_t c = 0; c < count; ++c)
    {
        auto rng = make_rng(seed_, stream_rician, first + c);
        boost::random::normal_distribution<double> normal(0.0, std::sqrt(diffuse_power_ / 2.0));
        for (auto &v : out.col(c))
        {
            if (diffuse_power_ > 0.0)
            {
                const double re = normal(rng);
                const double im = normal(rng);
                v = cplx(los_amplitude_ + re, im);
            }
            else
                v = cplx(los_amplitude_, 0.0);
        }
    }
    return out;
}

Ctf gen_rician_iid(const SoundingConfig &cfg, const BandId &band, double k_true_db, double mean_power,
                   std::uint64_t seed)
{
    RicianGenerator gen(cfg, band, k_true_db, mean_power, seed);
    return Ctf(band, cfg, gen.snapshots(0, cfg.num_snapshots));
}

Ctf gen_rician_iid(const SoundingConfig &cfg, double k_true_db, double mean_power, std::uint64_t seed)
{
    return gen_rician_iid(cfg, band_for(cfg), k_true_db, mean_power, seed);
}

Ctf gen_tdl(const SoundingConfig &cfg, std::span<const TapSpec> taps, std::uint64_t seed)
{
    validate_config(cfg);
    validate_taps(cfg, taps);
    return Ctf(band_for(cfg), cfg, tdl_block(cfg, taps, seed, stream_taps, 0, cfg.num_snapshots));
}

// ---- drive-by ------------------------------------------------------------------

DrivebyGenerator::DrivebyGenerator(SoundingConfig cfg, BandId band, DrivebyScenario scenario)
    : cfg_(validate_config(cfg)), band_(std::move(band)), scenario_(std::move(scenario))
{
    const double needed = static_cast<double>(cfg_.num_snapshots) * cfg_.snapshot_interval_s;
    if (scenario_.duration_s < cfg_.measurement_duration_s || scenario_.duration_s + 1e-9 < needed)
        throw Error(ErrorCode::InvalidArgument, "scenario duration " + std::to_string(scenario_.duration_s) +
                                                    " s is shorter than the measurement");
    if (!scenario_.los_power_db.covers(0.0, scenario_.duration_s) ||
        !scenario_.diffuse_power_db.covers(0.0, scenario_.duration_s))
        throw Error(ErrorCode::InvalidArgument, "power traces must be defined on [0, duration_s]");
    if (!(scenario_.diffuse_decay_s > 0.0) || !(scenario_.diffuse_extent > 0.0))
        throw Error(ErrorCode::InvalidArgument, "diffuse decay and extent must be positive");
    validate_taps(cfg_, region_taps(0));
}

std::vector<TapSpec> DrivebyGenerator::region_taps(std::size_t region) const
{
    const std::size_t K = cfg_.num_subcarriers;
    const double bin_width = 1.0 / (static_cast<double>(K) * cfg_.subcarrier_spacing_hz);
    const double t_center = (static_cast<double>(region) + 0.5) * region_duration(cfg_);

    const auto los_bin = static_cast<std::size_t>(std::round(scenario_.los_delay_s / bin_width));
    if (los_bin + 1 >= K)
        throw Error(ErrorCode::TapOutOfRange, "LOS delay leaves no room for the diffuse tail");
    const auto tail = static_cast<std::size_t>(std::ceil(scenario_.diffuse_extent * scenario_.diffuse_decay_s / bin_width));
    const std::size_t last_bin = std::min(K - 1, los_bin + std::max<std::size_t>(tail, 1));

    std::vector<TapSpec> taps;
    taps.push_back({static_cast<double>(los_bin) * bin_width, db_to_linear(scenario_.los_power_db.at(t_center)),
                    scenario_.los_doppler_hz, TapKind::Deterministic});

    double profile_sum = 0.0;
    for (std::size_t b = los_bin + 1; b <= last_bin; ++b)
        profile_sum += std::exp(-static_cast<double>(b - los_bin) * bin_width / scenario_.diffuse_decay_s);
    const double diffuse_total = db_to_linear(scenario_.diffuse_power_db.at(t_center));
    for (std::size_t b = los_bin + 1; b <= last_bin; ++b)
    {
        const double w = std::exp(-static_cast<double>(b - los_bin) * bin_width / scenario_.diffuse_decay_s);
        taps.push_back({static_cast<double>(b) * bin_width, diffuse_total * w / profile_sum, 0.0, TapKind::Rayleigh});
    }
    return taps;
}

CMatrix DrivebyGenerator::snapshots(std::size_t first, std::size_t count)
{
    CMatrix out = delay_snapshots(first, count);
    fft::columns(out, fft::Direction::Forward);
    const double scale = 1.0 / std::sqrt(static_cast<double>(out.rows()));
    for (auto &v : out.values())
        v *= scale;
    return out;
}

// All taps sit on the delay grid, so the channel is built directly in the
// delay domain. White noise keeps its per-sample power under the unitary DFT.
CMatrix DrivebyGenerator::delay_snapshots(std::size_t first, std::size_t count)
{
    const std::size_t K = cfg_.num_subcarriers;
    const std::size_t per_region = cfg_.snapshots_per_region;
    const double bin_width = 1.0 / (static_cast<double>(K) * cfg_.subcarrier_spacing_hz);
    const double gain = std::sqrt(static_cast<double>(K));
    CMatrix out(K, count);
    std::size_t done = 0;
    while (done < count)
    {
        const std::size_t n0 = first + done;
        const std::size_t region = n0 / per_region;
        const std::size_t chunk = std::min(count - done, (region + 1) * per_region - n0);
        const auto taps = region_taps(region);
        std::vector<std::size_t> bins;
        for (const auto &t : taps)
            bins.push_back(static_cast<std::size_t>(std::round(t.delay_s / bin_width)));
        for (std::size_t c = 0; c < chunk; ++c)
        {
            const std::size_t n = n0 + c;
            auto col = out.col(done + c);
            auto rng = make_rng(scenario_.seed, stream_taps, n);
            for (std::size_t l = 0; l < taps.size(); ++l)
                col[bins[l]] += gain * tap_amplitude(cfg_, taps[l], rng, n);
        }
        done += chunk;
    }
    if (scenario_.noise_power_db)
        add_awgn(out, db_to_linear(*scenario_.noise_power_db), scenario_.seed, first);
    return out;
}

GroundTruth DrivebyGenerator::ground_truth() const
{
    GroundTruth truth;
    const std::size_t regions = region_count(cfg_);
    for (std::size_t i = 0; i < regions; ++i)
    {
        const auto taps = region_taps(i);
        double diffuse = 0.0;
        for (std::size_t l = 1; l < taps.size(); ++l)
            diffuse += taps[l].power;
        truth.k_factor_db.push_back(10.0 * std::log10(taps.front().power / diffuse));
        truth.rms_delay_spread_s.push_back(rms_delay_spread_of(taps));
    }
    return truth;
}

std::pair<Ctf, GroundTruth> gen_driveby(const SoundingConfig &cfg, const DrivebyScenario &scenario)
{
    DrivebyGenerator gen(cfg, band_for(cfg), scenario);
    Ctf ctf(gen.band(), gen.config(), gen.snapshots(0, cfg.num_snapshots));
    return {std::move(ctf), gen.ground_truth()};
}

DrivebyScenario default_driveby_scenario(const BandId &band, std::uint64_t seed)
{
    double los_offset = 0.0, diffuse_offset = 0.0, decay = 150e-9;
    if (band.carrier_frequency_hz > 50e9)
    {
        los_offset = -0.8;
        diffuse_offset = 0.3;
        decay = 160e-9;
    }
    else if (band.carrier_frequency_hz > 20e9)
    {
        los_offset = 0.5;
        decay = 140e-9;
    }

    auto shift = [](std::vector<std::pair<double, double>> pts, double offset)
    {
        for (auto &p : pts)
            p.second += offset;
        return PowerTrace(std::move(pts));
    };

    DrivebyScenario s;
    s.duration_s = 30.0;
    s.los_power_db = shift({{0.0, -28.0}, {11.8, -28.0}, {12.5, 0.0}, {13.0, -1.0}, {16.0, -3.0}, {20.0, -5.0},
                            {30.0, -5.0}},
                           los_offset);
    s.diffuse_power_db = shift({{0.0, -12.0}, {12.0, -13.0}, {12.5, -15.0}, {13.0, -13.0}, {16.0, -9.0},
                                {20.0, -8.0}, {30.0, -8.0}},
                               diffuse_offset);
    s.diffuse_decay_s = decay;
    s.seed = seed;
    s.los_delay_s = 8.0 / 155.5e6;
    return s;
}

// ---- received snapshots -------------------------------------------------------------

CMatrix synth_received_snapshot(std::span<const cplx> channel, std::span<const cplx> tx_sequence,
                                std::span<const cplx> rf_calibration, double snr_db, std::size_t symbols,
                                std::uint64_t seed, std::size_t snapshot_index)
{
    const std::size_t K = channel.size();
    if (tx_sequence.size() != K || rf_calibration.size() != K)
        throw Error(ErrorCode::DimensionMismatch, "transmit sequence and calibration must have one entry per subcarrier");
    if (symbols < 2)
        throw Error(ErrorCode::WrongSymbolCount, "a snapshot needs at least 2 symbols");
    for (std::size_t k = 0; k < K; ++k)
        if (std::abs(tx_sequence[k]) == 0.0 || std::abs(rf_calibration[k]) == 0.0)
            throw Error(ErrorCode::ZeroTransmitAmplitude,
                        "transmit or calibration amplitude is zero at subcarrier " + std::to_string(k));

    std::vector<cplx> clean(K);
    double signal_power = 0.0;
    for (std::size_t k = 0; k < K; ++k)
    {
        clean[k] = tx_sequence[k] * rf_calibration[k] * channel[k];
        signal_power += abs2(clean[k]);
    }
    signal_power /= static_cast<double>(K);
    const double noise_power = std::isinf(snr_db) && snr_db > 0 ? 0.0 : signal_power * std::pow(10.0, -snr_db / 10.0);

    CMatrix out(K, symbols);
    auto rng = make_rng(seed, stream_received, snapshot_index);
    boost::random::normal_distribution<double> normal(0.0, std::sqrt(noise_power / 2.0));
    for (std::size_t s = 1; s < symbols; ++s)
        for (std::size_t k = 0; k < K; ++k)
        {
            cplx v = clean[k];
            if (noise_power > 0.0)
            {
                const double re = normal(rng);
                const double im = normal(rng);
                v += cplx(re, im);
            }
            out(k, s) = v;
        }
    std::copy_n(out.col(1).data(), K, out.col(0).data());
    return out;
}

RawSnapshots synth_received(const Ctf &ctf, std::span<const cplx> tx_sequence, std::span<const cplx> rf_calibration,
                            double snr_db, std::uint64_t seed)
{
    RawSnapshots raw{ctf.band(), ctf.config(), {}};
    const auto &h = ctf.samples();
    raw.snapshots.reserve(h.cols());
    for (std::size_t n = 0; n < h.cols(); ++n)
        raw.snapshots.push_back(synth_received_snapshot(h.col(n), tx_sequence, rf_calibration, snr_db,
                                                        ctf.config().symbols_per_snapshot, seed, n));
    return raw;
}

// ---- JSON ------------------------------------------------------------------------

namespace
{
nlohmann::json trace_json(const PowerTrace &t)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &[time, value] : t.points())
        arr.push_back({time, value});
    return arr;
}

PowerTrace trace_from(const nlohmann::json &j, const char *name)
{
    if (!j.is_array())
        throw Error(ErrorCode::ParseError, std::string(name) + " must be an array of [time_s, power_db] pairs");
    std::vector<std::pair<double, double>> pts;
    for (const auto &p : j)
    {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
            throw Error(ErrorCode::ParseError, std::string(name) + " entries must be [time_s, power_db]");
        pts.emplace_back(p[0].get<double>(), p[1].get<double>());
    }
    try
    {
        return PowerTrace(std::move(pts));
    }
    catch (const Error &e)
    {
        throw Error(ErrorCode::ParseError, std::string(name) + ": " + e.what());
    }
}
} // namespace

void to_json(nlohmann::json &j, const DrivebyScenario &s)
{
    j = nlohmann::json{{"duration_s", s.duration_s},
                       {"los_power_db_trace", trace_json(s.los_power_db)},
                       {"diffuse_power_db_trace", trace_json(s.diffuse_power_db)},
                       {"diffuse_delay_profile", {{"exponential_decay_s", s.diffuse_decay_s}}},
                       {"seed", s.seed},
                       {"los_delay_s", s.los_delay_s},
                       {"los_doppler_hz", s.los_doppler_hz},
                       {"diffuse_extent", s.diffuse_extent}};
    j["noise_power_db"] = s.noise_power_db ? nlohmann::json(*s.noise_power_db) : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json &j, DrivebyScenario &s)
{
    static const std::set<std::string> required = {"duration_s", "los_power_db_trace", "diffuse_power_db_trace",
                                                   "diffuse_delay_profile", "seed"};
    static const std::set<std::string> optional = {"los_delay_s", "los_doppler_hz", "diffuse_extent",
                                                   "noise_power_db"};
    if (!j.is_object())
        throw Error(ErrorCode::ParseError, "scenario must be a JSON object");
    for (const auto &item : j.items())
        if (!required.contains(item.key()) && !optional.contains(item.key()))
            throw Error(ErrorCode::ParseError, "scenario: unknown key '" + item.key() + "'");
    for (const auto &key : required)
        if (!j.contains(key))
            throw Error(ErrorCode::ParseError, "scenario: missing key '" + key + "'");

    auto number = [&](const char *key)
    {
        if (!j.at(key).is_number())
            throw Error(ErrorCode::ParseError, std::string("scenario: '") + key + "' must be a number");
        return j.at(key).get<double>();
    };

    s = DrivebyScenario{};
    s.duration_s = number("duration_s");
    s.los_power_db = trace_from(j.at("los_power_db_trace"), "los_power_db_trace");
    s.diffuse_power_db = trace_from(j.at("diffuse_power_db_trace"), "diffuse_power_db_trace");
    const auto &profile = j.at("diffuse_delay_profile");
    if (!profile.is_object() || profile.size() != 1 || !profile.contains("exponential_decay_s") ||
        !profile.at("exponential_decay_s").is_number())
        throw Error(ErrorCode::ParseError, "scenario: diffuse_delay_profile must be {\"exponential_decay_s\": <s>}");
    s.diffuse_decay_s = profile.at("exponential_decay_s").get<double>();
    if (!j.at("seed").is_number_unsigned())
        throw Error(ErrorCode::ParseError, "scenario: 'seed' must be a non-negative integer");
    s.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("los_delay_s"))
        s.los_delay_s = number("los_delay_s");
    if (j.contains("los_doppler_hz"))
        s.los_doppler_hz = number("los_doppler_hz");
    if (j.contains("diffuse_extent"))
        s.diffuse_extent = number("diffuse_extent");
    if (j.contains("noise_power_db") && !j.at("noise_power_db").is_null())
        s.noise_power_db = number("noise_power_db");
}

} // namespace chanstat::synth
