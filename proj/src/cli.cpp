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

#include "chanstat/cli.hpp"
#include "chanstat/error.hpp"
#include "chanstat/io.hpp"
#include "chanstat/sounding.hpp"
#include "chanstat/svg.hpp"
#include "chanstat/synth.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

namespace chanstat::cli
{

const std::vector<std::string> summary_columns = {"band",      "k_mean_db", "k_std_db",      "ds_mean_ns",
                                                  "ds_std_ns", "rho",       "reference_rho", "invalid_regions"};

// ---- CSV ----------------------------------------------------------------------

std::string format_number(double v)
{
    if (std::isnan(v))
        return "nan";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

double parse_number(const std::string &text)
{
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw Error(ErrorCode::ParseError, "not a number: '" + text + "'");
    return v;
}

CsvTable read_csv(const Path &path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
    auto split = [](const std::string &line)
    {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream s(line);
        while (std::getline(s, cell, ','))
            cells.push_back(cell);
        if (!line.empty() && line.back() == ',')
            cells.emplace_back();
        return cells;
    };

    CsvTable table;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line))
    {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        auto cells = split(line);
        if (!have_header)
        {
            table.header = std::move(cells);
            have_header = true;
            continue;
        }
        if (cells.size() != table.header.size())
            throw Error(ErrorCode::ParseError, "'" + path.string() + "': row has " + std::to_string(cells.size()) +
                                                   " cells, header has " + std::to_string(table.header.size()));
        table.rows.push_back(std::move(cells));
    }
    if (!have_header)
        throw Error(ErrorCode::ParseError, "'" + path.string() + "' is empty");
    return table;
}

void write_csv(const Path &path, const CsvTable &table)
{
    std::ofstream out(path, std::ios::trunc);
    if (!out)
        throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "' for writing");
    auto emit = [&](const std::vector<std::string> &cells)
    {
        for (std::size_t i = 0; i < cells.size(); ++i)
            out << (i ? "," : "") << cells[i];
        out << '\n';
    };
    emit(table.header);
    for (const auto &row : table.rows)
        emit(row);
    if (!out)
        throw Error(ErrorCode::IoError, "writing '" + path.string() + "' failed");
}

namespace
{

std::string read_text(const Path &path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

nlohmann::json read_json(const Path &path)
{
    try
    {
        return nlohmann::json::parse(read_text(path));
    }
    catch (const nlohmann::json::exception &e)
    {
        throw Error(ErrorCode::ParseError, "'" + path.string() + "': " + e.what());
    }
}

Path with_suffix(const Path &p, const std::string &suffix)
{
    Path out = p;
    out.replace_extension();
    out += suffix;
    return out;
}

// Stand-in sounder hardware: unit-modulus transmit sequence with
// pseudo-random phases and an RF chain with amplitude ripple and a linear
// phase slope.
std::pair<TransmitSequence, CalibrationProfile> synthetic_hardware(std::size_t K, const BandId &band,
                                                                   std::uint64_t seed)
{
    auto rng = synth::make_rng(seed, 100, 0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    std::vector<cplx> tx(K), rf(K);
    for (std::size_t k = 0; k < K; ++k)
    {
        tx[k] = std::polar(1.0, phase(rng));
        const double x = static_cast<double>(k) / static_cast<double>(K);
        rf[k] = std::polar(0.5 * (1.0 + 0.3 * std::cos(2.0 * std::numbers::pi * 3.0 * x)),
                           -2.0 * std::numbers::pi * 0.05 * static_cast<double>(k));
    }
    return {TransmitSequence(std::move(tx)), CalibrationProfile(std::move(rf), band)};
}

std::optional<double> rician_preset(const std::string &preset)
{
    const std::string prefix = "rician-";
    if (preset.rfind(prefix, 0) != 0 || preset.size() <= prefix.size() + 2 ||
        preset.substr(preset.size() - 2) != "db")
        return std::nullopt;
    return parse_number(preset.substr(prefix.size(), preset.size() - prefix.size() - 2));
}

std::string safe_label(const std::string &label)
{
    std::string out = label;
    for (char &c : out)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '.' && c != '-' && c != '_')
            c = '_';
    return out;
}

} // namespace

// ---- simulate -------------------------------------------------------------------

SimulateResult cmd_simulate(const SimulateOptions &options)
{
    if (options.output.empty())
        throw Error(ErrorCode::InvalidArgument, "no output path given");

    BandId band;
    const auto bands = measurement_bands();
    const auto known = std::find_if(bands.begin(), bands.end(), [&](const BandId &b) { return b.label == options.band; });

    SoundingConfig cfg;
    if (options.config_path)
    {
        try
        {
            cfg = read_json(*options.config_path).get<SoundingConfig>();
        }
        catch (const nlohmann::json::exception &e)
        {
            throw Error(ErrorCode::ParseError, e.what());
        }
        band = BandId{options.band, cfg.carrier_frequency_hz};
    }
    else
    {
        if (known == bands.end())
            throw Error(ErrorCode::InvalidArgument, "unknown band '" + options.band +
                                                        "'; use 3.2GHz, 34.3GHz or 62.35GHz or pass --config");
        band = *known;
        cfg = measurement_config(band.carrier_frequency_hz);
    }
    validate_config(cfg);
    if (band.label.find_first_of(",\n\r") != std::string::npos)
        throw Error(ErrorCode::InvalidArgument, "band label must not contain commas or newlines");

    std::unique_ptr<CtfSource> source;
    synth::GroundTruth truth;
    const std::size_t regions = region_count(cfg);
    if (options.scenario_path || options.preset == "driveby-default")
    {
        synth::DrivebyScenario scenario = synth::default_driveby_scenario(band, options.seed);
        if (options.scenario_path)
        {
            try
            {
                scenario = read_json(*options.scenario_path).get<synth::DrivebyScenario>();
            }
            catch (const nlohmann::json::exception &e)
            {
                throw Error(ErrorCode::ParseError, e.what());
            }
        }
        auto gen = std::make_unique<synth::DrivebyGenerator>(cfg, band, scenario);
        truth = gen->ground_truth();
        source = std::move(gen);
    }
    else if (auto k_db = rician_preset(options.preset))
    {
        source = std::make_unique<synth::RicianGenerator>(cfg, band, *k_db, 1.0, options.seed);
        truth.k_factor_db.assign(regions, *k_db);
        truth.rms_delay_spread_s.assign(regions, 0.0);
    }
    else
        throw Error(ErrorCode::InvalidArgument, "unknown preset '" + options.preset +
                                                    "'; use driveby-default or rician-<k>db");

    SimulateResult result{options.output, options.calibration_output.value_or(with_suffix(options.output, ".cal")),
                          options.truth_output.value_or(with_suffix(options.output, "_truth.csv"))};

    const auto [tx, cal] = synthetic_hardware(cfg.num_subcarriers, band, options.seed);
    save_calibration(result.calibration, cal, tx);

    io::SnapshotWriter writer(result.snapshots, band, cfg);
    for (std::size_t n0 = 0; n0 < cfg.num_snapshots; n0 += cfg.snapshots_per_region)
    {
        const std::size_t count = std::min(cfg.snapshots_per_region, cfg.num_snapshots - n0);
        const CMatrix block = source->snapshots(n0, count);
        for (std::size_t c = 0; c < count; ++c)
            writer.write(synth::synth_received_snapshot(block.col(c), tx.amplitudes(), cal.rf_response(),
                                                        options.snr_db, cfg.symbols_per_snapshot, options.seed,
                                                        n0 + c));
    }
    writer.close();

    CsvTable table{{"region_index", "t_center_s", "k_true_db", "sigma_tau_true_ns"}, {}};
    for (std::size_t i = 0; i < regions; ++i)
        table.rows.push_back({std::to_string(i), format_number(region_center_time(cfg, i)),
                              format_number(truth.k_factor_db[i]), format_number(truth.rms_delay_spread_s[i] * 1e9)});
    write_csv(result.truth, table);
    return result;
}

// ---- process --------------------------------------------------------------------

ProcessResult cmd_process(const Path &snapshots, const Path &calibration, const Path &output)
{
    io::SnapshotReader reader(snapshots);
    const auto cal = load_calibration(calibration);
    const auto &cfg = reader.config();
    if (cal.profile.band().label != reader.band().label)
        throw Error(ErrorCode::BandMismatch, "snapshots are band '" + reader.band().label + "', calibration is '" +
                                                 cal.profile.band().label + "'");
    if (cal.profile.size() != cfg.num_subcarriers)
        throw Error(ErrorCode::DimensionMismatch, "snapshots have " + std::to_string(cfg.num_subcarriers) +
                                                      " subcarriers, calibration has " +
                                                      std::to_string(cal.profile.size()));

    io::CtfWriter writer(output, reader.band(), cfg);
    for (std::size_t n = 0; n < cfg.num_snapshots; ++n)
    {
        auto h = average_symbols(reader.read(n), cfg.symbols_per_snapshot);
        ls_estimate_column(h, cal.tx, cal.profile);
        writer.write(h);
    }
    writer.close();
    return {reader.band(), cfg};
}

// ---- analyze --------------------------------------------------------------------

AnalyzeResult cmd_analyze(const AnalyzeOptions &options)
{
    if (options.inputs.empty())
        throw Error(ErrorCode::InvalidArgument, "no CTF inputs given");
    std::vector<std::unique_ptr<io::CtfReader>> readers;
    std::vector<CtfSource *> sources;
    for (const auto &p : options.inputs)
    {
        readers.push_back(std::make_unique<io::CtfReader>(p));
        sources.push_back(readers.back().get());
    }

    AnalyzeResult result{analyze(sources, options.analysis), {}};
    std::error_code ec;
    std::filesystem::create_directories(options.output_dir, ec);
    if (ec)
        throw Error(ErrorCode::IoError, "cannot create '" + options.output_dir.string() + "': " + ec.message());

    auto emit = [&](const std::string &name, const CsvTable &table)
    {
        const Path p = options.output_dir / name;
        write_csv(p, table);
        result.files.push_back(p);
    };

    CsvTable summary{summary_columns, {}};
    svg::Chart k_series{"K-factor over time", "time [s]", "K-factor [dB]", {}};
    svg::Chart ds_series{"RMS delay spread over time", "time [s]", "RMS delay spread [ns]", {}};
    svg::Chart k_cdf{"CDF of the K-factor", "K-factor [dB]", "CDF", {}};
    svg::Chart ds_cdf{"CDF of the RMS delay spread", "RMS delay spread [ns]", "CDF", {}};

    for (const auto &band : result.analysis.bands)
    {
        const std::string tag = safe_label(band.band.label);
        CsvTable regions{{"region_index", "t_center_s", "k_db", "k_linear", "valid", "sigma_tau_ns", "mean_power",
                          "constant_power", "fluctuating_power"},
                         {}};
        std::vector<double> k_valid, ds_valid, t_k, k_plot, ds_plot;
        for (std::size_t r = 0; r < band.regions.size(); ++r)
        {
            const auto &m = band.regions[r];
            const double nan = std::numeric_limits<double>::quiet_NaN();
            regions.rows.push_back({std::to_string(m.region_index), format_number(band.t_center_s[r]),
                                    format_number(m.k_factor_db.value_or(nan)),
                                    format_number(m.k_factor_linear.value_or(nan)), m.valid ? "true" : "false",
                                    format_number(m.rms_delay_spread_s * 1e9), format_number(m.mean_power),
                                    format_number(m.constant_power), format_number(m.fluctuating_power)});
            t_k.push_back(band.t_center_s[r]);
            k_plot.push_back(m.valid ? *m.k_factor_db : nan);
            ds_plot.push_back(m.valid ? m.rms_delay_spread_s * 1e9 : nan);
            if (m.valid)
            {
                k_valid.push_back(*m.k_factor_db);
                ds_valid.push_back(m.rms_delay_spread_s * 1e9);
            }
        }
        emit("regions_" + tag + ".csv", regions);

        CsvTable cdf_k{{"k_db", "probability"}, {}}, cdf_ds{{"sigma_tau_ns", "probability"}, {}};
        std::vector<double> ck_x, ck_y, cd_x, cd_y;
        if (!k_valid.empty())
        {
            for (const auto &[v, p] : ecdf(k_valid))
            {
                cdf_k.rows.push_back({format_number(v), format_number(p)});
                ck_x.push_back(v);
                ck_y.push_back(p);
            }
            for (const auto &[v, p] : ecdf(ds_valid))
            {
                cdf_ds.rows.push_back({format_number(v), format_number(p)});
                cd_x.push_back(v);
                cd_y.push_back(p);
            }
        }
        emit("cdf_k_" + tag + ".csv", cdf_k);
        emit("cdf_ds_" + tag + ".csv", cdf_ds);

        const double nan = std::numeric_limits<double>::quiet_NaN();
        const auto &s = band.summary;
        summary.rows.push_back({band.band.label, format_number(s ? s->k_mean_db : nan),
                                format_number(s ? s->k_std_db : nan), format_number(s ? s->ds_mean_s * 1e9 : nan),
                                format_number(s ? s->ds_std_s * 1e9 : nan),
                                format_number(s && s->rho ? *s->rho : nan),
                                format_number(options.analysis.reference_rho),
                                std::to_string(s ? s->invalid_region_count : band.regions.size() - k_valid.size())});

        k_series.series.push_back({band.band.label, t_k, k_plot, false});
        ds_series.series.push_back({band.band.label, t_k, ds_plot, false});
        k_cdf.series.push_back({band.band.label, ck_x, ck_y, true});
        ds_cdf.series.push_back({band.band.label, cd_x, cd_y, true});
    }
    emit("summary.csv", summary);

    if (options.plot)
    {
        const std::pair<const char *, const svg::Chart *> charts[] = {
            {"k_factor_time.svg", &k_series}, {"delay_spread_time.svg", &ds_series},
            {"k_factor_cdf.svg", &k_cdf},     {"delay_spread_cdf.svg", &ds_cdf}};
        for (const auto &[name, chart] : charts)
        {
            const Path p = options.output_dir / name;
            std::ofstream out(p, std::ios::trunc);
            out << svg::render(*chart);
            if (!out)
                throw Error(ErrorCode::IoError, "writing '" + p.string() + "' failed");
            result.files.push_back(p);
        }
    }
    return result;
}

// ---- report ---------------------------------------------------------------------

std::string cmd_report(const std::vector<Path> &summaries)
{
    if (summaries.empty())
        throw Error(ErrorCode::InvalidArgument, "no summary files given");
    std::map<std::string, std::vector<double>> rows;
    for (const auto &path : summaries)
    {
        const CsvTable table = read_csv(path);
        if (table.header != summary_columns)
            throw Error(ErrorCode::ParseError, "'" + path.string() + "' is not a summary table");
        if (table.rows.empty())
            throw Error(ErrorCode::ParseError, "'" + path.string() + "' has no band rows");
        for (const auto &row : table.rows)
        {
            std::vector<double> values;
            for (std::size_t c = 1; c < row.size(); ++c)
                values.push_back(parse_number(row[c]));
            if (!rows.emplace(row[0], std::move(values)).second)
                throw Error(ErrorCode::ParseError, "band '" + row[0] + "' listed more than once");
        }
    }

    auto fixed = [](double v, int digits)
    {
        if (!std::isfinite(v))
            return std::string("n/a");
        std::ostringstream s;
        s << std::fixed << std::setprecision(digits) << v;
        return s.str();
    };

    std::ostringstream out;
    out << "| Band | K mean [dB] | K std [dB] | DS mean [ns] | DS std [ns] | rho | 3GPP rho | deviation | invalid regions |\n";
    out << "|---|---|---|---|---|---|---|---|---|\n";
    for (const auto &[label, v] : rows)
    {
        const double rho = v[4], ref = v[5];
        out << "| " << label << " | " << fixed(v[0], 2) << " | " << fixed(v[1], 2) << " | " << fixed(v[2], 2)
            << " | " << fixed(v[3], 2) << " | " << fixed(rho, 3) << " | " << fixed(ref, 3) << " | "
            << fixed(std::abs(rho - ref), 3) << " | " << fixed(v[6], 0) << " |\n";
    }
    return out.str();
}

} // namespace chanstat::cli
