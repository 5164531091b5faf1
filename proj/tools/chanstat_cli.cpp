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

// chanstat command-line tool: simulate, process, analyze, report.

#include "chanstat/cli.hpp"
#include "chanstat/error.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using namespace chanstat;

namespace
{

int fail(const std::string &code, const std::string &message)
{
    nlohmann::json j;
    j["error"] = {{"code", code}, {"message", message}};
    std::cerr << j.dump() << '\n';
    return 1;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Time-varying channel statistics from multi-band sounder data"};
    app.require_subcommand(1);

    // simulate
    cli::SimulateOptions sim;
    std::string sim_scenario, sim_config, sim_cal, sim_truth;
    auto *simulate = app.add_subcommand("simulate", "Generate raw sounder snapshots from a synthetic channel");
    simulate->add_option("--preset", sim.preset, "driveby-default or rician-<k>db")->capture_default_str();
    simulate->add_option("--scenario", sim_scenario, "Drive-by scenario JSON (overrides --preset)");
    simulate->add_option("--config", sim_config, "Sounding configuration JSON (default: measurement parameters)");
    simulate->add_option("--band", sim.band, "Band label")->capture_default_str();
    simulate->add_option("--snr-db", sim.snr_db, "Per-symbol SNR in dB, inf for noiseless")->capture_default_str();
    simulate->add_option("--seed", sim.seed, "Random seed")->capture_default_str();
    simulate->add_option("-o,--output", sim.output, "Raw snapshot file")->required();
    simulate->add_option("--calibration-output", sim_cal, "Calibration file (default <output>.cal)");
    simulate->add_option("--truth-output", sim_truth, "Ground-truth CSV (default <output>_truth.csv)");

    // process
    std::string proc_in, proc_cal, proc_out;
    auto *process = app.add_subcommand("process", "Estimate the channel transfer function from raw snapshots");
    process->add_option("snapshots", proc_in, "Raw snapshot file")->required();
    process->add_option("-c,--calibration", proc_cal, "Calibration file")->required();
    process->add_option("-o,--output", proc_out, "CTF file")->required();

    // analyze
    cli::AnalyzeOptions ana;
    std::vector<std::string> ana_inputs;
    std::string ana_out, k_units = "db", scope = "region";
    bool no_threshold = false;
    auto *analyze = app.add_subcommand("analyze", "K-factor, delay spread and their correlation per band");
    analyze->add_option("inputs", ana_inputs, "CTF files, one per band")->required();
    analyze->add_option("-o,--output-dir", ana_out, "Output directory")->required();
    analyze->add_option("--t-start", ana.analysis.t_start_s, "Window start [s]")->capture_default_str();
    analyze->add_option("--t-end", ana.analysis.t_end_s, "Window end [s]")->capture_default_str();
    analyze->add_flag("--no-threshold", no_threshold, "Skip dynamic-range denoising");
    analyze->add_option("--k-units", k_units, "Units of K in the correlation")
        ->check(CLI::IsMember({"db", "linear"}))
        ->capture_default_str();
    analyze->add_option("--noise-floor-scope", scope, "Noise floor per region or per band")
        ->check(CLI::IsMember({"region", "global"}))
        ->capture_default_str();
    analyze->add_option("--nw-time", ana.analysis.nw_time, "Time taper half-bandwidth")->capture_default_str();
    analyze->add_option("--nw-freq", ana.analysis.nw_freq, "Frequency taper half-bandwidth")->capture_default_str();
    analyze->add_option("--reference-rho", ana.analysis.reference_rho, "Reference correlation")->capture_default_str();
    analyze->add_flag("--plot", ana.plot, "Write SVG plots");

    // report
    std::vector<std::string> rep_inputs;
    auto *report = app.add_subcommand("report", "Markdown table comparing bands with the reference correlation");
    report->add_option("summaries", rep_inputs, "summary.csv files")->required();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        return fail("InvalidArgument", e.what());
    }

    try
    {
        if (*simulate)
        {
            if (!sim_scenario.empty())
                sim.scenario_path = sim_scenario;
            if (!sim_config.empty())
                sim.config_path = sim_config;
            if (!sim_cal.empty())
                sim.calibration_output = sim_cal;
            if (!sim_truth.empty())
                sim.truth_output = sim_truth;
            const auto r = cli::cmd_simulate(sim);
            std::cout << "snapshots:   " << r.snapshots.string() << "\ncalibration: " << r.calibration.string()
                      << "\ntruth:       " << r.truth.string() << '\n';
        }
        else if (*process)
        {
            const auto r = cli::cmd_process(proc_in, proc_cal, proc_out);
            std::cout << "band " << r.band.label << ": " << r.config.num_snapshots << " snapshots x "
                      << r.config.num_subcarriers << " subcarriers -> " << proc_out << '\n';
        }
        else if (*analyze)
        {
            ana.inputs.assign(ana_inputs.begin(), ana_inputs.end());
            ana.output_dir = ana_out;
            ana.analysis.threshold = !no_threshold;
            ana.analysis.k_units = k_units == "linear" ? KUnits::Linear : KUnits::Db;
            ana.analysis.noise_floor_scope = scope == "global" ? NoiseFloorScope::Global : NoiseFloorScope::Region;
            const auto r = cli::cmd_analyze(ana);
            for (const auto &note : r.analysis.notes)
                std::cout << "note: " << note << '\n';
            std::cout << "regions " << r.analysis.window.first << ".."
                      << r.analysis.window.first + r.analysis.window.count << " per band\n";
            for (const auto &b : r.analysis.bands)
                if (!b.summary_error.empty())
                    std::cout << "band " << b.band.label << ": " << b.summary_error << '\n';
            for (const auto &f : r.files)
                std::cout << "wrote " << f.string() << '\n';
        }
        else if (*report)
        {
            std::vector<cli::Path> paths(rep_inputs.begin(), rep_inputs.end());
            std::cout << cli::cmd_report(paths);
        }
    }
    catch (const Error &e)
    {
        return fail(std::string(to_string(e.code())), e.what());
    }
    catch (const std::exception &e)
    {
        return fail("InternalError", e.what());
    }
    return 0;
}
