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

#ifndef CHANSTAT_CLI_HPP
#define CHANSTAT_CLI_HPP

#include "chanstat/pipeline.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace chanstat::cli
{

using Path = std::filesystem::path;

// ---- CSV helpers ------------------------------------------------------------

// Shortest text that parses back to the same double ("nan", "inf" included).
std::string format_number(double v);
double parse_number(const std::string &text);

struct CsvTable
{
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

CsvTable read_csv(const Path &path);
void write_csv(const Path &path, const CsvTable &table);

// ---- commands ---------------------------------------------------------------

struct SimulateOptions
{
    std::string preset = "driveby-default"; // or "rician-<k>db"
    std::optional<Path> scenario_path;       // drive-by scenario JSON, overrides the preset
    std::optional<Path> config_path;         // sounding config JSON, default: measurement parameters
    std::string band = "3.2GHz";
    double snr_db = 30.0;
    std::uint64_t seed = 42;
    Path output;                        // raw snapshot file
    std::optional<Path> calibration_output; // default <output stem>.cal
    std::optional<Path> truth_output;       // default <output stem>_truth.csv
};

struct SimulateResult
{
    Path snapshots;
    Path calibration;
    Path truth;
};

SimulateResult cmd_simulate(const SimulateOptions &options);

struct ProcessResult
{
    BandId band;
    SoundingConfig config;
};

ProcessResult cmd_process(const Path &snapshots, const Path &calibration, const Path &output);

struct AnalyzeOptions
{
    std::vector<Path> inputs; // one CTF file per band
    Path output_dir;
    AnalysisOptions analysis;
    bool plot = false;
};

struct AnalyzeResult
{
    AnalysisResult analysis;
    std::vector<Path> files;
};

AnalyzeResult cmd_analyze(const AnalyzeOptions &options);

// Markdown table comparing bands with the 3GPP reference correlation.
std::string cmd_report(const std::vector<Path> &summaries);

// Summary CSV columns, in order.
extern const std::vector<std::string> summary_columns;

} // namespace chanstat::cli

#endif
