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

// Small helpers shared by the unit tests.

#ifndef CHANSTAT_TEST_UTIL_HPP
#define CHANSTAT_TEST_UTIL_HPP

#include "chanstat/matrix.hpp"
#include "chanstat/model.hpp"

#include <cmath>
#include <filesystem>
#include <numbers>
#include <random>
#include <string>

namespace testutil
{
using namespace chanstat;

// Consistent configuration with K subcarriers, N_stat snapshots per region
// and the given number of regions. T_stat stays at 0.1 s.
inline SoundingConfig small_config(std::size_t K, std::size_t n_stat, std::size_t regions, std::size_t extra = 0)
{
    SoundingConfig cfg = measurement_config(3.2e9);
    cfg.num_subcarriers = K;
    cfg.bandwidth_hz = static_cast<double>(K) * cfg.subcarrier_spacing_hz;
    cfg.snapshots_per_region = n_stat;
    cfg.snapshot_interval_s = cfg.stationarity_window_s / static_cast<double>(n_stat);
    cfg.num_snapshots = n_stat * regions + extra;
    cfg.measurement_duration_s = static_cast<double>(cfg.num_snapshots) * cfg.snapshot_interval_s;
    return cfg;
}

inline CMatrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    CMatrix m(rows, cols);
    for (auto &v : m.values())
        v = {g(rng), g(rng)};
    return m;
}

inline double frobenius2(const CMatrix &m)
{
    double s = 0.0;
    for (const auto &v : m.values())
        s += std::norm(v);
    return s;
}

inline double relative_difference(const CMatrix &a, const CMatrix &b)
{
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        num += std::norm(a.values()[i] - b.values()[i]);
        den += std::norm(b.values()[i]);
    }
    return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

// Direct O(K^2) unitary inverse DFT over rows.
inline CMatrix brute_delay_domain(const CMatrix &h)
{
    const std::size_t K = h.rows();
    CMatrix out(K, h.cols());
    for (std::size_t n = 0; n < h.cols(); ++n)
        for (std::size_t tau = 0; tau < K; ++tau)
        {
            cplx acc = 0.0;
            for (std::size_t k = 0; k < K; ++k)
                acc += h(k, n) * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k * tau % K) /
                                                     static_cast<double>(K));
            out(tau, n) = acc / std::sqrt(static_cast<double>(K));
        }
    return out;
}

struct TempDir
{
    std::filesystem::path path;
    explicit TempDir(const std::string &name)
        : path(std::filesystem::temp_directory_path() / ("chanstat_test_" + name))
    {
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

} // namespace testutil

#endif
