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

#include "chanstat/kfactor.hpp"
#include "chanstat/preprocess.hpp"
#include "chanstat/synth.hpp"
#include "test_util.hpp"

using namespace chanstat;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
RegionCtf region_of(CMatrix m) { return RegionCtf{BandId{"b", 1e9}, 0, std::move(m)}; }
} // namespace

TEST_CASE("Channel power")
{
    const auto p25 = channel_power(region_of(CMatrix(3, 4, cplx(3.0, 4.0))));
    for (const auto &p : p25.values())
        CHECK(p == 25.0);
    const auto p0 = channel_power(region_of(CMatrix(3, 4)));
    for (const auto &p : p0.values())
        CHECK(p == 0.0);

    const auto h = testutil::random_matrix(17, 9, 3);
    const auto p = channel_power(region_of(h));
    double sum = 0.0;
    for (double v : p.values())
        sum += v;
    double frob = 0.0;
    for (std::size_t c = 0; c < h.cols(); ++c)
        for (std::size_t r = 0; r < h.rows(); ++r)
            frob += h(r, c).real() * h(r, c).real() + h(r, c).imag() * h(r, c).imag();
    CHECK_THAT(sum, WithinRel(frob, 1e-12));
}

TEST_CASE("Power moments")
{
    const auto c = moments(RMatrix(4, 4, 2.5));
    CHECK(c.mean_power == 2.5);
    CHECK(c.power_rms_fluctuation == 0.0);
    CHECK(c.sample_count == 16);

    RMatrix two(2, 1);
    two(0, 0) = 1.0;
    two(1, 0) = 3.0;
    const auto m = moments(two);
    CHECK(m.mean_power == 2.0);
    CHECK(m.power_rms_fluctuation == 1.0);
}

TEST_CASE("Closed-form moment arithmetic")
{
    const auto r = kfactor_from_moments({2.0, std::sqrt(3.0), 100}, 7);
    REQUIRE(r.valid);
    CHECK(r.region_index == 7);
    CHECK_THAT(r.constant_power, WithinAbs(1.0, 1e-12));
    CHECK_THAT(r.fluctuating_power, WithinAbs(1.0, 1e-12));
    CHECK_THAT(*r.k_factor_linear, WithinAbs(1.0, 1e-12));
    CHECK_THAT(*r.k_factor_db, WithinAbs(0.0, 1e-10));
    CHECK(r.mean_power == 2.0);

    // fluctuation larger than the mean: no real solution
    const auto neg = kfactor_from_moments({1.0, 1.5, 100});
    CHECK_FALSE(neg.valid);
    CHECK_FALSE(neg.k_factor_linear);
    CHECK_FALSE(neg.k_factor_db);

    // pure Rayleigh power has rms == mean, so |V|^2 = 0
    const auto rayleigh = kfactor_from_moments({1.0, 1.0, 100});
    CHECK_FALSE(rayleigh.valid);
}

TEST_CASE("Constant channel has undefined K")
{
    const auto r = estimate_kfactor(region_of(CMatrix(8, 8, cplx(1.0, 1.0))));
    CHECK_FALSE(r.valid);
    CHECK_FALSE(r.k_factor_db);
    CHECK_THAT(r.constant_power, WithinRel(2.0, 1e-12));
    CHECK(r.fluctuating_power == 0.0);
}

TEST_CASE("Monte Carlo moments of a Rician channel")
{
    // V = 1, sigma^2 = 1: E[P] = 2, Var[P] = 2 sigma^2 |V|^2 + sigma^4 = 3
    const auto cfg = testutil::small_config(500, 2000, 1);
    const auto ctf = synth::gen_rician_iid(cfg, 0.0, 2.0, 21);
    const auto power = channel_power(region_of(ctf.samples()));
    const auto m = moments(power);
    const double n = static_cast<double>(m.sample_count);
    REQUIRE(n >= 1e6);

    // E[P^4] of the noncentral chi-square gives the spread of the variance estimate
    const double se_mean = std::sqrt(3.0 / n);
    CHECK(std::abs(m.mean_power - 2.0) < 3.0 * se_mean);
    double m4 = 0.0;
    for (double p : power.values())
        m4 += std::pow(p - 2.0, 4);
    m4 /= n;
    const double se_var = std::sqrt((m4 - 9.0) / n);
    CHECK(std::abs(m.power_rms_fluctuation * m.power_rms_fluctuation - 3.0) < 3.0 * se_var);
    CHECK_THAT(m.power_rms_fluctuation, WithinAbs(std::sqrt(3.0), 0.01));
}

TEST_CASE("K-factor estimate on a 10 dB Rician channel")
{
    const auto cfg = testutil::small_config(311, 3200, 1);
    const auto ctf = synth::gen_rician_iid(cfg, 10.0, 1.0, 33);
    const auto r = estimate_kfactor(partition_regions(ctf).front());
    REQUIRE(r.valid);
    CHECK_THAT(*r.k_factor_db, WithinAbs(10.0, 0.5));
}

TEST_CASE("K-factor is scale invariant")
{
    const auto cfg = testutil::small_config(64, 256, 1);
    const auto h = synth::gen_rician_iid(cfg, 6.0, 1.0, 2).samples();
    auto scaled = h;
    for (auto &v : scaled.values())
        v *= cplx(0.0, 3.0);
    const auto a = estimate_kfactor(region_of(h));
    const auto b = estimate_kfactor(region_of(scaled));
    REQUIRE(a.valid);
    REQUIRE(b.valid);
    CHECK_THAT(*b.k_factor_linear, WithinRel(*a.k_factor_linear, 1e-9));
    CHECK_THAT(b.mean_power, WithinRel(9.0 * a.mean_power, 1e-12));
}
