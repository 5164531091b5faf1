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

#ifndef CHANSTAT_DISPERSION_HPP
#define CHANSTAT_DISPERSION_HPP

#include "chanstat/model.hpp"

#include <vector>

namespace chanstat
{

// Symmetric tridiagonal matrix that commutes with the time-bandwidth
// concentration operator for sequences of length L and half-bandwidth
// W = NW / L. Its eigenvectors are the discrete prolate spheroidal sequences.
struct Tridiagonal
{
    std::vector<double> diagonal;     // length L
    std::vector<double> off_diagonal; // length L - 1
};

Tridiagonal dpss_tridiagonal(std::size_t length, double time_halfbandwidth);

struct Dpss
{
    std::vector<double> eigenvalues;           // of the tridiagonal matrix, descending
    std::vector<std::vector<double>> sequences; // unit norm, first non-zero element positive
};

// The `count` leading DPSS of the given length.
Dpss dpss(std::size_t length, double time_halfbandwidth, std::size_t count);

// 2-D tapers G_w[k, n] = freq[b][k] * time[a][n] with w = a * J + b.
class TaperSet
{
public:
    TaperSet(std::vector<std::vector<double>> time_tapers, std::vector<std::vector<double>> freq_tapers);

    std::size_t time_count() const noexcept { return time_.size(); }
    std::size_t freq_count() const noexcept { return freq_.size(); }
    std::size_t count() const noexcept { return time_.size() * freq_.size(); }
    std::size_t subcarriers() const noexcept { return freq_.front().size(); }
    std::size_t snapshots() const noexcept { return time_.front().size(); }

    const std::vector<double> &time_taper(std::size_t a) const { return time_.at(a); }
    const std::vector<double> &freq_taper(std::size_t b) const { return freq_.at(b); }

    RMatrix combined(std::size_t w) const;

private:
    std::vector<std::vector<double>> time_;
    std::vector<std::vector<double>> freq_;
};

inline constexpr double default_time_halfbandwidth = 1.5;
inline constexpr double default_freq_halfbandwidth = 1.0;

TaperSet make_tapers(const SoundingConfig &cfg, double time_halfbandwidth = default_time_halfbandwidth,
                     double freq_halfbandwidth = default_freq_halfbandwidth);

// H_w[tau, nu] = sum_k sum_n H[k,n] G[k,n] exp(-j2pi (nu n / N - tau k / K)),
// tau = 0..K-1 along rows, nu = -N/2..N/2-1 along columns (column j is
// nu = j - N/2). Sums run over 0-based k and n; re-centring either index only
// multiplies each output by a unit-modulus factor.
CMatrix windowed_spectrum(const RegionCtf &region, const RMatrix &taper);
CMatrix windowed_spectrum(const RegionCtf &region, const TaperSet &tapers, std::size_t w);

struct Lsf
{
    RMatrix values; // [tau, nu], nu centred as in windowed_spectrum
    std::vector<double> delay_s;
};

struct Pdp
{
    std::vector<double> values;
    std::vector<double> delay_s;
};

Lsf lsf(const RegionCtf &region, const TaperSet &tapers, double delay_resolution_s);
Lsf lsf(const RegionCtf &region, const TaperSet &tapers, const SoundingConfig &cfg);

// Average of the LSF over Doppler.
Pdp pdp(const Lsf &lsf);

// The same average taken directly from the tapered delay-domain samples.
// By Parseval the Doppler transform drops out, so no LSF is formed.
Pdp pdp(const RegionCtf &region, const TaperSet &tapers, const SoundingConfig &cfg);

// Square root of the second central moment of the PDP over delay (seconds).
double rms_delay_spread(const Pdp &pdp);

} // namespace chanstat

#endif
