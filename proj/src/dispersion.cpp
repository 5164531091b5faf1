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

#include "chanstat/dispersion.hpp"
#include "chanstat/error.hpp"
#include "chanstat/fft.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

namespace chanstat
{
namespace
{

// Number of eigenvalues strictly below x (Sturm sequence).
std::size_t count_below(const Tridiagonal &t, double x, double pivmin)
{
    std::size_t count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < t.diagonal.size(); ++i)
    {
        const double coupling = i == 0 ? 0.0 : t.off_diagonal[i - 1] * t.off_diagonal[i - 1];
        q = t.diagonal[i] - x - (i == 0 ? 0.0 : coupling / q);
        if (std::abs(q) < pivmin)
            q = -pivmin;
        if (q < 0.0)
            ++count;
    }
    return count;
}

// idx-th smallest eigenvalue (0-based) by bisection.
double bisect_eigenvalue(const Tridiagonal &t, std::size_t idx)
{
    const std::size_t n = t.diagonal.size();
    double lo = std::numeric_limits<double>::max(), hi = std::numeric_limits<double>::lowest();
    double max_coupling = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
        const double left = i == 0 ? 0.0 : std::abs(t.off_diagonal[i - 1]);
        const double right = i + 1 == n ? 0.0 : std::abs(t.off_diagonal[i]);
        lo = std::min(lo, t.diagonal[i] - left - right);
        hi = std::max(hi, t.diagonal[i] + left + right);
        if (i + 1 < n)
            max_coupling = std::max(max_coupling, t.off_diagonal[i] * t.off_diagonal[i]);
    }
    const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, max_coupling);
    const double eps = std::numeric_limits<double>::epsilon();
    for (int iter = 0; iter < 200; ++iter)
    {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= 2.0 * eps * std::max(std::abs(lo), std::abs(hi)) || mid == lo || mid == hi)
            break;
        if (count_below(t, mid, pivmin) > idx)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

// LU factorisation with partial pivoting of (T - shift I), as in LAPACK dgttrf.
class ShiftedTridiagonalLu
{
public:
    ShiftedTridiagonalLu(const Tridiagonal &t, double shift)
        : n_(t.diagonal.size()), dl_(t.off_diagonal), d_(t.diagonal), du_(t.off_diagonal),
          du2_(n_ > 2 ? n_ - 2 : 0, 0.0), swapped_(n_ > 0 ? n_ - 1 : 0, false)
    {
        double norm = 0.0;
        for (std::size_t i = 0; i < n_; ++i)
        {
            d_[i] -= shift;
            norm = std::max(norm, std::abs(d_[i]) + (i > 0 ? std::abs(dl_[i - 1]) : 0.0) +
                                      (i + 1 < n_ ? std::abs(du_[i]) : 0.0));
        }
        const double tiny = std::numeric_limits<double>::epsilon() * std::max(norm, 1.0);

        for (std::size_t i = 0; i + 1 < n_; ++i)
        {
            if (std::abs(d_[i]) >= std::abs(dl_[i]))
            {
                if (d_[i] == 0.0)
                    d_[i] = tiny;
                const double fact = dl_[i] / d_[i];
                dl_[i] = fact;
                d_[i + 1] -= fact * du_[i];
            }
            else
            {
                const double fact = d_[i] / dl_[i];
                d_[i] = dl_[i];
                dl_[i] = fact;
                const double temp = du_[i];
                du_[i] = d_[i + 1];
                d_[i + 1] = temp - fact * d_[i + 1];
                if (i + 2 < n_)
                {
                    du2_[i] = du_[i + 1];
                    du_[i + 1] = -fact * du_[i + 1];
                }
                swapped_[i] = true;
            }
        }
        for (auto &v : d_)
            if (std::abs(v) < tiny)
                v = v < 0.0 ? -tiny : tiny;
    }

    void solve(std::vector<double> &b) const
    {
        for (std::size_t i = 0; i + 1 < n_; ++i)
        {
            if (!swapped_[i])
                b[i + 1] -= dl_[i] * b[i];
            else
            {
                const double temp = b[i];
                b[i] = b[i + 1];
                b[i + 1] = temp - dl_[i] * b[i];
            }
        }
        b[n_ - 1] /= d_[n_ - 1];
        if (n_ > 1)
            b[n_ - 2] = (b[n_ - 2] - du_[n_ - 2] * b[n_ - 1]) / d_[n_ - 2];
        for (std::size_t i = n_ - 2; i-- > 0;)
            b[i] = (b[i] - du_[i] * b[i + 1] - du2_[i] * b[i + 2]) / d_[i];
    }

private:
    std::size_t n_;
    std::vector<double> dl_, d_, du_, du2_;
    std::vector<bool> swapped_;
};

double dot(const std::vector<double> &a, const std::vector<double> &b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

void normalize(std::vector<double> &v)
{
    const double norm = std::sqrt(dot(v, v));
    for (auto &x : v)
        x /= norm;
}

} // namespace

Tridiagonal dpss_tridiagonal(std::size_t length, double time_halfbandwidth)
{
    if (length == 0)
        throw Error(ErrorCode::InvalidArgument, "DPSS length must be positive");
    if (!(time_halfbandwidth > 0.0) || !(time_halfbandwidth < static_cast<double>(length) / 2.0))
        throw Error(ErrorCode::InvalidArgument, "time-halfbandwidth product must lie in (0, L/2)");
    const double L = static_cast<double>(length);
    const double w = time_halfbandwidth / L;
    const double c = std::cos(2.0 * std::numbers::pi * w);
    Tridiagonal t;
    t.diagonal.resize(length);
    t.off_diagonal.resize(length - 1);
    for (std::size_t i = 0; i < length; ++i)
    {
        const double x = (L - 1.0 - 2.0 * static_cast<double>(i)) / 2.0;
        t.diagonal[i] = x * x * c;
    }
    for (std::size_t i = 1; i < length; ++i)
        t.off_diagonal[i - 1] = static_cast<double>(i) * (L - static_cast<double>(i)) / 2.0;
    return t;
}

Dpss dpss(std::size_t length, double time_halfbandwidth, std::size_t count)
{
    if (count == 0 || count > length)
        throw Error(ErrorCode::InvalidTaperOrder, "requested " + std::to_string(count) + " tapers of length " +
                                                      std::to_string(length));
    const Tridiagonal t = dpss_tridiagonal(length, time_halfbandwidth);

    Dpss out;
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> start(-1.0, 1.0);
    for (std::size_t j = 0; j < count; ++j)
    {
        const double lambda = bisect_eigenvalue(t, length - 1 - j);
        out.eigenvalues.push_back(lambda);

        std::vector<double> v(length);
        if (length == 1)
            v[0] = 1.0;
        else
        {
            for (auto &x : v)
                x = 1.0 + 0.5 * start(rng);
            const ShiftedTridiagonalLu lu(t, lambda);
            for (int iter = 0; iter < 4; ++iter)
            {
                lu.solve(v);
                for (const auto &prev : out.sequences)
                {
                    const double proj = dot(v, prev);
                    for (std::size_t i = 0; i < length; ++i)
                        v[i] -= proj * prev[i];
                }
                normalize(v);
            }
        }

        const double peak = std::abs(*std::max_element(v.begin(), v.end(),
                                                       [](double a, double b) { return std::abs(a) < std::abs(b); }));
        const auto first = std::find_if(v.begin(), v.end(), [&](double x) { return std::abs(x) > 1e-12 * peak; });
        if (first != v.end() && *first < 0.0)
            for (auto &x : v)
                x = -x;
        out.sequences.push_back(std::move(v));
    }
    return out;
}

// ---- tapers ---------------------------------------------------------------------

TaperSet::TaperSet(std::vector<std::vector<double>> time_tapers, std::vector<std::vector<double>> freq_tapers)
    : time_(std::move(time_tapers)), freq_(std::move(freq_tapers))
{
    if (time_.empty() || freq_.empty())
        throw Error(ErrorCode::InvalidTaperOrder, "need at least one time and one frequency taper");
    for (const auto &t : time_)
        if (t.size() != time_.front().size() || t.empty())
            throw Error(ErrorCode::DimensionMismatch, "time tapers differ in length");
    for (const auto &f : freq_)
        if (f.size() != freq_.front().size() || f.empty())
            throw Error(ErrorCode::DimensionMismatch, "frequency tapers differ in length");
}

RMatrix TaperSet::combined(std::size_t w) const
{
    const std::size_t a = w / freq_.size();
    const std::size_t b = w % freq_.size();
    const auto &u = time_.at(a);
    const auto &v = freq_.at(b);
    RMatrix g(v.size(), u.size());
    for (std::size_t n = 0; n < u.size(); ++n)
        for (std::size_t k = 0; k < v.size(); ++k)
            g(k, n) = v[k] * u[n];
    return g;
}

TaperSet make_tapers(const SoundingConfig &cfg, double time_halfbandwidth, double freq_halfbandwidth)
{
    if (cfg.time_tapers > cfg.snapshots_per_region || cfg.freq_tapers > cfg.num_subcarriers)
        throw Error(ErrorCode::InvalidTaperOrder, "more tapers than samples");
    auto time = dpss(cfg.snapshots_per_region, time_halfbandwidth, cfg.time_tapers);
    auto freq = dpss(cfg.num_subcarriers, freq_halfbandwidth, cfg.freq_tapers);
    return TaperSet(std::move(time.sequences), std::move(freq.sequences));
}

// ---- LSF / PDP ----------------------------------------------------------------------

namespace
{

// Delay transform over k, Doppler transform over n, then centre Doppler.
CMatrix delay_doppler(CMatrix x)
{
    fft::columns(x, fft::Direction::Inverse);
    fft::rows(x, fft::Direction::Forward);
    const std::size_t N = x.cols();
    const std::size_t K = x.rows();
    CMatrix out(K, N);
    for (std::size_t j = 0; j < N; ++j)
    {
        const std::size_t src = (j + N - N / 2) % N;
        std::copy_n(x.col(src).data(), K, out.col(j).data());
    }
    return out;
}

} // namespace

CMatrix windowed_spectrum(const RegionCtf &region, const RMatrix &taper)
{
    const auto &h = region.samples;
    if (taper.rows() != h.rows() || taper.cols() != h.cols())
        throw Error(ErrorCode::DimensionMismatch, "taper is " + std::to_string(taper.rows()) + " x " +
                                                      std::to_string(taper.cols()) + ", region is " +
                                                      std::to_string(h.rows()) + " x " + std::to_string(h.cols()));
    CMatrix x(h.rows(), h.cols());
    for (std::size_t i = 0; i < x.size(); ++i)
        x.values()[i] = h.values()[i] * taper.values()[i];
    return delay_doppler(std::move(x));
}

CMatrix windowed_spectrum(const RegionCtf &region, const TaperSet &tapers, std::size_t w)
{
    const auto &h = region.samples;
    if (tapers.subcarriers() != h.rows() || tapers.snapshots() != h.cols())
        throw Error(ErrorCode::DimensionMismatch, "taper set does not match region dimensions");
    const auto &u = tapers.time_taper(w / tapers.freq_count());
    const auto &v = tapers.freq_taper(w % tapers.freq_count());
    CMatrix x(h.rows(), h.cols());
    for (std::size_t n = 0; n < h.cols(); ++n)
        for (std::size_t k = 0; k < h.rows(); ++k)
            x(k, n) = h(k, n) * (v[k] * u[n]);
    return delay_doppler(std::move(x));
}

namespace
{

// The time taper scales whole columns, so it commutes with the delay
// transform: one delay transform per frequency taper serves every time taper.
std::vector<CMatrix> delay_transforms(const RegionCtf &region, const TaperSet &tapers)
{
    const auto &h = region.samples;
    if (tapers.subcarriers() != h.rows() || tapers.snapshots() != h.cols())
        throw Error(ErrorCode::DimensionMismatch, "taper set does not match region dimensions");
    const std::size_t K = h.rows();
    const std::size_t N = h.cols();
    std::vector<CMatrix> delay;
    for (std::size_t b = 0; b < tapers.freq_count(); ++b)
    {
        const auto &v = tapers.freq_taper(b);
        CMatrix x(K, N);
        for (std::size_t n = 0; n < N; ++n)
            for (std::size_t k = 0; k < K; ++k)
                x(k, n) = h(k, n) * v[k];
        fft::columns(x, fft::Direction::Inverse);
        delay.push_back(std::move(x));
    }
    return delay;
}

} // namespace

Lsf lsf(const RegionCtf &region, const TaperSet &tapers, double delay_resolution_s)
{
    const std::vector<CMatrix> delay = delay_transforms(region, tapers);
    const std::size_t K = region.samples.rows();
    const std::size_t N = region.samples.cols();
    Lsf out{RMatrix(K, N), std::vector<double>(K)};
    CMatrix y(K, N);
    for (std::size_t w = 0; w < tapers.count(); ++w)
    {
        const auto &u = tapers.time_taper(w / tapers.freq_count());
        const CMatrix &x = delay[w % tapers.freq_count()];
        for (std::size_t n = 0; n < N; ++n)
            for (std::size_t k = 0; k < K; ++k)
                y(k, n) = x(k, n) * u[n];
        fft::rows(y, fft::Direction::Forward);
        for (std::size_t j = 0; j < N; ++j)
        {
            const std::size_t src = (j + N - N / 2) % N;
            for (std::size_t k = 0; k < K; ++k)
                out.values(k, j) += abs2(y(k, src));
        }
    }
    const double scale = 1.0 / static_cast<double>(tapers.count());
    for (auto &v : out.values.values())
        v *= scale;
    for (std::size_t k = 0; k < K; ++k)
        out.delay_s[k] = static_cast<double>(k) * delay_resolution_s;
    return out;
}

Lsf lsf(const RegionCtf &region, const TaperSet &tapers, const SoundingConfig &cfg)
{
    return lsf(region, tapers, 1.0 / cfg.bandwidth_hz);
}

Pdp pdp(const Lsf &lsf)
{
    const auto &c = lsf.values;
    Pdp out{std::vector<double>(c.rows(), 0.0), lsf.delay_s};
    if (out.delay_s.size() != c.rows())
        throw Error(ErrorCode::DimensionMismatch, "LSF delay axis does not match its rows");
    for (std::size_t j = 0; j < c.cols(); ++j)
        for (std::size_t t = 0; t < c.rows(); ++t)
            out.values[t] += c(t, j);
    const double scale = c.cols() > 0 ? 1.0 / static_cast<double>(c.cols()) : 0.0;
    for (auto &v : out.values)
        v *= scale;
    return out;
}

Pdp pdp(const RegionCtf &region, const TaperSet &tapers, const SoundingConfig &cfg)
{
    // sum_nu |FFT_n y|^2 = N sum_n |y|^2, and the 1/N of the Doppler average
    // cancels the N.
    const std::vector<CMatrix> delay = delay_transforms(region, tapers);
    const std::size_t K = region.samples.rows();
    const std::size_t N = region.samples.cols();
    Pdp out{std::vector<double>(K, 0.0), std::vector<double>(K)};
    for (std::size_t w = 0; w < tapers.count(); ++w)
    {
        const auto &u = tapers.time_taper(w / tapers.freq_count());
        const CMatrix &x = delay[w % tapers.freq_count()];
        for (std::size_t n = 0; n < N; ++n)
        {
            const double weight = u[n] * u[n];
            for (std::size_t k = 0; k < K; ++k)
                out.values[k] += weight * abs2(x(k, n));
        }
    }
    const double scale = 1.0 / static_cast<double>(tapers.count());
    for (std::size_t k = 0; k < K; ++k)
    {
        out.values[k] *= scale;
        out.delay_s[k] = static_cast<double>(k) * (1.0 / cfg.bandwidth_hz);
    }
    return out;
}

double rms_delay_spread(const Pdp &pdp)
{
    if (pdp.values.size() != pdp.delay_s.size())
        throw Error(ErrorCode::DimensionMismatch, "PDP values and delay axis differ in length");
    double total = 0.0, first = 0.0;
    for (std::size_t t = 0; t < pdp.values.size(); ++t)
    {
        total += pdp.values[t];
        first += pdp.values[t] * pdp.delay_s[t];
    }
    if (!(total > 0.0))
        throw Error(ErrorCode::ZeroPdp, "power delay profile has no mass");
    const double mean = first / total;
    double second = 0.0;
    for (std::size_t t = 0; t < pdp.values.size(); ++t)
        second += pdp.values[t] * (pdp.delay_s[t] - mean) * (pdp.delay_s[t] - mean);
    return std::sqrt(second / total);
}

} // namespace chanstat
