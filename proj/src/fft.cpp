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

#include "chanstat/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace chanstat::fft
{
namespace
{

// Planner calls are not thread-safe in FFTW; execution with the new-array
// interface is. Plans are created once per geometry and kept for the process.
class PlanCache
{
public:
    ~PlanCache()
    {
        for (auto &[key, plan] : plans_)
            fftw_destroy_plan(plan);
    }

    fftw_plan get(int n, int howmany, int stride, int dist, int sign)
    {
        const Key key{n, howmany, stride, dist, sign};
        std::lock_guard lock(mutex_);
        if (auto it = plans_.find(key); it != plans_.end())
            return it->second;

        // FFTW_ESTIMATE does not touch the planning buffer.
        const std::size_t extent = static_cast<std::size_t>(n - 1) * stride +
                                   static_cast<std::size_t>(howmany - 1) * dist + 1;
        std::vector<fftw_complex> scratch(extent);
        fftw_plan plan = fftw_plan_many_dft(1, &n, howmany, scratch.data(), nullptr, stride, dist, scratch.data(),
                                            nullptr, stride, dist, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_.emplace(key, plan);
        return plan;
    }

private:
    using Key = std::tuple<int, int, int, int, int>;
    std::mutex mutex_;
    std::map<Key, fftw_plan> plans_;
};

PlanCache &cache()
{
    static PlanCache instance;
    return instance;
}

void run(cplx *data, int n, int howmany, int stride, int dist, Direction dir)
{
    if (n == 0 || howmany == 0)
        return;
    const int sign = dir == Direction::Forward ? FFTW_FORWARD : FFTW_BACKWARD;
    fftw_plan plan = cache().get(n, howmany, stride, dist, sign);
    auto *buf = reinterpret_cast<fftw_complex *>(data);
    fftw_execute_dft(plan, buf, buf);
}

} // namespace

void columns(CMatrix &m, Direction dir)
{
    run(m.data(), static_cast<int>(m.rows()), static_cast<int>(m.cols()), 1, static_cast<int>(m.rows()), dir);
}

void rows(CMatrix &m, Direction dir)
{
    run(m.data(), static_cast<int>(m.cols()), static_cast<int>(m.rows()), static_cast<int>(m.rows()), 1, dir);
}

void sequence(std::span<cplx> x, Direction dir)
{
    run(x.data(), static_cast<int>(x.size()), 1, 1, 1, dir);
}

} // namespace chanstat::fft
