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

#ifndef CHANSTAT_FFT_HPP
#define CHANSTAT_FFT_HPP

#include "chanstat/matrix.hpp"

namespace chanstat::fft
{

// Forward: X[m] = sum_k x[k] exp(-j 2 pi m k / L). Inverse uses exp(+j ...).
enum class Direction
{
    Forward,
    Inverse
};

// Transforms are unnormalised; callers scale as their convention requires.

// In-place transform of every column (length rows()).
void columns(CMatrix &m, Direction dir);

// In-place transform of every row (length cols()).
void rows(CMatrix &m, Direction dir);

// In-place transform of a single contiguous sequence.
void sequence(std::span<cplx> x, Direction dir);

} // namespace chanstat::fft

#endif
