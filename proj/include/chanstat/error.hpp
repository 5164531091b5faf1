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

#ifndef CHANSTAT_ERROR_HPP
#define CHANSTAT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace chanstat
{

enum class ErrorCode
{
    InvalidArgument,
    InvalidConfig,
    OddRegionLength,
    TapOutOfRange,
    ZeroTransmitAmplitude,
    WrongSymbolCount,
    DimensionMismatch,
    ZeroDivisor,
    ParseError,
    ZeroMagnitudeEntry,
    AllZeroRegion,
    InvalidTaperOrder,
    ZeroPdp,
    DegenerateInput,
    TooFewValidRegions,
    IoError,
    BandMismatch,
    WindowOutOfRange
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this exception type. The code is
// stable and machine-readable; the message is for humans.
class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace chanstat

#endif
