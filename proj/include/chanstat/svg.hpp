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

#ifndef CHANSTAT_SVG_HPP
#define CHANSTAT_SVG_HPP

#include <string>
#include <vector>

namespace chanstat::svg
{

struct Series
{
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    bool step = false; // staircase, for empirical CDFs
};

struct Chart
{
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;
};

// Self-contained SVG line chart. Non-finite points break the polyline.
std::string render(const Chart &chart);

} // namespace chanstat::svg

#endif
