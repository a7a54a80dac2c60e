/*
   Copyright 2026 The twotier Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <vector>

#include "twotier/geometry.hpp"

namespace twotier::cli {

/// Closed-form partition areas next to a sampled histogram of the same
/// regions, for a FAP at (d_f, 0).
struct AreaComparison {
    geometry::PartitionAreas closed;
    std::vector<double> sampled;      ///< per region, same layout as closed.areas
    std::vector<std::uint64_t> hits;  ///< sample counts per region
    double coverage_closed = 0;       ///< clipped coverage-circle area
    double coverage_sampled = 0;
    std::uint64_t samples = 0;

    /// max_i |s_i - sampled_i| / closed.total
    double max_error_over_total() const;
};

AreaComparison compare_areas(double d_f, double R, const geometry::QuantizationGrid& grid,
                             std::uint64_t samples, std::uint64_t seed);

/// Region index of a point for a FAP at (d_f, 0); nullopt inside coverage.
std::optional<int> region_of(Point p, double d_f, const geometry::QuantizationGrid& grid);

}  // namespace twotier::cli
