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

#include "twotier/cli/areas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "twotier/stochastic.hpp"

namespace twotier::cli {

double AreaComparison::max_error_over_total() const
{
    double worst = 0;
    for (std::size_t i = 0; i < sampled.size(); ++i) {
        worst = std::max(worst, std::abs(closed.areas[i] - sampled[i]) / closed.total);
    }
    return worst;
}

std::optional<int> region_of(Point p, double d_f, const geometry::QuantizationGrid& grid)
{
    const double to_fap = distance(p, {d_f, 0.0});
    const double to_mbs = std::sqrt(p.x * p.x + p.y * p.y);
    const double ratio =
        to_fap > 0 ? to_mbs / to_fap : std::numeric_limits<double>::infinity();
    return geometry::region_index(ratio, grid);
}

AreaComparison compare_areas(double d_f, double R, const geometry::QuantizationGrid& grid,
                             std::uint64_t samples, std::uint64_t seed)
{
    AreaComparison cmp;
    cmp.closed = geometry::partition_areas(d_f, R, grid);
    cmp.samples = samples;
    const int t = grid.t();
    cmp.hits.assign(cmp.closed.areas.size(), 0);
    std::uint64_t covered = 0;
    RngStream rng(seed);
    for (std::uint64_t n = 0; n < samples; ++n) {
        const auto region = region_of(uniform_in_disk({0, 0}, R, rng), d_f, grid);
        if (region) {
            ++cmp.hits[static_cast<std::size_t>(*region + t)];
        } else {
            ++covered;
        }
    }
    const double disk = std::numbers::pi * R * R;
    const double n = static_cast<double>(std::max<std::uint64_t>(samples, 1));
    cmp.sampled.resize(cmp.hits.size());
    for (std::size_t i = 0; i < cmp.hits.size(); ++i) {
        cmp.sampled[i] = disk * static_cast<double>(cmp.hits[i]) / n;
    }
    const auto cover = geometry::fap_coverage_circle(d_f, grid.kappa());
    cmp.coverage_closed = std::numbers::pi * cover.radius * cover.radius -
                          geometry::circle_outside_area(cover.radius, R, cover.center_x);
    cmp.coverage_sampled = disk * static_cast<double>(covered) / n;
    return cmp;
}

}  // namespace twotier::cli
