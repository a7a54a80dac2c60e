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
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace twotier {

struct Point {
    double x = 0;
    double y = 0;
};

double distance(Point a, Point b);

namespace geometry {

struct Circle {
    double center_x = 0;
    double center_y = 0;
    double radius = 0;

    bool contains(Point p) const;
};

/// gamma = kappa^2 / (1 - kappa^2)^2. Throws std::domain_error unless
/// 0 <= kappa < 1.
double gamma(double kappa);

/// Locus d(u, FAP) = kappa * d(u, MBS) for an MBS at the origin and a FAP at
/// (d_f, 0). Its interior is the set of points the FAP takes over, i.e.
/// distance ratio d(u, MBS) / d(u, FAP) > 1 / kappa.
Circle fap_coverage_circle(double d_f, double kappa);

/// Locus d(u, MBS) = kappa_i * d(u, FAP) on the MBS side. Its interior is
/// the set with distance ratio <= kappa_i. Requires 0 < kappa_i < 1; the
/// kappa_i = 1 locus is a line and is handled by bisector_segment_area.
Circle inner_apollonius_circle(double d_f, double kappa_i);

/// Area of the radius-`a` disk lying outside a radius-`b` disk whose center
/// is `c` away.
double circle_outside_area(double a, double b, double c);

/// Lens area of two disks with radii a, b and center distance c.
double circle_intersection_area(double a, double b, double c);

/// The Appendix-style closed form written with inverse secants, valid only
/// in the partially overlapping regime. Kept to cross-check the acos form.
double circle_outside_area_sec_form(double a, double b, double c);

/// Area of the radius-R disk on the FAP side of the perpendicular bisector
/// x = d_f / 2. Requires 0 <= d_f < 2R.
double bisector_segment_area(double R, double d_f);

/// Ladder kappa = k_0 < k_1 < ... < k_t = 1 used to quantize the distance
/// ratio of MBS-served users.
class QuantizationGrid {
public:
    /// Throws std::domain_error unless the ladder is strictly increasing,
    /// starts in (0, 1) and ends at exactly 1 with t >= 1.
    explicit QuantizationGrid(std::vector<double> levels);

    /// k_j = kappa + j (1 - kappa) / t.
    static QuantizationGrid uniform(double kappa, int t);

    int t() const { return static_cast<int>(levels_.size()) - 1; }
    double kappa() const { return levels_.front(); }
    double level(int j) const { return levels_.at(static_cast<std::size_t>(j)); }
    std::span<const double> levels() const { return levels_; }

private:
    std::vector<double> levels_;
};

/// Region index in [-t, t] for a point with distance ratio `ratio`
/// (d to MBS over d to FAP), or nullopt when the point lies inside the FAP
/// coverage circle (ratio > 1 / kappa).
///
///   0        ratio <= k_0
///   -j       k_{j-1} < ratio <= k_j
///   +j       1 / k_j < ratio <= 1 / k_{j-1}
std::optional<int> region_index(double ratio, const QuantizationGrid& grid);

/// Quantized ratio bounds for a region: (upper, lower) with
/// lower <= ratio <= upper for every ratio in the region.
struct QuantizedRatio {
    double upper;
    double lower;
};
QuantizedRatio quantized_ratio(int index, const QuantizationGrid& grid);

/// Areas s_{-t..t} of the MBS-side regions of the macrocell and their
/// probabilities p_i = s_i / s.
struct PartitionAreas {
    int t = 0;
    std::vector<double> areas;  ///< areas[i + t] = s_i
    std::vector<double> probs;  ///< probs[i + t] = p_i
    double total = 0;

    double area(int i) const { return areas.at(static_cast<std::size_t>(i + t)); }
    double prob(int i) const { return probs.at(static_cast<std::size_t>(i + t)); }
};

/// Requires 0 < d_f < R. Throws std::domain_error otherwise, and
/// std::logic_error if a region comes out more negative than rounding
/// permits.
PartitionAreas partition_areas(double d_f, double R, const QuantizationGrid& grid);

/// pi R^2 times the fraction of `n_samples` uniform disk points satisfying
/// `predicate`. Deterministic for a fixed seed.
double monte_carlo_area(const std::function<bool(Point)>& predicate, double R,
                        std::uint64_t n_samples, std::uint64_t seed);

}  // namespace geometry
}  // namespace twotier
