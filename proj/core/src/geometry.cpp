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

#include "twotier/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "twotier/stochastic.hpp"

namespace twotier {

double distance(Point a, Point b)
{
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

namespace geometry {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAcosSlack = 1e-12;

// acos with arguments within kAcosSlack of +-1 snapped onto the boundary.
double safe_acos(double x)
{
    if (x > 1.0 && x <= 1.0 + kAcosSlack) x = 1.0;
    if (x < -1.0 && x >= -1.0 - kAcosSlack) x = -1.0;
    if (x > 1.0 || x < -1.0) {
        throw std::logic_error("acos argument out of range: " + std::to_string(x));
    }
    return std::acos(x);
}

void require_ratio(double kappa, const char* what)
{
    if (!(kappa > 0.0 && kappa < 1.0)) {
        throw std::domain_error(std::string(what) + " requires 0 < kappa < 1");
    }
}

void require_positive_distance(double d_f)
{
    if (!(d_f > 0.0) || !std::isfinite(d_f)) {
        throw std::domain_error("FAP distance must be positive");
    }
}

// Area of a circle clipped to the macrocell disk.
double clipped_area(double radius, double R, double center_distance)
{
    return kPi * radius * radius - circle_outside_area(radius, R, center_distance);
}

}  // namespace

bool Circle::contains(Point p) const
{
    const double dx = p.x - center_x;
    const double dy = p.y - center_y;
    return dx * dx + dy * dy <= radius * radius;
}

double gamma(double kappa)
{
    if (!(kappa >= 0.0 && kappa < 1.0)) {
        throw std::domain_error("gamma requires 0 <= kappa < 1");
    }
    const double k2 = kappa * kappa;
    return k2 / ((1.0 - k2) * (1.0 - k2));
}

Circle fap_coverage_circle(double d_f, double kappa)
{
    require_positive_distance(d_f);
    require_ratio(kappa, "fap_coverage_circle");
    const double scale = 1.0 / (1.0 - kappa * kappa);
    return {d_f * scale, 0.0, kappa * d_f * scale};
}

Circle inner_apollonius_circle(double d_f, double kappa_i)
{
    require_positive_distance(d_f);
    require_ratio(kappa_i, "inner_apollonius_circle");
    const double k2 = kappa_i * kappa_i;
    const double scale = 1.0 / (1.0 - k2);
    return {-k2 * d_f * scale, 0.0, kappa_i * d_f * scale};
}

double circle_intersection_area(double a, double b, double c)
{
    if (a < 0 || b < 0 || c < 0) {
        throw std::domain_error("circle_intersection_area needs nonnegative inputs");
    }
    if (a == 0 || b == 0 || c >= a + b) return 0.0;
    if (c <= std::abs(a - b)) {
        const double r = std::min(a, b);
        return kPi * r * r;
    }
    const double alpha = safe_acos((c * c + a * a - b * b) / (2 * a * c));
    const double beta = safe_acos((c * c + b * b - a * a) / (2 * b * c));
    const double kite =
        (-c + a + b) * (c + a - b) * (c - a + b) * (c + a + b);
    return a * a * alpha + b * b * beta - 0.5 * std::sqrt(std::max(kite, 0.0));
}

double circle_outside_area(double a, double b, double c)
{
    if (a < 0 || b < 0 || c < 0) {
        throw std::domain_error("circle_outside_area needs nonnegative inputs");
    }
    if (a == 0) return 0.0;
    if (c >= a + b) return kPi * a * a;
    if (c <= b - a) return 0.0;
    if (c <= a - b) return kPi * (a * a - b * b);
    return std::max(kPi * a * a - circle_intersection_area(a, b, c), 0.0);
}

double circle_outside_area_sec_form(double a, double b, double c)
{
    auto asec = [](double x) { return safe_acos(1.0 / x); };
    const double kite = (a + b + c) * (b + c - a) * (c + a - b) * (a + b - c);
    return a * a * asec(2 * a * c / (b * b - a * a - c * c)) -
           b * b * asec(2 * b * c / (b * b + c * c - a * a)) +
           0.5 * std::sqrt(kite);
}

double bisector_segment_area(double R, double d_f)
{
    if (!(R > 0) || !(d_f >= 0) || !(d_f < 2 * R)) {
        throw std::domain_error("bisector_segment_area requires 0 <= d_f < 2R");
    }
    const double theta = safe_acos(d_f / (2 * R));
    return R * R * (theta - 0.5 * std::sin(2 * theta));
}

QuantizationGrid::QuantizationGrid(std::vector<double> levels)
    : levels_(std::move(levels))
{
    if (levels_.size() < 2) {
        throw std::domain_error("quantization grid needs t >= 1");
    }
    if (!(levels_.front() > 0.0 && levels_.front() < 1.0)) {
        throw std::domain_error("quantization grid must start in (0, 1)");
    }
    if (levels_.back() != 1.0) {
        throw std::domain_error("quantization grid must end at 1");
    }
    for (std::size_t j = 1; j < levels_.size(); ++j) {
        if (!(levels_[j] > levels_[j - 1])) {
            throw std::domain_error("quantization grid must be strictly increasing");
        }
    }
}

QuantizationGrid QuantizationGrid::uniform(double kappa, int t)
{
    if (t < 1) {
        throw std::domain_error("quantization grid needs t >= 1");
    }
    std::vector<double> levels(static_cast<std::size_t>(t) + 1);
    for (int j = 0; j < t; ++j) {
        levels[static_cast<std::size_t>(j)] = kappa + j * (1.0 - kappa) / t;
    }
    levels.back() = 1.0;
    return QuantizationGrid(std::move(levels));
}

std::optional<int> region_index(double ratio, const QuantizationGrid& grid)
{
    const auto levels = grid.levels();
    const int t = grid.t();
    if (ratio <= levels[0]) return 0;
    if (ratio <= 1.0) {
        // smallest j with ratio <= k_j
        const auto it = std::lower_bound(levels.begin(), levels.end(), ratio);
        return -static_cast<int>(it - levels.begin());
    }
    const double inverse = 1.0 / ratio;
    if (inverse < levels[0]) return std::nullopt;
    // smallest j with 1/ratio < k_j
    const auto it = std::upper_bound(levels.begin(), levels.end(), inverse);
    const int j = static_cast<int>(it - levels.begin());
    return std::min(j, t);
}

QuantizedRatio quantized_ratio(int index, const QuantizationGrid& grid)
{
    const int t = grid.t();
    if (index < -t || index > t) {
        throw std::out_of_range("region index outside [-t, t]");
    }
    if (index == 0) return {grid.kappa(), 0.0};
    if (index < 0) return {grid.level(-index), grid.level(-index - 1)};
    return {1.0 / grid.level(index - 1), 1.0 / grid.level(index)};
}

PartitionAreas partition_areas(double d_f, double R, const QuantizationGrid& grid)
{
    if (!(R > 0) || !(d_f > 0) || !(d_f < R)) {
        throw std::domain_error("partition_areas requires 0 < d_f < R");
    }
    const int t = grid.t();
    const double disk = kPi * R * R;
    const double eps = 1e-6 * disk;

    PartitionAreas out;
    out.t = t;
    out.areas.assign(static_cast<std::size_t>(2 * t + 1), 0.0);

    auto settle = [&](double value, int index) {
        if (value >= 0) return value;
        if (value >= -eps) return 0.0;
        throw std::logic_error("partition area s_" + std::to_string(index) +
                               " is negative beyond rounding: " +
                               std::to_string(value));
    };

    // MBS side: {ratio <= k_j} are the inner Apollonius disks, closed by the
    // half-disk beyond the bisector at j = t.
    double inner_sum = 0;
    for (int j = 0; j <= t; ++j) {
        double cumulative;
        if (j < t) {
            const double k = grid.level(j);
            const double k2 = k * k;
            const double radius = k * d_f / (1 - k2);
            const double offset = k2 * d_f / (1 - k2);
            const bool clipped = k > R / (R + d_f);
            cumulative = clipped ? clipped_area(radius, R, offset)
                                 : kPi * radius * radius;
        } else {
            cumulative = disk - bisector_segment_area(R, d_f);
        }
        const double s = settle(cumulative - inner_sum, -j);
        out.areas[static_cast<std::size_t>(t - j)] = s;
        inner_sum += s;
    }

    // FAP side: {ratio > 1/k_j} are the coverage-type circles, closed by the
    // bisector segment at j = t. The k_0 circle is the tagged FAP's coverage
    // and is excluded from the MBS region.
    double outer_sum = 0;
    for (int j = 0; j <= t; ++j) {
        double cumulative;
        if (j < t) {
            const Circle c = fap_coverage_circle(d_f, grid.level(j));
            const bool clipped = grid.level(j) > 1 - d_f / R;
            cumulative = clipped ? clipped_area(c.radius, R, c.center_x)
                                 : kPi * c.radius * c.radius;
        } else {
            cumulative = bisector_segment_area(R, d_f);
        }
        if (j == 0) {
            outer_sum = cumulative;
            continue;
        }
        const double s = settle(cumulative - outer_sum, j);
        out.areas[static_cast<std::size_t>(t + j)] = s;
        outer_sum += s;
    }

    for (double s : out.areas) out.total += s;
    out.probs.resize(out.areas.size());
    for (std::size_t i = 0; i < out.areas.size(); ++i) {
        out.probs[i] = out.areas[i] / out.total;
    }
    return out;
}

double monte_carlo_area(const std::function<bool(Point)>& predicate, double R,
                        std::uint64_t n_samples, std::uint64_t seed)
{
    if (n_samples == 0) {
        throw std::domain_error("monte_carlo_area needs at least one sample");
    }
    RngStream rng(seed);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < n_samples; ++i) {
        if (predicate(uniform_in_disk({0, 0}, R, rng))) ++hits;
    }
    return kPi * R * R * static_cast<double>(hits) / static_cast<double>(n_samples);
}

}  // namespace geometry
}  // namespace twotier
