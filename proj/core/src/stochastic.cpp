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

#include "twotier/stochastic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace twotier {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                    std::uint32_t& lo)
{
    const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(product >> 32);
    lo = static_cast<std::uint32_t>(product);
}

// Poisson via transformed rejection with squeeze (Hormann 1993, "PTRS").
// Valid for mean >= 10.
std::uint64_t poisson_ptrs(double mean, RngStream& rng)
{
    const double slam = std::sqrt(mean);
    const double loglam = std::log(mean);
    const double b = 0.931 + 2.53 * slam;
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double vr = 0.9277 - 3.6224 / (b - 2.0);

    for (;;) {
        const double U = rng.uniform() - 0.5;
        const double V = rng.uniform();
        const double us = 0.5 - std::abs(U);
        const double k = std::floor((2.0 * a / us + b) * U + mean + 0.43);
        if (us >= 0.07 && V <= vr) {
            return static_cast<std::uint64_t>(k);
        }
        if (k < 0 || (us < 0.013 && V > us)) {
            continue;
        }
        if (std::log(V) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
            -mean + k * loglam - std::lgamma(k + 1)) {
            return static_cast<std::uint64_t>(k);
        }
    }
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key)
{
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            key[0] += kPhiloxW0;
            key[1] += kPhiloxW1;
        }
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kPhiloxM0, ctr[0], hi0, lo0);
        mulhilo(kPhiloxM1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
}

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index,
                     std::uint32_t substream)
    : seed_(master_seed), index_(stream_index), substream_(substream)
{
}

RngStream RngStream::split(std::uint32_t substream) const
{
    return RngStream(seed_, index_, substream);
}

void RngStream::refill()
{
    if (block_ == std::numeric_limits<std::uint32_t>::max()) {
        throw std::length_error("RngStream exhausted");
    }
    const std::array<std::uint32_t, 4> counter = {
        block_, substream_, static_cast<std::uint32_t>(index_),
        static_cast<std::uint32_t>(index_ >> 32)};
    const std::array<std::uint32_t, 2> key = {
        static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32)};
    buffer_ = philox4x32_10(counter, key);
    ++block_;
    used_ = 0;
}

RngStream::result_type RngStream::operator()()
{
    if (used_ >= 4) {
        refill();
    }
    const std::uint64_t hi = buffer_[used_];
    const std::uint64_t lo = buffer_[used_ + 1];
    used_ += 2;
    return (hi << 32) | lo;
}

double RngStream::uniform()
{
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

double RngStream::uniform_pos()
{
    return (static_cast<double>((*this)() >> 11) + 1.0) * 0x1.0p-53;
}

double RngStream::exponential(double mean)
{
    return -mean * std::log(uniform_pos());
}

std::uint64_t RngStream::poisson(double mean)
{
    if (!(mean >= 0) || !std::isfinite(mean)) {
        throw std::domain_error("poisson mean must be finite and >= 0");
    }
    if (mean == 0) {
        return 0;
    }
    if (mean >= 10) {
        return poisson_ptrs(mean, *this);
    }
    // Multiplication method.
    const double limit = std::exp(-mean);
    std::uint64_t k = 0;
    double prod = uniform_pos();
    while (prod > limit) {
        ++k;
        prod *= uniform_pos();
    }
    return k;
}

std::uint64_t RngStream::poisson_at_least_one(double mean)
{
    if (!(mean > 0) || !std::isfinite(mean)) {
        throw std::domain_error("zero-truncated poisson needs mean > 0");
    }
    if (mean >= 10) {
        for (;;) {
            const auto k = poisson(mean);
            if (k >= 1) return k;
        }
    }
    // Inversion starting at k = 1 with pmf(1) = mean / (e^mean - 1).
    const double u = uniform();
    double pmf = mean / std::expm1(mean);
    double cdf = pmf;
    std::uint64_t k = 1;
    while (u >= cdf && pmf > 0) {
        ++k;
        pmf *= mean / static_cast<double>(k);
        cdf += pmf;
    }
    return k;
}

Point uniform_in_disk(Point center, double R, RngStream& rng)
{
    const double r = R * std::sqrt(rng.uniform());
    const double theta = 2.0 * std::numbers::pi * rng.uniform();
    return {center.x + r * std::cos(theta), center.y + r * std::sin(theta)};
}

Point uniform_in_annulus(Point center, double r_in, double r_out, RngStream& rng)
{
    const double in2 = r_in * r_in;
    const double r = std::sqrt(in2 + (r_out * r_out - in2) * rng.uniform());
    const double theta = 2.0 * std::numbers::pi * rng.uniform();
    return {center.x + r * std::cos(theta), center.y + r * std::sin(theta)};
}

std::vector<Point> sample_ppp_disk(double density, double R, RngStream& rng)
{
    const auto n = rng.poisson(std::numbers::pi * R * R * density);
    std::vector<Point> points;
    points.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        points.push_back(uniform_in_disk({0, 0}, R, rng));
    }
    return points;
}

std::vector<Point> sample_ppp_ring(double density, Point center, double r_f,
                                   double delta, RngStream& rng)
{
    const double outer = r_f + delta;
    const auto n =
        rng.poisson(std::numbers::pi * (outer * outer - r_f * r_f) * density);
    std::vector<Point> points;
    points.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        points.push_back(uniform_in_annulus(center, r_f, outer, rng));
    }
    return points;
}

double sample_fading_power(double sigma_sq, RngStream& rng)
{
    return rng.exponential(sigma_sq);
}

}  // namespace twotier
