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

#include <array>
#include <cstdint>
#include <limits>
#include <vector>

#include "twotier/geometry.hpp"

namespace twotier {

/// Philox4x32-10 block function (Salmon et al., SC'11).
///
/// Maps a 128-bit counter and a 64-bit key to 128 pseudo-random bits. Pure
/// function of its inputs, which is what makes per-trial streams independent
/// of scheduling.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

/// A reproducible random stream addressed by (master_seed, stream_index,
/// substream).
///
/// The draw sequence depends only on those three values, so trial `k` of a
/// Monte Carlo run sees the same numbers whether it runs first, last, or on
/// another thread. Satisfies UniformRandomBitGenerator.
class RngStream {
public:
    using result_type = std::uint64_t;

    explicit RngStream(std::uint64_t master_seed, std::uint64_t stream_index = 0,
                       std::uint32_t substream = 0);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max()
    {
        return std::numeric_limits<result_type>::max();
    }
    result_type operator()();

    /// Independent stream sharing the seed and index, keyed by `substream`.
    RngStream split(std::uint32_t substream) const;

    std::uint64_t master_seed() const { return seed_; }
    std::uint64_t stream_index() const { return index_; }
    std::uint32_t substream() const { return substream_; }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Uniform on (0, 1].
    double uniform_pos();
    double exponential(double mean);
    std::uint64_t poisson(double mean);
    /// Poisson(mean) conditioned on being at least one. Requires mean > 0.
    std::uint64_t poisson_at_least_one(double mean);

private:
    void refill();

    std::uint64_t seed_;
    std::uint64_t index_;
    std::uint32_t substream_;
    std::uint32_t block_ = 0;
    std::array<std::uint32_t, 4> buffer_{};
    int used_ = 4;
};

/// Uniform point on the disk of radius `R` centered at `center`, by
/// inverse CDF (r = R sqrt(u)).
Point uniform_in_disk(Point center, double R, RngStream& rng);
/// Uniform point on the annulus r_in <= r <= r_out around `center`.
Point uniform_in_annulus(Point center, double r_in, double r_out, RngStream& rng);

/// PPP of the given density on the origin-centered disk of radius R.
std::vector<Point> sample_ppp_disk(double density, double R, RngStream& rng);

/// PPP restricted to the ring of inner radius r_f and width delta around
/// `center`.
std::vector<Point> sample_ppp_ring(double density, Point center, double r_f,
                                   double delta, RngStream& rng);

/// Rayleigh power gain |h|^2 ~ Exp(mean sigma_sq).
double sample_fading_power(double sigma_sq, RngStream& rng);

}  // namespace twotier
