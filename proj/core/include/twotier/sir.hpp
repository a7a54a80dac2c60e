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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "twotier/network.hpp"
#include "twotier/params.hpp"
#include "twotier/stochastic.hpp"

namespace twotier {

/// How carrier collisions between MCFH users are modeled.
enum class CollisionMode {
    /// Every interferer contributes its mean share, power / G.
    kExpected,
    /// Each interferer lands on the target's carrier with probability 1/n_h
    /// and then contributes power / n_s.
    kSampled,
};

struct SirOptions {
    CollisionMode collision = CollisionMode::kExpected;
    /// Users of other femtocells interfere at a FAP.
    bool include_cross_femto = false;
    /// FUs interfere at the MBS.
    bool include_fu_at_mbs = false;
};

/// A user addressed inside a realization.
struct UserRef {
    enum class Kind { kMacro, kFemto };

    Kind kind = Kind::kMacro;
    std::size_t index = 0;  ///< into mus, or into fus[fap]
    std::size_t fap = 0;    ///< owning FAP for femto users

    static UserRef macro(std::size_t index) { return {Kind::kMacro, index, 0}; }
    static UserRef femto(std::size_t fap, std::size_t index)
    {
        return {Kind::kFemto, index, fap};
    }
};

enum class InterfererKind {
    kSameCellFu,    ///< FU of the receiving FAP
    kSameCellMu,    ///< MU handed to the receiving FAP
    kMbsMu,         ///< MU served by the MBS
    kOtherCellMu,   ///< MU served by another FAP
    kOtherCellFu,   ///< FU of another FAP
};

/// One interfering transmitter as seen by a receiver. `gain` is the mean
/// received power before fading and carrier sharing, in units of P_m.
struct Interferer {
    InterfererKind kind;
    Point position;
    double gain;
};

struct SirSample {
    double value = 0;  ///< +infinity when nothing interferes
    Server serving = Server::mbs();
    int subband = 0;

    bool is_outage(double threshold) const { return value < threshold; }
};

/// Interferers at `fap` for a target user it serves. Throws
/// std::invalid_argument if `target` is not served by `fap`.
std::vector<Interferer> interferers_at_fap(const NetworkRealization& net,
                                           std::size_t fap, UserRef target,
                                           const SystemParams& params,
                                           const SirOptions& options);

/// Interferers at the MBS for an MBS-served MU. Throws std::invalid_argument
/// if `target` is not a macro user served by the MBS.
std::vector<Interferer> interferers_at_mbs(const NetworkRealization& net,
                                           UserRef target,
                                           const SystemParams& params,
                                           const SirOptions& options);

/// SIR from explicit draws. `hits[k]` marks a carrier collision and is only
/// read in sampled mode.
double sir_from_draws(double signal_gain, double signal_fading,
                      std::span<const Interferer> interferers,
                      std::span<const double> fadings,
                      std::span<const std::uint8_t> hits,
                      const SystemParams& params, CollisionMode mode);

/// Uplink SIR of a user served by a FAP, evaluated on subband 0 with fresh
/// fading.
SirSample sir_user_at_fap(const NetworkRealization& net, std::size_t fap,
                          UserRef target, const SystemParams& params,
                          const SirOptions& options, RngStream& rng);

/// Uplink SIR of an MBS-served MU, evaluated on subband 0 with fresh fading.
SirSample sir_mu_at_mbs(const NetworkRealization& net, UserRef target,
                        const SystemParams& params, const SirOptions& options,
                        RngStream& rng);

}  // namespace twotier
