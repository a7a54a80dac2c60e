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
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "twotier/geometry.hpp"
#include "twotier/params.hpp"
#include "twotier/stochastic.hpp"

namespace twotier {

/// Serving station of a macro user: the MBS or a FAP by index.
class Server {
public:
    static constexpr Server mbs() { return Server(kMbs); }
    static constexpr Server fap(std::size_t index) { return Server(index); }

    constexpr bool is_mbs() const { return index_ == kMbs; }
    /// Undefined for the MBS.
    constexpr std::size_t fap_index() const { return index_; }

    friend constexpr bool operator==(Server, Server) = default;

private:
    static constexpr std::size_t kMbs = static_cast<std::size_t>(-1);
    constexpr explicit Server(std::size_t index) : index_(index) {}
    std::size_t index_;
};

/// How a FAP pinned at distance d_f relates to the FAP point process.
enum class TaggedFapModel {
    /// The pinned FAP is one of the process's points: the FAP count is
    /// Poisson conditioned on at least one, and the other count - 1 FAPs are
    /// uniform on the disk.
    kMemberOfProcess,
    /// The pinned FAP is added on top of an unconditioned PPP (Palm view).
    kSuperposed,
};

/// One sampled network. The MBS sits at the origin.
struct NetworkRealization {
    std::vector<Point> faps;
    std::optional<std::size_t> tagged_fap;
    std::vector<Point> mus;
    std::vector<std::vector<Point>> fus;  ///< fus[i] belong to faps[i]
    std::vector<Server> serving;          ///< serving[k] serves mus[k]

    /// Indices of the MUs served by `server`.
    std::vector<std::size_t> users_of(Server server) const;
};

struct UserCounts {
    std::uint64_t n_fu_tagged = 0;  ///< FUs of the tagged FAP
    std::uint64_t n_mu_tagged = 0;  ///< MUs handed to the tagged FAP
    std::uint64_t n_mu_mbs = 0;     ///< MUs kept by the MBS
};

/// Distance to the MBS, floored at 1e-9 m.
double distance_to_mbs(Point p);

/// Open-access rule: nearest FAP if d(u, FAP) < kappa * d(u, MBS), else the
/// MBS. Ties go to the MBS.
std::vector<Server> assign_users(std::span<const Point> faps,
                                 std::span<const Point> mus, double kappa);

/// Samples FAPs, MUs and per-FAP FUs, then applies the access rule. With
/// `d_f` set, a tagged FAP is pinned at (d_f, 0); requires 0 < d_f < R.
NetworkRealization build_realization(const SystemParams& params,
                                     std::optional<double> d_f, RngStream& rng,
                                     TaggedFapModel model = TaggedFapModel::kMemberOfProcess);

/// Same law as build_realization(params, d_f) conditioned on at least one MU
/// falling inside the tagged FAP's coverage circle (clipped to the disk).
/// Every realization where the tagged FAP serves an MU satisfies that
/// event, so rejecting the draws where it serves none yields exact
/// conditioning on "tagged FAP serves >= 1 MU". Throws std::domain_error
/// when the coverage circle carries no MU mass (kappa = 0 or mu_m = 0).
NetworkRealization build_realization_with_covered_mu(
    const SystemParams& params, double d_f, RngStream& rng,
    TaggedFapModel model = TaggedFapModel::kMemberOfProcess);

/// Same law as build_realization(params, d_f) conditioned on the tagged FAP
/// having at least one FU. Throws std::domain_error when mu_f = 0.
NetworkRealization build_realization_with_tagged_fu(
    const SystemParams& params, double d_f, RngStream& rng,
    TaggedFapModel model = TaggedFapModel::kMemberOfProcess);

UserCounts user_counts(const NetworkRealization& realization);

/// Debug dump with columns entity_type,x,y,fap_index,serving.
void write_realization_csv(std::ostream& out, const NetworkRealization& realization);

}  // namespace twotier
