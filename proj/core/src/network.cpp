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

#include "twotier/network.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace twotier {

namespace {

constexpr double kMinDistance = 1e-9;

void require_tagged_distance(const SystemParams& params, double d_f)
{
    if (!(d_f > 0) || !(d_f < params.R)) {
        throw std::domain_error("tagged FAP distance d_f must lie in (0, R)");
    }
}

std::vector<Point> sample_faps(const SystemParams& params, std::optional<double> d_f,
                               TaggedFapModel model, RngStream& rng)
{
    if (!d_f) {
        return sample_ppp_disk(params.lambda_f, params.R, rng);
    }
    const double mean = params.mean_faps();
    std::uint64_t others = 0;
    if (model == TaggedFapModel::kSuperposed) {
        others = rng.poisson(mean);
    } else if (mean > 0) {
        others = rng.poisson_at_least_one(mean) - 1;
    }
    std::vector<Point> faps;
    faps.reserve(others + 1);
    faps.push_back({*d_f, 0.0});
    for (std::uint64_t i = 0; i < others; ++i) {
        faps.push_back(uniform_in_disk({0, 0}, params.R, rng));
    }
    return faps;
}

void sample_fus(const SystemParams& params, NetworkRealization& net, RngStream& rng,
                bool tagged_at_least_one)
{
    net.fus.resize(net.faps.size());
    const double outer = params.ring_outer_radius();
    for (std::size_t i = 0; i < net.faps.size(); ++i) {
        if (tagged_at_least_one && net.tagged_fap == i) {
            const auto n = rng.poisson_at_least_one(params.mean_fus());
            auto& ring = net.fus[i];
            ring.reserve(n);
            for (std::uint64_t k = 0; k < n; ++k) {
                ring.push_back(uniform_in_annulus(net.faps[i], params.r_f, outer, rng));
            }
        } else {
            net.fus[i] = sample_ppp_ring(params.mu_f, net.faps[i], params.r_f,
                                         params.delta, rng);
        }
    }
}

}  // namespace

std::vector<std::size_t> NetworkRealization::users_of(Server server) const
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < serving.size(); ++k) {
        if (serving[k] == server) out.push_back(k);
    }
    return out;
}

double distance_to_mbs(Point p)
{
    return std::max(std::sqrt(p.x * p.x + p.y * p.y), kMinDistance);
}

std::vector<Server> assign_users(std::span<const Point> faps,
                                 std::span<const Point> mus, double kappa)
{
    if (!(kappa >= 0 && kappa < 1)) {
        throw std::domain_error("assign_users requires 0 <= kappa < 1");
    }
    std::vector<Server> serving;
    serving.reserve(mus.size());
    for (const Point& u : mus) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t nearest = 0;
        for (std::size_t i = 0; i < faps.size(); ++i) {
            const double dx = u.x - faps[i].x;
            const double dy = u.y - faps[i].y;
            const double d2 = dx * dx + dy * dy;
            if (d2 < best) {
                best = d2;
                nearest = i;
            }
        }
        const double reach = kappa * distance_to_mbs(u);
        if (!faps.empty() && best < reach * reach) {
            serving.push_back(Server::fap(nearest));
        } else {
            serving.push_back(Server::mbs());
        }
    }
    return serving;
}

NetworkRealization build_realization(const SystemParams& params,
                                     std::optional<double> d_f, RngStream& rng,
                                     TaggedFapModel model)
{
    if (d_f) require_tagged_distance(params, *d_f);
    NetworkRealization net;
    net.faps = sample_faps(params, d_f, model, rng);
    if (d_f) net.tagged_fap = 0;
    net.mus = sample_ppp_disk(params.mu_m, params.R, rng);
    sample_fus(params, net, rng, false);
    net.serving = assign_users(net.faps, net.mus, params.kappa);
    return net;
}

NetworkRealization build_realization_with_covered_mu(const SystemParams& params,
                                                     double d_f, RngStream& rng,
                                                     TaggedFapModel model)
{
    require_tagged_distance(params, d_f);
    if (!(params.kappa > 0) || !(params.mu_m > 0)) {
        throw std::domain_error(
            "conditioning on a covered MU needs kappa > 0 and mu_m > 0");
    }
    const geometry::Circle cover = geometry::fap_coverage_circle(d_f, params.kappa);
    const double covered_area =
        std::numbers::pi * cover.radius * cover.radius -
        geometry::circle_outside_area(cover.radius, params.R, cover.center_x);

    NetworkRealization net;
    net.faps = sample_faps(params, d_f, model, rng);
    net.tagged_fap = 0;

    // Independent PPP pieces: the disk outside the coverage circle, and a
    // zero-truncated count inside it.
    for (const Point& p : sample_ppp_disk(params.mu_m, params.R, rng)) {
        if (!cover.contains(p)) net.mus.push_back(p);
    }
    const auto inside = rng.poisson_at_least_one(params.mu_m * covered_area);
    for (std::uint64_t k = 0; k < inside;) {
        const Point p =
            uniform_in_disk({cover.center_x, cover.center_y}, cover.radius, rng);
        if (p.x * p.x + p.y * p.y <= params.R * params.R) {
            net.mus.push_back(p);
            ++k;
        }
    }
    sample_fus(params, net, rng, false);
    net.serving = assign_users(net.faps, net.mus, params.kappa);
    return net;
}

NetworkRealization build_realization_with_tagged_fu(const SystemParams& params,
                                                    double d_f, RngStream& rng,
                                                    TaggedFapModel model)
{
    require_tagged_distance(params, d_f);
    if (!(params.mean_fus() > 0)) {
        throw std::domain_error("conditioning on a tagged FU needs mu_f > 0");
    }
    NetworkRealization net;
    net.faps = sample_faps(params, d_f, model, rng);
    net.tagged_fap = 0;
    net.mus = sample_ppp_disk(params.mu_m, params.R, rng);
    sample_fus(params, net, rng, true);
    net.serving = assign_users(net.faps, net.mus, params.kappa);
    return net;
}

UserCounts user_counts(const NetworkRealization& net)
{
    UserCounts counts;
    if (net.tagged_fap) {
        counts.n_fu_tagged = net.fus.at(*net.tagged_fap).size();
    }
    for (const Server& s : net.serving) {
        if (s.is_mbs()) {
            ++counts.n_mu_mbs;
        } else if (net.tagged_fap && s.fap_index() == *net.tagged_fap) {
            ++counts.n_mu_tagged;
        }
    }
    return counts;
}

void write_realization_csv(std::ostream& out, const NetworkRealization& net)
{
    out << "entity_type,x,y,fap_index,serving\n";
    out << "mbs,0,0,,\n";
    for (std::size_t i = 0; i < net.faps.size(); ++i) {
        out << (net.tagged_fap == i ? "fap_tagged" : "fap") << ',' << net.faps[i].x
            << ',' << net.faps[i].y << ',' << i << ",\n";
    }
    for (std::size_t k = 0; k < net.mus.size(); ++k) {
        out << "mu," << net.mus[k].x << ',' << net.mus[k].y << ",,";
        if (net.serving[k].is_mbs()) {
            out << "mbs\n";
        } else {
            out << "fap" << net.serving[k].fap_index() << '\n';
        }
    }
    for (std::size_t i = 0; i < net.fus.size(); ++i) {
        for (const Point& p : net.fus[i]) {
            out << "fu," << p.x << ',' << p.y << ',' << i << ",fap" << i << '\n';
        }
    }
}

}  // namespace twotier
