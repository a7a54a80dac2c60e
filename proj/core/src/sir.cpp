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

#include "twotier/sir.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace twotier {

namespace {

double squared_distance(Point a, Point b)
{
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

// (d_num / d_den)^alpha from squared distances, both floored at 1e-9 m.
double ratio_power(double num_sq, double den_sq, double alpha)
{
    constexpr double kFloor = 1e-18;
    const double ratio = std::max(num_sq, kFloor) / std::max(den_sq, kFloor);
    if (alpha == 4.0) return ratio * ratio;
    return std::pow(ratio, 0.5 * alpha);
}

constexpr Point kOrigin{0.0, 0.0};

SirSample draw_and_evaluate(double signal_gain, std::span<const Interferer> interferers,
                            Server serving, const SystemParams& params,
                            CollisionMode mode, RngStream& rng)
{
    const double signal_fading = sample_fading_power(params.sigma_sq, rng);
    std::vector<double> fadings(interferers.size());
    std::vector<std::uint8_t> hits(interferers.size(), 1);
    const double hit_probability = 1.0 / params.n_h;
    for (std::size_t k = 0; k < interferers.size(); ++k) {
        fadings[k] = sample_fading_power(params.sigma_sq, rng);
        if (mode == CollisionMode::kSampled) {
            hits[k] = rng.uniform() < hit_probability ? 1 : 0;
        }
    }
    SirSample sample;
    sample.value = sir_from_draws(signal_gain, signal_fading, interferers, fadings,
                                  hits, params, mode);
    sample.serving = serving;
    return sample;
}

}  // namespace

std::vector<Interferer> interferers_at_fap(const NetworkRealization& net,
                                           std::size_t fap, UserRef target,
                                           const SystemParams& params,
                                           const SirOptions& options)
{
    if (fap >= net.faps.size()) {
        throw std::invalid_argument("FAP index out of range");
    }
    const bool served = target.kind == UserRef::Kind::kFemto
                            ? target.fap == fap && target.index < net.fus.at(fap).size()
                            : target.index < net.mus.size() &&
                                  net.serving[target.index] == Server::fap(fap);
    if (!served) {
        throw std::invalid_argument("target user is not served by this FAP");
    }

    const Point receiver = net.faps[fap];
    const double eta = params.eta;
    std::vector<Interferer> out;
    out.reserve(net.mus.size() + net.fus[fap].size());

    for (std::size_t k = 0; k < net.fus[fap].size(); ++k) {
        if (target.kind == UserRef::Kind::kFemto && target.index == k) continue;
        out.push_back({InterfererKind::kSameCellFu, net.fus[fap][k], eta});
    }
    for (std::size_t k = 0; k < net.mus.size(); ++k) {
        const Point u = net.mus[k];
        const Server s = net.serving[k];
        if (s.is_mbs()) {
            // Power-controlled toward the MBS: P_m d(u,MBS)^a / d(u,FAP)^a.
            out.push_back({InterfererKind::kMbsMu, u,
                           ratio_power(squared_distance(u, kOrigin), squared_distance(u, receiver),
                                       params.alpha)});
        } else if (s.fap_index() == fap) {
            if (target.kind == UserRef::Kind::kMacro && target.index == k) continue;
            out.push_back({InterfererKind::kSameCellMu, u, eta});
        } else if (options.include_cross_femto) {
            const Point home = net.faps[s.fap_index()];
            out.push_back({InterfererKind::kOtherCellMu, u,
                           eta * ratio_power(squared_distance(u, home), squared_distance(u, receiver),
                                             params.alpha)});
        }
    }
    if (options.include_cross_femto) {
        for (std::size_t i = 0; i < net.fus.size(); ++i) {
            if (i == fap) continue;
            for (const Point& p : net.fus[i]) {
                out.push_back({InterfererKind::kOtherCellFu, p,
                               eta * ratio_power(squared_distance(p, net.faps[i]),
                                                 squared_distance(p, receiver), params.alpha)});
            }
        }
    }
    return out;
}

std::vector<Interferer> interferers_at_mbs(const NetworkRealization& net,
                                           UserRef target,
                                           const SystemParams& params,
                                           const SirOptions& options)
{
    if (target.kind != UserRef::Kind::kMacro || target.index >= net.mus.size() ||
        !net.serving[target.index].is_mbs()) {
        throw std::invalid_argument("target user is not an MBS-served macro user");
    }
    const double eta = params.eta;
    std::vector<Interferer> out;
    out.reserve(net.mus.size());
    for (std::size_t k = 0; k < net.mus.size(); ++k) {
        if (k == target.index) continue;
        const Point u = net.mus[k];
        const Server s = net.serving[k];
        if (s.is_mbs()) {
            out.push_back({InterfererKind::kMbsMu, u, 1.0});
        } else {
            const Point home = net.faps[s.fap_index()];
            out.push_back({InterfererKind::kOtherCellMu, u,
                           eta * ratio_power(squared_distance(u, home), squared_distance(u, kOrigin),
                                             params.alpha)});
        }
    }
    if (options.include_fu_at_mbs) {
        for (std::size_t i = 0; i < net.fus.size(); ++i) {
            for (const Point& p : net.fus[i]) {
                out.push_back({InterfererKind::kOtherCellFu, p,
                               eta * ratio_power(squared_distance(p, net.faps[i]),
                                                 squared_distance(p, kOrigin), params.alpha)});
            }
        }
    }
    return out;
}

double sir_from_draws(double signal_gain, double signal_fading,
                      std::span<const Interferer> interferers,
                      std::span<const double> fadings,
                      std::span<const std::uint8_t> hits,
                      const SystemParams& params, CollisionMode mode)
{
    if (fadings.size() != interferers.size() ||
        (mode == CollisionMode::kSampled && hits.size() != interferers.size())) {
        throw std::invalid_argument("one fading draw per interferer is required");
    }
    // Signal occupies one carrier of the subband: power / n_s.
    const double signal = signal_gain * signal_fading / params.n_s;
    double interference = 0;
    if (mode == CollisionMode::kExpected) {
        const double share = 1.0 / params.processing_gain();
        for (std::size_t k = 0; k < interferers.size(); ++k) {
            interference += interferers[k].gain * fadings[k] * share;
        }
    } else {
        const double share = 1.0 / params.n_s;
        for (std::size_t k = 0; k < interferers.size(); ++k) {
            if (hits[k]) interference += interferers[k].gain * fadings[k] * share;
        }
    }
    if (interference <= 0) {
        return std::numeric_limits<double>::infinity();
    }
    return signal / interference;
}

SirSample sir_user_at_fap(const NetworkRealization& net, std::size_t fap,
                          UserRef target, const SystemParams& params,
                          const SirOptions& options, RngStream& rng)
{
    const auto interferers = interferers_at_fap(net, fap, target, params, options);
    return draw_and_evaluate(params.eta, interferers, Server::fap(fap), params,
                             options.collision, rng);
}

SirSample sir_mu_at_mbs(const NetworkRealization& net, UserRef target,
                        const SystemParams& params, const SirOptions& options,
                        RngStream& rng)
{
    const auto interferers = interferers_at_mbs(net, target, params, options);
    return draw_and_evaluate(1.0, interferers, Server::mbs(), params,
                             options.collision, rng);
}

}  // namespace twotier
