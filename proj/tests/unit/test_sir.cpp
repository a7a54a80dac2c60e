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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "twotier/geometry.hpp"
#include "twotier/sir.hpp"

using namespace twotier;

namespace {

// Tagged FAP at (700, 0) with one FU and one handed-over MU.
NetworkRealization small_network()
{
    NetworkRealization net;
    net.faps = {{700, 0}};
    net.tagged_fap = 0;
    net.fus = {{{712, 0}}};
    net.mus = {{705, 3}, {-200, 50}, {300, -400}};
    net.serving = assign_users(net.faps, net.mus, 0.1);
    return net;
}

}  // namespace

TEST(Sir, HandEvaluatedFap)
{
    SystemParams p;
    const std::vector<Interferer> one = {{InterfererKind::kSameCellFu, {0, 0}, p.eta}};
    const std::vector<double> fading = {1.0};
    // (eta * 2 / n_s) / (eta * 1 / (n_s n_h)) = 2 n_h
    EXPECT_DOUBLE_EQ(sir_from_draws(p.eta, 2.0, one, fading, {}, p, CollisionMode::kExpected),
                     512.0);
}

TEST(Sir, HandEvaluatedMbs)
{
    SystemParams p;
    const std::vector<Interferer> one = {{InterfererKind::kMbsMu, {0, 0}, 1.0}};
    const std::vector<double> fading = {1.0};
    EXPECT_DOUBLE_EQ(sir_from_draws(1.0, 1.0, one, fading, {}, p, CollisionMode::kExpected),
                     256.0);
    const std::vector<std::uint8_t> hit = {1}, miss = {0};
    EXPECT_DOUBLE_EQ(sir_from_draws(1.0, 1.0, one, fading, hit, p, CollisionMode::kSampled),
                     1.0);
    EXPECT_EQ(sir_from_draws(1.0, 1.0, one, fading, miss, p, CollisionMode::kSampled),
              std::numeric_limits<double>::infinity());
}

TEST(Sir, NoInterferersIsInfinite)
{
    SystemParams p;
    EXPECT_EQ(sir_from_draws(1.0, 0.3, {}, {}, {}, p, CollisionMode::kExpected),
              std::numeric_limits<double>::infinity());
    const std::vector<Interferer> one = {{InterfererKind::kMbsMu, {0, 0}, 1.0}};
    EXPECT_THROW(sir_from_draws(1.0, 1.0, one, {}, {}, p, CollisionMode::kExpected),
                 std::invalid_argument);
}

TEST(Sir, SampledCollisionsMatchExpectedMean)
{
    SystemParams p;
    p.n_h = 4;
    const std::vector<Interferer> set = {{InterfererKind::kMbsMu, {0, 0}, 1.0},
                                         {InterfererKind::kMbsMu, {0, 0}, 0.5},
                                         {InterfererKind::kSameCellFu, {0, 0}, 3.0}};
    const std::vector<double> fading = {1.3, 0.2, 0.7};
    const double expected =
        1.0 / sir_from_draws(1.0, 1.0, set, fading, {}, p, CollisionMode::kExpected);
    RngStream rng(5);
    const int n = 200000;
    double sum = 0, sum_sq = 0;
    std::vector<std::uint8_t> hits(set.size());
    for (int k = 0; k < n; ++k) {
        for (auto& h : hits) h = rng.uniform() < 1.0 / p.n_h;
        const double v =
            1.0 / sir_from_draws(1.0, 1.0, set, fading, hits, p, CollisionMode::kSampled);
        sum += v;
        sum_sq += v * v;
    }
    const double mean = sum / n;
    const double se = std::sqrt((sum_sq / n - mean * mean) / n);
    EXPECT_NEAR(mean, expected, 4 * se);
}

TEST(Sir, InterferersAtFap)
{
    SystemParams p;
    const auto net = small_network();
    ASSERT_EQ(net.serving[0], Server::fap(0));
    const auto list = interferers_at_fap(net, 0, UserRef::macro(0), p, {});
    // the FU and the two MBS-served MUs
    ASSERT_EQ(list.size(), 3u);
    EXPECT_EQ(list[0].kind, InterfererKind::kSameCellFu);
    EXPECT_DOUBLE_EQ(list[0].gain, p.eta);
    const Point u = net.mus[1];
    const double expected = std::pow(std::hypot(u.x, u.y) / std::hypot(u.x - 700, u.y), 4);
    EXPECT_NEAR(list[1].gain, expected, 1e-12 * expected);

    const auto for_fu = interferers_at_fap(net, 0, UserRef::femto(0, 0), p, {});
    ASSERT_EQ(for_fu.size(), 3u);
    EXPECT_EQ(for_fu[0].kind, InterfererKind::kSameCellMu);

    EXPECT_THROW(interferers_at_fap(net, 0, UserRef::macro(1), p, {}), std::invalid_argument);
    EXPECT_THROW(interferers_at_fap(net, 0, UserRef::femto(0, 1), p, {}),
                 std::invalid_argument);
    EXPECT_THROW(interferers_at_mbs(net, UserRef::macro(0), p, {}), std::invalid_argument);
}

TEST(Sir, InterferersAtMbs)
{
    SystemParams p;
    const auto net = small_network();
    const auto list = interferers_at_mbs(net, UserRef::macro(1), p, {});
    ASSERT_EQ(list.size(), 2u);
    EXPECT_EQ(list[0].kind, InterfererKind::kOtherCellMu);
    EXPECT_DOUBLE_EQ(list[1].gain, 1.0);
    SirOptions with_fu;
    with_fu.include_fu_at_mbs = true;
    EXPECT_EQ(interferers_at_mbs(net, UserRef::macro(1), p, with_fu).size(), 3u);
}

TEST(Sir, PerRealizationGainBounds)
{
    // A FAP-served MU seen by the MBS is weaker than eta kappa^alpha, and an
    // MBS-served MU seen by the tagged FAP has a gain inside its quantized
    // ratio band.
    SystemParams p;
    const auto grid = geometry::QuantizationGrid::uniform(p.kappa, 8);
    const double cap = p.eta * std::pow(p.kappa, p.alpha);
    int checked = 0;
    for (std::uint64_t k = 0; k < 200; ++k) {
        RngStream rng(21, k);
        const auto net = build_realization(p, 650.0, rng);
        const auto mbs_users = net.users_of(Server::mbs());
        if (mbs_users.empty()) continue;
        for (const auto& i : interferers_at_mbs(net, UserRef::macro(mbs_users[0]), p, {})) {
            if (i.kind == InterfererKind::kOtherCellMu) {
                EXPECT_LT(i.gain, cap);
                ++checked;
            }
        }
        for (std::size_t m : mbs_users) {
            const Point u = net.mus[m];
            const double ratio = distance_to_mbs(u) / distance(u, net.faps[0]);
            const auto index = geometry::region_index(ratio, grid);
            ASSERT_TRUE(index.has_value());
            const auto band = geometry::quantized_ratio(*index, grid);
            EXPECT_LE(band.lower, ratio);
            EXPECT_LE(ratio, band.upper);
            const double gain = std::pow(ratio, p.alpha);
            EXPECT_LE(std::pow(band.lower, p.alpha), gain * (1 + 1e-12));
            EXPECT_LE(gain, std::pow(band.upper, p.alpha) * (1 + 1e-12));
        }
    }
    EXPECT_GT(checked, 0);
}

TEST(Sir, ScaleInvariance)
{
    SystemParams p;
    const auto net = small_network();
    NetworkRealization scaled = net;
    const double c = 3.7;
    for (auto& f : scaled.faps) f = {f.x * c, f.y * c};
    for (auto& u : scaled.mus) u = {u.x * c, u.y * c};
    for (auto& ring : scaled.fus) {
        for (auto& u : ring) u = {u.x * c, u.y * c};
    }
    SirOptions all;
    all.include_cross_femto = true;
    all.include_fu_at_mbs = true;
    const auto a = interferers_at_fap(net, 0, UserRef::macro(0), p, all);
    const auto b = interferers_at_fap(scaled, 0, UserRef::macro(0), p, all);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        EXPECT_NEAR(a[k].gain, b[k].gain, 1e-12 * a[k].gain);
    }
    RngStream r1(4), r2(4);
    EXPECT_DOUBLE_EQ(sir_user_at_fap(net, 0, UserRef::macro(0), p, all, r1).value,
                     sir_user_at_fap(scaled, 0, UserRef::macro(0), p, all, r2).value);
}

TEST(Sir, SampleCarriesServer)
{
    SystemParams p;
    const auto net = small_network();
    RngStream rng(1);
    const auto at_fap = sir_user_at_fap(net, 0, UserRef::macro(0), p, {}, rng);
    EXPECT_EQ(at_fap.serving, Server::fap(0));
    EXPECT_GT(at_fap.value, 0);
    const auto at_mbs = sir_mu_at_mbs(net, UserRef::macro(2), p, {}, rng);
    EXPECT_TRUE(at_mbs.serving.is_mbs());
    EXPECT_FALSE(at_mbs.is_outage(0.0));
}
