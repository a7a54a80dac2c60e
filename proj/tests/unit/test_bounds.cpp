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

#include "twotier/bounds.hpp"
#include "twotier/stochastic.hpp"

using namespace twotier;
using namespace twotier::bounds;
using geometry::QuantizationGrid;

namespace {

double poisson_pmf(double mean, int k)
{
    return std::exp(k * std::log(mean) - mean - std::lgamma(k + 1.0));
}

// E[exp(-s (N - 1)) | N >= 1] by direct summation.
double shifted_series(double mean, double s, int terms)
{
    double sum = 0;
    for (int k = 1; k <= terms; ++k) sum += std::exp(-s * (k - 1)) * poisson_pmf(mean, k);
    return sum / -std::expm1(-mean);
}

}  // namespace

TEST(Bounds, FrozenLaplaceValues)
{
    SystemParams p;
    EXPECT_NEAR(laplace_n_fu(p, 1.0), 0.08354819485425458, 1e-13);
    EXPECT_NEAR(laplace_n_mu_fap(p, 1.0, 700), 0.861633992301032, 1e-13);
    EXPECT_NEAR(tau(p, 1.0), 1.1686039889165767, 1e-12);
    EXPECT_NEAR(fap_count_tail(p), 6.465746968181111e-43, 1e-52);
}

TEST(Bounds, ShiftedTransformMatchesSeries)
{
    SystemParams p;
    for (double d : {100.0, 500.0, 700.0, 990.0}) {
        for (double s : {0.0, 0.01, 0.5, 3.0}) {
            const double n = p.mean_mus_at_fap(d);
            EXPECT_NEAR(laplace_n_mu_fap_plus(p, s, d), shifted_series(n, s, 60), 1e-10)
                << d << ' ' << s;
        }
    }
}

TEST(Bounds, MbsUpperMatchesSeries)
{
    for (double T : {0.5, 2.0, 8.0, 50.0}) {
        SystemParams p;
        p.T = T;
        const double th = p.threshold_per_carrier();
        const double series = 1 - shifted_series(p.mean_mus(), std::log1p(th), 200);
        EXPECT_NEAR(outage_bounds_at_mbs(p).upper, series, 1e-10 * series) << T;
    }
}

TEST(Bounds, TransformProperties)
{
    SystemParams p;
    EXPECT_EQ(laplace_n_fu(p, 0), 1.0);
    EXPECT_EQ(laplace_n_mu_fap(p, 0, 700), 1.0);
    EXPECT_NEAR(laplace_n_mu_fap_plus(p, 0, 700), 1.0, 1e-15);
    EXPECT_EQ(tau(p, 0), 1.0);
    const auto at0 = laplace_n_mu_mbs_bounds(p, 0);
    EXPECT_EQ(at0.lower, 1.0);
    EXPECT_GE(at0.upper, 1.0);
    EXPECT_EQ(at0.upper_clamped, 1.0);

    double prev_fu = 1, prev_fap = 1, prev_lo = 1;
    for (double s = 0.05; s < 5; s += 0.05) {
        const double fu = laplace_n_fu(p, s);
        const double fap = laplace_n_mu_fap(p, s, 600);
        const auto mbs = laplace_n_mu_mbs_bounds(p, s);
        EXPECT_LT(fu, prev_fu);
        EXPECT_LT(fap, prev_fap);
        EXPECT_LT(mbs.lower, prev_lo);
        EXPECT_GT(fu, 0);
        EXPECT_LE(mbs.lower, mbs.upper);
        EXPECT_GE(tau(p, s), 1.0);
        const auto cond = laplace_n_mu_mbs_cond_bounds(p, s, 600);
        EXPECT_LE(cond.lower, cond.upper);
        prev_fu = fu;
        prev_fap = fap;
        prev_lo = mbs.lower;
    }
}

TEST(Bounds, QPairAtZeroIsOne)
{
    SystemParams p;
    const auto grid = QuantizationGrid::uniform(p.kappa, 8);
    const auto q = q_pair(p, 0, 700, grid);
    EXPECT_NEAR(q.lower, 1.0, 1e-12);
    EXPECT_NEAR(q.upper, 1.0, 1e-12);
}

TEST(Bounds, QPairBracketsSampledOracle)
{
    // Mean of 1/(1 + s' ratio^alpha) over the MBS region by rejection
    // sampling the macrocell disk.
    SystemParams p;
    const auto grid = QuantizationGrid::uniform(p.kappa, 16);
    for (double d : {200.0, 700.0}) {
        for (double s : {p.threshold_per_carrier(), 1.0, 10.0}) {
            const double scaled = s * p.sigma_sq / p.eta;
            RngStream rng(31);
            double sum = 0, sum_sq = 0;
            int kept = 0;
            for (int k = 0; k < 1000000; ++k) {
                const Point u = uniform_in_disk({0, 0}, p.R, rng);
                const double dm = std::hypot(u.x, u.y);
                const double df = std::hypot(u.x - d, u.y);
                if (df < p.kappa * dm) continue;  // tagged coverage
                const double v = 1 / (1 + scaled * std::pow(dm / df, p.alpha));
                sum += v;
                sum_sq += v * v;
                ++kept;
            }
            const double mean = sum / kept;
            const double se = std::sqrt((sum_sq / kept - mean * mean) / kept);
            const auto q = q_pair(p, s, d, grid);
            EXPECT_LE(q.lower, mean + 3 * se) << d << ' ' << s;
            EXPECT_GE(q.upper, mean - 3 * se) << d << ' ' << s;
            EXPECT_LE(q.lower, q.upper);
        }
    }
}

TEST(Bounds, QPairTightensUnderNestedRefinement)
{
    SystemParams p;
    for (double d : {300.0, 800.0}) {
        QPair prev{0, 2};
        for (int t : {2, 4, 8, 16, 32, 64}) {
            const auto q = q_pair(p, 0.5, d, QuantizationGrid::uniform(p.kappa, t));
            EXPECT_GE(q.lower, prev.lower) << t;
            EXPECT_LE(q.upper, prev.upper) << t;
            prev = q;
        }
        EXPECT_LT(prev.upper - prev.lower, 0.05);
    }
}

TEST(Bounds, OutageVanishesAtZeroThreshold)
{
    SystemParams p;
    p.T = 0;
    const auto grid = QuantizationGrid::uniform(p.kappa, 8);
    const auto fap = outage_bounds_at_fap(p, 700, grid);
    EXPECT_NEAR(fap.upper, 0.0, 1e-13);
    EXPECT_EQ(fap.lower_clamped, 0.0);
    const auto mbs = outage_bounds_at_mbs(p);
    EXPECT_NEAR(mbs.upper, 0.0, 1e-15);
    EXPECT_EQ(mbs.lower_clamped, 0.0);
    EXPECT_EQ(approx_outage_at_mbs(p), 0.0);
}

TEST(Bounds, FapUpperFactorizes)
{
    SystemParams p;
    const auto grid = QuantizationGrid::uniform(p.kappa, 32);
    for (double T : {0.5, 2.0, 8.0}) {
        p.T = T;
        for (double d : {150.0, 450.0, 900.0}) {
            const double s = std::log1p(p.threshold_per_carrier());
            const auto q = q_pair(p, p.threshold_per_carrier(), d, grid);
            const double product = laplace_n_fu(p, s) * laplace_n_mu_fap_plus(p, s, d) *
                                   laplace_n_mu_mbs_bounds(p, -std::log(q.lower)).lower;
            const double upper = outage_bounds_at_fap(p, d, grid).upper;
            EXPECT_NEAR(upper, 1 - product, 1e-10 * upper);
        }
    }
}

TEST(Bounds, AveragedBoundsConverge)
{
    SystemParams p;
    const auto grid = QuantizationGrid::uniform(p.kappa, 8);
    const auto coarse = avg_outage_bounds_at_fap(p, grid, 128);
    const auto fine = avg_outage_bounds_at_fap(p, grid, 256);
    EXPECT_LT(std::abs(coarse.upper_clamped - fine.upper_clamped), 1e-4);
    EXPECT_LT(std::abs(coarse.lower_clamped - fine.lower_clamped), 1e-4);

    double lo = 1, hi = 0;
    for (int k = 0; k < 256; ++k) {
        const double u = outage_bounds_at_fap(p, (k + 0.5) * p.R / 256, grid).upper_clamped;
        lo = std::min(lo, u);
        hi = std::max(hi, u);
    }
    EXPECT_GE(fine.upper_clamped, lo);
    EXPECT_LE(fine.upper_clamped, hi);
    EXPECT_THROW(avg_outage_bounds_at_fap(p, grid, 1), std::domain_error);
}

TEST(Bounds, ApproximationsTrackExact)
{
    SystemParams p;
    const auto grid = QuantizationGrid::uniform(p.kappa, 32);
    for (double T : {0.5, 2.0, 8.0}) {
        p.T = T;
        for (double d : {200.0, 500.0, 800.0}) {
            const auto exact = outage_bounds_at_fap(p, d, grid);
            const auto approx = approx_outage_at_fap(p, d, grid);
            EXPECT_NEAR(approx.upper, exact.upper, 0.02) << T << ' ' << d;
            EXPECT_NEAR(approx.lower, exact.lower_clamped, 0.02) << T << ' ' << d;
        }
        EXPECT_NEAR(approx_outage_at_mbs(p), outage_bounds_at_mbs(p).lower_clamped, 0.02);
    }
}

TEST(Bounds, NearMbsLimit)
{
    SystemParams p;
    const double th = p.threshold_per_carrier();
    const double x = th / (p.sigma_sq * p.eta);
    const double n_mu = p.mean_mus();
    const double fu = p.mean_fus() * th;
    const double d = 1.0;
    const auto near = approx_outage_at_fap_near_mbs(p, d);

    // With every ratio equal to 1, 1 - q is x / (1 + x); its linearization
    // x gives the closed form exactly.
    EXPECT_NEAR(near.upper, 1 - std::exp(-fu - n_mu * x), 1e-12);
    const double effective =
        n_mu - 0.5 * p.gamma() * p.mean_faps() * n_mu - p.mean_mus_at_fap(d);
    EXPECT_NEAR(near.lower, 1 - std::exp(-fu - x * effective), 1e-12);

    // The exact q leaves the second-order term n_mu x^2 / (1 + x).
    const double exact_q_upper = 1 - std::exp(-fu - n_mu * x / (1 + x));
    const double gap = (1 - exact_q_upper) * -std::expm1(-n_mu * x * x / (1 + x));
    EXPECT_NEAR(near.upper - exact_q_upper, gap, 1e-15);
    EXPECT_GT(gap, 1e-6);

    // The quantized form approaches the exact-q form as the grid refines.
    double prev = 1;
    for (int t : {64, 256, 1024}) {
        const auto approx = approx_outage_at_fap(p, d, QuantizationGrid::uniform(p.kappa, t));
        const double err = std::abs(approx.upper - exact_q_upper);
        EXPECT_LT(err, prev) << t;
        prev = err;
    }
    EXPECT_LT(prev, 1e-4);
}

TEST(Bounds, ApproxMbsIncreasesWithThreshold)
{
    SystemParams p;
    double prev = -1;
    for (double T = 0.25; T <= 16; T *= 1.5) {
        p.T = T;
        const double v = approx_outage_at_mbs(p);
        EXPECT_GT(v, prev);
        prev = v;
    }
}

TEST(Bounds, RawOrderingAcrossSweeps)
{
    const auto check = [](const SystemParams& p, double d) {
        const auto grid = QuantizationGrid::uniform(p.kappa, 16);
        const auto fap = outage_bounds_at_fap(p, d, grid);
        EXPECT_LE(fap.lower, fap.upper);
        EXPECT_LE(fap.lower_clamped, fap.upper_clamped);
        const auto mbs = outage_bounds_at_mbs(p);
        if (p.eta * std::pow(p.kappa, p.alpha) <= 1) {
            EXPECT_LE(mbs.lower, mbs.upper);
        }
    };
    for (double T : {0.5, 1.0, 2.0, 4.0, 8.0}) {
        for (double mu : {10e-6, 15e-6, 20e-6}) {
            SystemParams p;
            p.T = T;
            p.mu_m = mu;
            for (double d : {100.0, 400.0, 700.0, 950.0}) check(p, d);
        }
    }
    for (double kappa : {0.05, 0.1, 0.2, 0.3}) {
        SystemParams p;
        p.kappa = kappa;
        check(p, 600);
    }
}

TEST(Bounds, DomainErrors)
{
    SystemParams p;
    const auto grid = QuantizationGrid::uniform(p.kappa, 8);
    EXPECT_THROW(laplace_n_fu(p, -1), std::domain_error);
    EXPECT_THROW(laplace_n_mu_fap(p, 1, 0), std::domain_error);
    EXPECT_THROW(laplace_n_mu_fap(p, 1, p.R), std::domain_error);
    const auto areas = geometry::partition_areas(700, p.R, grid);
    EXPECT_THROW(q_pair(p, 1, areas, QuantizationGrid::uniform(p.kappa, 4)),
                 std::invalid_argument);

    SystemParams no_faps = p;
    no_faps.lambda_f = 0;
    EXPECT_THROW(outage_bounds_at_fap(no_faps, 700, grid), std::domain_error);
    EXPECT_THROW(laplace_n_mu_mbs_cond_bounds(no_faps, 1, 700), std::domain_error);
    EXPECT_EQ(fap_count_tail(no_faps), 0.0);

    SystemParams no_mus = p;
    no_mus.mu_m = 0;
    EXPECT_THROW(laplace_n_mu_fap_plus(no_mus, 1, 700), std::domain_error);
}
