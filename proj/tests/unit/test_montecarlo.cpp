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
#include "twotier/montecarlo.hpp"

using namespace twotier;
using namespace twotier::mc;

namespace {

McOptions quick(std::uint64_t trials, std::uint64_t seed = 1)
{
    McOptions o;
    o.trials = trials;
    o.seed = seed;
    return o;
}

double joint_se(const OutageEstimate& a, const OutageEstimate& b)
{
    return std::hypot(a.std_error, b.std_error);
}

}  // namespace

TEST(MonteCarlo, ZeroThresholdNeverOutage)
{
    SystemParams p;
    p.T = 0;
    EXPECT_EQ(estimate_outage_at_fap(p, 700, quick(500)).outages, 0u);
    EXPECT_EQ(estimate_outage_at_mbs(p, quick(500)).outages, 0u);
    EXPECT_EQ(estimate_outage_fu_at_fap(p, 700, quick(500)).outages, 0u);
}

TEST(MonteCarlo, ThreadCountDoesNotChangeResults)
{
    SystemParams p;
    auto one = quick(3000, 9);
    auto many = one;
    many.threads = 4;
    const auto a = estimate_outage_at_fap(p, 500, one);
    const auto b = estimate_outage_at_fap(p, 500, many);
    EXPECT_EQ(a.outages, b.outages);
    EXPECT_EQ(a.attempts, b.attempts);
    EXPECT_EQ(a.p_hat, b.p_hat);
    EXPECT_EQ(estimate_outage_at_mbs(p, one).outages, estimate_outage_at_mbs(p, many).outages);
    EXPECT_EQ(estimate_laplace_nm_bm(p, 0.1, 700.0, one).mean,
              estimate_laplace_nm_bm(p, 0.1, 700.0, many).mean);
}

TEST(MonteCarlo, SeedChangesResults)
{
    SystemParams p;
    EXPECT_NE(estimate_laplace_nm_bm(p, 0.1, std::nullopt, quick(2000, 1)).mean,
              estimate_laplace_nm_bm(p, 0.1, std::nullopt, quick(2000, 2)).mean);
}

TEST(MonteCarlo, BinomialStandardError)
{
    EXPECT_DOUBLE_EQ(binomial_stderr(25, 100), std::sqrt(0.25 * 0.75 / 100));
    EXPECT_EQ(binomial_stderr(0, 100), 0.0);
    EXPECT_EQ(binomial_stderr(0, 0), 0.0);
    SystemParams p;
    const auto est = estimate_outage_at_mbs(p, quick(2000));
    EXPECT_EQ(est.trials, 2000u);
    EXPECT_GE(est.attempts, est.trials);
    EXPECT_DOUBLE_EQ(est.std_error, binomial_stderr(est.outages, est.trials));
    EXPECT_DOUBLE_EQ(est.p_hat, est.outages / 2000.0);
}

TEST(MonteCarlo, HugeProcessingGainRemovesOutage)
{
    SystemParams p;
    p.n_h = 1 << 20;
    // Only a near-zero signal fade can still cause outage.
    EXPECT_LT(estimate_outage_at_fap(p, 700, quick(2000)).p_hat, 0.002);
    EXPECT_LT(estimate_outage_at_mbs(p, quick(2000)).p_hat, 0.002);
}

TEST(MonteCarlo, FemtoAndMacroUsersShareTheReceiver)
{
    // Both kinds of FAP user see the same interferer law up to the one
    // removed user, so their outage is close at the default densities.
    SystemParams p;
    p.T = 8;
    const auto mu = estimate_outage_at_fap(p, 700, quick(20000, 3));
    const auto fu = estimate_outage_fu_at_fap(p, 700, quick(20000, 4));
    EXPECT_NEAR(mu.p_hat, fu.p_hat, 0.05);
    EXPECT_GT(mu.p_hat, 0);
}

TEST(MonteCarlo, OutageIncreasesWithThreshold)
{
    // Common random numbers keep the comparison monotone pathwise.
    SystemParams p;
    std::uint64_t prev_fap = 0, prev_mbs = 0;
    for (double T : {0.5, 2.0, 8.0, 32.0}) {
        p.T = T;
        const auto fap = estimate_outage_at_fap(p, 600, quick(3000, 5));
        const auto mbs = estimate_outage_at_mbs(p, quick(3000, 5));
        EXPECT_GE(fap.outages, prev_fap);
        EXPECT_GE(mbs.outages, prev_mbs);
        prev_fap = fap.outages;
        prev_mbs = mbs.outages;
    }
    EXPECT_GT(prev_mbs, 0u);
}

TEST(MonteCarlo, LaplaceWithoutFapsIsPoissonTransform)
{
    SystemParams p;
    p.lambda_f = 0;
    for (double s : {0.01, 0.05, 0.1}) {
        const auto est = estimate_laplace_nm_bm(p, s, std::nullopt, quick(20000, 6));
        const double exact = std::exp(p.mean_mus() * std::expm1(-s));
        EXPECT_NEAR(est.mean, exact, 4 * est.std_error + 1e-12) << s;
        const auto b = bounds::laplace_n_mu_mbs_bounds(p, s);
        EXPECT_DOUBLE_EQ(b.lower, exact);
        EXPECT_DOUBLE_EQ(b.upper, exact);
    }
    const auto at_zero = estimate_laplace_nm_bm(p, 0, std::nullopt, quick(100));
    EXPECT_EQ(at_zero.mean, 1.0);
    EXPECT_EQ(at_zero.std_error, 0.0);
}

TEST(MonteCarlo, ScaleInvariance)
{
    // Scaling every length by c and every density by 1/c^2 leaves all
    // distance ratios, counts and therefore every trial unchanged in law.
    SystemParams p;
    SystemParams scaled = p;
    const double c = 2.0;
    scaled.R *= c;
    scaled.r_f *= c;
    scaled.delta *= c;
    scaled.lambda_f /= c * c;
    scaled.mu_m /= c * c;
    scaled.mu_f /= c * c;
    const auto a = estimate_outage_at_mbs(p, quick(4000, 7));
    const auto b = estimate_outage_at_mbs(scaled, quick(4000, 8));
    EXPECT_NEAR(a.p_hat, b.p_hat, 3.5 * joint_se(a, b));
    const auto fa = estimate_outage_at_fap(p, 700, quick(4000, 7));
    const auto fb = estimate_outage_at_fap(scaled, 700 * c, quick(4000, 8));
    EXPECT_NEAR(fa.p_hat, fb.p_hat, 3.5 * joint_se(fa, fb));
}

TEST(MonteCarlo, LoneUserNeverOutage)
{
    // No FAPs, no FUs and a tiny MU density: the MBS-served MU is almost
    // always alone, and a lone user has infinite SIR.
    SystemParams p;
    p.lambda_f = 0;
    p.mu_m = 1e-9;
    const auto est = estimate_outage_at_mbs(p, quick(200));
    EXPECT_EQ(est.outages, 0u);
}

TEST(MonteCarlo, EstimatesWithinBounds)
{
    SystemParams p;
    const auto grid = geometry::QuantizationGrid::uniform(p.kappa, 32);
    const auto fap = estimate_outage_at_fap(p, 700, quick(20000, 10));
    const auto fb = bounds::outage_bounds_at_fap(p, 700, grid);
    EXPECT_GE(fap.p_hat, fb.lower_clamped - 3 * fap.std_error);
    EXPECT_LE(fap.p_hat, fb.upper_clamped + 3 * fap.std_error);
    const auto mbs = estimate_outage_at_mbs(p, quick(20000, 10));
    const auto mb = bounds::outage_bounds_at_mbs(p);
    EXPECT_GE(mbs.p_hat, mb.lower_clamped - 3 * mbs.std_error);
    EXPECT_LE(mbs.p_hat, mb.upper_clamped + 3 * mbs.std_error);
}

TEST(MonteCarlo, ConditioningFailuresAreReported)
{
    // A dense FAP field with a wide coverage circle: a neighbour often
    // steals the single covered MU, so most proposals are rejected.
    SystemParams p;
    p.mu_m = 1e-12;
    p.lambda_f = 5e-5;
    p.kappa = 0.3;
    auto o = quick(50);
    o.min_acceptance = 0.999999;
    EXPECT_THROW(estimate_outage_at_fap(p, 700, o), ConditioningError);

    SystemParams closed = p;
    closed.kappa = 0;
    EXPECT_THROW(estimate_outage_at_fap(closed, 700, quick(10)), std::domain_error);
}

TEST(MonteCarlo, InvalidInputs)
{
    SystemParams p;
    EXPECT_THROW(estimate_outage_at_fap(p, 0, quick(10)), std::domain_error);
    EXPECT_THROW(estimate_outage_at_fap(p, p.R, quick(10)), std::domain_error);
    EXPECT_THROW(estimate_outage_at_mbs(p, quick(0)), std::domain_error);
    EXPECT_THROW(estimate_laplace_nm_bm(p, -1, std::nullopt, quick(10)), std::domain_error);
    SystemParams bad = p;
    bad.kappa = 1.5;
    EXPECT_THROW(estimate_outage_at_mbs(bad, quick(10)), std::domain_error);
}
