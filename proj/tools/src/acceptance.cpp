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

#include "twotier/cli/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "twotier/bounds.hpp"
#include "twotier/cli/app.hpp"
#include "twotier/cli/areas.hpp"
#include "twotier/montecarlo.hpp"
#include "twotier/network.hpp"
#include "twotier/stochastic.hpp"

namespace twotier::cli {

namespace {

constexpr double kFapDistance = 700.0;
constexpr int kGridLevels = 32;
constexpr double kSigmas = 3.0;

std::string fmt(const char* format, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

mc::McOptions mc_options(const AcceptanceOptions& o)
{
    mc::McOptions m;
    m.trials = o.trials;
    m.seed = o.seed;
    m.threads = o.threads;
    return m;
}

double joint_se(double a, double b) { return std::sqrt(a * a + b * b); }

// Sandwich over the T x mu_m grid for one estimator family.
CriterionResult sandwich_grid(const std::string& id, const AcceptanceOptions& o,
                              bool at_fap)
{
    const auto options = mc_options(o);
    int inside = 0;
    int total = 0;
    double worst_margin = INFINITY;
    std::string worst;
    for (double mu_m : {10e-6, 15e-6, 20e-6}) {
        for (double T : {0.5, 1.0, 2.0, 4.0, 8.0}) {
            SystemParams p;
            p.mu_m = mu_m;
            p.T = T;
            const auto grid = geometry::QuantizationGrid::uniform(p.kappa, kGridLevels);
            const auto b = at_fap ? bounds::outage_bounds_at_fap(p, kFapDistance, grid)
                                  : bounds::outage_bounds_at_mbs(p);
            const auto e = at_fap ? mc::estimate_outage_at_fap(p, kFapDistance, options)
                                  : mc::estimate_outage_at_mbs(p, options);
            const double slack = kSigmas * e.std_error;
            const double margin = std::min(e.p_hat - (b.lower_clamped - slack),
                                           (b.upper_clamped + slack) - e.p_hat);
            ++total;
            if (margin >= 0) ++inside;
            if (margin < worst_margin) {
                worst_margin = margin;
                worst = fmt("mu_m=%g T=%g p=%.5f se=%.5f [%.5f, %.5f]", mu_m, T, e.p_hat,
                            e.std_error, b.lower_clamped, b.upper_clamped);
            }
        }
    }
    return {id, inside == total,
            fmt("%d/%d points inside; tightest: %s", inside, total, worst.c_str())};
}

CriterionResult a1(const AcceptanceOptions& o) { return sandwich_grid("A1", o, true); }
CriterionResult a2(const AcceptanceOptions& o) { return sandwich_grid("A2", o, false); }

CriterionResult a3(const AcceptanceOptions& o)
{
    const auto options = mc_options(o);
    const std::vector<double> kappas = {0.05, 0.1, 0.2, 0.3, 0.4, 0.5};
    std::vector<mc::OutageEstimate> mbs, fap;
    for (double k : kappas) {
        SystemParams p;
        p.kappa = k;
        mbs.push_back(mc::estimate_outage_at_mbs(p, options));
        fap.push_back(mc::estimate_avg_outage_at_fap(p, options));
    }
    bool ok = true;
    std::ostringstream detail;
    auto check = [&](const std::vector<mc::OutageEstimate>& est, const char* name) {
        detail << name << '[';
        for (std::size_t i = 0; i < est.size(); ++i) {
            detail << fmt(i ? " %.4f" : "%.4f", est[i].p_hat);
            if (i > 0) {
                const double rise = est[i].p_hat - est[i - 1].p_hat;
                if (rise > kSigmas * joint_se(est[i].std_error, est[i - 1].std_error)) {
                    ok = false;
                    detail << "(!)";
                }
            }
        }
        detail << "] ";
    };
    check(mbs, "mbs");
    check(fap, "fap_avg");
    return {"A3", ok, "kappa 0.05..0.5 " + detail.str()};
}

CriterionResult a4(const AcceptanceOptions& o)
{
    SystemParams p;
    const auto grid = geometry::QuantizationGrid::uniform(p.kappa, 8);
    bool ok = true;
    double worst_region = 0;
    double worst_total = 0;
    for (double d_f : {200.0, 500.0, 700.0, 900.0}) {
        const auto cmp = compare_areas(d_f, p.R, grid, 1000000, o.seed);
        worst_region = std::max(worst_region, cmp.max_error_over_total());
        const double expected = std::numbers::pi * p.R * p.R - cmp.coverage_closed;
        const double rel = std::abs(cmp.closed.total - expected) / expected;
        worst_total = std::max(worst_total, rel);
    }
    ok = worst_region <= 0.005 && worst_total <= 0.001;
    return {"A4", ok,
            fmt("max |s_i - oracle| / s = %.2e (limit 5e-3); sum vs disk minus coverage "
                "rel %.2e (limit 1e-3)",
                worst_region, worst_total)};
}

CriterionResult a5(const AcceptanceOptions& o)
{
    SystemParams p;
    const auto grid = geometry::QuantizationGrid::uniform(p.kappa, 8);
    constexpr std::uint64_t kPositions = 100000;
    int bad = 0;
    int bins = 0;
    double worst_z = 0;
    std::uint32_t sub = 0;
    for (double d_f : {200.0, 500.0, 700.0, 900.0}) {
        const auto areas = geometry::partition_areas(d_f, p.R, grid);
        std::vector<std::uint64_t> hits(areas.areas.size(), 0);
        RngStream rng(o.seed, 0, ++sub);
        for (std::uint64_t n = 0; n < kPositions;) {
            const auto region = region_of(uniform_in_disk({0, 0}, p.R, rng), d_f, grid);
            if (!region) continue;
            ++hits[static_cast<std::size_t>(*region + grid.t())];
            ++n;
        }
        for (std::size_t i = 0; i < hits.size(); ++i) {
            const double prob = areas.probs[i];
            const double freq = static_cast<double>(hits[i]) / kPositions;
            const double se = std::sqrt(prob * (1 - prob) / kPositions);
            const double gap = std::abs(freq - prob);
            ++bins;
            if (gap > kSigmas * se) ++bad;
            if (se > 0) worst_z = std::max(worst_z, gap / se);
        }
    }
    return {"A5", bad == 0,
            fmt("%d/%d bins within 3 se (largest |z| = %.2f)", bins - bad, bins, worst_z)};
}

CriterionResult a6(const AcceptanceOptions& o)
{
    const auto options = mc_options(o);
    SystemParams p;
    bool ok = true;
    std::ostringstream detail;
    for (double s : {0.1, 0.5, 1.0, 2.0}) {
        const auto plain = mc::estimate_laplace_nm_bm(p, s, std::nullopt, options);
        const auto plain_b = bounds::laplace_n_mu_mbs_bounds(p, s);
        const auto cond = mc::estimate_laplace_nm_bm(p, s, kFapDistance, options);
        const auto cond_b = bounds::laplace_n_mu_mbs_cond_bounds(p, s, kFapDistance);
        const bool in_plain = plain.mean >= plain_b.lower &&
                              plain.mean <= plain_b.upper + kSigmas * plain.std_error;
        const bool in_cond = cond.mean >= cond_b.lower &&
                             cond.mean <= cond_b.upper + kSigmas * cond.std_error;
        ok = ok && in_plain && in_cond;
        detail << fmt("s=%g: %.3e in [%.3e, %.3e]%s, cond %.3e in [%.3e, %.3e]%s; ", s,
                      plain.mean, plain_b.lower, plain_b.upper, in_plain ? "" : "(!)",
                      cond.mean, cond_b.lower, cond_b.upper, in_cond ? "" : "(!)");
    }
    return {"A6", ok, detail.str()};
}

double rel_diff(double a, double b)
{
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}

// Sum over k >= 1 of a^{k-1} Poisson(n) pmf(k) / P(N >= 1), k <= kmax.
double truncated_shifted_pgf(double a, double n, int kmax)
{
    double sum = 0;
    double log_pmf = -n;  // k = 0
    for (int k = 1; k <= kmax; ++k) {
        log_pmf += std::log(n) - std::log(static_cast<double>(k));
        sum += std::exp(log_pmf + (k - 1) * std::log(a));
    }
    return sum / -std::expm1(-n);
}

CriterionResult a7(const AcceptanceOptions& o)
{
    RngStream rng(o.seed, 0, 7);
    double worst_fap = 0;
    double worst_mbs = 0;
    for (int i = 0; i < 100; ++i) {
        SystemParams p;
        p.T = 0.5 + 7.5 * rng.uniform();
        p.kappa = 0.05 + 0.45 * rng.uniform();
        p.eta = 5 + 45 * rng.uniform();
        p.mu_m = 5e-6 + 25e-6 * rng.uniform();
        const double d_f = 100 + 800 * rng.uniform();
        const auto grid = geometry::QuantizationGrid::uniform(p.kappa, kGridLevels);

        const double t_h = p.threshold_per_carrier();
        const double s_user = std::log1p(t_h);
        const auto q = bounds::q_pair(p, t_h / p.sigma_sq, d_f, grid);
        const double composed = bounds::laplace_n_fu(p, s_user) *
                                bounds::laplace_n_mu_fap_plus(p, s_user, d_f) *
                                bounds::laplace_n_mu_mbs_bounds(p, -std::log(q.lower)).lower;
        const auto fap = bounds::outage_bounds_at_fap(p, d_f, grid);
        worst_fap = std::max(worst_fap, rel_diff(fap.upper, 1 - composed));

        const double series =
            truncated_shifted_pgf(1 / (1 + t_h), p.mean_mus(), 200);
        const auto mbs = bounds::outage_bounds_at_mbs(p);
        worst_mbs = std::max(worst_mbs, rel_diff(mbs.upper, 1 - series));
    }
    return {"A7", worst_fap <= 1e-10 && worst_mbs <= 1e-10,
            fmt("FAP upper vs composed product: max rel %.2e; MBS upper vs k<=200 series: "
                "max rel %.2e (limit 1e-10, 100 points)",
                worst_fap, worst_mbs)};
}

CriterionResult a8(const AcceptanceOptions&)
{
    SystemParams p;
    int violations = 0;
    int checks = 0;
    for (double d_f : {200.0, 500.0, 700.0, 900.0}) {
        for (double s : {0.001, 0.01, 0.1, 1.0}) {
            std::optional<bounds::QPair> coarse;
            for (int t : {4, 8, 16, 32}) {
                const auto grid = geometry::QuantizationGrid::uniform(p.kappa, t);
                const auto fine = bounds::q_pair(p, s, d_f, grid);
                if (coarse) {
                    // The q of the outage upper bound can only rise, the other
                    // only fall.
                    checks += 2;
                    if (fine.lower < coarse->lower) ++violations;
                    if (fine.upper > coarse->upper) ++violations;
                }
                coarse = fine;
            }
        }
    }
    return {"A8", violations == 0,
            fmt("%d/%d nested-grid comparisons monotone (t = 4, 8, 16, 32)",
                checks - violations, checks)};
}

CriterionResult a9(const AcceptanceOptions& o)
{
    const auto options = mc_options(o);
    SystemParams p;
    std::vector<mc::OutageEstimate> est;
    std::ostringstream curve;
    for (int d = 100; d <= 900; d += 100) {
        est.push_back(mc::estimate_outage_at_fap(p, d, options));
        curve << fmt(d == 100 ? "%.4f" : " %.4f", est.back().p_hat);
    }
    const auto peak = std::max_element(est.begin() + 1, est.end() - 1,
                                       [](const auto& a, const auto& b) {
                                           return a.p_hat < b.p_hat;
                                       });
    const auto& first = est.front();
    const auto& last = est.back();
    const double z_first = (peak->p_hat - first.p_hat) / joint_se(peak->std_error, first.std_error);
    const double z_last = (peak->p_hat - last.p_hat) / joint_se(peak->std_error, last.std_error);
    const int peak_d = 100 * static_cast<int>(peak - est.begin() + 1);
    return {"A9", z_first > kSigmas && z_last > kSigmas,
            fmt("d_f 100..900: [%s]; peak at %d m, %.1f and %.1f joint se above the ends",
                curve.str().c_str(), peak_d, z_first, z_last)};
}

CriterionResult a10(const AcceptanceOptions& o)
{
    const std::string seed = std::to_string(o.seed);
    auto sweep = [&](const char* threads) {
        const char* argv[] = {"twotier", "sweep", "--param", "T", "--values", "0.5,2",
                              "--estimator", "fap,fap_avg,fu,mbs", "--trials", "2000",
                              "--seed", seed.c_str(), "--threads", threads};
        std::ostringstream out, err;
        const int code = run(static_cast<int>(std::size(argv)), argv, out, err);
        return std::pair{code, out.str()};
    };
    const auto [code1, one] = sweep("1");
    const auto [code8, eight] = sweep("8");
    const bool ok = code1 == 0 && code8 == 0 && !one.empty() && one == eight;
    return {"A10", ok,
            fmt("sweep --threads 1 vs 8: %s (%zu bytes)",
                one == eight ? "byte-identical" : "DIFFERENT", one.size())};
}

CriterionResult a11(const AcceptanceOptions& o)
{
    SystemParams p;
    p.kappa = 1e-9;
    std::uint64_t fap_served = 0;
    for (std::uint64_t k = 0; k < 10000; ++k) {
        RngStream rng(o.seed, k, 11);
        const auto net = build_realization(p, std::nullopt, rng);
        for (const auto& s : net.serving) {
            if (!s.is_mbs()) ++fap_served;
        }
    }
    const double tau_gap = std::abs(bounds::tau_outage_mbs(p) - 1);
    const auto base = bounds::outage_bounds_at_mbs(p);
    const double t_h = p.threshold_per_carrier();
    const double n_mu = p.mean_mus();
    const double limit_lower = 1 - (1 + t_h) * std::exp(-n_mu * t_h / (1 + t_h));
    double spread = std::abs(base.lower - limit_lower);
    for (double lambda_f : {0.0, 5e-7, 5e-5}) {
        SystemParams q = p;
        q.lambda_f = lambda_f;
        const auto b = bounds::outage_bounds_at_mbs(q);
        spread = std::max({spread, std::abs(b.lower - base.lower),
                           std::abs(b.upper - base.upper)});
    }
    const bool ok = fap_served == 0 && tau_gap <= 1e-12 && spread <= 1e-12;
    return {"A11", ok,
            fmt("FAP-served MUs in 1e4 realizations: %llu; |tau'-1| = %.1e; MBS bounds "
                "vs lambda_f-free limit: %.1e",
                static_cast<unsigned long long>(fap_served), tau_gap, spread)};
}

const std::map<std::string, std::function<CriterionResult(const AcceptanceOptions&)>>&
registry()
{
    static const std::map<std::string,
                          std::function<CriterionResult(const AcceptanceOptions&)>>
        table = {{"A1", a1}, {"A2", a2}, {"A3", a3}, {"A4", a4},  {"A5", a5},  {"A6", a6},
                 {"A7", a7}, {"A8", a8}, {"A9", a9}, {"A10", a10}, {"A11", a11}};
    return table;
}

}  // namespace

const std::vector<std::string>& criterion_ids()
{
    static const std::vector<std::string> ids = {"A1", "A2", "A3", "A4",  "A5", "A6",
                                                 "A7", "A8", "A9", "A10", "A11"};
    return ids;
}

CriterionResult run_criterion(const std::string& id, const AcceptanceOptions& options)
{
    const auto it = registry().find(id);
    if (it == registry().end()) {
        throw std::invalid_argument("unknown acceptance criterion '" + id + "'");
    }
    try {
        return it->second(options);
    } catch (const std::exception& e) {
        return {id, false, std::string("error: ") + e.what()};
    }
}

int run_acceptance(const AcceptanceOptions& options, std::ostream& out)
{
    const auto& selected = options.only.empty() ? criterion_ids() : options.only;
    for (const auto& id : selected) {
        if (!registry().count(id)) {
            throw std::invalid_argument("unknown acceptance criterion '" + id + "'");
        }
    }
    int failures = 0;
    for (const auto& id : selected) {
        const auto r = run_criterion(id, options);
        if (!r.passed) ++failures;
        out << r.id << (r.passed ? " PASS " : " FAIL ") << r.detail << std::endl;
    }
    return failures;
}

}  // namespace twotier::cli
