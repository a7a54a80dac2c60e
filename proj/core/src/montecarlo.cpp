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

#include "twotier/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace twotier::mc {

namespace {

struct TrialOutcome {
    std::uint8_t outage = 0;
    std::uint32_t attempts = 0;
};

// Runs fn(trial_index) for every trial. Results land at their index, so the
// reduction order never depends on scheduling.
template <typename Result, typename Fn>
std::vector<Result> run_trials(std::uint64_t trials, unsigned threads, Fn fn)
{
    std::vector<Result> results(trials);
    unsigned workers = threads == 0 ? std::thread::hardware_concurrency() : threads;
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(
                                                           std::max<std::uint64_t>(trials, 1))));
    if (workers == 1) {
        for (std::uint64_t k = 0; k < trials; ++k) results[k] = fn(k);
        return results;
    }

    constexpr std::uint64_t kChunk = 256;
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::atomic<bool> stop{false};

    auto worker = [&] {
        try {
            for (;;) {
                if (stop.load(std::memory_order_relaxed)) return;
                const std::uint64_t begin = next.fetch_add(kChunk);
                if (begin >= trials) return;
                const std::uint64_t end = std::min(trials, begin + kChunk);
                for (std::uint64_t k = begin; k < end; ++k) results[k] = fn(k);
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            stop = true;
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return results;
}

std::uint32_t max_attempts(const McOptions& options)
{
    const double cap = std::ceil(1.0 / options.min_acceptance);
    return static_cast<std::uint32_t>(std::clamp(cap, 1.0, 4.0e9));
}

void require_trials(const McOptions& options)
{
    if (options.trials == 0) {
        throw std::domain_error("at least one trial is required");
    }
}

// Regenerates a realization from `propose` until `evaluate` accepts it;
// evaluate returns -1 to reject, otherwise the outage indicator.
template <typename Propose, typename Evaluate>
TrialOutcome conditioned_trial(RngStream& rng, std::uint32_t limit, Propose propose,
                               Evaluate evaluate)
{
    for (std::uint32_t attempt = 1; attempt <= limit; ++attempt) {
        const NetworkRealization net = propose(rng);
        const int verdict = evaluate(net, rng);
        if (verdict >= 0) {
            return {static_cast<std::uint8_t>(verdict), attempt};
        }
    }
    throw ConditioningError(
        "conditioning event accepted no realization in " + std::to_string(limit) +
        " attempts; its probability is too small for the requested trials");
}

OutageEstimate summarize(const std::vector<TrialOutcome>& outcomes,
                         const McOptions& options)
{
    OutageEstimate est;
    est.trials = outcomes.size();
    est.seed = options.seed;
    for (const auto& o : outcomes) {
        est.outages += o.outage;
        est.attempts += o.attempts;
    }
    est.p_hat = static_cast<double>(est.outages) / static_cast<double>(est.trials);
    est.std_error = binomial_stderr(est.outages, est.trials);
    if (est.acceptance_rate() < options.min_acceptance) {
        throw ConditioningError("conditioning acceptance rate " +
                                std::to_string(est.acceptance_rate()) +
                                " is below the configured minimum");
    }
    return est;
}

std::size_t pick(std::size_t count, RngStream& rng)
{
    const auto k = static_cast<std::size_t>(rng.uniform() * static_cast<double>(count));
    return std::min(k, count - 1);
}

// Outage of a random MU served by the tagged FAP, or -1 if it serves none.
int tagged_mu_outcome(const NetworkRealization& net, const SystemParams& params,
                      const McOptions& options, RngStream& rng)
{
    const std::size_t tagged = *net.tagged_fap;
    const auto served = net.users_of(Server::fap(tagged));
    if (served.empty()) return -1;
    const std::size_t k = served[pick(served.size(), rng)];
    const SirSample sir =
        sir_user_at_fap(net, tagged, UserRef::macro(k), params, options.sir, rng);
    return sir.is_outage(params.T) ? 1 : 0;
}

}  // namespace

double binomial_stderr(std::uint64_t successes, std::uint64_t trials)
{
    if (trials == 0) return 0.0;
    const double p = static_cast<double>(successes) / static_cast<double>(trials);
    return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

OutageEstimate estimate_outage_at_fap(const SystemParams& params, double d_f,
                                      const McOptions& options)
{
    params.validate();
    require_trials(options);
    if (!(d_f > 0) || !(d_f < params.R)) {
        throw std::domain_error("d_f must lie in (0, R)");
    }
    const auto limit = max_attempts(options);
    auto outcomes = run_trials<TrialOutcome>(options.trials, options.threads,
                                             [&](std::uint64_t k) {
        RngStream rng(options.seed, k);
        return conditioned_trial(
            rng, limit,
            [&](RngStream& r) {
                return build_realization_with_covered_mu(params, d_f, r,
                                                         options.tagged_model);
            },
            [&](const NetworkRealization& net, RngStream& r) {
                return tagged_mu_outcome(net, params, options, r);
            });
    });
    return summarize(outcomes, options);
}

OutageEstimate estimate_outage_fu_at_fap(const SystemParams& params, double d_f,
                                         const McOptions& options)
{
    params.validate();
    require_trials(options);
    if (!(d_f > 0) || !(d_f < params.R)) {
        throw std::domain_error("d_f must lie in (0, R)");
    }
    const auto limit = max_attempts(options);
    auto outcomes = run_trials<TrialOutcome>(options.trials, options.threads,
                                             [&](std::uint64_t k) {
        RngStream rng(options.seed, k);
        return conditioned_trial(
            rng, limit,
            [&](RngStream& r) {
                return build_realization_with_tagged_fu(params, d_f, r,
                                                        options.tagged_model);
            },
            [&](const NetworkRealization& net, RngStream& r) {
                const std::size_t tagged = *net.tagged_fap;
                const auto& ring = net.fus[tagged];
                if (ring.empty()) return -1;
                const SirSample sir =
                    sir_user_at_fap(net, tagged, UserRef::femto(tagged, pick(ring.size(), r)),
                                    params, options.sir, r);
                return sir.is_outage(params.T) ? 1 : 0;
            });
    });
    return summarize(outcomes, options);
}

OutageEstimate estimate_outage_at_mbs(const SystemParams& params,
                                      const McOptions& options)
{
    params.validate();
    require_trials(options);
    const auto limit = max_attempts(options);
    auto outcomes = run_trials<TrialOutcome>(options.trials, options.threads,
                                             [&](std::uint64_t k) {
        RngStream rng(options.seed, k);
        return conditioned_trial(
            rng, limit,
            [&](RngStream& r) { return build_realization(params, std::nullopt, r); },
            [&](const NetworkRealization& net, RngStream& r) {
                const auto served = net.users_of(Server::mbs());
                if (served.empty()) return -1;
                const std::size_t target = served[pick(served.size(), r)];
                const SirSample sir =
                    sir_mu_at_mbs(net, UserRef::macro(target), params, options.sir, r);
                return sir.is_outage(params.T) ? 1 : 0;
            });
    });
    return summarize(outcomes, options);
}

OutageEstimate estimate_avg_outage_at_fap(const SystemParams& params,
                                          const McOptions& options)
{
    params.validate();
    require_trials(options);
    const auto limit = max_attempts(options);
    auto outcomes = run_trials<TrialOutcome>(options.trials, options.threads,
                                             [&](std::uint64_t k) {
        RngStream rng(options.seed, k);
        double d_f = 0;
        while (d_f <= 0) d_f = params.R * std::sqrt(rng.uniform());
        return conditioned_trial(
            rng, limit,
            [&](RngStream& r) {
                return build_realization_with_covered_mu(params, d_f, r,
                                                         options.tagged_model);
            },
            [&](const NetworkRealization& net, RngStream& r) {
                return tagged_mu_outcome(net, params, options, r);
            });
    });
    return summarize(outcomes, options);
}

MeanEstimate estimate_laplace_nm_bm(const SystemParams& params, double s,
                                    std::optional<double> d_f,
                                    const McOptions& options)
{
    params.validate();
    require_trials(options);
    if (!(s >= 0)) {
        throw std::domain_error("Laplace argument s must be >= 0");
    }
    const auto values = run_trials<double>(options.trials, options.threads,
                                           [&](std::uint64_t k) {
        RngStream rng(options.seed, k);
        const auto net = build_realization(params, d_f, rng, options.tagged_model);
        return std::exp(-s * static_cast<double>(user_counts(net).n_mu_mbs));
    });
    MeanEstimate est;
    est.trials = options.trials;
    est.seed = options.seed;
    double sum = 0;
    for (double v : values) sum += v;
    est.mean = sum / static_cast<double>(est.trials);
    double sq = 0;
    for (double v : values) sq += (v - est.mean) * (v - est.mean);
    const double n = static_cast<double>(est.trials);
    est.std_error = est.trials > 1 ? std::sqrt(sq / (n - 1) / n) : 0.0;
    return est;
}

}  // namespace twotier::mc
