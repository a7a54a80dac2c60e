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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "twotier/network.hpp"
#include "twotier/params.hpp"
#include "twotier/sir.hpp"

namespace twotier::mc {

/// Raised when conditioning by regeneration accepts too rarely to finish.
class ConditioningError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct McOptions {
    std::uint64_t trials = 100000;  ///< effective (post-conditioning) trials
    std::uint64_t seed = 1;
    unsigned threads = 1;           ///< affects wall time only
    SirOptions sir;
    TaggedFapModel tagged_model = TaggedFapModel::kMemberOfProcess;
    /// Abort when accepted / generated realizations falls below this.
    double min_acceptance = 1e-4;
};

struct OutageEstimate {
    std::uint64_t trials = 0;    ///< effective trials
    std::uint64_t attempts = 0;  ///< realizations generated, incl. rejected
    std::uint64_t outages = 0;
    double p_hat = 0;
    double std_error = 0;
    std::uint64_t seed = 0;

    double acceptance_rate() const
    {
        return attempts == 0 ? 0.0 : static_cast<double>(trials) / attempts;
    }
};

struct MeanEstimate {
    std::uint64_t trials = 0;
    double mean = 0;
    double std_error = 0;
    std::uint64_t seed = 0;
};

/// Outage of a uniformly chosen MU served by a FAP pinned at d_f, given that
/// FAP serves at least one MU.
OutageEstimate estimate_outage_at_fap(const SystemParams& params, double d_f,
                                      const McOptions& options);

/// Outage of a uniformly chosen FU of a FAP pinned at d_f, given it has one.
OutageEstimate estimate_outage_fu_at_fap(const SystemParams& params, double d_f,
                                         const McOptions& options);

/// Outage of a uniformly chosen MBS-served MU, given there is one.
OutageEstimate estimate_outage_at_mbs(const SystemParams& params,
                                      const McOptions& options);

/// estimate_outage_at_fap with d_f drawn per trial from the density 2r/R^2.
OutageEstimate estimate_avg_outage_at_fap(const SystemParams& params,
                                          const McOptions& options);

/// Sample mean of exp(-s N) for the MBS-served MU count, optionally with a
/// FAP pinned at d_f.
MeanEstimate estimate_laplace_nm_bm(const SystemParams& params, double s,
                                    std::optional<double> d_f,
                                    const McOptions& options);

/// Binomial standard error sqrt(p (1 - p) / n).
double binomial_stderr(std::uint64_t successes, std::uint64_t trials);

}  // namespace twotier::mc
