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

#include "twotier/geometry.hpp"
#include "twotier/params.hpp"

namespace twotier::bounds {

/// An analytic interval. The raw values are the expressions as derived and
/// may leave [0, 1] in extreme regimes; the clamped values are what gets
/// reported as probabilities.
struct BoundPair {
    double lower = 0;
    double upper = 0;
    double lower_clamped = 0;
    double upper_clamped = 0;

    static BoundPair from_raw(double lower, double upper);

    bool lower_was_clamped() const { return lower != lower_clamped; }
    bool upper_was_clamped() const { return upper != upper_clamped; }
};

/// E[exp(-s N)] for the FU count of one FAP.
double laplace_n_fu(const SystemParams& params, double s);

/// E[exp(-s N)] for the MU count handed to a FAP at distance d_f.
double laplace_n_mu_fap(const SystemParams& params, double s, double d_f);

/// E[exp(-s (N - 1)) | N >= 1] for the same count. Throws std::domain_error
/// if the FAP's coverage holds no MU mass.
double laplace_n_mu_fap_plus(const SystemParams& params, double s, double d_f);

/// (e^x - 1) / x with x = (1 - e^{-s}) gamma n_mu; equals 1 at s = 0.
double tau(const SystemParams& params, double s);

/// Chernoff tail for more than 1/gamma FAPs,
/// exp(1/gamma - n_fap + log(gamma n_fap) / gamma). Zero when gamma or
/// n_fap is zero.
double fap_count_tail(const SystemParams& params);

/// Bounds on E[exp(-s N)] for the MBS-served MU count.
BoundPair laplace_n_mu_mbs_bounds(const SystemParams& params, double s);

/// Same, given a FAP at distance d_f. Throws std::domain_error when the
/// FAP density is zero.
BoundPair laplace_n_mu_mbs_cond_bounds(const SystemParams& params, double s,
                                       double d_f);

/// Per-interferer Laplace factors of the MBS-served users seen from a FAP at
/// d_f, averaged over the quantized distance-ratio regions.
///
/// `lower` uses the ratio's upper quantization and `upper` its lower
/// quantization, so lower <= upper.
struct QPair {
    double lower;
    double upper;
};
QPair q_pair(const SystemParams& params, double s, double d_f,
             const geometry::QuantizationGrid& grid);
/// Same with precomputed region probabilities.
QPair q_pair(const SystemParams& params, double s,
             const geometry::PartitionAreas& areas,
             const geometry::QuantizationGrid& grid);

/// Outage bounds for a user served by a FAP at distance d_f.
BoundPair outage_bounds_at_fap(const SystemParams& params, double d_f,
                               const geometry::QuantizationGrid& grid);

/// (e^x - 1) / x with x = gamma n_mu T_h / (1 + T_h), the FAP factor of the
/// MBS lower bound. Tends to 1 as gamma -> 0.
double tau_outage_mbs(const SystemParams& params);

/// Outage bounds for an MBS-served MU.
///
/// The upper side assumes a FAP-served MU never interferes at the MBS more
/// than an MBS-served one would, which needs eta * kappa^alpha <= 1.
BoundPair outage_bounds_at_mbs(const SystemParams& params);

/// The FAP bounds averaged over d_f with density 2 r / R^2 by a
/// `quad_points`-node composite midpoint rule, on the clamped values.
BoundPair avg_outage_bounds_at_fap(const SystemParams& params,
                                   const geometry::QuantizationGrid& grid,
                                   int quad_points);

/// Large-n_h simplification of outage_bounds_at_fap.
BoundPair approx_outage_at_fap(const SystemParams& params, double d_f,
                               const geometry::QuantizationGrid& grid);

/// The d_f << R limit of approx_outage_at_fap, where every ratio is ~1.
BoundPair approx_outage_at_fap_near_mbs(const SystemParams& params, double d_f);

/// Large-n_h simplification of the MBS lower bound.
double approx_outage_at_mbs(const SystemParams& params);

}  // namespace twotier::bounds
