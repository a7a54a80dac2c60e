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

#include <span>
#include <string>
#include <string_view>

namespace twotier {

/// Scalar model parameters of the two-tier uplink network.
///
/// Lengths are meters, densities are per square meter. Transmit powers are
/// normalized so that the MBS target received power is 1; only the ratio
/// `eta` = P_f / P_m enters any SIR.
struct SystemParams {
    double R        = 1000.0;  ///< macrocell radius
    double lambda_f = 5e-6;    ///< FAP density
    double mu_m     = 15e-6;   ///< macro user density
    double mu_f     = 0.01;    ///< femto user density (on each FAP's ring)
    double r_f      = 10.0;    ///< inner radius of the FU ring
    double delta    = 5.0;     ///< width of the FU ring
    double alpha    = 4.0;     ///< path-loss exponent
    double kappa    = 0.1;     ///< handover ratio
    int n_s         = 32;      ///< subbands
    int n_h         = 256;     ///< carriers per subband
    double eta      = 25.0;    ///< P_f / P_m
    double sigma_sq = 1.0;     ///< Rayleigh power scale
    double T        = 2.0;     ///< SIR threshold

    /// Throws std::domain_error naming the offending key.
    void validate() const;

    int processing_gain() const { return n_s * n_h; }
    double threshold_per_carrier() const { return T / n_h; }

    /// kappa^2 / (1 - kappa^2)^2
    double gamma() const;

    double mean_faps() const;
    double mean_mus() const;
    double mean_fus() const;
    /// Expected number of MUs inside the coverage circle of a FAP at `d_f`.
    double mean_mus_at_fap(double d_f) const;

    double ring_outer_radius() const { return r_f + delta; }
};

/// Sets a parameter by its config key. Throws std::invalid_argument for an
/// unknown key and std::domain_error for a non-integral count.
void set_param(SystemParams& params, const std::string& key, double value);
double get_param(const SystemParams& params, const std::string& key);
bool is_param_key(const std::string& key);
/// All config keys, in declaration order.
std::span<const std::string_view> param_keys();

}  // namespace twotier
