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

#include "twotier/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace twotier::bounds {

namespace {

// (e^x - 1) / x, continuous through x = 0.
double exprel(double x)
{
    if (std::abs(x) < 1e-6) {
        return 1.0 + x / 2.0 + x * x / 6.0;
    }
    return std::expm1(x) / x;
}

void require_nonnegative(double s)
{
    if (!(s >= 0)) {
        throw std::domain_error("Laplace argument s must be >= 0");
    }
}

void require_distance(const SystemParams& params, double d_f)
{
    if (!(d_f > 0) || !(d_f < params.R)) {
        throw std::domain_error("d_f must lie in (0, R)");
    }
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

// (1 + T_h)(e^{n/(1+T_h)} - 1) / (e^n - 1): the conditioned same-cell MU
// factor at s = log(1 + T_h). Tends to 1 as n -> 0.
double same_cell_mu_factor(double n, double t_h)
{
    if (n <= 0) return 1.0;
    return (1.0 + t_h) * std::expm1(n / (1.0 + t_h)) / std::expm1(n);
}

}  // namespace

BoundPair BoundPair::from_raw(double lower, double upper)
{
    return {lower, upper, clamp01(lower), clamp01(upper)};
}

double laplace_n_fu(const SystemParams& params, double s)
{
    require_nonnegative(s);
    return std::exp(params.mean_fus() * std::expm1(-s));
}

double laplace_n_mu_fap(const SystemParams& params, double s, double d_f)
{
    require_nonnegative(s);
    require_distance(params, d_f);
    return std::exp(params.mean_mus_at_fap(d_f) * std::expm1(-s));
}

double laplace_n_mu_fap_plus(const SystemParams& params, double s, double d_f)
{
    require_nonnegative(s);
    require_distance(params, d_f);
    const double n = params.mean_mus_at_fap(d_f);
    if (!(n > 0)) {
        throw std::domain_error(
            "conditioning on a covered MU needs a positive expected count");
    }
    // ((e^{n(a-1)} - e^{-n}) / (1 - e^{-n})) e^s with a = e^{-s}
    const double a = std::exp(-s);
    return std::expm1(n * a) / (a * std::expm1(n));
}

double tau(const SystemParams& params, double s)
{
    require_nonnegative(s);
    const double x = -std::expm1(-s) * params.gamma() * params.mean_mus();
    return exprel(x);
}

double fap_count_tail(const SystemParams& params)
{
    const double g = params.gamma();
    const double n = params.mean_faps();
    if (g <= 0 || n <= 0) return 0.0;
    return std::exp((1.0 + std::log(g * n)) / g - n);
}

BoundPair laplace_n_mu_mbs_bounds(const SystemParams& params, double s)
{
    require_nonnegative(s);
    const double mu_term = params.mean_mus() * std::expm1(-s);
    const double lower = std::exp(mu_term);
    const double upper =
        std::exp(mu_term + params.mean_faps() * (tau(params, s) - 1.0)) +
        fap_count_tail(params);
    return BoundPair::from_raw(lower, upper);
}

BoundPair laplace_n_mu_mbs_cond_bounds(const SystemParams& params, double s,
                                       double d_f)
{
    require_nonnegative(s);
    require_distance(params, d_f);
    const double n_fap = params.mean_faps();
    if (!(n_fap > 0)) {
        throw std::domain_error("conditional bound needs a positive FAP density");
    }
    const double at_least_one = -std::expm1(-n_fap);
    const double tau_s = tau(params, s);
    const double lower = std::exp(params.mean_mus() * std::expm1(-s));
    const double upper =
        std::exp((params.mean_mus() - params.mean_mus_at_fap(d_f)) * std::expm1(-s) +
                 n_fap * (tau_s - 1.0)) /
            (at_least_one * tau_s) +
        fap_count_tail(params) / at_least_one;
    return BoundPair::from_raw(lower, upper);
}

QPair q_pair(const SystemParams& params, double s,
             const geometry::PartitionAreas& areas,
             const geometry::QuantizationGrid& grid)
{
    require_nonnegative(s);
    if (areas.t != grid.t()) {
        throw std::invalid_argument("partition areas do not match the grid");
    }
    const double scaled = s * params.sigma_sq / params.eta;
    QPair q{0.0, 0.0};
    for (int i = -grid.t(); i <= grid.t(); ++i) {
        const auto bounds = geometry::quantized_ratio(i, grid);
        const double p = areas.prob(i);
        q.lower += p / (1.0 + scaled * std::pow(bounds.upper, params.alpha));
        q.upper += p / (1.0 + scaled * std::pow(bounds.lower, params.alpha));
    }
    return q;
}

QPair q_pair(const SystemParams& params, double s, double d_f,
             const geometry::QuantizationGrid& grid)
{
    require_distance(params, d_f);
    return q_pair(params, s, geometry::partition_areas(d_f, params.R, grid), grid);
}

BoundPair outage_bounds_at_fap(const SystemParams& params, double d_f,
                               const geometry::QuantizationGrid& grid)
{
    require_distance(params, d_f);
    const double n_fap = params.mean_faps();
    if (!(n_fap > 0)) {
        throw std::domain_error("FAP outage bounds need a positive FAP density");
    }
    const double t_h = params.threshold_per_carrier();
    const double n_mu = params.mean_mus();
    const double n_mu_f = params.mean_mus_at_fap(d_f);
    const QPair q = q_pair(params, t_h / params.sigma_sq, d_f, grid);

    const double lead = same_cell_mu_factor(n_mu_f, t_h) *
                        std::exp(-params.mean_fus() * t_h / (1.0 + t_h));

    const double upper = 1.0 - lead * std::exp(-n_mu * (1.0 - q.lower));

    const double tau_o = tau(params, -std::log(q.upper));
    const double at_least_one = -std::expm1(-n_fap);
    const double mbs_term =
        std::exp((n_mu - n_mu_f) * (q.upper - 1.0) + n_fap * (tau_o - 1.0)) /
            (at_least_one * tau_o) +
        fap_count_tail(params) / at_least_one;
    const double lower = 1.0 - lead * mbs_term;
    return BoundPair::from_raw(lower, upper);
}

double tau_outage_mbs(const SystemParams& params)
{
    const double t_h = params.threshold_per_carrier();
    return exprel(params.gamma() * params.mean_mus() * t_h / (1.0 + t_h));
}

BoundPair outage_bounds_at_mbs(const SystemParams& params)
{
    const double t_h = params.threshold_per_carrier();
    const double n_mu = params.mean_mus();
    const double a = t_h / (1.0 + t_h);
    const double tau_o = tau_outage_mbs(params);
    const double lower =
        1.0 - (1.0 + t_h) * (std::exp(-n_mu * a + params.mean_faps() * (tau_o - 1.0)) +
                             fap_count_tail(params));
    const double upper = 1.0 - same_cell_mu_factor(n_mu, t_h);
    return BoundPair::from_raw(lower, upper);
}

BoundPair avg_outage_bounds_at_fap(const SystemParams& params,
                                   const geometry::QuantizationGrid& grid,
                                   int quad_points)
{
    if (quad_points < 2) {
        throw std::domain_error("quadrature needs at least two points");
    }
    const double R = params.R;
    const double h = R / quad_points;
    BoundPair avg;
    for (int k = 0; k < quad_points; ++k) {
        const double d = (k + 0.5) * h;
        const double w = 2.0 * d / (R * R) * h;
        const BoundPair b = outage_bounds_at_fap(params, d, grid);
        avg.lower += w * b.lower;
        avg.upper += w * b.upper;
        avg.lower_clamped += w * b.lower_clamped;
        avg.upper_clamped += w * b.upper_clamped;
    }
    return avg;
}

BoundPair approx_outage_at_fap(const SystemParams& params, double d_f,
                               const geometry::QuantizationGrid& grid)
{
    require_distance(params, d_f);
    const double t_h = params.threshold_per_carrier();
    const double n_mu = params.mean_mus();
    const QPair q = q_pair(params, t_h / params.sigma_sq, d_f, grid);
    const double fu = params.mean_fus() * t_h;
    const double upper = 1.0 - std::exp(-fu - n_mu * (1.0 - q.lower));
    const double effective_mus = n_mu - 0.5 * params.gamma() * params.mean_faps() * n_mu -
                                 params.mean_mus_at_fap(d_f);
    const double lower = 1.0 - std::exp(-fu - (1.0 - q.upper) * effective_mus);
    return BoundPair::from_raw(lower, upper);
}

BoundPair approx_outage_at_fap_near_mbs(const SystemParams& params, double d_f)
{
    require_distance(params, d_f);
    const double t_h = params.threshold_per_carrier();
    const double scale = params.eta * params.sigma_sq;
    const double n_mu = params.mean_mus();
    const double base = params.mean_fus() + n_mu / scale;
    const double upper = 1.0 - std::exp(-t_h * base);
    const double lower =
        1.0 - std::exp(-t_h * (base - params.mean_mus_at_fap(d_f) / scale -
                               params.gamma() * params.mean_faps() * n_mu / (2 * scale)));
    return BoundPair::from_raw(lower, upper);
}

double approx_outage_at_mbs(const SystemParams& params)
{
    const double t_h = params.threshold_per_carrier();
    return 1.0 - std::exp(-params.mean_mus() * t_h *
                          (1.0 - 0.5 * params.gamma() * params.mean_faps()));
}

}  // namespace twotier::bounds
