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

#include "twotier/cli/estimators.hpp"

#include <stdexcept>

namespace twotier::cli {

Estimator parse_estimator(const std::string& name)
{
    if (name == "fap") return Estimator::kFap;
    if (name == "fap_avg") return Estimator::kFapAvg;
    if (name == "fu") return Estimator::kFu;
    if (name == "mbs") return Estimator::kMbs;
    throw std::invalid_argument("unknown estimator '" + name +
                                "'; choose fap, fap_avg, fu or mbs");
}

std::string estimator_name(Estimator estimator)
{
    switch (estimator) {
    case Estimator::kFap: return "fap";
    case Estimator::kFapAvg: return "fap_avg";
    case Estimator::kFu: return "fu";
    case Estimator::kMbs: return "mbs";
    }
    return "unknown";
}

Evaluation evaluate(Estimator estimator, const SystemParams& params, double d_f,
                    int t, int quad_points, const mc::McOptions& options)
{
    const auto grid = geometry::QuantizationGrid::uniform(params.kappa, t);
    Evaluation ev;
    switch (estimator) {
    case Estimator::kFap:
        ev.bounds = bounds::outage_bounds_at_fap(params, d_f, grid);
        ev.mc = mc::estimate_outage_at_fap(params, d_f, options);
        break;
    case Estimator::kFu:
        ev.bounds = bounds::outage_bounds_at_fap(params, d_f, grid);
        ev.mc = mc::estimate_outage_fu_at_fap(params, d_f, options);
        break;
    case Estimator::kFapAvg:
        ev.bounds = bounds::avg_outage_bounds_at_fap(params, grid, quad_points);
        ev.mc = mc::estimate_avg_outage_at_fap(params, options);
        break;
    case Estimator::kMbs:
        ev.bounds = bounds::outage_bounds_at_mbs(params);
        ev.mc = mc::estimate_outage_at_mbs(params, options);
        break;
    }
    return ev;
}

}  // namespace twotier::cli
