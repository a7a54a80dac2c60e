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

#include <string>

#include "twotier/bounds.hpp"
#include "twotier/montecarlo.hpp"
#include "twotier/params.hpp"

namespace twotier::cli {

enum class Estimator {
    kFap,     ///< MU served by a FAP at fixed d_f
    kFapAvg,  ///< same, d_f drawn with density 2r/R^2
    kFu,      ///< FU of a FAP at fixed d_f
    kMbs,     ///< MBS-served MU
};

/// Accepts fap, fap_avg, fu, mbs. Throws std::invalid_argument otherwise.
Estimator parse_estimator(const std::string& name);
std::string estimator_name(Estimator estimator);

struct Evaluation {
    mc::OutageEstimate mc;
    bounds::BoundPair bounds;
};

/// MC estimate with its matching analytic bounds.
Evaluation evaluate(Estimator estimator, const SystemParams& params, double d_f,
                    int t, int quad_points, const mc::McOptions& options);

}  // namespace twotier::cli
