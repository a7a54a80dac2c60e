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
#include <vector>

#include "twotier/params.hpp"

namespace twotier::cli {

/// One swept axis: T, kappa, eta, d_f, mu_m, n_h or t.
struct SweepSpec {
    std::string param;
    std::vector<double> values;
};

bool is_sweep_param(const std::string& name);

/// "0.5,1,2"
std::vector<double> parse_value_list(const std::string& text);

/// "start:stop:steps" or "start:stop:steps:log" (also ":linear"). Log
/// spacing needs start, stop > 0.
std::vector<double> parse_range(const std::string& text);

/// Builds a sweep from exactly one of `values` / `range`. Throws
/// std::invalid_argument on syntax errors.
SweepSpec make_sweep(const std::string& param, const std::string& values,
                     const std::string& range);

/// Throws std::domain_error naming the parameter if any value is outside its
/// domain when applied on top of `base`.
void validate_sweep(const SweepSpec& sweep, const SystemParams& base);

}  // namespace twotier::cli
