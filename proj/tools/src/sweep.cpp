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

#include "twotier/cli/sweep.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "twotier/cli/config.hpp"

namespace twotier::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

double number(const std::string& text, const std::string& what)
{
    double v = 0;
    if (!parse_double(text, v) || !std::isfinite(v)) {
        throw std::invalid_argument("cannot parse '" + text + "' in " + what);
    }
    return v;
}

}  // namespace

bool is_sweep_param(const std::string& name)
{
    return name == "T" || name == "kappa" || name == "eta" || name == "d_f" ||
           name == "mu_m" || name == "n_h" || name == "t";
}

std::vector<double> parse_value_list(const std::string& text)
{
    std::vector<double> values;
    for (const auto& part : split(text, ',')) {
        values.push_back(number(part, "value list"));
    }
    if (values.empty()) {
        throw std::invalid_argument("empty value list");
    }
    return values;
}

std::vector<double> parse_range(const std::string& text)
{
    const auto parts = split(text, ':');
    if (parts.size() != 3 && parts.size() != 4) {
        throw std::invalid_argument("range must be start:stop:steps[:log|linear]");
    }
    const double start = number(parts[0], "range");
    const double stop = number(parts[1], "range");
    const double steps_d = number(parts[2], "range");
    if (steps_d < 1 || steps_d != std::floor(steps_d) || steps_d > 1e6) {
        throw std::invalid_argument("range steps must be a positive integer");
    }
    bool log_spacing = false;
    if (parts.size() == 4) {
        if (parts[3] == "log") {
            log_spacing = true;
        } else if (parts[3] != "linear" && parts[3] != "lin") {
            throw std::invalid_argument("range spacing must be 'log' or 'linear'");
        }
    }
    if (log_spacing && !(start > 0 && stop > 0)) {
        throw std::invalid_argument("log range needs positive endpoints");
    }
    const auto steps = static_cast<int>(steps_d);
    std::vector<double> values(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        const double f = steps == 1 ? 0.0 : static_cast<double>(i) / (steps - 1);
        values[static_cast<std::size_t>(i)] =
            log_spacing ? std::exp(std::log(start) + f * (std::log(stop) - std::log(start)))
                        : start + f * (stop - start);
    }
    values.back() = steps == 1 ? start : stop;
    return values;
}

SweepSpec make_sweep(const std::string& param, const std::string& values,
                     const std::string& range)
{
    if (!is_sweep_param(param)) {
        throw std::invalid_argument("cannot sweep '" + param +
                                    "'; choose one of T, kappa, eta, d_f, mu_m, n_h, t");
    }
    if (values.empty() == range.empty()) {
        throw std::invalid_argument("give exactly one of --values or --range");
    }
    return {param, values.empty() ? parse_range(range) : parse_value_list(values)};
}

void validate_sweep(const SweepSpec& sweep, const SystemParams& base)
{
    for (double v : sweep.values) {
        if (sweep.param == "d_f") {
            if (!(v > 0 && v < base.R)) {
                throw std::domain_error("parameter 'd_f' value " + std::to_string(v) +
                                        " is outside (0, R)");
            }
        } else if (sweep.param == "t") {
            if (v < 1 || v != std::floor(v) || v > 1e6) {
                throw std::domain_error("parameter 't' must be a positive integer");
            }
        } else {
            SystemParams p = base;
            set_param(p, sweep.param, v);
            p.validate();
        }
    }
}

}  // namespace twotier::cli
