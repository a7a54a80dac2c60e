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

#include "twotier/params.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string_view>

#include "twotier/geometry.hpp"

namespace twotier {

namespace {

constexpr std::array<std::string_view, 13> kKeys = {
    "R", "lambda_f", "mu_m", "mu_f", "r_f", "delta", "alpha",
    "kappa", "n_s", "n_h", "eta", "sigma_sq", "T"};

void require(bool ok, const char* key, const char* rule)
{
    if (!ok) {
        throw std::domain_error(std::string("parameter '") + key +
                                "' violates " + rule);
    }
}

int as_count(const std::string& key, double value)
{
    if (!std::isfinite(value) || value != std::floor(value) || value < 1 ||
        value > 1e9) {
        throw std::domain_error("parameter '" + key +
                                "' must be a positive integer");
    }
    return static_cast<int>(value);
}

}  // namespace

void SystemParams::validate() const
{
    auto finite = [](double v) { return std::isfinite(v); };
    require(finite(R) && R > 0, "R", "R > 0");
    require(finite(lambda_f) && lambda_f >= 0, "lambda_f", "lambda_f >= 0");
    require(finite(mu_m) && mu_m >= 0, "mu_m", "mu_m >= 0");
    require(finite(mu_f) && mu_f >= 0, "mu_f", "mu_f >= 0");
    require(finite(r_f) && r_f >= 0, "r_f", "r_f >= 0");
    require(finite(delta) && delta > 0, "delta", "delta > 0");
    require(finite(alpha) && alpha > 2, "alpha", "alpha > 2");
    require(finite(kappa) && kappa >= 0 && kappa < 1, "kappa",
            "0 <= kappa < 1");
    require(n_s >= 1, "n_s", "n_s >= 1");
    require(n_h >= 1, "n_h", "n_h >= 1");
    require(finite(eta) && eta > 0, "eta", "eta > 0");
    require(finite(sigma_sq) && sigma_sq > 0, "sigma_sq", "sigma_sq > 0");
    require(finite(T) && T >= 0, "T", "T >= 0");
}

double SystemParams::gamma() const { return geometry::gamma(kappa); }

double SystemParams::mean_faps() const
{
    return std::numbers::pi * R * R * lambda_f;
}

double SystemParams::mean_mus() const
{
    return std::numbers::pi * R * R * mu_m;
}

double SystemParams::mean_fus() const
{
    const double outer = r_f + delta;
    return std::numbers::pi * (outer * outer - r_f * r_f) * mu_f;
}

double SystemParams::mean_mus_at_fap(double d_f) const
{
    return std::numbers::pi * gamma() * d_f * d_f * mu_m;
}

std::span<const std::string_view> param_keys() { return kKeys; }

bool is_param_key(const std::string& key)
{
    for (auto k : kKeys) {
        if (k == key) return true;
    }
    return false;
}

void set_param(SystemParams& p, const std::string& key, double value)
{
    if (key == "R") p.R = value;
    else if (key == "lambda_f") p.lambda_f = value;
    else if (key == "mu_m") p.mu_m = value;
    else if (key == "mu_f") p.mu_f = value;
    else if (key == "r_f") p.r_f = value;
    else if (key == "delta") p.delta = value;
    else if (key == "alpha") p.alpha = value;
    else if (key == "kappa") p.kappa = value;
    else if (key == "n_s") p.n_s = as_count(key, value);
    else if (key == "n_h") p.n_h = as_count(key, value);
    else if (key == "eta") p.eta = value;
    else if (key == "sigma_sq") p.sigma_sq = value;
    else if (key == "T") p.T = value;
    else throw std::invalid_argument("unknown parameter '" + key + "'");
}

double get_param(const SystemParams& p, const std::string& key)
{
    if (key == "R") return p.R;
    if (key == "lambda_f") return p.lambda_f;
    if (key == "mu_m") return p.mu_m;
    if (key == "mu_f") return p.mu_f;
    if (key == "r_f") return p.r_f;
    if (key == "delta") return p.delta;
    if (key == "alpha") return p.alpha;
    if (key == "kappa") return p.kappa;
    if (key == "n_s") return p.n_s;
    if (key == "n_h") return p.n_h;
    if (key == "eta") return p.eta;
    if (key == "sigma_sq") return p.sigma_sq;
    if (key == "T") return p.T;
    throw std::invalid_argument("unknown parameter '" + key + "'");
}

}  // namespace twotier
