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

#include "twotier/cli/app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <memory>
#include <sstream>
#include <utility>
#include <vector>

#include "twotier/bounds.hpp"
#include "twotier/cli/acceptance.hpp"
#include "twotier/cli/areas.hpp"
#include "twotier/cli/config.hpp"
#include "twotier/cli/csv.hpp"
#include "twotier/cli/estimators.hpp"
#include "twotier/cli/sweep.hpp"
#include "twotier/montecarlo.hpp"

namespace twotier::cli {

namespace {

struct Common {
    std::string config;
    std::uint64_t seed = 1;
    std::uint64_t trials = 100000;
    unsigned threads = 1;
    int t = 32;
    std::string collision = "expected";
    bool include_cross_femto = false;
    bool include_fu_at_mbs = false;
    std::string out;
    int quad_points = 128;
    std::vector<std::pair<std::string, double>> overrides;
};

void add_common(CLI::App* app, Common& c)
{
    app->add_option("--config", c.config, "key = value parameter file");
    app->add_option("--seed", c.seed, "master seed");
    app->add_option("--trials", c.trials, "effective Monte Carlo trials")
        ->check(CLI::PositiveNumber);
    app->add_option("--threads", c.threads, "worker threads (0 = all cores)");
    app->add_option("--t", c.t, "quantization grid levels")->check(CLI::PositiveNumber);
    app->add_option("--collision", c.collision, "expected | sampled")
        ->check(CLI::IsMember({"expected", "sampled"}));
    app->add_flag("--include-cross-femto", c.include_cross_femto,
                  "count other femtocells' users at the FAP");
    app->add_flag("--include-fu-at-mbs", c.include_fu_at_mbs,
                  "count femto users at the MBS");
    app->add_option("--out", c.out, "output path (default stdout)");
    app->add_option("--quad-points", c.quad_points, "quadrature nodes for d_f averaging")
        ->check(CLI::Range(2, 1 << 20));
    for (auto key : param_keys()) {
        const std::string name(key);
        app->add_option_function<double>(
            "--" + name, [&c, name](const double& v) { c.overrides.emplace_back(name, v); },
            "override " + name);
    }
}

SystemParams resolve_params(const Common& c)
{
    SystemParams params = c.config.empty() ? SystemParams{} : load_config(c.config);
    for (const auto& [key, value] : c.overrides) set_param(params, key, value);
    params.validate();
    return params;
}

mc::McOptions mc_options(const Common& c)
{
    mc::McOptions options;
    options.trials = c.trials;
    options.seed = c.seed;
    options.threads = c.threads;
    options.sir.collision =
        c.collision == "sampled" ? CollisionMode::kSampled : CollisionMode::kExpected;
    options.sir.include_cross_femto = c.include_cross_femto;
    options.sir.include_fu_at_mbs = c.include_fu_at_mbs;
    return options;
}

CsvRow make_row(const std::string& param, const std::string& value,
                Estimator estimator, const Evaluation& ev)
{
    CsvRow row;
    row.param = param;
    row.value = value;
    row.estimator = estimator_name(estimator);
    row.trials = ev.mc.attempts;
    row.effective_trials = ev.mc.trials;
    row.p_hat = ev.mc.p_hat;
    row.std_error = ev.mc.std_error;
    row.bound_lower = ev.bounds.lower_clamped;
    row.bound_upper = ev.bounds.upper_clamped;
    row.bound_lower_raw = ev.bounds.lower;
    row.bound_upper_raw = ev.bounds.upper;
    row.seed = ev.mc.seed;
    return row;
}

// Writes to --out when given, else to `fallback`. Output is buffered so a
// failed run leaves no partial file.
void emit(const Common& c, std::ostream& fallback, const std::string& text)
{
    if (c.out.empty()) {
        fallback << text;
        return;
    }
    std::ofstream file(c.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file '" + c.out + "'");
    file << text;
    if (!file) throw std::runtime_error("failed writing '" + c.out + "'");
}

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) parts.push_back(item);
    }
    return parts;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Two-tier femtocell uplink outage: analytic bounds and Monte Carlo"};
    app.require_subcommand(1);
    Common c;

    auto* fap = app.add_subcommand("outage-fap", "FAP-served user outage, bounds and MC");
    add_common(fap, c);
    double d_f = 700;
    bool random_d_f = false;
    std::string target = "mu";
    fap->add_option("--d_f", d_f, "tagged FAP distance to the MBS");
    fap->add_flag("--random-d_f", random_d_f, "average over d_f with density 2r/R^2");
    fap->add_option("--target", target, "mu | fu")->check(CLI::IsMember({"mu", "fu"}));

    auto* mbs = app.add_subcommand("outage-mbs", "MBS-served user outage, bounds and MC");
    add_common(mbs, c);

    auto* sweep = app.add_subcommand("sweep", "one CSV row per value per estimator");
    add_common(sweep, c);
    std::string sweep_param, sweep_values, sweep_range, sweep_estimators = "fap";
    sweep->add_option("--param", sweep_param, "T, kappa, eta, d_f, mu_m, n_h or t")
        ->required();
    sweep->add_option("--values", sweep_values, "comma-separated values");
    sweep->add_option("--range", sweep_range, "start:stop:steps[:log]");
    sweep->add_option("--estimator", sweep_estimators, "comma list of fap, fap_avg, fu, mbs");
    sweep->add_option("--d_f", d_f, "tagged FAP distance for fap and fu");

    auto* areas = app.add_subcommand("areas", "partition areas against a sampled oracle");
    add_common(areas, c);
    std::uint64_t samples = 1000000;
    areas->add_option("--d_f", d_f, "tagged FAP distance");
    areas->add_option("--samples", samples, "oracle sample count")->check(CLI::PositiveNumber);

    auto* laplace = app.add_subcommand("laplace", "MBS-served MU count transform vs bounds");
    add_common(laplace, c);
    std::string s_values = "0.1,0.5,1,2";
    laplace->add_option("--s", s_values, "comma-separated transform arguments");
    laplace->add_option("--d_f", d_f, "tagged FAP distance for the conditional variant");

    auto* validate = app.add_subcommand("validate", "run the acceptance suite");
    add_common(validate, c);
    std::string only;
    validate->add_option("--only", only, "comma list of criterion ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        const SystemParams params = resolve_params(c);
        const mc::McOptions options = mc_options(c);
        std::ostringstream csv;

        if (app.got_subcommand(fap)) {
            write_csv_header(csv);
            const Estimator est = random_d_f  ? Estimator::kFapAvg
                                  : target == "fu" ? Estimator::kFu
                                                   : Estimator::kFap;
            const auto ev = evaluate(est, params, d_f, c.t, c.quad_points, options);
            write_csv_row(csv, make_row("d_f", random_d_f ? "random" : format_double(d_f),
                                        est, ev));
        } else if (app.got_subcommand(mbs)) {
            write_csv_header(csv);
            const auto ev =
                evaluate(Estimator::kMbs, params, d_f, c.t, c.quad_points, options);
            write_csv_row(csv, make_row("T", format_double(params.T), Estimator::kMbs, ev));
        } else if (app.got_subcommand(sweep)) {
            const SweepSpec spec = make_sweep(sweep_param, sweep_values, sweep_range);
            validate_sweep(spec, params);
            std::vector<Estimator> estimators;
            for (const auto& name : split_list(sweep_estimators)) {
                estimators.push_back(parse_estimator(name));
            }
            if (estimators.empty()) throw std::invalid_argument("no estimator given");
            for (auto e : estimators) {
                if (spec.param == "d_f" && (e == Estimator::kFapAvg || e == Estimator::kMbs)) {
                    throw std::invalid_argument("estimator '" + estimator_name(e) +
                                                "' does not depend on d_f");
                }
            }
            write_csv_header(csv);
            for (double v : spec.values) {
                SystemParams p = params;
                double dist = d_f;
                int t = c.t;
                if (spec.param == "d_f") {
                    dist = v;
                } else if (spec.param == "t") {
                    t = static_cast<int>(v);
                } else {
                    set_param(p, spec.param, v);
                }
                for (auto e : estimators) {
                    const auto ev = evaluate(e, p, dist, t, c.quad_points, options);
                    write_csv_row(csv, make_row(spec.param, format_double(v), e, ev));
                }
            }
        } else if (app.got_subcommand(areas)) {
            if (!(d_f > 0 && d_f < params.R)) {
                throw std::domain_error("parameter 'd_f' must lie in (0, R)");
            }
            const auto grid = geometry::QuantizationGrid::uniform(params.kappa, c.t);
            const auto cmp = compare_areas(d_f, params.R, grid, samples, c.seed);
            csv << "region,area,area_sampled,prob,error_over_total\n";
            for (int i = -c.t; i <= c.t; ++i) {
                const auto k = static_cast<std::size_t>(i + c.t);
                csv << i << ',' << format_double(cmp.closed.areas[k]) << ','
                    << format_double(cmp.sampled[k]) << ','
                    << format_double(cmp.closed.probs[k]) << ','
                    << format_double(std::abs(cmp.closed.areas[k] - cmp.sampled[k]) /
                                     cmp.closed.total)
                    << '\n';
            }
            csv << "coverage," << format_double(cmp.coverage_closed) << ','
                << format_double(cmp.coverage_sampled) << ",,\n";
            err << "max_error_over_total " << format_double(cmp.max_error_over_total())
                << '\n';
        } else if (app.got_subcommand(laplace)) {
            write_csv_header(csv);
            for (const auto& text : split_list(s_values)) {
                double s = 0;
                if (!parse_double(text, s)) {
                    throw std::invalid_argument("cannot parse s value '" + text + "'");
                }
                const auto plain = mc::estimate_laplace_nm_bm(params, s, std::nullopt, options);
                const auto plain_b = bounds::laplace_n_mu_mbs_bounds(params, s);
                const auto cond = mc::estimate_laplace_nm_bm(params, s, d_f, options);
                const auto cond_b = bounds::laplace_n_mu_mbs_cond_bounds(params, s, d_f);
                for (const auto& [name, est, b] :
                     {std::tuple{"laplace", plain, plain_b},
                      std::tuple{"laplace_cond", cond, cond_b}}) {
                    CsvRow row;
                    row.param = "s";
                    row.value = format_double(s);
                    row.estimator = name;
                    row.trials = est.trials;
                    row.effective_trials = est.trials;
                    row.p_hat = est.mean;
                    row.std_error = est.std_error;
                    row.bound_lower = b.lower_clamped;
                    row.bound_upper = b.upper_clamped;
                    row.bound_lower_raw = b.lower;
                    row.bound_upper_raw = b.upper;
                    row.seed = est.seed;
                    write_csv_row(csv, row);
                }
            }
        } else if (app.got_subcommand(validate)) {
            AcceptanceOptions acc;
            acc.trials = c.trials;
            acc.seed = c.seed;
            acc.threads = c.threads;
            acc.only = split_list(only);
            int failures = 0;
            if (c.out.empty()) {
                failures = run_acceptance(acc, out);
            } else {
                failures = run_acceptance(acc, csv);
                emit(c, out, csv.str());
            }
            return failures == 0 ? 0 : 1;
        }
        emit(c, out, csv.str());
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace twotier::cli
