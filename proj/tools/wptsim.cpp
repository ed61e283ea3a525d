// SPDX-License-Identifier: Apache-2.0
//
// wptsim - near-field RF wireless power transfer simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// Command-line front end. Subcommands:
//   simulate     one power field for one strategy
//   sweep-sigma  P50 target power vs phase-error sigma
//   metrics      focal spot, gains and ECDFs of a stored field
//   compare      point and field-wide gain between two stored fields
//   report       all figure data files for one config and seed
//
// Exit codes: 0 success, 2 config/validation error, 3 IO error, 4 numerical
// singularity.

#include <CLI11.hpp>

#include "wptsim/config.hpp"
#include "wptsim/engine.hpp"
#include "wptsim/errors.hpp"
#include "wptsim/field_io.hpp"
#include "wptsim/metrics.hpp"
#include "wptsim/report.hpp"
#include "wptsim/units.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace
{

using namespace wptsim;

// "x,y" in meters.
void parse_xy(const std::string &text, double &x, double &y)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw config_error("expected 'x,y', got '" + text + "'");
    try
    {
        std::size_t used = 0;
        x = std::stod(text.substr(0, comma), &used);
        if (used != comma)
            throw std::invalid_argument(text);
        const std::string rest = text.substr(comma + 1);
        y = std::stod(rest, &used);
        if (used != rest.size())
            throw std::invalid_argument(text);
    }
    catch (const std::exception &)
    {
        throw config_error("cannot parse coordinate pair '" + text + "'");
    }
}

// "start:stop:step" in degrees, inclusive stop; a bare number is one sigma.
std::vector<double> parse_sigma_range(const std::string &text)
{
    std::vector<double> parts;
    std::size_t begin = 0;
    while (true)
    {
        const auto colon = text.find(':', begin);
        const std::string token =
            colon == std::string::npos ? text.substr(begin) : text.substr(begin, colon - begin);
        try
        {
            std::size_t used = 0;
            parts.push_back(std::stod(token, &used));
            if (used != token.size())
                throw std::invalid_argument(token);
        }
        catch (const std::exception &)
        {
            throw config_error("cannot parse sigma range part '" + token + "'");
        }
        if (colon == std::string::npos)
            break;
        begin = colon + 1;
    }

    if (parts.size() == 1)
        return parts;
    if (parts.size() != 3)
        throw config_error("sigma range must be 'start:stop:step' in degrees");
    const double start = parts[0], stop = parts[1], step = parts[2];
    if (!(step > 0.0))
        throw config_error("sigma range step must be > 0");
    if (stop < start)
        throw config_error("sigma range stop must be >= start");

    std::vector<double> sigmas;
    for (int k = 0;; ++k)
    {
        const double value = start + k * step;
        if (value > stop + step * 1e-9)
            break;
        sigmas.push_back(value);
    }
    return sigmas;
}

void apply_overrides(SimConfig &cfg, const std::optional<std::uint64_t> &seed,
                     const std::optional<int> &threads, const std::string &target_xy)
{
    if (seed)
        cfg.seed = *seed;
    if (threads)
        cfg.threads = *threads;
    if (!target_xy.empty())
    {
        parse_xy(target_xy, cfg.target.x, cfg.target.y);
        cfg.target.z = cfg.plane.origin.z;
    }
    const std::string error = cfg.is_valid();
    if (!error.empty())
        throw config_error(error);
}

int dispatch(const std::function<void()> &action)
{
    try
    {
        action();
        return 0;
    }
    catch (const config_error &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    catch (const singularity_error &e)
    {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 4;
    }
    catch (const io_error &e)
    {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"wptsim: near-field wireless power transfer over a distributed antenna array"};
    app.require_subcommand(1);

    std::function<void()> action;

    // simulate ------------------------------------------------------------
    struct
    {
        std::string config, strategy, out, target;
        std::optional<std::uint64_t> seed;
        std::optional<int> threads;
    } sim;
    auto *simulate = app.add_subcommand("simulate", "Simulate a received-power field");
    simulate->add_option("--config", sim.config, "Config file")->required();
    simulate->add_option("--strategy", sim.strategy, "siso|rps|bf|gbf (default: config value)");
    simulate->add_option("--out", sim.out, "Output field CSV")->required();
    simulate->add_option("--seed", sim.seed, "Seed override");
    simulate->add_option("--threads", sim.threads, "Thread count override, 0 = hardware");
    simulate->add_option("--target", sim.target, "Target override as x,y meters");
    simulate->callback([&] {
        action = [&] {
            SimConfig cfg = load_config(sim.config);
            if (!sim.strategy.empty())
                cfg.strategy.kind = strategy_from_string(sim.strategy);
            apply_overrides(cfg, sim.seed, sim.threads, sim.target);

            const PowerField field = simulate_field(
                cfg.build_array(), cfg.plane, cfg.strategy, cfg.carrier,
                dbm_to_watts(cfg.tx_power_dbm), cfg.target, cfg.seed, cfg.extra_gain_db,
                cfg.threads);
            save_field_csv(field, sim.out);
            std::cout << "wrote " << sim.out << " (" << field.nx() << "x" << field.ny()
                      << " grid, strategy " << to_string(field.strategy.kind) << ", seed "
                      << field.seed << ")\n";
        };
    });

    // sweep-sigma ---------------------------------------------------------
    struct
    {
        std::string config, sigmas = "0:180:5", out;
        std::optional<int> realizations;
        std::optional<std::uint64_t> seed;
        std::optional<int> threads;
    } swp;
    auto *sweep = app.add_subcommand("sweep-sigma", "Median target power vs phase-error sigma");
    sweep->add_option("--config", swp.config, "Config file")->required();
    sweep->add_option("--sigmas", swp.sigmas, "start:stop:step in degrees (default 0:180:5)");
    sweep->add_option("--realizations", swp.realizations, "Realizations per sigma");
    sweep->add_option("--out", swp.out, "Output sweep CSV")->required();
    sweep->add_option("--seed", swp.seed, "Seed override");
    sweep->add_option("--threads", swp.threads, "Thread count override, 0 = hardware");
    sweep->callback([&] {
        action = [&] {
            SimConfig cfg = load_config(swp.config);
            if (swp.realizations)
                cfg.sweep_realizations = *swp.realizations;
            apply_overrides(cfg, swp.seed, swp.threads, "");

            std::vector<double> sigmas_rad;
            for (const double deg : parse_sigma_range(swp.sigmas))
                sigmas_rad.push_back(deg_to_rad(deg));

            const SweepResult result = sweep_sigma(
                cfg.build_array(), cfg.target, sigmas_rad, cfg.sweep_realizations, cfg.carrier,
                dbm_to_watts(cfg.tx_power_dbm), cfg.seed, cfg.strategy.est_noise_std_rad,
                cfg.extra_gain_db, cfg.threads);
            save_sweep_csv(result, swp.out);
            std::cout << "wrote " << swp.out << " (" << result.sigmas_rad.size() << " sigmas x "
                      << result.realizations << " realizations, seed " << result.seed << ")\n";
        };
    });

    // metrics ---------------------------------------------------------------
    struct
    {
        std::string field, target, out;
        std::vector<std::string> companions;
        double threshold_db = 3.0;
        double box_halfwidth = 0.0;
    } met;
    auto *metrics = app.add_subcommand("metrics", "Focal spot, gains and ECDFs of a field");
    metrics->add_option("--field", met.field, "Field CSV")->required();
    metrics->add_option("--target", met.target, "Target as x,y meters")->required();
    metrics->add_option("--companion", met.companions,
                        "Companion field CSV for gain comparison (repeatable)");
    metrics->add_option("--threshold-db", met.threshold_db, "Spot threshold (default 3 dB)");
    metrics->add_option("--box-halfwidth", met.box_halfwidth,
                        "Split in/out by a box of this half width instead of the spot");
    metrics->add_option("--out", met.out, "Output JSON")->required();
    metrics->callback([&] {
        action = [&] {
            const PowerField field = load_field_csv(met.field);
            std::vector<PowerField> companions;
            companions.reserve(met.companions.size());
            for (const auto &path : met.companions)
                companions.push_back(load_field_csv(path));

            Position3D target{0.0, 0.0, field.plane.origin.z};
            parse_xy(met.target, target.x, target.y);

            write_text_file(met.out, metrics_json_text(field, target, met.threshold_db,
                                                       met.box_halfwidth, companions));
            std::cout << "wrote " << met.out << "\n";
        };
    });

    // compare ---------------------------------------------------------------
    struct
    {
        std::string a, b, at;
    } cmp;
    auto *compare = app.add_subcommand("compare", "Gain between two fields at a point");
    compare->add_option("--a", cmp.a, "First field CSV")->required();
    compare->add_option("--b", cmp.b, "Second field CSV")->required();
    compare->add_option("--at", cmp.at, "Evaluation point as x,y meters")->required();
    compare->callback([&] {
        action = [&] {
            const PowerField a = load_field_csv(cmp.a);
            const PowerField b = load_field_csv(cmp.b);
            if (!(a.plane.origin == b.plane.origin) || a.plane.step_m != b.plane.step_m ||
                a.nx() != b.nx() || a.ny() != b.ny())
                throw config_error("field grids differ; compare needs matching planes");

            double x = 0.0, y = 0.0;
            parse_xy(cmp.at, x, y);
            int ix = 0, iy = 0;
            if (!a.plane.nearest_cell(x, y, ix, iy))
                throw config_error("point lies outside the field plane");

            std::vector<double> diff(a.values_dbm.size());
            double mean = 0.0;
            for (std::size_t i = 0; i < diff.size(); ++i)
            {
                diff[i] = a.values_dbm[i] - b.values_dbm[i];
                mean += diff[i];
            }
            mean /= static_cast<double>(diff.size());
            const auto [min_it, max_it] = std::minmax_element(diff.begin(), diff.end());

            std::printf("at (%g, %g): a=%.3f dBm, b=%.3f dBm, gain=%.3f dB\n", x, y,
                        a.at(ix, iy), b.at(ix, iy), a.at(ix, iy) - b.at(ix, iy));
            std::printf("field-wide a-b: mean=%.3f dB, median=%.3f dB, min=%.3f dB, max=%.3f dB\n",
                        mean, percentile(diff, 0.5), *min_it, *max_it);
        };
    });

    // report ----------------------------------------------------------------
    struct
    {
        std::string config, out;
        std::optional<std::uint64_t> seed;
        std::optional<int> threads;
    } rep;
    auto *report = app.add_subcommand("report", "All figure data files for one config");
    report->add_option("--config", rep.config, "Config file")->required();
    report->add_option("--out", rep.out, "Output directory")->required();
    report->add_option("--seed", rep.seed, "Seed override");
    report->add_option("--threads", rep.threads, "Thread count override, 0 = hardware");
    report->callback([&] {
        action = [&] {
            SimConfig cfg = load_config(rep.config);
            apply_overrides(cfg, rep.seed, rep.threads, "");
            for (const auto &path : run_report(cfg, rep.out))
                std::cout << "wrote " << path << "\n";
        };
    });

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    return dispatch(action);
}
