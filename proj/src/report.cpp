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

#include "wptsim/report.hpp"

#include "wptsim/errors.hpp"
#include "wptsim/field_io.hpp"
#include "wptsim/metrics.hpp"
#include "wptsim/units.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <stdexcept>

namespace wptsim
{

namespace
{

double value_at(const PowerField &field, const Position3D &target, const std::string &role)
{
    int ix = 0, iy = 0;
    if (!field.plane.nearest_cell(target.x, target.y, ix, iy))
        throw std::invalid_argument("metrics: target lies outside the " + role + " field plane");
    return field.at(ix, iy);
}

} // namespace

std::string metrics_json_text(const PowerField &field, const Position3D &target,
                              double threshold_db, double box_halfwidth_m,
                              const std::vector<PowerField> &companions)
{
    auto error = field.is_valid();
    if (!error.empty())
        throw std::invalid_argument("metrics: " + error);

    const CarrierSpec carrier{field.frequency_hz};
    error = carrier.is_valid();
    if (!error.empty())
        throw std::invalid_argument("metrics: " + error);
    const double lambda = carrier.wavelength_m();

    const FocalSpot spot = spot_region(field, target, threshold_db);
    const double target_dbm = field.at(spot.target_ix, spot.target_iy);

    const bool use_box = box_halfwidth_m > 0.0;
    SplitSamples split = use_box ? split_in_out(field, target, box_halfwidth_m)
                                 : split_in_out(field, spot);

    nlohmann::ordered_json doc;
    doc["format"] = "wptsim-metrics-v1";
    doc["strategy"] = to_string(field.strategy.kind);
    doc["seed"] = field.seed;
    doc["frequency_hz"] = field.frequency_hz;
    doc["lambda_m"] = lambda;
    doc["target"] = {{"x_m", target.x}, {"y_m", target.y}, {"z_m", field.plane.origin.z}};
    doc["target_rss_dbm"] = target_dbm;
    doc["threshold_db"] = threshold_db;

    doc["spot_cells"] = spot.cell_count;
    doc["spot_area_m2"] = spot.area_m2;
    doc["spot_equiv_diameter_m"] = spot.equivalent_diameter_m;
    doc["spot_diameter_over_lambda"] = spot.equivalent_diameter_m / lambda;
    doc["spot_cut_width_x_m"] = spot.cut_width_x_m;
    doc["spot_cut_width_y_m"] = spot.cut_width_y_m;

    nlohmann::ordered_json gains = nlohmann::ordered_json::object();
    for (const auto &companion : companions)
    {
        error = companion.is_valid();
        if (!error.empty())
            throw std::invalid_argument("metrics: companion field: " + error);
        const double companion_dbm = value_at(companion, target, "companion");
        gains[to_string(companion.strategy.kind)] = target_dbm - companion_dbm;
    }
    doc["gain_db"] = gains;

    doc["split_region"] = use_box ? "box" : "spot";
    if (use_box)
        doc["box_halfwidth_m"] = box_halfwidth_m;

    // Either region may be empty (a slow single-antenna falloff can keep the
    // whole plane within 3 dB); the KS distance is undefined then.
    if (!split.inside_dbm.empty() && !split.outside_dbm.empty())
        doc["ks_in_out"] = ks_distance(make_ecdf(split.inside_dbm), make_ecdf(split.outside_dbm));
    else
        doc["ks_in_out"] = nullptr;

    auto sorted = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    doc["ecdf_in"] = sorted(std::move(split.inside_dbm));
    doc["ecdf_out"] = sorted(std::move(split.outside_dbm));

    return doc.dump(2) + "\n";
}

std::vector<std::string> run_report(const SimConfig &config, const std::string &out_dir)
{
    auto error = config.is_valid();
    if (!error.empty())
        throw config_error("report: " + error);

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
        throw io_error("cannot create output directory '" + out_dir + "': " + ec.message());

    const AntennaArray array = config.build_array();
    const double tx_power_w = dbm_to_watts(config.tx_power_dbm);
    constexpr StrategyKind kinds[] = {StrategyKind::Siso, StrategyKind::Rps, StrategyKind::Bf,
                                      StrategyKind::Gbf};

    std::vector<std::string> written;
    std::vector<PowerField> fields;
    for (const StrategyKind kind : kinds)
    {
        StrategyConfig strategy = config.strategy;
        strategy.kind = kind;
        fields.push_back(simulate_field(array, config.plane, strategy, config.carrier,
                                        tx_power_w, config.target, config.seed,
                                        config.extra_gain_db, config.threads));
        const std::string path =
            (std::filesystem::path(out_dir) / ("field_" + to_string(kind) + ".csv")).string();
        save_field_csv(fields.back(), path);
        written.push_back(path);
    }

    // Fig.-3-style sweep: sigma from 0 to 180 degrees in 5 degree steps.
    std::vector<double> sigmas_rad;
    for (int deg = 0; deg <= 180; deg += 5)
        sigmas_rad.push_back(deg_to_rad(static_cast<double>(deg)));
    const SweepResult sweep =
        sweep_sigma(array, config.target, sigmas_rad, config.sweep_realizations, config.carrier,
                    tx_power_w, config.seed, config.strategy.est_noise_std_rad,
                    config.extra_gain_db, config.threads);
    const std::string sweep_path = (std::filesystem::path(out_dir) / "sweep_sigma.csv").string();
    save_sweep_csv(sweep, sweep_path);
    written.push_back(sweep_path);

    // In/out ECDFs use a half-wavelength box around the target, the same
    // region the measured distributions are reported over.
    const double box_halfwidth = config.carrier.wavelength_m() / 4.0;
    for (std::size_t k = 0; k < fields.size(); ++k)
    {
        std::vector<PowerField> companions;
        for (std::size_t j = 0; j < fields.size(); ++j)
            if (j != k)
                companions.push_back(fields[j]);
        const std::string text =
            metrics_json_text(fields[k], config.target, 3.0, box_halfwidth, companions);
        const std::string path =
            (std::filesystem::path(out_dir) /
             ("metrics_" + to_string(fields[k].strategy.kind) + ".json"))
                .string();
        write_text_file(path, text);
        written.push_back(path);
    }

    return written;
}

} // namespace wptsim
