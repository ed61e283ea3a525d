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

#ifndef WPTSIM_REPORT_HPP
#define WPTSIM_REPORT_HPP

#include "wptsim/config.hpp"
#include "wptsim/engine.hpp"
#include "wptsim/geometry.hpp"

#include <string>
#include <vector>

namespace wptsim
{

// Serialized metrics document (JSON, 2-space indent) for one field:
// focal-spot size, target level, per-companion gains, and the inside/outside
// ECDF samples. When box_halfwidth_m > 0 the in/out split uses an axis-
// aligned box of that half width around the target instead of the -3 dB spot.
// Companion gains are keyed by each companion's strategy name and measured at
// the target cell.
std::string metrics_json_text(const PowerField &field, const Position3D &target,
                              double threshold_db, double box_halfwidth_m,
                              const std::vector<PowerField> &companions);

// Runs every strategy plus the sigma sweep for one config and seed, writing
// all figure data files into out_dir:
//   field_<strategy>.csv   one power field per strategy
//   sweep_sigma.csv        P50 degradation over sigma, 0..180 deg in 5 deg steps
//   metrics_<strategy>.json focal spot and gains, companions = other strategies
// The metrics ECDFs split the plane by a half-wavelength box around the
// target. Returns the written paths in write order.
std::vector<std::string> run_report(const SimConfig &config, const std::string &out_dir);

} // namespace wptsim

#endif
