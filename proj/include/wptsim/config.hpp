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

#ifndef WPTSIM_CONFIG_HPP
#define WPTSIM_CONFIG_HPP

#include "wptsim/channel.hpp"
#include "wptsim/geometry.hpp"
#include "wptsim/strategies.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace wptsim
{

// Transmit array layout. A regular grid is built from rows/cols/spacing unless
// explicit positions are given, which override the grid keys entirely.
struct ArrayConfig
{
    int rows = 4;
    int cols = 8;
    double spacing_m = 0.6;
    double height_m = 2.4;
    double origin_x_m = 0.0;
    double origin_y_m = 0.0;

    // Keep only the first `count` grid elements (row-major); -1 keeps all.
    // The shipped default drops one corner element of the 4x8 grid.
    int count = 31;

    std::vector<Position3D> positions;
};

// One fully validated simulation setup. Angles are radians everywhere in this
// struct; config files use degrees and are converted on load.
struct SimConfig
{
    CarrierSpec carrier;              // 920 MHz default
    double tx_power_dbm = 3.0;        // per-antenna transmit power
    double extra_gain_db = 0.0;       // lumped antenna/cable gain applied to every link

    ArrayConfig array;

    SamplingPlane plane;              // defaults set in default_config()
    Position3D target;

    StrategyConfig strategy;
    std::uint64_t seed = 0;

    int sweep_realizations = 1000;    // realizations per sigma in sweep-sigma
    int threads = 0;                  // 0 = hardware concurrency

    AntennaArray build_array() const;

    // Empty string when valid, otherwise names the offending field.
    std::string is_valid() const;
};

// The shipped defaults: 31 patch antennas on a 0.6 m ceiling grid at 2.4 m,
// a 1.3 m x 1.3 m receive plane at 1 m height sampled every 1 cm, and a
// target at the plane center.
SimConfig default_config();

// Parses the key = value text format (# comments, blank lines allowed) on top
// of the defaults. Unknown keys and malformed values raise config_error with
// the line number; an unreadable file raises io_error.
SimConfig load_config(const std::string &path);

// Same parser over an already-open stream; `origin` names the source in error
// messages.
SimConfig parse_config(std::istream &in, const std::string &origin);

} // namespace wptsim

#endif
