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

#include "wptsim/config.hpp"

#include "wptsim/errors.hpp"
#include "wptsim/units.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace wptsim
{

namespace
{

std::string trim(const std::string &s)
{
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

[[noreturn]] void fail(const std::string &origin, int line, const std::string &message)
{
    throw config_error(origin + ":" + std::to_string(line) + ": " + message);
}

double parse_double(const std::string &origin, int line, const std::string &key,
                    const std::string &value)
{
    try
    {
        std::size_t consumed = 0;
        const double v = std::stod(value, &consumed);
        if (consumed != value.size())
            fail(origin, line, key + ": trailing characters after number '" + value + "'");
        return v;
    }
    catch (const config_error &)
    {
        throw;
    }
    catch (const std::exception &)
    {
        fail(origin, line, key + ": cannot parse '" + value + "' as a number");
    }
}

long parse_int(const std::string &origin, int line, const std::string &key,
               const std::string &value)
{
    try
    {
        std::size_t consumed = 0;
        const long v = std::stol(value, &consumed);
        if (consumed != value.size())
            fail(origin, line, key + ": trailing characters after integer '" + value + "'");
        return v;
    }
    catch (const config_error &)
    {
        throw;
    }
    catch (const std::exception &)
    {
        fail(origin, line, key + ": cannot parse '" + value + "' as an integer");
    }
}

std::uint64_t parse_u64(const std::string &origin, int line, const std::string &key,
                        const std::string &value)
{
    try
    {
        std::size_t consumed = 0;
        const unsigned long long v = std::stoull(value, &consumed);
        if (consumed != value.size() || (!value.empty() && value[0] == '-'))
            fail(origin, line, key + ": expected a nonnegative integer, got '" + value + "'");
        return static_cast<std::uint64_t>(v);
    }
    catch (const config_error &)
    {
        throw;
    }
    catch (const std::exception &)
    {
        fail(origin, line, key + ": cannot parse '" + value + "' as an unsigned integer");
    }
}

// "x,y,z; x,y,z; ..." with optional whitespace.
std::vector<Position3D> parse_positions(const std::string &origin, int line,
                                        const std::string &value)
{
    std::vector<Position3D> positions;
    std::stringstream groups(value);
    std::string group;
    while (std::getline(groups, group, ';'))
    {
        group = trim(group);
        if (group.empty())
            continue;
        std::stringstream fields(group);
        std::string field;
        double xyz[3];
        int n = 0;
        while (std::getline(fields, field, ','))
        {
            if (n >= 3)
                fail(origin, line, "array.positions: more than three coordinates in '" + group + "'");
            xyz[n++] = parse_double(origin, line, "array.positions", trim(field));
        }
        if (n != 3)
            fail(origin, line, "array.positions: expected x,y,z in '" + group + "'");
        positions.push_back({xyz[0], xyz[1], xyz[2]});
    }
    if (positions.empty())
        fail(origin, line, "array.positions: no positions given");
    return positions;
}

} // namespace

AntennaArray SimConfig::build_array() const
{
    if (!array.positions.empty())
        return AntennaArray{array.positions};

    AntennaArray grid = build_ceiling_grid(array.rows, array.cols, array.spacing_m,
                                           array.height_m,
                                           {array.origin_x_m, array.origin_y_m, 0.0});
    if (array.count >= 0 && static_cast<std::size_t>(array.count) < grid.count())
        grid.elements.resize(static_cast<std::size_t>(array.count));
    return grid;
}

std::string SimConfig::is_valid() const
{
    auto error = carrier.is_valid();
    if (!error.empty())
        return "carrier.frequency_hz: " + error;
    if (!std::isfinite(tx_power_dbm))
        return "tx.power_dbm must be finite";
    if (!std::isfinite(extra_gain_db))
        return "extra_gain_db must be finite";

    if (array.positions.empty())
    {
        if (array.rows < 1 || array.cols < 1)
            return "array.rows and array.cols must be >= 1";
        if (!(array.spacing_m > 0.0) || !std::isfinite(array.spacing_m))
            return "array.spacing_m must be > 0";
        if (!std::isfinite(array.height_m) || !std::isfinite(array.origin_x_m) ||
            !std::isfinite(array.origin_y_m))
            return "array origin and height must be finite";
        if (array.count == 0 || array.count < -1)
            return "array.count must be >= 1 (or -1 for all elements)";
        if (array.count > array.rows * array.cols)
            return "array.count exceeds rows*cols";
    }

    error = build_array().is_valid();
    if (!error.empty())
        return "array: " + error;

    error = plane.is_valid();
    if (!error.empty())
        return "plane.step_m/plane.width_m/plane.height_m: " + error;
    if (!is_finite(target))
        return "target coordinates must be finite";

    error = strategy.is_valid(build_array().count());
    if (!error.empty())
        return "strategy: " + error;

    if (sweep_realizations < 1)
        return "sweep.realizations must be >= 1";
    if (threads < 0)
        return "threads must be >= 0";
    return "";
}

SimConfig default_config()
{
    SimConfig cfg;
    cfg.plane.origin = {1.45, 0.25, 1.0};
    cfg.plane.width_m = 1.3;
    cfg.plane.height_m = 1.3;
    cfg.plane.step_m = 0.01;
    cfg.target = {2.1, 0.9, 1.0};
    return cfg;
}

SimConfig parse_config(std::istream &in, const std::string &origin)
{
    SimConfig cfg = default_config();

    std::string raw;
    int line = 0;
    while (std::getline(in, raw))
    {
        ++line;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos)
            raw.erase(hash);
        const std::string text = trim(raw);
        if (text.empty())
            continue;

        const std::size_t eq = text.find('=');
        if (eq == std::string::npos)
            fail(origin, line, "expected 'key = value', got '" + text + "'");
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (key.empty())
            fail(origin, line, "missing key before '='");
        if (value.empty())
            fail(origin, line, key + ": missing value");

        if (key == "carrier.frequency_hz")
            cfg.carrier.frequency_hz = parse_double(origin, line, key, value);
        else if (key == "tx.power_dbm")
            cfg.tx_power_dbm = parse_double(origin, line, key, value);
        else if (key == "extra_gain_db")
            cfg.extra_gain_db = parse_double(origin, line, key, value);
        else if (key == "array.rows")
            cfg.array.rows = static_cast<int>(parse_int(origin, line, key, value));
        else if (key == "array.cols")
            cfg.array.cols = static_cast<int>(parse_int(origin, line, key, value));
        else if (key == "array.spacing_m")
            cfg.array.spacing_m = parse_double(origin, line, key, value);
        else if (key == "array.height_m")
            cfg.array.height_m = parse_double(origin, line, key, value);
        else if (key == "array.origin_x_m")
            cfg.array.origin_x_m = parse_double(origin, line, key, value);
        else if (key == "array.origin_y_m")
            cfg.array.origin_y_m = parse_double(origin, line, key, value);
        else if (key == "array.count")
            cfg.array.count = static_cast<int>(parse_int(origin, line, key, value));
        else if (key == "array.positions")
            cfg.array.positions = parse_positions(origin, line, value);
        else if (key == "plane.origin_x_m")
            cfg.plane.origin.x = parse_double(origin, line, key, value);
        else if (key == "plane.origin_y_m")
            cfg.plane.origin.y = parse_double(origin, line, key, value);
        else if (key == "plane.z_m")
            cfg.plane.origin.z = parse_double(origin, line, key, value);
        else if (key == "plane.width_m")
            cfg.plane.width_m = parse_double(origin, line, key, value);
        else if (key == "plane.height_m")
            cfg.plane.height_m = parse_double(origin, line, key, value);
        else if (key == "plane.step_m")
            cfg.plane.step_m = parse_double(origin, line, key, value);
        else if (key == "target.x_m")
            cfg.target.x = parse_double(origin, line, key, value);
        else if (key == "target.y_m")
            cfg.target.y = parse_double(origin, line, key, value);
        else if (key == "target.z_m")
            cfg.target.z = parse_double(origin, line, key, value);
        else if (key == "strategy.kind")
        {
            try
            {
                cfg.strategy.kind = strategy_from_string(value);
            }
            catch (const std::exception &e)
            {
                fail(origin, line, e.what());
            }
        }
        else if (key == "strategy.siso_index")
            cfg.strategy.siso_index = static_cast<int>(parse_int(origin, line, key, value));
        else if (key == "strategy.dwell_s")
            cfg.strategy.dwell_s = parse_double(origin, line, key, value);
        else if (key == "strategy.n_slots")
            cfg.strategy.n_slots = static_cast<int>(parse_int(origin, line, key, value));
        else if (key == "strategy.sigma_phi_deg")
            cfg.strategy.sigma_phi_rad = deg_to_rad(parse_double(origin, line, key, value));
        else if (key == "strategy.est_noise_std_deg")
            cfg.strategy.est_noise_std_rad = deg_to_rad(parse_double(origin, line, key, value));
        else if (key == "strategy.cfo_std_hz")
            cfg.strategy.cfo_std_hz = parse_double(origin, line, key, value);
        else if (key == "strategy.gbf_realizations")
            cfg.strategy.gbf_realizations = static_cast<int>(parse_int(origin, line, key, value));
        else if (key == "seed")
            cfg.seed = parse_u64(origin, line, key, value);
        else if (key == "sweep.realizations")
            cfg.sweep_realizations = static_cast<int>(parse_int(origin, line, key, value));
        else if (key == "threads")
            cfg.threads = static_cast<int>(parse_int(origin, line, key, value));
        else
            fail(origin, line, "unknown key '" + key + "'");
    }

    const std::string error = cfg.is_valid();
    if (!error.empty())
        throw config_error(origin + ": " + error);
    return cfg;
}

SimConfig load_config(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open config file '" + path + "'");
    return parse_config(in, path);
}

} // namespace wptsim
