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

#ifndef WPTSIM_UNITS_HPP
#define WPTSIM_UNITS_HPP

#include <cmath>
#include <limits>

namespace wptsim
{

inline constexpr double kSpeedOfLight = 299792458.0; // m/s
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Power values below this level are clamped when converting to dBm.
inline constexpr double kFloorDbm = -150.0;

// Wraps an angle to the (-pi, pi] convention used throughout the project.
inline double wrap_phase(double rad)
{
    double w = std::remainder(rad, kTwoPi); // [-pi, pi]
    if (w <= -kPi)
        w += kTwoPi;
    return w;
}

inline double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
inline double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double ratio) { return 10.0 * std::log10(ratio); }

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

inline double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

// dBm conversion with the report floor applied; zero or denormal powers map to the floor.
inline double watts_to_dbm_floored(double watts, double floor_dbm = kFloorDbm)
{
    if (watts <= 0.0)
        return floor_dbm;
    double dbm = watts_to_dbm(watts);
    return dbm < floor_dbm ? floor_dbm : dbm;
}

} // namespace wptsim

#endif
