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

#ifndef WPTSIM_CHANNEL_HPP
#define WPTSIM_CHANNEL_HPP

#include "wptsim/geometry.hpp"
#include "wptsim/rng.hpp"
#include "wptsim/units.hpp"

#include <complex>
#include <string>
#include <vector>

namespace wptsim
{

// Single-tone carrier; the wavelength is derived from the frequency.
struct CarrierSpec
{
    double frequency_hz = 920e6;

    double wavelength_m() const { return kSpeedOfLight / frequency_hz; }

    std::string is_valid() const
    {
        if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz))
            return "carrier frequency must be > 0";
        return "";
    }
};

// Complex field-amplitude ratio between one transmit element and a receive position.
using ComplexGain = std::complex<double>;

// Per-element channel gains to one receive position, ordered like the array.
struct ChannelVector
{
    std::vector<ComplexGain> gains;
    CarrierSpec carrier;

    std::size_t size() const { return gains.size(); }

    // Per-element amplitudes |h_m|.
    std::vector<double> amplitudes() const;
};

// Free-space line-of-sight gain with spherical wavefront:
// magnitude lambda/(4 pi d), phase wrap(-2 pi d / lambda).
// Throws singularity_error when tx == rx.
ComplexGain los_channel(const Position3D &tx, const Position3D &rx, const CarrierSpec &carrier);

// Element-wise los_channel for a whole array; singularity errors carry the element index.
ChannelVector channel_vector(const AntennaArray &array, const Position3D &rx,
                             const CarrierSpec &carrier);

// Uplink pilot phase estimate: wrap(arg(h) + n), n ~ Normal(0, est_noise_std^2).
// With est_noise_std == 0 the estimate is exact.
double uplink_phase_estimate(const ComplexGain &h, double est_noise_std_rad, RandomStream rng);

// Scales every gain by a constant linear amplitude factor (shared element gain).
void scale_gains(ChannelVector &h, double amplitude_factor);

} // namespace wptsim

#endif
