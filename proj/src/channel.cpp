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

#include "wptsim/channel.hpp"

#include "wptsim/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace wptsim
{

std::vector<double> ChannelVector::amplitudes() const
{
    std::vector<double> a;
    a.reserve(gains.size());
    for (const auto &g : gains)
        a.push_back(std::abs(g));
    return a;
}

ComplexGain los_channel(const Position3D &tx, const Position3D &rx, const CarrierSpec &carrier)
{
    auto error = carrier.is_valid();
    if (!error.empty())
        throw std::invalid_argument("los_channel: " + error);

    const double d = distance(tx, rx);
    if (d == 0.0)
        throw singularity_error("los_channel: receive position coincides with the transmit element");

    const double lambda = carrier.wavelength_m();
    const double magnitude = lambda / (4.0 * kPi * d);
    const double phase = wrap_phase(-kTwoPi * d / lambda);
    return std::polar(magnitude, phase);
}

ChannelVector channel_vector(const AntennaArray &array, const Position3D &rx,
                             const CarrierSpec &carrier)
{
    auto error = array.is_valid();
    if (!error.empty())
        throw std::invalid_argument("channel_vector: " + error);

    ChannelVector h;
    h.carrier = carrier;
    h.gains.reserve(array.count());
    for (std::size_t m = 0; m < array.count(); ++m)
    {
        if (array.elements[m] == rx)
            throw singularity_error("channel_vector: receive position coincides with element " +
                                    std::to_string(m));
        h.gains.push_back(los_channel(array.elements[m], rx, carrier));
    }
    return h;
}

double uplink_phase_estimate(const ComplexGain &h, double est_noise_std_rad, RandomStream rng)
{
    if (est_noise_std_rad < 0.0 || !std::isfinite(est_noise_std_rad))
        throw std::invalid_argument("uplink_phase_estimate: noise std must be >= 0");

    const double phase = std::arg(h);
    if (est_noise_std_rad == 0.0)
        return wrap_phase(phase);
    return wrap_phase(phase + rng.normal(0.0, est_noise_std_rad));
}

void scale_gains(ChannelVector &h, double amplitude_factor)
{
    if (!(amplitude_factor > 0.0) || !std::isfinite(amplitude_factor))
        throw std::invalid_argument("scale_gains: amplitude factor must be > 0");
    for (auto &g : h.gains)
        g *= amplitude_factor;
}

} // namespace wptsim
