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

#ifndef WPTSIM_ENGINE_HPP
#define WPTSIM_ENGINE_HPP

#include "wptsim/channel.hpp"
#include "wptsim/geometry.hpp"
#include "wptsim/strategies.hpp"
#include "wptsim/units.hpp"

#include <cstdint>
#include <vector>

namespace wptsim
{

// Received-power samples (dBm) over a sampling plane, row-major [iy][ix].
// Values below kFloorDbm are clamped to the floor and count as clipped.
struct PowerField
{
    SamplingPlane plane;
    std::vector<double> values_dbm;
    StrategyConfig strategy;
    std::uint64_t seed = 0;
    double frequency_hz = 0.0;
    double tx_power_dbm = 0.0;
    double floor_dbm = kFloorDbm;

    int nx() const { return plane.nx(); }
    int ny() const { return plane.ny(); }

    double at(int ix, int iy) const { return values_dbm[static_cast<std::size_t>(iy) * nx() + ix]; }
    double &at(int ix, int iy) { return values_dbm[static_cast<std::size_t>(iy) * nx() + ix]; }

    bool clipped(int ix, int iy) const { return at(ix, iy) <= floor_dbm; }

    std::string is_valid() const;
};

// Monte Carlo sweep over the phase-error standard deviation: per-sigma target
// power samples (dBm) and their median.
struct SweepResult
{
    std::vector<double> sigmas_rad;
    std::vector<std::vector<double>> samples_dbm;
    std::vector<double> p50_dbm;

    std::uint64_t seed = 0;
    int realizations = 0;
    double frequency_hz = 0.0;
    double tx_power_dbm = 0.0;
    double est_noise_std_rad = 0.0;

    std::string is_valid() const;
};

// Coherent sum of the active elements in the given slot:
// P_tx * |sum_m h_m exp(j theta_{m,slot})|^2, in watts.
double received_power(const ChannelVector &h, const TxPlan &plan, std::size_t slot);

// Closed-form expected received power at one position for per-element
// amplitudes a_m and per-antenna transmit power P_tx:
//   Bf   -> P_tx (sum a)^2
//   Rps  -> P_tx sum a^2
//   Gbf  -> P_tx [exp(-sigma^2) ((sum a)^2 - sum a^2) + sum a^2]
//   Siso -> P_tx a_{siso_index}^2
double analytic_expected_power(const std::vector<double> &amplitudes, double tx_power_w,
                               StrategyKind kind, double sigma_rad = 0.0,
                               std::size_t siso_index = 0);

// Simulates the received-power field of one strategy over the sampling plane.
// BF/SISO fields are deterministic; GBF averages strategy.gbf_realizations
// independent error draws (default 1, the phase is constant during transfer);
// RPS averages strategy.n_slots random-phase slots drawn independently per
// grid cell. For BF/GBF the transmit phases are estimated from the channel to
// `target`. extra_gain_db is a constant per-element gain added to every path.
// Results are bit-identical for a given (inputs, seed) regardless of n_threads.
PowerField simulate_field(const AntennaArray &array, const SamplingPlane &plane,
                          const StrategyConfig &strategy, const CarrierSpec &carrier,
                          double tx_power_w, const Position3D &target, std::uint64_t seed,
                          double extra_gain_db = 0.0, int n_threads = 0);

// Monte Carlo sweep of GBF target power over phase-error standard deviations
// (ascending, radians). Each sigma gets n_real independent realizations; the
// uplink phases are re-estimated per realization when est_noise_std_rad > 0.
// sigma = 0 samples equal the deterministic BF power.
SweepResult sweep_sigma(const AntennaArray &array, const Position3D &target,
                        const std::vector<double> &sigmas_rad, int n_real,
                        const CarrierSpec &carrier, double tx_power_w, std::uint64_t seed,
                        double est_noise_std_rad = 0.0, double extra_gain_db = 0.0,
                        int n_threads = 0);

// Element index closest to the target, used for the default SISO selection.
std::size_t nearest_element(const AntennaArray &array, const Position3D &target);

} // namespace wptsim

#endif
