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

#ifndef WPTSIM_STRATEGIES_HPP
#define WPTSIM_STRATEGIES_HPP

#include "wptsim/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wptsim
{

// The four transmission strategies, ordered by increasing synchronization demand:
//   Siso - one antenna, no synchronization;
//   Rps  - random-phase sweeping, time/frequency sync only;
//   Bf   - reciprocity-based beamfocusing, full phase coherence;
//   Gbf  - beamfocusing with an additive Gaussian phase error per antenna.
enum class StrategyKind
{
    Siso,
    Rps,
    Bf,
    Gbf,
};

std::string to_string(StrategyKind kind);
StrategyKind strategy_from_string(const std::string &name);

// Parameters of one strategy run. Angles are radians here; the config and CLI
// layers convert from degrees at the boundary.
struct StrategyConfig
{
    StrategyKind kind = StrategyKind::Bf;

    int siso_index = -1;           // SISO: element index; -1 selects the element nearest the target
    double dwell_s = 0.010;        // RPS: phase dwell per slot
    int n_slots = 10;              // RPS: slots averaged per field sample
    double sigma_phi_rad = 0.0;    // GBF: phase error standard deviation
    double est_noise_std_rad = 0.0; // BF/GBF: uplink estimation noise
    double cfo_std_hz = 0.0;       // optional residual per-antenna frequency offset spread
    int gbf_realizations = 1;      // GBF fields: realizations averaged per sample

    std::string is_valid(std::size_t n_antennas) const;
};

// Per-antenna transmit phases for each time slot, plus the active-element mask.
// Phases are wrapped to (-pi, pi]; storage is row-major [slot][antenna].
struct TxPlan
{
    std::vector<double> phases;
    std::vector<std::uint8_t> active; // one entry per antenna
    double per_antenna_power_w = 1.0;

    std::size_t n_antennas = 0;
    std::size_t n_slots = 0;

    double phase(std::size_t slot, std::size_t antenna) const
    {
        return phases[slot * n_antennas + antenna];
    }
    double &phase(std::size_t slot, std::size_t antenna)
    {
        return phases[slot * n_antennas + antenna];
    }

    std::string is_valid() const;
};

// Beamfocusing: the opposite of each estimated uplink phase, single slot, all active.
TxPlan tx_phases_bf(const std::vector<double> &phi_hat, double per_antenna_power_w = 1.0);

// Random-phase sweeping: theta[m][t] i.i.d. uniform on [0, 2pi), wrapped. The
// draw for (antenna m, slot t) comes from rng.derive(m).derive(t), so the plan
// is independent of evaluation order.
TxPlan tx_phases_rps(std::size_t n_antennas, std::size_t n_slots, RandomStream rng,
                     double per_antenna_power_w = 1.0);

// Beamfocusing with Gaussian phase error: wrap(-phi_hat[m] + eps_m),
// eps_m ~ Normal(0, sigma_phi^2) from rng.derive(m). sigma_phi = 0 reproduces
// tx_phases_bf bit-exactly.
TxPlan tx_phases_gbf(const std::vector<double> &phi_hat, double sigma_phi_rad, RandomStream rng,
                     double per_antenna_power_w = 1.0);

// Single-antenna transmission: only siso_index active, phase 0.
TxPlan tx_phases_siso(std::size_t n_antennas, std::size_t siso_index,
                      double per_antenna_power_w = 1.0);

// Adds the phase drift wrap(2 pi cfo_m t) accumulated by per-antenna residual
// frequency offsets. A single-slot plan is broadcast over all slot times;
// otherwise slot_times must match the plan's slot count.
TxPlan apply_cfo_drift(const TxPlan &plan, const std::vector<double> &cfo_hz,
                       const std::vector<double> &slot_times_s);

} // namespace wptsim

#endif
