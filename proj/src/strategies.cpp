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

#include "wptsim/strategies.hpp"

#include "wptsim/units.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wptsim
{

std::string to_string(StrategyKind kind)
{
    switch (kind)
    {
    case StrategyKind::Siso:
        return "siso";
    case StrategyKind::Rps:
        return "rps";
    case StrategyKind::Bf:
        return "bf";
    case StrategyKind::Gbf:
        return "gbf";
    }
    throw std::invalid_argument("to_string: unknown strategy kind");
}

StrategyKind strategy_from_string(const std::string &name)
{
    std::string s = name;
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "siso")
        return StrategyKind::Siso;
    if (s == "rps")
        return StrategyKind::Rps;
    if (s == "bf")
        return StrategyKind::Bf;
    if (s == "gbf" || s == "g-bf")
        return StrategyKind::Gbf;
    throw std::invalid_argument("unknown strategy '" + name + "' (expected siso, rps, bf or gbf)");
}

std::string StrategyConfig::is_valid(std::size_t n_antennas) const
{
    if (sigma_phi_rad < 0.0 || !std::isfinite(sigma_phi_rad))
        return "sigma_phi must be >= 0";
    if (est_noise_std_rad < 0.0 || !std::isfinite(est_noise_std_rad))
        return "est_noise_std must be >= 0";
    if (!(dwell_s > 0.0) || !std::isfinite(dwell_s))
        return "dwell must be > 0";
    if (n_slots < 1)
        return "n_slots must be >= 1";
    if (gbf_realizations < 1)
        return "gbf_realizations must be >= 1";
    if (cfo_std_hz < 0.0 || !std::isfinite(cfo_std_hz))
        return "cfo_std_hz must be >= 0";
    if (kind == StrategyKind::Siso && siso_index >= 0 &&
        static_cast<std::size_t>(siso_index) >= n_antennas)
        return "siso_index out of range";
    return "";
}

std::string TxPlan::is_valid() const
{
    if (n_antennas == 0 || n_slots == 0)
        return "plan must cover at least one antenna and one slot";
    if (phases.size() != n_antennas * n_slots || active.size() != n_antennas)
        return "plan dimensions are inconsistent";
    if (!(per_antenna_power_w > 0.0))
        return "per-antenna power must be > 0";
    if (std::none_of(active.begin(), active.end(), [](std::uint8_t a) { return a != 0; }))
        return "at least one antenna must be active";
    return "";
}

namespace
{
TxPlan make_plan(std::size_t n_antennas, std::size_t n_slots, double per_antenna_power_w)
{
    if (n_antennas == 0)
        throw std::invalid_argument("transmit plan needs at least one antenna");
    if (n_slots == 0)
        throw std::invalid_argument("transmit plan needs at least one slot");
    if (!(per_antenna_power_w > 0.0) || !std::isfinite(per_antenna_power_w))
        throw std::invalid_argument("per-antenna power must be > 0");

    TxPlan plan;
    plan.n_antennas = n_antennas;
    plan.n_slots = n_slots;
    plan.phases.assign(n_antennas * n_slots, 0.0);
    plan.active.assign(n_antennas, 1);
    plan.per_antenna_power_w = per_antenna_power_w;
    return plan;
}
} // namespace

TxPlan tx_phases_bf(const std::vector<double> &phi_hat, double per_antenna_power_w)
{
    if (phi_hat.empty())
        throw std::invalid_argument("tx_phases_bf: phase estimates must not be empty");

    TxPlan plan = make_plan(phi_hat.size(), 1, per_antenna_power_w);
    for (std::size_t m = 0; m < phi_hat.size(); ++m)
        plan.phase(0, m) = wrap_phase(-phi_hat[m]);
    return plan;
}

TxPlan tx_phases_rps(std::size_t n_antennas, std::size_t n_slots, RandomStream rng,
                     double per_antenna_power_w)
{
    TxPlan plan = make_plan(n_antennas, n_slots, per_antenna_power_w);
    for (std::size_t m = 0; m < n_antennas; ++m)
    {
        RandomStream antenna_stream = rng.derive(m);
        for (std::size_t t = 0; t < n_slots; ++t)
            plan.phase(t, m) = wrap_phase(antenna_stream.derive(t).uniform(0.0, kTwoPi));
    }
    return plan;
}

TxPlan tx_phases_gbf(const std::vector<double> &phi_hat, double sigma_phi_rad, RandomStream rng,
                     double per_antenna_power_w)
{
    if (phi_hat.empty())
        throw std::invalid_argument("tx_phases_gbf: phase estimates must not be empty");
    if (sigma_phi_rad < 0.0 || !std::isfinite(sigma_phi_rad))
        throw std::invalid_argument("tx_phases_gbf: sigma_phi must be >= 0");

    TxPlan plan = make_plan(phi_hat.size(), 1, per_antenna_power_w);
    for (std::size_t m = 0; m < phi_hat.size(); ++m)
    {
        const double eps = rng.derive(m).normal(0.0, sigma_phi_rad);
        plan.phase(0, m) = wrap_phase(-phi_hat[m] + eps);
    }
    return plan;
}

TxPlan tx_phases_siso(std::size_t n_antennas, std::size_t siso_index, double per_antenna_power_w)
{
    if (siso_index >= n_antennas)
        throw std::invalid_argument("tx_phases_siso: index " + std::to_string(siso_index) +
                                    " out of range for " + std::to_string(n_antennas) + " antennas");

    TxPlan plan = make_plan(n_antennas, 1, per_antenna_power_w);
    plan.active.assign(n_antennas, 0);
    plan.active[siso_index] = 1;
    return plan;
}

TxPlan apply_cfo_drift(const TxPlan &plan, const std::vector<double> &cfo_hz,
                       const std::vector<double> &slot_times_s)
{
    auto error = plan.is_valid();
    if (!error.empty())
        throw std::invalid_argument("apply_cfo_drift: " + error);
    if (cfo_hz.size() != plan.n_antennas)
        throw std::invalid_argument("apply_cfo_drift: cfo list must have one entry per antenna");
    if (slot_times_s.empty())
        throw std::invalid_argument("apply_cfo_drift: slot times must not be empty");
    if (plan.n_slots != 1 && slot_times_s.size() != plan.n_slots)
        throw std::invalid_argument("apply_cfo_drift: slot times must match the plan's slot count");

    TxPlan out = plan;
    if (plan.n_slots == 1 && slot_times_s.size() > 1)
    {
        // Broadcast the single-slot plan over all requested times.
        out.n_slots = slot_times_s.size();
        out.phases.resize(out.n_slots * out.n_antennas);
        for (std::size_t t = 0; t < out.n_slots; ++t)
            for (std::size_t m = 0; m < out.n_antennas; ++m)
                out.phase(t, m) = plan.phase(0, m);
    }

    for (std::size_t t = 0; t < out.n_slots; ++t)
        for (std::size_t m = 0; m < out.n_antennas; ++m)
            out.phase(t, m) = wrap_phase(out.phase(t, m) + kTwoPi * cfo_hz[m] * slot_times_s[t]);
    return out;
}

} // namespace wptsim
