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

#include "wptsim/engine.hpp"

#include "wptsim/errors.hpp"
#include "wptsim/metrics.hpp"
#include "wptsim/rng.hpp"

#include <cmath>
#include <complex>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace wptsim
{

namespace
{

// Substream derivation layout. Every random draw is reached through
// root.derive(purpose).derive(...), so work units are order-independent:
//   estimate:  (kEstimate, realization_or_sigma..., antenna)
//   gbf phase: (kGbfPhase, realization_or_sigma...) -> per-antenna inside tx_phases_gbf
//   rps slots: (kRpsSlots, cell) -> per-(antenna, slot) inside tx_phases_rps
//   cfo:       (kCfo, antenna)
constexpr std::uint64_t kEstimate = 0;
constexpr std::uint64_t kGbfPhase = 1;
constexpr std::uint64_t kRpsSlots = 2;
constexpr std::uint64_t kCfo = 3;

// Runs fn(i) for i in [0, n) on up to n_threads threads (0 = hardware count).
// Each index is processed exactly once; exceptions are rethrown in the caller.
void parallel_for(std::size_t n, int n_threads, const std::function<void(std::size_t)> &fn)
{
    unsigned threads = n_threads > 0 ? static_cast<unsigned>(n_threads)
                                     : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (threads <= 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }

    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned k = 0; k < threads; ++k)
    {
        const std::size_t begin = n * k / threads;
        const std::size_t end = n * (k + 1) / threads;
        pool.emplace_back([&, begin, end] {
            try
            {
                for (std::size_t i = begin; i < end; ++i)
                    fn(i);
            }
            catch (...)
            {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
            }
        });
    }
    for (auto &t : pool)
        t.join();
    if (first_error)
        std::rethrow_exception(first_error);
}

std::vector<double> estimate_phases(const ChannelVector &h, double est_noise_std_rad,
                                    const RandomStream &est_stream)
{
    std::vector<double> phi_hat(h.size());
    for (std::size_t m = 0; m < h.size(); ++m)
        phi_hat[m] = uplink_phase_estimate(h.gains[m], est_noise_std_rad, est_stream.derive(m));
    return phi_hat;
}

std::vector<double> draw_cfo(std::size_t n_antennas, double cfo_std_hz, const RandomStream &root)
{
    std::vector<double> cfo(n_antennas, 0.0);
    if (cfo_std_hz > 0.0)
    {
        RandomStream stream = root.derive(kCfo);
        for (std::size_t m = 0; m < n_antennas; ++m)
            cfo[m] = stream.derive(m).normal(0.0, cfo_std_hz);
    }
    return cfo;
}

std::vector<double> slot_times(int n_slots, double dwell_s)
{
    std::vector<double> times(static_cast<std::size_t>(n_slots));
    for (int t = 0; t < n_slots; ++t)
        times[static_cast<std::size_t>(t)] = t * dwell_s;
    return times;
}

double mean_power_over_slots(const ChannelVector &h, const TxPlan &plan)
{
    double sum = 0.0;
    for (std::size_t t = 0; t < plan.n_slots; ++t)
        sum += received_power(h, plan, t);
    return sum / static_cast<double>(plan.n_slots);
}

} // namespace

std::string PowerField::is_valid() const
{
    auto error = plane.is_valid();
    if (!error.empty())
        return error;
    if (values_dbm.size() != plane.size())
        return "field value count does not match the plane grid";
    return "";
}

std::string SweepResult::is_valid() const
{
    if (sigmas_rad.empty())
        return "sweep must cover at least one sigma";
    if (samples_dbm.size() != sigmas_rad.size() || p50_dbm.size() != sigmas_rad.size())
        return "sweep result dimensions are inconsistent";
    for (const auto &s : samples_dbm)
        if (s.empty())
            return "each sigma needs at least one sample";
    return "";
}

double received_power(const ChannelVector &h, const TxPlan &plan, std::size_t slot)
{
    auto error = plan.is_valid();
    if (!error.empty())
        throw std::invalid_argument("received_power: " + error);
    if (plan.n_antennas != h.size())
        throw std::invalid_argument("received_power: plan covers " +
                                    std::to_string(plan.n_antennas) + " antennas but the channel has " +
                                    std::to_string(h.size()));
    if (slot >= plan.n_slots)
        throw std::invalid_argument("received_power: slot index out of range");

    std::complex<double> sum = 0.0;
    for (std::size_t m = 0; m < plan.n_antennas; ++m)
        if (plan.active[m])
            sum += h.gains[m] * std::polar(1.0, plan.phase(slot, m));
    return plan.per_antenna_power_w * std::norm(sum);
}

double analytic_expected_power(const std::vector<double> &amplitudes, double tx_power_w,
                               StrategyKind kind, double sigma_rad, std::size_t siso_index)
{
    if (amplitudes.empty())
        throw std::invalid_argument("analytic_expected_power: amplitudes must not be empty");
    if (!(tx_power_w > 0.0))
        throw std::invalid_argument("analytic_expected_power: transmit power must be > 0");

    double sum_a = 0.0;
    double sum_a2 = 0.0;
    for (double a : amplitudes)
    {
        if (a < 0.0 || !std::isfinite(a))
            throw std::invalid_argument("analytic_expected_power: amplitudes must be >= 0");
        sum_a += a;
        sum_a2 += a * a;
    }

    switch (kind)
    {
    case StrategyKind::Bf:
        return tx_power_w * sum_a * sum_a;
    case StrategyKind::Rps:
        return tx_power_w * sum_a2;
    case StrategyKind::Gbf:
    {
        if (sigma_rad < 0.0 || !std::isfinite(sigma_rad))
            throw std::invalid_argument("analytic_expected_power: sigma must be >= 0");
        const double coherent = std::exp(-sigma_rad * sigma_rad);
        return tx_power_w * (coherent * (sum_a * sum_a - sum_a2) + sum_a2);
    }
    case StrategyKind::Siso:
        if (siso_index >= amplitudes.size())
            throw std::invalid_argument("analytic_expected_power: siso index out of range");
        return tx_power_w * amplitudes[siso_index] * amplitudes[siso_index];
    }
    throw std::invalid_argument("analytic_expected_power: unknown strategy kind");
}

std::size_t nearest_element(const AntennaArray &array, const Position3D &target)
{
    auto error = array.is_valid();
    if (!error.empty())
        throw std::invalid_argument("nearest_element: " + error);

    std::size_t best = 0;
    double best_d = distance(array.elements[0], target);
    for (std::size_t m = 1; m < array.count(); ++m)
    {
        const double d = distance(array.elements[m], target);
        if (d < best_d)
        {
            best_d = d;
            best = m;
        }
    }
    return best;
}

PowerField simulate_field(const AntennaArray &array, const SamplingPlane &plane,
                          const StrategyConfig &strategy, const CarrierSpec &carrier,
                          double tx_power_w, const Position3D &target, std::uint64_t seed,
                          double extra_gain_db, int n_threads)
{
    auto error = array.is_valid();
    if (!error.empty())
        throw std::invalid_argument("simulate_field: " + error);
    error = plane.is_valid();
    if (!error.empty())
        throw std::invalid_argument("simulate_field: " + error);
    error = carrier.is_valid();
    if (!error.empty())
        throw std::invalid_argument("simulate_field: " + error);
    error = strategy.is_valid(array.count());
    if (!error.empty())
        throw std::invalid_argument("simulate_field: " + error);
    if (!(tx_power_w > 0.0) || !std::isfinite(tx_power_w))
        throw std::invalid_argument("simulate_field: transmit power must be > 0");
    if (!is_finite(target))
        throw std::invalid_argument("simulate_field: target must be finite");

    const bool reciprocity_based =
        strategy.kind == StrategyKind::Bf || strategy.kind == StrategyKind::Gbf;
    if (reciprocity_based)
    {
        const double max_x = plane.origin.x + (plane.nx() - 1) * plane.step_m;
        const double max_y = plane.origin.y + (plane.ny() - 1) * plane.step_m;
        if (target.x < plane.origin.x - 1e-9 || target.x > max_x + 1e-9 ||
            target.y < plane.origin.y - 1e-9 || target.y > max_y + 1e-9)
            throw std::invalid_argument("simulate_field: target lies outside the sampling plane");
    }

    const RandomStream root(seed);
    const double gain_factor = std::pow(10.0, extra_gain_db / 20.0);

    StrategyConfig resolved = strategy;
    std::vector<TxPlan> plans;

    switch (strategy.kind)
    {
    case StrategyKind::Siso:
    {
        std::size_t index = strategy.siso_index >= 0
                                ? static_cast<std::size_t>(strategy.siso_index)
                                : nearest_element(array, target);
        resolved.siso_index = static_cast<int>(index);
        plans.push_back(tx_phases_siso(array.count(), index, tx_power_w));
        break;
    }
    case StrategyKind::Bf:
    case StrategyKind::Gbf:
    {
        ChannelVector h_target = channel_vector(array, target, carrier);
        scale_gains(h_target, gain_factor);

        const std::vector<double> cfo = draw_cfo(array.count(), strategy.cfo_std_hz, root);
        const bool drift = strategy.cfo_std_hz > 0.0 && strategy.n_slots > 1;
        const std::vector<double> times = slot_times(drift ? strategy.n_slots : 1, strategy.dwell_s);

        const int n_real = strategy.kind == StrategyKind::Gbf ? strategy.gbf_realizations : 1;
        for (int r = 0; r < n_real; ++r)
        {
            const auto ur = static_cast<std::uint64_t>(r);
            std::vector<double> phi_hat = estimate_phases(h_target, strategy.est_noise_std_rad,
                                                          root.derive(kEstimate).derive(ur));
            TxPlan plan = strategy.kind == StrategyKind::Bf
                              ? tx_phases_bf(phi_hat, tx_power_w)
                              : tx_phases_gbf(phi_hat, strategy.sigma_phi_rad,
                                              root.derive(kGbfPhase).derive(ur), tx_power_w);
            if (drift)
                plan = apply_cfo_drift(plan, cfo, times);
            plans.push_back(std::move(plan));
        }
        break;
    }
    case StrategyKind::Rps:
        break; // per-cell plans, drawn in the grid loop
    }

    PowerField field;
    field.plane = plane;
    field.values_dbm.assign(plane.size(), 0.0);
    field.strategy = resolved;
    field.seed = seed;
    field.frequency_hz = carrier.frequency_hz;
    field.tx_power_dbm = watts_to_dbm(tx_power_w);

    const int nx = plane.nx();
    parallel_for(plane.size(), n_threads, [&](std::size_t i) {
        const int ix = static_cast<int>(i) % nx;
        const int iy = static_cast<int>(i) / nx;
        ChannelVector h = channel_vector(array, plane.point(ix, iy), carrier);
        scale_gains(h, gain_factor);

        double watts = 0.0;
        if (strategy.kind == StrategyKind::Rps)
        {
            TxPlan plan = tx_phases_rps(array.count(), static_cast<std::size_t>(strategy.n_slots),
                                        root.derive(kRpsSlots).derive(i), tx_power_w);
            watts = mean_power_over_slots(h, plan);
        }
        else
        {
            for (const auto &plan : plans)
                watts += mean_power_over_slots(h, plan);
            watts /= static_cast<double>(plans.size());
        }
        field.values_dbm[i] = watts_to_dbm_floored(watts, field.floor_dbm);
    });

    return field;
}

SweepResult sweep_sigma(const AntennaArray &array, const Position3D &target,
                        const std::vector<double> &sigmas_rad, int n_real,
                        const CarrierSpec &carrier, double tx_power_w, std::uint64_t seed,
                        double est_noise_std_rad, double extra_gain_db, int n_threads)
{
    auto error = array.is_valid();
    if (!error.empty())
        throw std::invalid_argument("sweep_sigma: " + error);
    error = carrier.is_valid();
    if (!error.empty())
        throw std::invalid_argument("sweep_sigma: " + error);
    if (n_real < 1)
        throw std::invalid_argument("sweep_sigma: realizations must be >= 1");
    if (sigmas_rad.empty())
        throw std::invalid_argument("sweep_sigma: sigma list must not be empty");
    for (std::size_t i = 0; i < sigmas_rad.size(); ++i)
    {
        if (sigmas_rad[i] < 0.0 || !std::isfinite(sigmas_rad[i]))
            throw std::invalid_argument("sweep_sigma: sigmas must be >= 0");
        if (i > 0 && sigmas_rad[i] < sigmas_rad[i - 1])
            throw std::invalid_argument("sweep_sigma: sigmas must be sorted ascending");
    }
    if (est_noise_std_rad < 0.0 || !std::isfinite(est_noise_std_rad))
        throw std::invalid_argument("sweep_sigma: estimation noise std must be >= 0");
    if (!(tx_power_w > 0.0) || !std::isfinite(tx_power_w))
        throw std::invalid_argument("sweep_sigma: transmit power must be > 0");

    ChannelVector h_target = channel_vector(array, target, carrier);
    scale_gains(h_target, std::pow(10.0, extra_gain_db / 20.0));

    const RandomStream root(seed);
    const auto n_sigmas = sigmas_rad.size();
    const auto n_samples = static_cast<std::size_t>(n_real);

    SweepResult result;
    result.sigmas_rad = sigmas_rad;
    result.samples_dbm.assign(n_sigmas, std::vector<double>(n_samples, 0.0));
    result.p50_dbm.assign(n_sigmas, 0.0);
    result.seed = seed;
    result.realizations = n_real;
    result.frequency_hz = carrier.frequency_hz;
    result.tx_power_dbm = watts_to_dbm(tx_power_w);
    result.est_noise_std_rad = est_noise_std_rad;

    parallel_for(n_sigmas * n_samples, n_threads, [&](std::size_t job) {
        const std::size_t si = job / n_samples;
        const std::size_t r = job % n_samples;
        std::vector<double> phi_hat = estimate_phases(
            h_target, est_noise_std_rad, root.derive(kEstimate).derive(si).derive(r));
        TxPlan plan = tx_phases_gbf(phi_hat, sigmas_rad[si],
                                    root.derive(kGbfPhase).derive(si).derive(r), tx_power_w);
        result.samples_dbm[si][r] = watts_to_dbm_floored(received_power(h_target, plan, 0));
    });

    for (std::size_t si = 0; si < n_sigmas; ++si)
        result.p50_dbm[si] = percentile(result.samples_dbm[si], 0.5);

    return result;
}

} // namespace wptsim
