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

#include "wptsim/metrics.hpp"

#include "wptsim/units.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace wptsim
{

namespace
{

std::size_t flat(int ix, int iy, int nx)
{
    return static_cast<std::size_t>(iy) * static_cast<std::size_t>(nx) +
           static_cast<std::size_t>(ix);
}

// Length in cells of the contiguous mask run through (ix, iy) along one axis.
int run_length(const FocalSpot &spot, int ix, int iy, int dx, int dy)
{
    int n = 1;
    for (int x = ix + dx, y = iy + dy; spot.contains(x, y); x += dx, y += dy)
        ++n;
    for (int x = ix - dx, y = iy - dy; spot.contains(x, y); x -= dx, y -= dy)
        ++n;
    return n;
}

} // namespace

FocalSpot spot_region(const PowerField &field, const Position3D &target, double threshold_db)
{
    auto error = field.is_valid();
    if (!error.empty())
        throw std::invalid_argument("spot_region: " + error);
    if (threshold_db < 0.0 || !std::isfinite(threshold_db))
        throw std::invalid_argument("spot_region: threshold must be >= 0 dB");

    int tx = 0, ty = 0;
    if (!field.plane.nearest_cell(target.x, target.y, tx, ty))
        throw std::invalid_argument("spot_region: target lies outside the sampling plane");

    const int nx = field.nx();
    const int ny = field.ny();
    const double cutoff_dbm = field.at(tx, ty) - threshold_db;

    FocalSpot spot;
    spot.nx = nx;
    spot.ny = ny;
    spot.mask.assign(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny), 0);
    spot.target_ix = tx;
    spot.target_iy = ty;

    // 4-connected flood fill from the target cell.
    std::vector<std::pair<int, int>> stack;
    stack.emplace_back(tx, ty);
    spot.mask[flat(tx, ty, nx)] = 1;
    while (!stack.empty())
    {
        const auto [cx, cy] = stack.back();
        stack.pop_back();
        ++spot.cell_count;

        constexpr int steps[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        for (const auto &s : steps)
        {
            const int px = cx + s[0];
            const int py = cy + s[1];
            if (px < 0 || px >= nx || py < 0 || py >= ny)
                continue;
            const std::size_t i = flat(px, py, nx);
            if (spot.mask[i] == 0 && field.values_dbm[i] >= cutoff_dbm)
            {
                spot.mask[i] = 1;
                stack.emplace_back(px, py);
            }
        }
    }

    const double step = field.plane.step_m;
    spot.area_m2 = static_cast<double>(spot.cell_count) * step * step;
    spot.equivalent_diameter_m = 2.0 * std::sqrt(spot.area_m2 / kPi);
    spot.cut_width_x_m = run_length(spot, tx, ty, 1, 0) * step;
    spot.cut_width_y_m = run_length(spot, tx, ty, 0, 1) * step;
    return spot;
}

double gain_db(double p_a_w, double p_b_w)
{
    if (!(p_a_w > 0.0) || !(p_b_w > 0.0) || !std::isfinite(p_a_w) || !std::isfinite(p_b_w))
        throw std::invalid_argument("gain_db: powers must be > 0");
    return 10.0 * std::log10(p_a_w / p_b_w);
}

SplitSamples split_in_out(const PowerField &field, const FocalSpot &spot)
{
    auto error = field.is_valid();
    if (!error.empty())
        throw std::invalid_argument("split_in_out: " + error);
    if (spot.nx != field.nx() || spot.ny != field.ny())
        throw std::invalid_argument("split_in_out: spot grid does not match the field grid");

    SplitSamples split;
    for (std::size_t i = 0; i < field.values_dbm.size(); ++i)
        (spot.mask[i] != 0 ? split.inside_dbm : split.outside_dbm).push_back(field.values_dbm[i]);
    return split;
}

SplitSamples split_in_out(const PowerField &field, const Position3D &target,
                          double box_halfwidth_m)
{
    auto error = field.is_valid();
    if (!error.empty())
        throw std::invalid_argument("split_in_out: " + error);
    if (box_halfwidth_m < 0.0 || !std::isfinite(box_halfwidth_m))
        throw std::invalid_argument("split_in_out: box half width must be >= 0");

    SplitSamples split;
    const int nx = field.nx();
    const int ny = field.ny();
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix)
        {
            const Position3D p = field.plane.point(ix, iy);
            const bool inside = std::abs(p.x - target.x) <= box_halfwidth_m &&
                                std::abs(p.y - target.y) <= box_halfwidth_m;
            (inside ? split.inside_dbm : split.outside_dbm).push_back(field.at(ix, iy));
        }
    return split;
}

Ecdf make_ecdf(std::vector<double> samples)
{
    if (samples.empty())
        throw std::invalid_argument("make_ecdf: samples must not be empty");

    std::sort(samples.begin(), samples.end());
    const auto n = samples.size();

    Ecdf ecdf;
    ecdf.values = std::move(samples);
    ecdf.probabilities.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        ecdf.probabilities[i] = static_cast<double>(i + 1) / static_cast<double>(n);
    return ecdf;
}

double ecdf_eval(const Ecdf &ecdf, double x)
{
    if (ecdf.values.empty())
        throw std::invalid_argument("ecdf_eval: empty distribution");
    const auto it = std::upper_bound(ecdf.values.begin(), ecdf.values.end(), x);
    if (it == ecdf.values.begin())
        return 0.0;
    return ecdf.probabilities[static_cast<std::size_t>(it - ecdf.values.begin()) - 1];
}

double ks_distance(const Ecdf &a, const Ecdf &b)
{
    // The CDF difference only changes at sample points of either distribution.
    double d = 0.0;
    for (double x : a.values)
        d = std::max(d, std::abs(ecdf_eval(a, x) - ecdf_eval(b, x)));
    for (double x : b.values)
        d = std::max(d, std::abs(ecdf_eval(a, x) - ecdf_eval(b, x)));
    return d;
}

double percentile(const std::vector<double> &samples, double p)
{
    if (samples.empty())
        throw std::invalid_argument("percentile: samples must not be empty");
    if (p < 0.0 || p > 1.0 || !std::isfinite(p))
        throw std::invalid_argument("percentile: fraction must be within [0, 1]");

    std::vector<double> sorted = samples;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() == 1)
        return sorted.front();

    const double position = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(position);
    if (lo + 1 >= sorted.size())
        return sorted.back();
    const double frac = position - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

} // namespace wptsim
