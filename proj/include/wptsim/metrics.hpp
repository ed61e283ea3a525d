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

#ifndef WPTSIM_METRICS_HPP
#define WPTSIM_METRICS_HPP

#include "wptsim/engine.hpp"
#include "wptsim/geometry.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace wptsim
{

// Focal region of a power field: the connected set of grid cells whose value
// stays within threshold_db of the value at the target cell. Sidelobes that
// clear the threshold elsewhere are not part of the spot.
struct FocalSpot
{
    std::vector<char> mask; // row-major [iy][ix], 1 = inside the spot
    int nx = 0;
    int ny = 0;

    std::size_t cell_count = 0;
    double area_m2 = 0.0;              // cell_count * step^2
    double equivalent_diameter_m = 0.0; // 2 * sqrt(area / pi)

    // Contiguous extent of the spot through the target cell, in meters.
    double cut_width_x_m = 0.0;
    double cut_width_y_m = 0.0;

    int target_ix = 0;
    int target_iy = 0;

    bool contains(int ix, int iy) const
    {
        return ix >= 0 && ix < nx && iy >= 0 && iy < ny &&
               mask[static_cast<std::size_t>(iy) * static_cast<std::size_t>(nx) +
                    static_cast<std::size_t>(ix)] != 0;
    }
};

// Empirical distribution function. values are sorted ascending and
// probabilities[i] = (i + 1) / n, so the last entry is exactly 1.
struct Ecdf
{
    std::vector<double> values;
    std::vector<double> probabilities;

    std::size_t size() const { return values.size(); }
};

// Grid samples of a field partitioned by a region, inside plus outside
// covering every cell exactly once.
struct SplitSamples
{
    std::vector<double> inside_dbm;
    std::vector<double> outside_dbm;
};

// Extracts the focal spot around the target: the 4-connected component of the
// target cell among cells with value >= (target value - threshold_db). Adding
// a constant offset to the whole field leaves the mask unchanged.
// Throws std::invalid_argument when the target lies outside the plane or the
// threshold is negative.
FocalSpot spot_region(const PowerField &field, const Position3D &target,
                      double threshold_db = 3.0);

// 10*log10(p_a / p_b); both powers in watts and > 0.
double gain_db(double p_a_w, double p_b_w);

// Partition by an extracted focal spot. The spot dimensions must match the
// field grid.
SplitSamples split_in_out(const PowerField &field, const FocalSpot &spot);

// Partition by an axis-aligned box of half width box_halfwidth_m centered on
// the target; a cell is inside when its center falls within the box. Parts of
// the box outside the plane are ignored.
SplitSamples split_in_out(const PowerField &field, const Position3D &target,
                          double box_halfwidth_m);

// Standard ECDF with a step at every sorted sample. Throws on empty input.
Ecdf make_ecdf(std::vector<double> samples);

// F(x) of an ECDF, right-continuous.
double ecdf_eval(const Ecdf &ecdf, double x);

// Two-sample Kolmogorov-Smirnov distance, sup_x |F_a(x) - F_b(x)|.
double ks_distance(const Ecdf &a, const Ecdf &b);

// Linear-interpolation percentile between order statistics; p in [0, 1],
// p = 0.5 is the median. Throws on empty input.
double percentile(const std::vector<double> &samples, double p);

} // namespace wptsim

#endif
