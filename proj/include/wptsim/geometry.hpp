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

#ifndef WPTSIM_GEOMETRY_HPP
#define WPTSIM_GEOMETRY_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace wptsim
{

// Cartesian position in meters, shared frame for transmitters and receivers.
struct Position3D
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    bool operator==(const Position3D &other) const = default;
};

bool is_finite(const Position3D &p);

// Euclidean distance in meters.
double distance(const Position3D &a, const Position3D &b);

// Positions of the M distributed transmit elements, row-major construction order.
struct AntennaArray
{
    std::vector<Position3D> elements;

    std::size_t count() const { return elements.size(); }

    // Empty string when valid, otherwise a description of the violated invariant.
    std::string is_valid() const;
};

// Regular rows x cols grid at z = height_m. The origin supplies the x/y corner
// (its z component is ignored); element (r, c) sits at
// (origin.x + c*spacing, origin.y + r*spacing, height), row-major order.
AntennaArray build_ceiling_grid(int rows, int cols, double spacing_m, double height_m,
                                const Position3D &origin);

// Horizontal, axis-aligned receive sampling plane. The grid has
// ceil(width/step)+1 by ceil(height/step)+1 points starting at the origin; when
// an extent is not an integer multiple of the step, the last row/column
// overshoots the nominal extent by less than one step.
struct SamplingPlane
{
    Position3D origin; // lower corner; origin.z is the plane height
    double width_m = 0.0;
    double height_m = 0.0;
    double step_m = 0.0;

    int nx() const;
    int ny() const;
    std::size_t size() const { return static_cast<std::size_t>(nx()) * static_cast<std::size_t>(ny()); }

    Position3D point(int ix, int iy) const;

    // Nearest grid indices for a position; false when (x, y) falls outside the extent.
    bool nearest_cell(double x, double y, int &ix, int &iy) const;

    std::string is_valid() const;
};

// Row-major list of all grid points of the plane (y rows, x fastest).
std::vector<Position3D> build_sampling_plane(const Position3D &origin, double width_m,
                                             double height_m, double step_m);
std::vector<Position3D> build_sampling_plane(const SamplingPlane &plane);

} // namespace wptsim

#endif
