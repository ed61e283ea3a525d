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

#include "wptsim/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace wptsim
{

namespace
{
// Tolerant ceil(extent/step) so that extents which are integer multiples of the
// step up to floating rounding do not gain a spurious extra point.
int axis_intervals(double extent, double step)
{
    return static_cast<int>(std::ceil(extent / step - 1e-9));
}
} // namespace

bool is_finite(const Position3D &p)
{
    return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

double distance(const Position3D &a, const Position3D &b)
{
    return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

std::string AntennaArray::is_valid() const
{
    if (elements.empty())
        return "array must contain at least one element";
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (!is_finite(elements[i]))
            return "element " + std::to_string(i) + " has non-finite coordinates";
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = i + 1; j < elements.size(); ++j)
            if (elements[i] == elements[j])
                return "elements " + std::to_string(i) + " and " + std::to_string(j) +
                       " share the same position";
    return "";
}

AntennaArray build_ceiling_grid(int rows, int cols, double spacing_m, double height_m,
                                const Position3D &origin)
{
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("build_ceiling_grid: rows and cols must be >= 1");
    if (!(spacing_m > 0.0) || !std::isfinite(spacing_m))
        throw std::invalid_argument("build_ceiling_grid: spacing must be > 0");
    if (!std::isfinite(height_m) || !is_finite(origin))
        throw std::invalid_argument("build_ceiling_grid: non-finite height or origin");

    AntennaArray array;
    array.elements.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            array.elements.push_back({origin.x + c * spacing_m, origin.y + r * spacing_m, height_m});
    return array;
}

int SamplingPlane::nx() const { return axis_intervals(width_m, step_m) + 1; }

int SamplingPlane::ny() const { return axis_intervals(height_m, step_m) + 1; }

Position3D SamplingPlane::point(int ix, int iy) const
{
    return {origin.x + ix * step_m, origin.y + iy * step_m, origin.z};
}

bool SamplingPlane::nearest_cell(double x, double y, int &ix, int &iy) const
{
    ix = static_cast<int>(std::lround((x - origin.x) / step_m));
    iy = static_cast<int>(std::lround((y - origin.y) / step_m));
    return ix >= 0 && ix < nx() && iy >= 0 && iy < ny();
}

std::string SamplingPlane::is_valid() const
{
    if (!is_finite(origin))
        return "plane origin has non-finite coordinates";
    if (!(width_m > 0.0) || !std::isfinite(width_m))
        return "plane width must be > 0";
    if (!(height_m > 0.0) || !std::isfinite(height_m))
        return "plane height must be > 0";
    if (!(step_m > 0.0) || !std::isfinite(step_m))
        return "plane step must be > 0";
    if (step_m > width_m || step_m > height_m)
        return "plane step must not exceed width or height";
    return "";
}

std::vector<Position3D> build_sampling_plane(const SamplingPlane &plane)
{
    auto error = plane.is_valid();
    if (!error.empty())
        throw std::invalid_argument("build_sampling_plane: " + error);

    std::vector<Position3D> points;
    points.reserve(plane.size());
    for (int iy = 0; iy < plane.ny(); ++iy)
        for (int ix = 0; ix < plane.nx(); ++ix)
            points.push_back(plane.point(ix, iy));
    return points;
}

std::vector<Position3D> build_sampling_plane(const Position3D &origin, double width_m,
                                             double height_m, double step_m)
{
    return build_sampling_plane(SamplingPlane{origin, width_m, height_m, step_m});
}

} // namespace wptsim
