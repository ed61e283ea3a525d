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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wptsim/geometry.hpp"
#include "wptsim/rng.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

using namespace wptsim;

TEST_CASE("ceiling grid: single element")
{
    const AntennaArray a = build_ceiling_grid(1, 1, 0.5, 2.4, {0, 0, 0});
    REQUIRE(a.count() == 1);
    CHECK(a.elements[0] == Position3D{0.0, 0.0, 2.4});
    CHECK(a.is_valid().empty());
}

TEST_CASE("ceiling grid: 2x2 layout and row-major order")
{
    const AntennaArray a = build_ceiling_grid(2, 2, 0.5, 2.4, {0, 0, 0});
    REQUIRE(a.count() == 4);
    CHECK(a.elements[0] == Position3D{0.0, 0.0, 2.4});
    CHECK(a.elements[1] == Position3D{0.5, 0.0, 2.4});
    CHECK(a.elements[2] == Position3D{0.0, 0.5, 2.4});
    CHECK(a.elements[3] == Position3D{0.5, 0.5, 2.4});
}

TEST_CASE("ceiling grid: 4x8 gives 32 elements, dropping one leaves 31")
{
    AntennaArray a = build_ceiling_grid(4, 8, 0.6, 2.4, {0, 0, 0});
    REQUIRE(a.count() == 32);

    // Row/column neighbors are exactly one spacing apart.
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c + 1 < 8; ++c)
            CHECK(distance(a.elements[r * 8 + c], a.elements[r * 8 + c + 1]) ==
                  doctest::Approx(0.6).epsilon(1e-12));

    a.elements.resize(31);
    CHECK(a.count() == 31);
    CHECK(a.is_valid().empty());
}

TEST_CASE("ceiling grid: invalid inputs are rejected")
{
    CHECK_THROWS_AS(build_ceiling_grid(0, 2, 0.5, 2.4, {0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(build_ceiling_grid(2, 0, 0.5, 2.4, {0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(build_ceiling_grid(2, 2, 0.0, 2.4, {0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(build_ceiling_grid(2, 2, -0.5, 2.4, {0, 0, 0}), std::invalid_argument);
}

TEST_CASE("array validity: duplicate elements rejected")
{
    AntennaArray a;
    CHECK_FALSE(a.is_valid().empty()); // empty array

    a.elements = {{0, 0, 2}, {1, 0, 2}, {0, 0, 2}};
    CHECK_FALSE(a.is_valid().empty());
}

TEST_CASE("distance: fixed values")
{
    CHECK(distance({0, 0, 0}, {0, 0, 0}) == 0.0);
    CHECK(distance({0, 0, 0}, {3, 4, 0}) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(distance({1, 2, 3}, {4, 6, 3}) == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("distance: symmetry and triangle inequality on random triples")
{
    RandomStream rng(17);
    for (int i = 0; i < 200; ++i)
    {
        const Position3D a{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
        const Position3D b{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
        const Position3D c{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
        CHECK(distance(a, b) == distance(b, a));
        CHECK(distance(a, c) <= distance(a, b) + distance(b, c) + 1e-12);
        CHECK(distance(a, b) >= 0.0);
    }
}

TEST_CASE("sampling plane: corner-only grid of the 1.3 m plane")
{
    const auto points = build_sampling_plane({0, 0, 1.0}, 1.3, 1.3, 1.3);
    REQUIRE(points.size() == 4);
    CHECK(points[0] == Position3D{0.0, 0.0, 1.0});
    CHECK(points[1] == Position3D{1.3, 0.0, 1.0});
    CHECK(points[2] == Position3D{0.0, 1.3, 1.0});
    CHECK(points[3] == Position3D{1.3, 1.3, 1.0});
}

TEST_CASE("sampling plane: 1 cm step over 1.3 m gives 131x131 points")
{
    SamplingPlane plane;
    plane.origin = {0, 0, 1.0};
    plane.width_m = 1.3;
    plane.height_m = 1.3;
    plane.step_m = 0.01;
    REQUIRE(plane.is_valid().empty());
    CHECK(plane.nx() == 131);
    CHECK(plane.ny() == 131);
    CHECK(plane.size() == 17161);
    CHECK(build_sampling_plane(plane).size() == 17161);
}

TEST_CASE("sampling plane: degenerate inputs rejected")
{
    SamplingPlane plane;
    plane.origin = {0, 0, 1.0};
    plane.width_m = 0.0;
    plane.height_m = 1.3;
    plane.step_m = 0.01;
    CHECK_FALSE(plane.is_valid().empty());
    CHECK_THROWS_AS(build_sampling_plane({0, 0, 1.0}, 0.0, 1.3, 0.01), std::invalid_argument);
    CHECK_THROWS_AS(build_sampling_plane({0, 0, 1.0}, 1.3, 1.3, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(build_sampling_plane({0, 0, 1.0}, 1.3, 1.3, -0.1), std::invalid_argument);
    // Step larger than the smaller extent leaves less than one cell per axis.
    CHECK_THROWS_AS(build_sampling_plane({0, 0, 1.0}, 1.0, 0.4, 0.5), std::invalid_argument);
}

TEST_CASE("sampling plane: points share z and stay within the extent")
{
    SamplingPlane plane;
    plane.origin = {1.45, 0.25, 1.0};
    plane.width_m = 1.3;
    plane.height_m = 1.3;
    plane.step_m = 0.05;
    REQUIRE(plane.is_valid().empty());

    for (int iy = 0; iy < plane.ny(); ++iy)
        for (int ix = 0; ix < plane.nx(); ++ix)
        {
            const Position3D p = plane.point(ix, iy);
            CHECK(p.z == 1.0);
            CHECK(p.x >= plane.origin.x - 1e-12);
            CHECK(p.x <= plane.origin.x + plane.width_m + 1e-12);
            CHECK(p.y >= plane.origin.y - 1e-12);
            CHECK(p.y <= plane.origin.y + plane.height_m + 1e-12);
        }
}

TEST_CASE("sampling plane: nearest_cell snaps and rejects outside points")
{
    SamplingPlane plane;
    plane.origin = {0, 0, 1.0};
    plane.width_m = 1.0;
    plane.height_m = 1.0;
    plane.step_m = 0.1;

    int ix = -1, iy = -1;
    CHECK(plane.nearest_cell(0.0, 0.0, ix, iy));
    CHECK(ix == 0);
    CHECK(iy == 0);

    CHECK(plane.nearest_cell(0.34, 0.76, ix, iy));
    CHECK(ix == 3);
    CHECK(iy == 8);

    CHECK(plane.nearest_cell(1.0, 1.0, ix, iy));
    CHECK(ix == 10);
    CHECK(iy == 10);

    CHECK_FALSE(plane.nearest_cell(1.2, 0.5, ix, iy));
    CHECK_FALSE(plane.nearest_cell(0.5, -0.2, ix, iy));
}

TEST_CASE("sampling plane: grid point count matches the ceiling formula on odd ratios")
{
    // 1.0 / 0.3 is not an integer; the formula keeps ceil(w/step)+1 columns.
    SamplingPlane plane;
    plane.origin = {0, 0, 0.5};
    plane.width_m = 1.0;
    plane.height_m = 0.9;
    plane.step_m = 0.3;
    REQUIRE(plane.is_valid().empty());
    CHECK(plane.nx() == 5); // 0, .3, .6, .9, 1.2
    CHECK(plane.ny() == 4); // 0, .3, .6, .9 (exact multiple)
}
