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

#include "wptsim/rng.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

using namespace wptsim;

// Pinned outputs. These freeze the generator across platforms and refactors;
// a change here silently reshuffles every Monte Carlo result.
TEST_CASE("pinned raw sequence for seed 42")
{
    RandomStream rng(42);
    CHECK(rng.next_u64() == 6332618229526065668ULL);
    CHECK(rng.next_u64() == 17630415256238047317ULL);
    CHECK(rng.next_u64() == 8971565426155258802ULL);

    RandomStream zero(0);
    CHECK(zero.next_u64() == 12035550249420947055ULL);
}

TEST_CASE("pinned uniform and normal draws for seed 42")
{
    RandomStream u(42);
    CHECK(u.uniform() == 0.34329192209867343);
    CHECK(u.uniform() == 0.95574672613174361);

    RandomStream n(42);
    CHECK(n.normal() == 1.4061449625634999);
    CHECK(n.normal() == 1.0947531324548507);

    CHECK(RandomStream(9).uniform(2.0, 6.0) == 5.5867899905503604);
}

TEST_CASE("pinned derived substreams")
{
    CHECK(RandomStream(42).derive(0).next_u64() == 7815634879293728551ULL);
    CHECK(RandomStream(42).derive(1).next_u64() == 6229531841850878132ULL);
}

TEST_CASE("identical seed and path give identical sequences")
{
    RandomStream a = RandomStream(7).derive(3).derive(11);
    RandomStream b = RandomStream(7).derive(3).derive(11);
    for (int i = 0; i < 100; ++i)
        CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("derive is independent of drawing order")
{
    // Drawing from the parent or from sibling substreams must not shift a
    // derived stream; parallel workers rely on this.
    RandomStream root1(5);
    RandomStream child_before = root1.derive(9);

    RandomStream root2(5);
    (void)root2.derive(1).next_u64();
    (void)root2.derive(2).uniform();
    RandomStream child_after = root2.derive(9);

    for (int i = 0; i < 20; ++i)
        CHECK(child_before.next_u64() == child_after.next_u64());
}

TEST_CASE("copies advance independently")
{
    RandomStream a(3);
    (void)a.next_u64();
    RandomStream b = a;
    CHECK(a.next_u64() == b.next_u64());
    (void)a.next_u64();
    // b is one draw behind now.
    CHECK(a.next_u64() != b.next_u64());
}

TEST_CASE("different seeds and different paths diverge")
{
    CHECK(RandomStream(1).next_u64() != RandomStream(2).next_u64());
    RandomStream root(1);
    CHECK(root.derive(0).next_u64() != root.derive(1).next_u64());
    CHECK(root.derive(0).derive(1).next_u64() != root.derive(1).derive(0).next_u64());
}

TEST_CASE("uniform stays in [0, 1) with the expected mean")
{
    RandomStream rng(100);
    const int n = 100000;
    double sum = 0.0;
    double lo = 1.0, hi = 0.0;
    for (int i = 0; i < n; ++i)
    {
        const double v = rng.uniform();
        CHECK(v >= 0.0);
        CHECK(v < 1.0);
        sum += v;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    // 4 sigma band around 1/2, sigma = 1/sqrt(12 n).
    CHECK(std::abs(sum / n - 0.5) < 4.0 / std::sqrt(12.0 * n));
    CHECK(lo < 0.01);
    CHECK(hi > 0.99);
}

TEST_CASE("uniform(lo, hi) respects its bounds")
{
    RandomStream rng(101);
    for (int i = 0; i < 10000; ++i)
    {
        const double v = rng.uniform(-3.0, 2.5);
        CHECK(v >= -3.0);
        CHECK(v < 2.5);
    }
}

TEST_CASE("normal has the expected first two moments")
{
    RandomStream rng(102);
    const int n = 200000;
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < n; ++i)
    {
        const double v = rng.normal();
        REQUIRE(std::isfinite(v));
        sum += v;
        sum2 += v * v;
    }
    const double mean = sum / n;
    const double var = sum2 / n - mean * mean;
    CHECK(std::abs(mean) < 4.0 / std::sqrt(static_cast<double>(n)));
    // Var of the sample variance of a Gaussian is ~2/n.
    CHECK(std::abs(var - 1.0) < 4.0 * std::sqrt(2.0 / n));
}

TEST_CASE("normal scales by mean and stddev")
{
    RandomStream a(55), b(55);
    for (int i = 0; i < 50; ++i)
        CHECK(a.normal(10.0, 2.0) == doctest::Approx(10.0 + 2.0 * b.normal()).epsilon(1e-12));
}
