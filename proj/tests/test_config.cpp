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

#include "wptsim/config.hpp"
#include "wptsim/errors.hpp"
#include "wptsim/units.hpp"

#include <sstream>
#include <string>

using namespace wptsim;

namespace
{

SimConfig parse(const std::string &text)
{
    std::istringstream in(text);
    return parse_config(in, "test");
}

std::string error_of(const std::string &text)
{
    try
    {
        parse(text);
    }
    catch (const config_error &e)
    {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("shipped default configuration loads and matches the built-in defaults")
{
    const std::string path = std::string(WPTSIM_SOURCE_DIR) + "/configs/default.cfg";
    const SimConfig cfg = load_config(path);

    CHECK(cfg.carrier.frequency_hz == 920e6);
    CHECK(cfg.tx_power_dbm == 3.0);
    CHECK(cfg.build_array().count() == 31);
    CHECK(cfg.plane.origin.x == 1.45);
    CHECK(cfg.plane.origin.y == 0.25);
    CHECK(cfg.plane.width_m == 1.3);
    CHECK(cfg.plane.height_m == 1.3);
    CHECK(cfg.plane.step_m == 0.01);
    CHECK(cfg.target == Position3D{2.1, 0.9, 1.0});
    CHECK(cfg.strategy.kind == StrategyKind::Bf);
    CHECK(cfg.strategy.sigma_phi_rad == doctest::Approx(deg_to_rad(20.0)).epsilon(1e-15));
    CHECK(cfg.seed == 0);
    CHECK(cfg.sweep_realizations == 1000);
    CHECK(cfg.threads == 0);

    // The file must reproduce the built-in defaults key for key.
    const SimConfig defaults = default_config();
    CHECK(cfg.plane.origin == defaults.plane.origin);
    CHECK(cfg.target == defaults.target);
    CHECK(cfg.strategy.n_slots == defaults.strategy.n_slots);
    CHECK(cfg.strategy.dwell_s == defaults.strategy.dwell_s);
}

TEST_CASE("empty input yields the defaults")
{
    const SimConfig cfg = parse("");
    const SimConfig defaults = default_config();
    CHECK(cfg.carrier.frequency_hz == defaults.carrier.frequency_hz);
    CHECK(cfg.tx_power_dbm == defaults.tx_power_dbm);
    CHECK(cfg.plane.origin == defaults.plane.origin);
    CHECK(cfg.target == defaults.target);
    CHECK(cfg.seed == 0);
}

TEST_CASE("comments, blank lines, and trailing comments are ignored")
{
    const SimConfig cfg = parse("# full-line comment\n"
                                "\n"
                                "tx.power_dbm = 6.5   # trailing comment\n"
                                "seed = 7\n");
    CHECK(cfg.tx_power_dbm == 6.5);
    CHECK(cfg.seed == 7);
}

TEST_CASE("degrees are converted to radians at the parse boundary")
{
    const SimConfig cfg = parse("strategy.sigma_phi_deg = 20\n"
                                "strategy.est_noise_std_deg = 5\n");
    CHECK(cfg.strategy.sigma_phi_rad == doctest::Approx(0.3490658503988659).epsilon(1e-15));
    CHECK(cfg.strategy.est_noise_std_rad == doctest::Approx(deg_to_rad(5.0)).epsilon(1e-15));
}

TEST_CASE("all strategy kinds parse")
{
    CHECK(parse("strategy.kind = siso\nstrategy.siso_index = 0\n").strategy.kind ==
          StrategyKind::Siso);
    CHECK(parse("strategy.kind = rps\n").strategy.kind == StrategyKind::Rps);
    CHECK(parse("strategy.kind = bf\n").strategy.kind == StrategyKind::Bf);
    CHECK(parse("strategy.kind = gbf\n").strategy.kind == StrategyKind::Gbf);
    CHECK(error_of("strategy.kind = magic\n").find("test:1:") != std::string::npos);
}

TEST_CASE("explicit positions override the grid keys")
{
    const SimConfig cfg = parse("array.positions = 0,0,2.4; 1,0,2.4; 0.5,1,2.4\n");
    const AntennaArray array = cfg.build_array();
    REQUIRE(array.count() == 3);
    CHECK(array.elements[1] == Position3D{1.0, 0.0, 2.4});
    CHECK(array.elements[2] == Position3D{0.5, 1.0, 2.4});
}

TEST_CASE("grid truncation keeps the first count elements row-major")
{
    const SimConfig cfg = parse("");
    const AntennaArray array = cfg.build_array();
    REQUIRE(array.count() == 31);
    // Last kept element: row 3, col 6 of the 4 x 8 grid.
    CHECK(array.elements[30] == Position3D{6 * 0.6, 3 * 0.6, 2.4});

    const SimConfig full = parse("array.count = -1\n");
    CHECK(full.build_array().count() == 32);
}

TEST_CASE("unknown keys are rejected with the line number")
{
    const std::string msg = error_of("seed = 1\nnot.a.key = 2\n");
    CHECK(msg.find("test:2:") != std::string::npos);
    CHECK(msg.find("not.a.key") != std::string::npos);
}

TEST_CASE("malformed values are rejected with the line number")
{
    CHECK(error_of("tx.power_dbm = hot\n").find("test:1:") != std::string::npos);
    CHECK(error_of("seed = -4\n").find("test:1:") != std::string::npos);
    CHECK(error_of("array.rows = 2.5\n").find("test:1:") != std::string::npos);
    CHECK(error_of("tx.power_dbm\n").find("test:1:") != std::string::npos);
    CHECK(error_of("= 3\n").find("test:1:") != std::string::npos);
    CHECK(error_of("tx.power_dbm =\n").find("test:1:") != std::string::npos);
}

TEST_CASE("semantic validation names the offending field")
{
    CHECK(error_of("plane.step_m = 0\n").find("plane.step_m") != std::string::npos);
    CHECK(error_of("carrier.frequency_hz = -1\n").find("carrier.frequency_hz") !=
          std::string::npos);
    CHECK(error_of("array.count = 0\n").find("array") != std::string::npos);
    CHECK(error_of("strategy.n_slots = 0\n").find("strategy") != std::string::npos);
    CHECK(error_of("sweep.realizations = 0\n").find("sweep.realizations") != std::string::npos);
    CHECK(error_of("threads = -2\n").find("threads") != std::string::npos);
    CHECK(error_of("strategy.kind = siso\nstrategy.siso_index = 31\n").find("strategy") !=
          std::string::npos);

    // A step larger than the plane extent leaves no grid.
    CHECK_FALSE(error_of("plane.step_m = 2.0\n").empty());
}

TEST_CASE("missing files raise io_error")
{
    CHECK_THROWS_AS(load_config("/nonexistent/path/sim.cfg"), io_error);
}

TEST_CASE("positions parsing validates triplets")
{
    CHECK(error_of("array.positions = 1,2\n").find("test:1:") != std::string::npos);
    CHECK(error_of("array.positions = 1,2,x\n").find("test:1:") != std::string::npos);
    CHECK_FALSE(error_of("array.positions = 1,2,3; 1,2,3\n").empty()); // duplicate elements
}
