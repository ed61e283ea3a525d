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

#ifndef WPTSIM_FIELD_IO_HPP
#define WPTSIM_FIELD_IO_HPP

#include "wptsim/engine.hpp"
#include "wptsim/geometry.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace wptsim
{

// One received-power sample at an arbitrary (non-gridded) position, e.g. a
// testbed measurement row.
struct MeasurementRecord
{
    Position3D position;
    double rss_dbm = 0.0;
    std::string label; // optional strategy tag, may be empty

    // Empty string when valid; coordinates must be finite and rss plausible
    // (<= +30 dBm).
    std::string is_valid() const;
};

// Scattered measurements assigned to the nearest cell of a regular grid.
// counts[i] is the number of records mapped to cell i; mean_dbm[i] is their
// power-domain mean (watts averaged, then back to dBm) and NaN where the cell
// is empty. Snapping uses x/y only; z is taken from the plane.
struct SnappedGrid
{
    SamplingPlane plane;
    std::vector<int> counts;
    std::vector<double> mean_dbm;
    std::size_t dropped = 0; // records outside the plane extent
};

// Field CSV, format v1. Comment lines `# key=value` carry the metadata
// (frequency, power, strategy block, seed, plane geometry), then the header
// `x_m,y_m,z_m,rss_dbm` and one row per grid point in row-major order. All
// numbers use 17 significant digits, so load(save(f)) reproduces f bit for
// bit. Writes go to a temporary file renamed into place on success.
void save_field_csv(const PowerField &field, const std::string &path);

// Throws io_error for unreadable files or schema violations (with the
// offending line number).
PowerField load_field_csv(const std::string &path);

// Sweep CSV, format v1. Header `sigma_deg,realization,rss_dbm`, rows grouped
// by sigma in ascending order, then a `# p50` block with one
// `# <sigma_deg>,<p50_dbm>` line per sigma. The exact radian sigmas are kept
// in a `# sigmas_rad=` metadata line, so the degree column is presentational
// and the round-trip stays lossless.
void save_sweep_csv(const SweepResult &sweep, const std::string &path);
SweepResult load_sweep_csv(const std::string &path);

// Reads measurement rows from a CSV with the field schema (optionally with a
// fifth `label` column); positions may be arbitrary. `#` lines are ignored.
// Malformed rows raise io_error with the line number, implausible values
// raise config_error, an empty file raises io_error.
std::vector<MeasurementRecord> load_measurements(const std::string &path);

// Nearest-cell snapping of records onto a grid, for running the grid metrics
// on scattered data. Records outside the extent are counted in `dropped`.
SnappedGrid snap_to_grid(const std::vector<MeasurementRecord> &records,
                         const SamplingPlane &plane);

// Text form with 17 significant digits; parses back to exactly the same
// double.
std::string format_double(double value);

// Atomic text write: content goes to '<path>.tmp' and is renamed into place,
// so the target never holds partial output.
void write_text_file(const std::string &path, const std::string &content);

} // namespace wptsim

#endif
