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

#include "wptsim/field_io.hpp"

#include "wptsim/errors.hpp"
#include "wptsim/units.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace wptsim
{

namespace
{

constexpr const char *kFieldFormat = "wptsim-field-v1";
constexpr const char *kSweepFormat = "wptsim-sweep-v1";
constexpr const char *kFieldHeader = "x_m,y_m,z_m,rss_dbm";
constexpr const char *kSweepHeader = "sigma_deg,realization,rss_dbm";

[[noreturn]] void fail(const std::string &path, int line, const std::string &message)
{
    throw io_error(path + ":" + std::to_string(line) + ": " + message);
}

double parse_double(const std::string &path, int line, const std::string &text)
{
    try
    {
        std::size_t consumed = 0;
        const double v = std::stod(text, &consumed);
        if (consumed != text.size())
            fail(path, line, "trailing characters after number '" + text + "'");
        return v;
    }
    catch (const io_error &)
    {
        throw;
    }
    catch (const std::exception &)
    {
        fail(path, line, "cannot parse '" + text + "' as a number");
    }
}

std::vector<std::string> split(const std::string &text, char sep)
{
    std::vector<std::string> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, sep))
        out.push_back(item);
    if (!text.empty() && text.back() == sep)
        out.emplace_back();
    return out;
}

// Writes through a temporary file in the same directory; the target path only
// ever holds complete output.
class AtomicWriter
{
  public:
    explicit AtomicWriter(const std::string &path) : path_(path), tmp_(path + ".tmp"), out_(tmp_)
    {
        if (!out_)
            throw io_error("cannot open '" + tmp_ + "' for writing");
    }

    ~AtomicWriter()
    {
        if (!committed_)
        {
            out_.close();
            std::error_code ec;
            std::filesystem::remove(tmp_, ec);
        }
    }

    std::ofstream &stream() { return out_; }

    void commit()
    {
        out_.flush();
        if (!out_)
            throw io_error("write to '" + tmp_ + "' failed");
        out_.close();
        std::error_code ec;
        std::filesystem::rename(tmp_, path_, ec);
        if (ec)
            throw io_error("cannot move '" + tmp_ + "' to '" + path_ + "': " + ec.message());
        committed_ = true;
    }

  private:
    std::string path_;
    std::string tmp_;
    std::ofstream out_;
    bool committed_ = false;
};

// Reads `# key=value` metadata lines up to (and consuming) the given column
// header. The `# p50` marker and anything after it is left in the stream.
std::map<std::string, std::string> read_metadata(std::istream &in, const std::string &path,
                                                 const std::string &header, int &line)
{
    std::map<std::string, std::string> meta;
    std::string raw;
    while (std::getline(in, raw))
    {
        ++line;
        if (raw.empty())
            continue;
        if (raw[0] == '#')
        {
            std::string body = raw.substr(1);
            if (!body.empty() && body[0] == ' ')
                body.erase(0, 1);
            const auto eq = body.find('=');
            if (eq == std::string::npos)
                fail(path, line, "expected '# key=value' before the column header");
            meta[body.substr(0, eq)] = body.substr(eq + 1);
            continue;
        }
        if (raw == header)
            return meta;
        fail(path, line, "expected header '" + header + "', got '" + raw + "'");
    }
    fail(path, line, "missing column header '" + header + "'");
}

const std::string &require(const std::map<std::string, std::string> &meta,
                           const std::string &path, const std::string &key)
{
    const auto it = meta.find(key);
    if (it == meta.end())
        throw io_error(path + ": missing metadata key '" + key + "'");
    return it->second;
}

double meta_double(const std::map<std::string, std::string> &meta, const std::string &path,
                   const std::string &key)
{
    return parse_double(path, 0, require(meta, path, key));
}

double meta_double_or(const std::map<std::string, std::string> &meta, const std::string &path,
                      const std::string &key, double fallback)
{
    const auto it = meta.find(key);
    return it == meta.end() ? fallback : parse_double(path, 0, it->second);
}

long meta_long_or(const std::map<std::string, std::string> &meta, const std::string &path,
                  const std::string &key, long fallback)
{
    const auto it = meta.find(key);
    if (it == meta.end())
        return fallback;
    return static_cast<long>(parse_double(path, 0, it->second));
}

std::uint64_t meta_u64(const std::map<std::string, std::string> &meta, const std::string &path,
                       const std::string &key)
{
    const std::string &text = require(meta, path, key);
    try
    {
        std::size_t consumed = 0;
        const unsigned long long v = std::stoull(text, &consumed);
        if (consumed != text.size())
            throw std::invalid_argument(text);
        return static_cast<std::uint64_t>(v);
    }
    catch (const std::exception &)
    {
        throw io_error(path + ": metadata key '" + key + "' is not an unsigned integer: '" +
                       text + "'");
    }
}

} // namespace

std::string format_double(double value)
{
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

void write_text_file(const std::string &path, const std::string &content)
{
    AtomicWriter writer(path);
    writer.stream() << content;
    writer.commit();
}

std::string MeasurementRecord::is_valid() const
{
    if (!is_finite(position))
        return "measurement position must be finite";
    if (!std::isfinite(rss_dbm) || rss_dbm > 30.0)
        return "rss of " + format_double(rss_dbm) + " dBm exceeds the +30 dBm sanity bound";
    return "";
}

void save_field_csv(const PowerField &field, const std::string &path)
{
    auto error = field.is_valid();
    if (!error.empty())
        throw std::invalid_argument("save_field_csv: " + error);

    AtomicWriter writer(path);
    auto &out = writer.stream();

    out << "# format=" << kFieldFormat << "\n";
    out << "# frequency_hz=" << format_double(field.frequency_hz) << "\n";
    out << "# tx_power_dbm=" << format_double(field.tx_power_dbm) << "\n";
    out << "# seed=" << field.seed << "\n";
    out << "# floor_dbm=" << format_double(field.floor_dbm) << "\n";
    out << "# strategy=" << to_string(field.strategy.kind) << "\n";
    out << "# strategy.siso_index=" << field.strategy.siso_index << "\n";
    out << "# strategy.dwell_s=" << format_double(field.strategy.dwell_s) << "\n";
    out << "# strategy.n_slots=" << field.strategy.n_slots << "\n";
    out << "# strategy.sigma_phi_rad=" << format_double(field.strategy.sigma_phi_rad) << "\n";
    out << "# strategy.est_noise_std_rad=" << format_double(field.strategy.est_noise_std_rad)
        << "\n";
    out << "# strategy.cfo_std_hz=" << format_double(field.strategy.cfo_std_hz) << "\n";
    out << "# strategy.gbf_realizations=" << field.strategy.gbf_realizations << "\n";
    out << "# plane.origin_x_m=" << format_double(field.plane.origin.x) << "\n";
    out << "# plane.origin_y_m=" << format_double(field.plane.origin.y) << "\n";
    out << "# plane.z_m=" << format_double(field.plane.origin.z) << "\n";
    out << "# plane.width_m=" << format_double(field.plane.width_m) << "\n";
    out << "# plane.height_m=" << format_double(field.plane.height_m) << "\n";
    out << "# plane.step_m=" << format_double(field.plane.step_m) << "\n";
    out << kFieldHeader << "\n";

    const int nx = field.nx();
    const int ny = field.ny();
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix)
        {
            const Position3D p = field.plane.point(ix, iy);
            out << format_double(p.x) << ',' << format_double(p.y) << ',' << format_double(p.z)
                << ',' << format_double(field.at(ix, iy)) << "\n";
        }

    writer.commit();
}

PowerField load_field_csv(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open field file '" + path + "'");

    int line = 0;
    const auto meta = read_metadata(in, path, kFieldHeader, line);

    if (require(meta, path, "format") != kFieldFormat)
        throw io_error(path + ": unsupported format '" + meta.at("format") + "'");

    PowerField field;
    field.frequency_hz = meta_double(meta, path, "frequency_hz");
    field.tx_power_dbm = meta_double(meta, path, "tx_power_dbm");
    field.seed = meta_u64(meta, path, "seed");
    field.floor_dbm = meta_double_or(meta, path, "floor_dbm", kFloorDbm);

    try
    {
        field.strategy.kind = strategy_from_string(require(meta, path, "strategy"));
    }
    catch (const std::invalid_argument &e)
    {
        throw io_error(path + ": " + e.what());
    }
    StrategyConfig defaults;
    field.strategy.siso_index =
        static_cast<int>(meta_long_or(meta, path, "strategy.siso_index", defaults.siso_index));
    field.strategy.dwell_s = meta_double_or(meta, path, "strategy.dwell_s", defaults.dwell_s);
    field.strategy.n_slots =
        static_cast<int>(meta_long_or(meta, path, "strategy.n_slots", defaults.n_slots));
    field.strategy.sigma_phi_rad =
        meta_double_or(meta, path, "strategy.sigma_phi_rad", defaults.sigma_phi_rad);
    field.strategy.est_noise_std_rad =
        meta_double_or(meta, path, "strategy.est_noise_std_rad", defaults.est_noise_std_rad);
    field.strategy.cfo_std_hz =
        meta_double_or(meta, path, "strategy.cfo_std_hz", defaults.cfo_std_hz);
    field.strategy.gbf_realizations = static_cast<int>(
        meta_long_or(meta, path, "strategy.gbf_realizations", defaults.gbf_realizations));

    field.plane.origin.x = meta_double(meta, path, "plane.origin_x_m");
    field.plane.origin.y = meta_double(meta, path, "plane.origin_y_m");
    field.plane.origin.z = meta_double(meta, path, "plane.z_m");
    field.plane.width_m = meta_double(meta, path, "plane.width_m");
    field.plane.height_m = meta_double(meta, path, "plane.height_m");
    field.plane.step_m = meta_double(meta, path, "plane.step_m");

    auto error = field.plane.is_valid();
    if (!error.empty())
        throw io_error(path + ": invalid plane metadata: " + error);

    const std::size_t expected = field.plane.size();
    field.values_dbm.reserve(expected);

    const int nx = field.plane.nx();
    const double tol = field.plane.step_m / 2.0;
    std::string raw;
    while (std::getline(in, raw))
    {
        ++line;
        if (raw.empty())
            continue;
        const auto fields = split(raw, ',');
        if (fields.size() != 4)
            fail(path, line, "expected 4 columns, got " + std::to_string(fields.size()));
        if (field.values_dbm.size() >= expected)
            fail(path, line, "more rows than grid points");

        const auto i = field.values_dbm.size();
        const Position3D expected_point =
            field.plane.point(static_cast<int>(i) % nx, static_cast<int>(i) / nx);
        const double x = parse_double(path, line, fields[0]);
        const double y = parse_double(path, line, fields[1]);
        const double z = parse_double(path, line, fields[2]);
        if (std::abs(x - expected_point.x) > tol || std::abs(y - expected_point.y) > tol ||
            std::abs(z - expected_point.z) > tol)
            fail(path, line, "row position deviates from the row-major grid order");
        field.values_dbm.push_back(parse_double(path, line, fields[3]));
    }

    if (field.values_dbm.size() != expected)
        throw io_error(path + ": expected " + std::to_string(expected) + " rows, got " +
                       std::to_string(field.values_dbm.size()));
    return field;
}

void save_sweep_csv(const SweepResult &sweep, const std::string &path)
{
    auto error = sweep.is_valid();
    if (!error.empty())
        throw std::invalid_argument("save_sweep_csv: " + error);

    AtomicWriter writer(path);
    auto &out = writer.stream();

    out << "# format=" << kSweepFormat << "\n";
    out << "# frequency_hz=" << format_double(sweep.frequency_hz) << "\n";
    out << "# tx_power_dbm=" << format_double(sweep.tx_power_dbm) << "\n";
    out << "# seed=" << sweep.seed << "\n";
    out << "# realizations=" << sweep.realizations << "\n";
    out << "# est_noise_std_rad=" << format_double(sweep.est_noise_std_rad) << "\n";

    // Exact radian values; the sigma_deg column below is derived for display.
    out << "# sigmas_rad=";
    for (std::size_t si = 0; si < sweep.sigmas_rad.size(); ++si)
        out << (si > 0 ? "," : "") << format_double(sweep.sigmas_rad[si]);
    out << "\n";
    out << kSweepHeader << "\n";

    for (std::size_t si = 0; si < sweep.sigmas_rad.size(); ++si)
    {
        const std::string deg = format_double(rad_to_deg(sweep.sigmas_rad[si]));
        const auto &samples = sweep.samples_dbm[si];
        for (std::size_t r = 0; r < samples.size(); ++r)
            out << deg << ',' << r << ',' << format_double(samples[r]) << "\n";
    }

    out << "# p50\n";
    for (std::size_t si = 0; si < sweep.sigmas_rad.size(); ++si)
        out << "# " << format_double(rad_to_deg(sweep.sigmas_rad[si])) << ','
            << format_double(sweep.p50_dbm[si]) << "\n";

    writer.commit();
}

SweepResult load_sweep_csv(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open sweep file '" + path + "'");

    int line = 0;
    const auto meta = read_metadata(in, path, kSweepHeader, line);

    if (require(meta, path, "format") != kSweepFormat)
        throw io_error(path + ": unsupported format '" + meta.at("format") + "'");

    SweepResult sweep;
    sweep.frequency_hz = meta_double(meta, path, "frequency_hz");
    sweep.tx_power_dbm = meta_double(meta, path, "tx_power_dbm");
    sweep.seed = meta_u64(meta, path, "seed");
    sweep.realizations = static_cast<int>(meta_long_or(meta, path, "realizations", 0));
    sweep.est_noise_std_rad = meta_double_or(meta, path, "est_noise_std_rad", 0.0);

    for (const auto &text : split(require(meta, path, "sigmas_rad"), ','))
        sweep.sigmas_rad.push_back(parse_double(path, line, text));
    if (sweep.sigmas_rad.empty() || sweep.realizations < 1)
        throw io_error(path + ": metadata describes an empty sweep");

    const auto n_samples = static_cast<std::size_t>(sweep.realizations);
    sweep.samples_dbm.assign(sweep.sigmas_rad.size(), {});
    for (auto &s : sweep.samples_dbm)
        s.reserve(n_samples);

    std::string raw;
    std::size_t row = 0;
    const std::size_t total = sweep.sigmas_rad.size() * n_samples;
    bool in_p50 = false;
    while (std::getline(in, raw))
    {
        ++line;
        if (raw.empty())
            continue;
        if (raw == "# p50")
        {
            in_p50 = true;
            continue;
        }
        if (raw[0] == '#')
        {
            if (!in_p50)
                fail(path, line, "unexpected comment between data rows");
            const auto fields = split(raw.substr(2), ',');
            if (fields.size() != 2)
                fail(path, line, "expected '# sigma_deg,p50_dbm'");
            sweep.p50_dbm.push_back(parse_double(path, line, fields[1]));
            continue;
        }
        if (in_p50)
            fail(path, line, "data row after the p50 block");

        const auto fields = split(raw, ',');
        if (fields.size() != 3)
            fail(path, line, "expected 3 columns, got " + std::to_string(fields.size()));
        if (row >= total)
            fail(path, line, "more rows than realizations * sigmas");

        const std::size_t si = row / n_samples;
        const std::size_t r = row % n_samples;
        const double sigma_deg = parse_double(path, line, fields[0]);
        if (std::abs(deg_to_rad(sigma_deg) - sweep.sigmas_rad[si]) > 1e-9)
            fail(path, line, "sigma column does not match the declared sigma order");
        if (parse_double(path, line, fields[1]) != static_cast<double>(r))
            fail(path, line, "realization index out of order");
        sweep.samples_dbm[si].push_back(parse_double(path, line, fields[2]));
        ++row;
    }

    if (row != total)
        throw io_error(path + ": expected " + std::to_string(total) + " data rows, got " +
                       std::to_string(row));
    if (sweep.p50_dbm.size() != sweep.sigmas_rad.size())
        throw io_error(path + ": p50 block does not cover every sigma");
    return sweep;
}

std::vector<MeasurementRecord> load_measurements(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open measurement file '" + path + "'");

    std::vector<MeasurementRecord> records;
    std::string raw;
    int line = 0;
    bool header_seen = false;
    bool has_label = false;
    while (std::getline(in, raw))
    {
        ++line;
        if (raw.empty() || raw[0] == '#')
            continue;
        if (!header_seen)
        {
            if (raw == kFieldHeader)
                has_label = false;
            else if (raw == std::string(kFieldHeader) + ",label")
                has_label = true;
            else
                fail(path, line, "expected header '" + std::string(kFieldHeader) +
                                     "[,label]', got '" + raw + "'");
            header_seen = true;
            continue;
        }

        const auto fields = split(raw, ',');
        const std::size_t expected = has_label ? 5 : 4;
        if (fields.size() != expected)
            fail(path, line,
                 "expected " + std::to_string(expected) + " columns, got " +
                     std::to_string(fields.size()));

        MeasurementRecord record;
        record.position.x = parse_double(path, line, fields[0]);
        record.position.y = parse_double(path, line, fields[1]);
        record.position.z = parse_double(path, line, fields[2]);
        record.rss_dbm = parse_double(path, line, fields[3]);
        if (has_label)
            record.label = fields[4];

        const auto error = record.is_valid();
        if (!error.empty())
            throw config_error(path + ":" + std::to_string(line) + ": " + error);
        records.push_back(std::move(record));
    }

    if (!header_seen)
        throw io_error(path + ": missing header line");
    if (records.empty())
        throw io_error(path + ": no measurement rows");
    return records;
}

SnappedGrid snap_to_grid(const std::vector<MeasurementRecord> &records,
                         const SamplingPlane &plane)
{
    auto error = plane.is_valid();
    if (!error.empty())
        throw std::invalid_argument("snap_to_grid: " + error);

    SnappedGrid grid;
    grid.plane = plane;
    grid.counts.assign(plane.size(), 0);
    grid.mean_dbm.assign(plane.size(), std::numeric_limits<double>::quiet_NaN());

    std::vector<double> watts(plane.size(), 0.0);
    for (const auto &record : records)
    {
        int ix = 0, iy = 0;
        if (!plane.nearest_cell(record.position.x, record.position.y, ix, iy))
        {
            ++grid.dropped;
            continue;
        }
        const auto i =
            static_cast<std::size_t>(iy) * static_cast<std::size_t>(plane.nx()) +
            static_cast<std::size_t>(ix);
        ++grid.counts[i];
        watts[i] += dbm_to_watts(record.rss_dbm);
    }

    for (std::size_t i = 0; i < watts.size(); ++i)
        if (grid.counts[i] > 0)
            grid.mean_dbm[i] = watts_to_dbm(watts[i] / grid.counts[i]);
    return grid;
}

} // namespace wptsim
