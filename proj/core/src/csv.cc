// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwalk/csv.h"

#include <charconv>
#include <istream>
#include <optional>
#include <stdexcept>
#include <ostream>
#include <string_view>
#include <vector>

#include "qwalk/errors.h"
#include "qwalk/observables.h"
#include "qwalk/sweep.h"

namespace qwalk {

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    if (ec != std::errc()) {
        throw std::runtime_error("format_double: buffer too small");
    }
    return std::string(buf, ptr);
}

namespace {

void write_comments(std::ostream &out, const std::vector<std::string> &comments) {
    for (const auto &c : comments) {
        out << "# " << c << '\n';
    }
}

double parse_number(std::string_view field, size_t line_no) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
        throw InvalidSpec("line " + std::to_string(line_no) + ": bad number '" + std::string(field) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    size_t pos = 0;
    while (true) {
        size_t end = line.find(sep, pos);
        out.push_back(line.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
        if (end == std::string_view::npos) {
            return out;
        }
        pos = end + 1;
    }
}

}  // namespace

void write_sweep_csv(std::ostream &out, const SweepTable &table) {
    write_comments(out, table.comments);
    out << "swept_" << unit_suffix(table.unit()) << ",mean,predicted,abs_error\n";
    for (const auto &row : table.rows) {
        out << format_double(row.swept) << ',' << format_double(row.mean) << ',' << format_double(row.predicted) << ','
            << format_double(row.abs_error) << '\n';
    }
}

SweepTable parse_sweep_csv(std::istream &in) {
    SweepTable table;
    std::optional<AngleGrid> grid;
    bool have_header = false;
    AngleUnit unit = AngleUnit::kDegrees;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            std::string_view body(line);
            body.remove_prefix(1);
            if (!body.empty() && body.front() == ' ') {
                body.remove_prefix(1);
            }
            table.comments.emplace_back(body);
            if (body.starts_with("grid=")) {
                body.remove_prefix(5);
                // Unit is not known yet; it is fixed up once the header is read.
                grid = AngleGrid::parse(body, AngleUnit::kDegrees);
            }
            continue;
        }
        if (!have_header) {
            if (line == "swept_deg,mean,predicted,abs_error") {
                unit = AngleUnit::kDegrees;
            } else if (line == "swept_rad,mean,predicted,abs_error") {
                unit = AngleUnit::kRadians;
            } else {
                throw InvalidSpec("line " + std::to_string(line_no) + ": unexpected header '" + line + "'");
            }
            have_header = true;
            continue;
        }
        auto fields = split(line, ',');
        if (fields.size() != 4) {
            throw InvalidSpec("line " + std::to_string(line_no) + ": expected 4 fields");
        }
        table.rows.push_back(SweepRow{
            parse_number(fields[0], line_no),
            parse_number(fields[1], line_no),
            parse_number(fields[2], line_no),
            parse_number(fields[3], line_no),
        });
    }
    if (!have_header) {
        throw InvalidSpec("missing sweep header");
    }
    if (grid) {
        table.grid = *grid;
    } else if (!table.rows.empty()) {
        double step = table.rows.size() > 1 ? table.rows[1].swept - table.rows[0].swept : 1.0;
        table.grid = AngleGrid{table.rows.front().swept, table.rows.back().swept, step, unit};
    }
    table.grid.unit = unit;
    return table;
}

void write_phase_plane_csv(std::ostream &out, const PhasePlaneTable &table) {
    write_comments(out, table.comments);
    const auto u = unit_suffix(table.grid.unit);
    out << "phi_" << u << ",varphi_" << u << ",mean,predicted,abs_error\n";
    for (const auto &row : table.rows) {
        out << format_double(row.phi) << ',' << format_double(row.varphi) << ',' << format_double(row.mean) << ','
            << format_double(row.predicted) << ',' << format_double(row.abs_error) << '\n';
    }
}

void write_distribution_csv(std::ostream &out, const Distribution &d) {
    out << "x,p_left,p_right,p_total\n";
    for (size_t i = 0; i < d.pl.size(); ++i) {
        out << static_cast<int64_t>(i) - d.steps << ',' << format_double(d.pl[i]) << ',' << format_double(d.pr[i])
            << ',' << format_double(d.pl[i] + d.pr[i]) << '\n';
    }
}

}  // namespace qwalk
