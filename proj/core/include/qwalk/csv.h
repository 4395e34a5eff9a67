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

#ifndef QWALK_CSV_H
#define QWALK_CSV_H

#include <iosfwd>
#include <string>

namespace qwalk {

struct SweepTable;
struct PhasePlaneTable;
struct Distribution;

/// Shortest-round-trip-safe decimal: 17 significant digits.
std::string format_double(double value);

/// Header `swept_<unit>,mean,predicted,abs_error`, preceded by '#' comment lines.
void write_sweep_csv(std::ostream &out, const SweepTable &table);

/// Inverse of write_sweep_csv. Rows and values are restored bit-identically.
/// The grid comes from a `# grid=` line when present, else from the rows.
/// Throws InvalidSpec on malformed input.
SweepTable parse_sweep_csv(std::istream &in);

void write_phase_plane_csv(std::ostream &out, const PhasePlaneTable &table);

/// Header `x,p_left,p_right,p_total`, one row per site in [-t, t].
void write_distribution_csv(std::ostream &out, const Distribution &d);

}  // namespace qwalk

#endif
