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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "qwalk/closed_form.h"
#include "qwalk/csv.h"
#include "qwalk/errors.h"
#include "qwalk/observables.h"
#include "qwalk/sweep.h"

namespace qwalk::cli {

namespace {

struct AngleFlags {
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> gamma;
    std::optional<double> theta;
    std::optional<double> phi;
    std::optional<double> varphi;
    bool radians = false;

    void attach(CLI::App &app) {
        app.add_option("--alpha", alpha, "coin phase alpha (default 0)");
        app.add_option("--beta", beta, "coin mixing angle beta (default 45 deg)");
        app.add_option("--gamma", gamma, "coin phase gamma (default 0)");
        app.add_option("--theta", theta, "initial-state angle theta (default 45 deg)");
        app.add_option("--phi", phi, "phase of the |0L> component (default 0)");
        app.add_option("--varphi", varphi, "phase of the |0R> component (default 0)");
        app.add_flag("--radians", radians, "angles and grids are in radians instead of degrees");
    }

    AngleUnit unit() const {
        return radians ? AngleUnit::kRadians : AngleUnit::kDegrees;
    }

    std::optional<double> rad(const std::optional<double> &v) const {
        if (!v) {
            return std::nullopt;
        }
        return to_radians(*v, unit());
    }

    CoinParams coin() const {
        return {rad(alpha).value_or(0.0), rad(beta).value_or(kPi / 4), rad(gamma).value_or(0.0)};
    }

    InitialStateParams state() const {
        return {rad(theta).value_or(kPi / 4), rad(phi).value_or(0.0), rad(varphi).value_or(0.0)};
    }
};

/// Writes to `path` when non-empty, else to `fallback`.
void emit(const std::string &path, std::ostream &fallback, const std::function<void(std::ostream &)> &writer) {
    if (path.empty()) {
        writer(fallback);
        return;
    }
    std::ofstream file(path);
    if (!file) {
        throw InvalidArgument("cannot open output file '" + path + "'");
    }
    writer(file);
    if (!file) {
        throw InvalidArgument("failed writing output file '" + path + "'");
    }
}

std::string sibling_path(const std::string &path, std::string_view tag) {
    std::filesystem::path p(path);
    std::filesystem::path out = p.parent_path() / (p.stem().string() + "." + std::string(tag) + p.extension().string());
    return out.string();
}

std::optional<AngleGrid> parse_grid(const std::string &text, AngleUnit unit) {
    if (text.empty()) {
        return std::nullopt;
    }
    return AngleGrid::parse(text, unit);
}

AngleGrid default_grid(SweepAxis axis, AngleUnit unit) {
    const double stop = axis == SweepAxis::kPhi ? 360.0 : 180.0;
    if (unit == AngleUnit::kDegrees) {
        return {0.0, stop, 1.0, unit};
    }
    return {0.0, deg_to_rad(stop), deg_to_rad(1.0), unit};
}

int run_walk(const AngleFlags &angles, int64_t steps, const std::string &out_path, std::ostream &out) {
    const InitialStateParams state = angles.state();
    const CoinParams coin = angles.coin();
    const Distribution d = distribution(evolve(state, coin, steps));
    const double mean = mean_position(d);
    const double predicted = predict_mean(state, coin, compute_baseline(coin.beta, steps));
    const AngleUnit u = angles.unit();
    auto shown = [&](double rad) {
        return format_double(u == AngleUnit::kDegrees ? rad_to_deg(rad) : rad);
    };
    emit(out_path, out, [&](std::ostream &os) {
        os << "# mode=walk\n";
        os << "# unit=" << unit_suffix(u) << '\n';
        os << "# coin alpha=" << shown(coin.alpha) << " beta=" << shown(coin.beta) << " gamma=" << shown(coin.gamma)
           << '\n';
        os << "# state theta=" << shown(state.theta) << " phi=" << shown(state.phi) << " varphi=" << shown(state.varphi)
           << '\n';
        os << "# steps=" << steps << '\n';
        os << "# mean=" << format_double(mean) << '\n';
        os << "# predicted=" << format_double(predicted) << '\n';
        os << "# abs_error=" << format_double(std::abs(mean - predicted)) << '\n';
        write_distribution_csv(os, d);
    });
    return kExitOk;
}

int run_sweep_command(
    const AngleFlags &angles,
    const std::string &axis_name,
    int64_t steps,
    const std::string &grid_text,
    const std::string &out_path,
    std::ostream &out) {
    SweepSpec spec;
    if (axis_name == "phi") {
        spec.axis = SweepAxis::kPhi;
    } else if (axis_name == "theta") {
        spec.axis = SweepAxis::kTheta;
    } else {
        throw InvalidSpec("unknown sweep axis '" + axis_name + "' (expected phi or theta)");
    }
    spec.coin = angles.coin();
    spec.state = angles.state();
    spec.steps = steps;
    spec.grid = parse_grid(grid_text, angles.unit()).value_or(default_grid(spec.axis, angles.unit()));
    const SweepTable table = run_sweep(spec);
    emit(out_path, out, [&](std::ostream &os) {
        write_sweep_csv(os, table);
    });
    return kExitOk;
}

int run_verify_command(
    const AngleFlags &angles,
    const std::vector<int64_t> &steps,
    size_t samples,
    uint64_t seed,
    double tol,
    const std::string &out_path,
    std::ostream &out) {
    VerifyOptions options;
    options.samples = samples;
    options.steps = steps;
    options.seed = seed;
    options.tolerance = tol;
    options.theta = angles.rad(angles.theta);
    options.phi = angles.rad(angles.phi);
    options.varphi = angles.rad(angles.varphi);
    options.alpha = angles.rad(angles.alpha);
    options.beta = angles.rad(angles.beta);
    options.gamma = angles.rad(angles.gamma);
    const VerifyReport report = run_verify(options);
    if (out_path.empty()) {
        out << verify_report_json(report) << '\n';
    } else {
        emit(out_path, out, [&](std::ostream &os) {
            os << verify_report_json(report) << '\n';
        });
        out << "seed=" << report.seed << " samples=" << report.samples << " checks=" << report.entries.size()
            << " max_abs_error=" << format_double(report.max_abs_error) << " tol=" << format_double(report.tolerance)
            << (report.pass ? " PASS" : " FAIL") << '\n';
    }
    return report.pass ? kExitOk : kExitVerifyFailed;
}

int run_figure(int figure, const std::string &grid_text, bool radians, const std::string &out_path, std::ostream &out) {
    const AngleUnit unit = radians ? AngleUnit::kRadians : AngleUnit::kDegrees;
    const std::optional<AngleGrid> grid = parse_grid(grid_text, unit);
    switch (figure) {
        case 1: {
            PhasePlaneTable table = figures::figure1(grid);
            table.comments.insert(table.comments.begin(), "figure=1");
            emit(out_path, out, [&](std::ostream &os) {
                write_phase_plane_csv(os, table);
            });
            return kExitOk;
        }
        case 2:
        case 4: {
            const SweepSpec spec = figure == 2 ? figures::figure2_spec(grid) : figures::figure4_spec(grid);
            SweepTable table = run_sweep(spec);
            table.comments.insert(table.comments.begin(), "figure=" + std::to_string(figure));
            emit(out_path, out, [&](std::ostream &os) {
                write_sweep_csv(os, table);
            });
            return kExitOk;
        }
        case 3: {
            BaselineCache cache;
            SweepTable reference = run_sweep(figures::figure2_spec(grid), &cache);
            SweepTable shifted = run_sweep(figures::figure3_spec(grid), &cache);
            const double shift = peak_shift(reference, shifted);
            reference.comments.insert(reference.comments.begin(), {"figure=3", "series=reference"});
            shifted.comments.insert(
                shifted.comments.begin(), {"figure=3", "series=shifted", "peak_shift_deg=" + format_double(shift)});
            if (out_path.empty()) {
                write_sweep_csv(out, reference);
                out << '\n';
                write_sweep_csv(out, shifted);
            } else {
                emit(sibling_path(out_path, "reference"), out, [&](std::ostream &os) {
                    write_sweep_csv(os, reference);
                });
                emit(out_path, out, [&](std::ostream &os) {
                    write_sweep_csv(os, shifted);
                });
            }
            return kExitOk;
        }
        default:
            throw InvalidArgument("figure must be 1, 2, 3 or 4");
    }
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Discrete-time quantum walk simulator and mean-position predictor", "qwalk"};
    app.require_subcommand(1);

    AngleFlags angles;
    int64_t steps = 100;
    std::string out_path;
    std::string grid_text;
    std::string axis = "phi";
    std::vector<int64_t> verify_steps{1, 2, 3, 25, 100};
    size_t samples = 200;
    uint64_t seed = VerifyOptions{}.seed;
    double tol = 1e-9;
    int figure = 0;

    auto *walk = app.add_subcommand("walk", "simulate one walk and print its site distribution");
    angles.attach(*walk);
    walk->add_option("--steps", steps, "number of steps")->capture_default_str();
    walk->add_option("--out", out_path, "output CSV path (default stdout)");

    auto *sweep = app.add_subcommand("sweep", "sweep one initial-state angle, comparing simulation and prediction");
    angles.attach(*sweep);
    sweep->add_option("--steps", steps, "number of steps")->capture_default_str();
    sweep->add_option("--axis", axis, "swept angle: phi or theta")->capture_default_str();
    sweep->add_option("--grid", grid_text, "start:stop:step (default 0:360:1 for phi, 0:180:1 for theta)");
    sweep->add_option("--out", out_path, "output CSV path (default stdout)");

    auto *verify = app.add_subcommand("verify", "check the closed-form mean on seeded random parameters");
    angles.attach(*verify);
    verify->add_option("--steps", verify_steps, "comma-separated step counts")
        ->delimiter(',')
        ->capture_default_str();
    verify->add_option("--samples", samples, "number of random parameter tuples")->capture_default_str();
    verify->add_option("--seed", seed, "64-bit sampling seed")->capture_default_str();
    verify->add_option("--tol", tol, "relative tolerance")->capture_default_str();
    verify->add_option("--out", out_path, "JSON report path (default stdout)");

    auto *fig = app.add_subcommand("figure", "reproduce a figure table (1-4)");
    fig->add_option("number", figure, "figure number")->required()->check(CLI::Range(1, 4));
    fig->add_option("--grid", grid_text, "override the preset grid start:stop:step");
    fig->add_flag("--radians", angles.radians, "grid is in radians");
    fig->add_option("--out", out_path, "output CSV path (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidArguments;
    }

    try {
        if (walk->parsed()) {
            return run_walk(angles, steps, out_path, out);
        }
        if (sweep->parsed()) {
            return run_sweep_command(angles, axis, steps, grid_text, out_path, out);
        }
        if (verify->parsed()) {
            return run_verify_command(angles, verify_steps, samples, seed, tol, out_path, out);
        }
        return run_figure(figure, grid_text, angles.radians, out_path, out);
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidArguments;
    }
}

}  // namespace qwalk::cli
