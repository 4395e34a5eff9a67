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
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"
#include "qwalk/csv.h"
#include "qwalk/sweep.h"

using namespace qwalk;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string &name) {
    return std::filesystem::path(::testing::TempDir()) / name;
}

std::string read_file(const std::filesystem::path &p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(cli, walk_prints_distribution_and_mean) {
    Result r = run_cli({"walk", "--theta", "0", "--steps", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("x,p_left,p_right,p_total\n-3,"), std::string::npos);
    EXPECT_NE(r.out.find("# mean=-0.4999999999999"), std::string::npos);
    EXPECT_NE(r.out.find("# unit=deg"), std::string::npos);
}

TEST(cli, walk_radians_flag) {
    Result deg = run_cli({"walk", "--theta", "90", "--steps", "3"});
    Result rad = run_cli({"walk", "--theta", "1.5707963267948966", "--radians", "--steps", "3"});
    ASSERT_EQ(rad.code, 0);
    EXPECT_NE(rad.out.find("# unit=rad"), std::string::npos);
    auto mean_line = [](const std::string &s) {
        auto p = s.find("# mean=");
        return s.substr(p, s.find('\n', p) - p);
    };
    EXPECT_EQ(mean_line(deg.out), mean_line(rad.out));
}

TEST(cli, sweep_writes_parseable_csv) {
    auto path = temp_path("sweep.csv");
    Result r = run_cli({"sweep", "--grid", "0:360:10", "--out", path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream in(path);
    SweepTable t = parse_sweep_csv(in);
    EXPECT_EQ(t.rows.size(), 37u);
    EXPECT_LT(t.max_abs_error(), 1e-9);
}

TEST(cli, theta_axis_default_grid) {
    Result r = run_cli({"sweep", "--axis", "theta", "--phi", "90", "--steps", "10"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    SweepTable t = parse_sweep_csv(in);
    EXPECT_EQ(t.rows.size(), 181u);
    EXPECT_EQ(t.rows.back().swept, 180.0);
}

TEST(cli, verify_json_and_exit_codes) {
    Result r = run_cli({"verify", "--samples", "5", "--steps", "1,3,25", "--seed", "99"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["seed"], 99u);
    EXPECT_EQ(j["samples"], 5u);
    EXPECT_EQ(j["pass"], true);
    EXPECT_EQ(j["results"].size(), 15u);

    // An absurdly tight tolerance fails on rounding noise -> exit 1.
    Result tight = run_cli({"verify", "--samples", "20", "--steps", "100", "--tol", "1e-300"});
    EXPECT_EQ(tight.code, 1);
}

TEST(cli, verify_report_to_file) {
    auto path = temp_path("verify.json");
    Result r = run_cli({"verify", "--samples", "3", "--steps", "2", "--out", path.string()});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
    EXPECT_NE(r.out.find("seed="), std::string::npos);
    auto j = nlohmann::json::parse(read_file(path));
    EXPECT_TRUE(j.contains("max_abs_error"));
}

TEST(cli, verify_pinned_theta) {
    Result r = run_cli({"verify", "--samples", "1", "--steps", "5", "--theta", "0"});
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["results"][0]["theta"].get<double>(), 0.0);
}

TEST(cli, figure_presets) {
    for (const char *n : {"2", "4"}) {
        Result r = run_cli({"figure", n});
        ASSERT_EQ(r.code, 0) << r.err;
        std::istringstream in(r.out);
        SweepTable t = parse_sweep_csv(in);
        EXPECT_LT(t.max_abs_error(), 1e-9);
        EXPECT_EQ(t.comments.front(), std::string("figure=") + n);
    }
    Result one = run_cli({"figure", "1", "--grid", "0:360:90"});
    ASSERT_EQ(one.code, 0);
    EXPECT_NE(one.out.find("phi_deg,varphi_deg,mean,predicted,abs_error"), std::string::npos);
}

TEST(cli, figure3_writes_both_series) {
    auto path = temp_path("fig3.csv");
    Result r = run_cli({"figure", "3", "--out", path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream shifted_in(path);
    std::ifstream ref_in(temp_path("fig3.reference.csv"));
    SweepTable shifted = parse_sweep_csv(shifted_in);
    SweepTable ref = parse_sweep_csv(ref_in);
    EXPECT_EQ(peak_shift(ref, shifted), -129.0);
    EXPECT_NE(read_file(path).find("# peak_shift_deg=-129\n"), std::string::npos);
}

TEST(cli, invalid_arguments_exit_2) {
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"bogus"}).code, 2);
    EXPECT_EQ(run_cli({"figure", "5"}).code, 2);
    EXPECT_EQ(run_cli({"sweep", "--grid", "0:10"}).code, 2);
    EXPECT_EQ(run_cli({"sweep", "--axis", "gamma"}).code, 2);
    EXPECT_EQ(run_cli({"walk", "--steps", "-1"}).code, 2);
    EXPECT_EQ(run_cli({"walk", "--beta", "nan"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "--samples", "0"}).code, 2);
    EXPECT_EQ(run_cli({"walk", "--out", "/nonexistent-dir/x.csv"}).code, 2);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}
