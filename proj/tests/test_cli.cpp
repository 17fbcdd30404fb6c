#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "process.hpp"

using nlohmann::json;
using testutil::run;

namespace {

constexpr double kPi = std::numbers::pi;

#ifndef RAYSPACE_CLI_PATH
#error "RAYSPACE_CLI_PATH must point at the rayspace binary"
#endif
const std::string kCli = RAYSPACE_CLI_PATH;

json parse_payload(const std::string& text) { return json::parse(text); }

} // namespace

TEST_SUITE("cli") {

TEST_CASE("fsdist on an orthogonal pair") {
    const auto res = run(kCli + " fsdist '[[1,0],[0,0]]' '[[0,0],[1,0]]'");
    REQUIRE(res.exit_code == 0);
    const json out = parse_payload(res.output);
    // 17 significant digits round-trip doubles exactly.
    CHECK(out["distance"].get<double>() == kPi);
    CHECK(out["overlap_modulus"].get<double>() == 0.0);
}

TEST_CASE("fsdist on identical states") {
    const auto res = run(kCli + " fsdist '[[1,0],[0,1]]' '[[1,0],[0,1]]'");
    REQUIRE(res.exit_code == 0);
    const json out = parse_payload(res.output);
    CHECK(std::abs(out["distance"].get<double>()) <= 1e-7);
    CHECK(std::abs(out["overlap_modulus"].get<double>() - 1.0) <= 1e-14);
}

TEST_CASE("fsdist reads state files") {
    const std::string path = "cli_state_a.json";
    { std::ofstream(path) << "[[0.6,0],[0,0.8]]"; }
    const auto res = run(kCli + " fsdist " + path + " '[[0.6,0],[0,0.8]]'");
    std::remove(path.c_str());
    REQUIRE(res.exit_code == 0);
    CHECK(parse_payload(res.output)["distance"].get<double>() <= 1e-7);
}

TEST_CASE("malformed input exits 2 with a parse kind") {
    const auto res = run(kCli + " fsdist '[[1,0]' '[[1,0]]'", true);
    CHECK(res.exit_code == 2);
    const json err = parse_payload(res.output);
    CHECK(err["error"]["kind"] == "parse");
}

TEST_CASE("zero vectors exit 3") {
    const auto res = run(kCli + " fsdist '[[0,0]]' '[[1,0]]'", true);
    CHECK(res.exit_code == 3);
    CHECK(parse_payload(res.output)["error"]["kind"] == "zero_vector");
}

TEST_CASE("unknown atlas exits 2") {
    const auto res = run(kCli + " atlas-check --atlas nope", true);
    CHECK(res.exit_code == 2);
    CHECK(parse_payload(res.output)["error"]["kind"] == "parse");
}

TEST_CASE("atlas-check reports are clean for both atlases") {
    for (const std::string name : {"four-chart", "angular"}) {
        const auto res =
            run(kCli + " atlas-check --atlas " + name + " --samples 100000");
        REQUIRE(res.exit_code == 0);
        const json out = parse_payload(res.output);
        CHECK(out["atlas"] == name);
        CHECK(out["uncovered_count"].get<int>() == 0);
        CHECK(out["max_roundtrip_error"].get<double>() <= 1e-12);
        if (name == "angular") {
            CHECK(out["transition_max_error"].get<double>() <= 1e-12);
        } else {
            // The axis-projection transitions pass through sqrt(1 - u^2),
            // which sheds half its digits at samples hugging a chart edge.
            CHECK(out["transition_max_error"].get<double>() <= 1e-10);
        }
    }
}

TEST_CASE("metric-check json summary stays within the module bounds") {
    const auto res = run(kCli + " metric-check --samples 1000");
    REQUIRE(res.exit_code == 0);
    const json out = parse_payload(res.output);
    CHECK(out["samples"].get<int>() == 1000);
    CHECK(out["max_euclid_residual"].get<double>() <= 1e-15);
    CHECK(out["max_sphere_residual"].get<double>() <= 1e-6);
}

TEST_CASE("metric-check csv emits one row per sample") {
    const auto res = run(kCli + " metric-check --samples 1 --output csv");
    REQUIRE(res.exit_code == 0);
    std::istringstream lines(res.output);
    std::string header, row, extra;
    REQUIRE(std::getline(lines, header));
    CHECK(header == "x,y,dx,dy,euclid_residual,sphere_residual");
    REQUIRE(std::getline(lines, row));
    CHECK(std::count(row.begin(), row.end(), ',') == 5);
    CHECK_FALSE(std::getline(lines, extra));
}

TEST_CASE("every command is byte-identical across reruns") {
    const std::string loop_file = "cli_loop.json";
    {
        std::ofstream out(loop_file);
        out << "[[[0.70710678118654752,0],[0.70710678118654752,0]],"
               "[[0.70710678118654752,0],[0,0.70710678118654752]],"
               "[[1,0],[0,0]]]";
    }
    const std::vector<std::string> commands = {
        kCli + " fsdist '[[1,0],[0,0]]' '[[0,0.6],[0.8,0]]'",
        kCli + " geodesic --from 0.1,0.2 --to 0.8,-0.3 --points 24",
        kCli + " geodesic --from 0.1,0.2 --to 0.8,-0.3 --points 24 --solver analytic --output csv",
        kCli + " atlas-check --atlas four-chart --samples 20000",
        kCli + " atlas-check --atlas angular --samples 20000 --parallel",
        kCli + " chart --atlas four-chart --point 0.6,0.8",
        kCli + " chart --atlas angular --name U2 --samples 500",
        kCli + " metric-check --samples 200 --seed 7",
        kCli + " metric-check --samples 200 --seed 7 --output csv",
        kCli + " phase --loop " + loop_file,
        kCli + " locus --k 0.25 --r 1.5 --samples 100",
        kCli + " locus --k 0.25 --r 1.5 --samples 50 --output csv",
    };
    for (const auto& cmd : commands) {
        CAPTURE(cmd);
        const auto first = run(cmd, true);
        const auto second = run(cmd, true);
        REQUIRE(first.exit_code == 0);
        CHECK(first.output == second.output);
        CHECK_FALSE(first.output.empty());
    }
    std::remove(loop_file.c_str());
}

TEST_CASE("different seeds change the sampled table") {
    const auto a = run(kCli + " metric-check --samples 50 --seed 1 --output csv");
    const auto b = run(kCli + " metric-check --samples 50 --seed 2 --output csv");
    CHECK(a.output != b.output);
}

TEST_CASE("parallel and serial sampling agree byte for byte") {
    const std::string atlas = kCli + " atlas-check --atlas four-chart --samples 50000";
    CHECK(run(atlas).output == run(atlas + " --parallel").output);
    const std::string metric = kCli + " metric-check --samples 2000 --output csv";
    CHECK(run(metric).output == run(metric + " --parallel").output);
}

TEST_CASE("geodesic summary carries both lengths") {
    const auto res = run(kCli + " geodesic --from 0,0 --to 1,0 --points 96");
    REQUIRE(res.exit_code == 0);
    const json out = parse_payload(res.output);
    const double numeric = out["summary"]["length_numeric"].get<double>();
    const double analytic = out["summary"]["length_analytic"].get<double>();
    CHECK(std::abs(analytic - kPi / 2.0) <= 1e-12);
    CHECK(std::abs(numeric - analytic) <= 1e-4);
    CHECK(out["summary"]["iterations"].get<int>() > 0);
    CHECK(out["points"].size() == 96);
}

TEST_CASE("geodesic csv has one row per point plus a header") {
    const auto res = run(
        kCli + " geodesic --from 0,0 --to 0.4,0.3 --points 16 --output csv");
    REQUIRE(res.exit_code == 0);
    std::istringstream lines(res.output);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "index,Zx,Zy,n1,n2,n3");
    int rows = 0;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 16);
}

TEST_CASE("antipodal geodesic endpoints exit 3") {
    const auto res = run(kCli + " geodesic --from 0.5,0 --to -2,0", true);
    CHECK(res.exit_code == 3);
    CHECK(parse_payload(res.output)["error"]["kind"] == "degenerate_geodesic");
}

TEST_CASE("phase payload carries the qubit holonomy fields") {
    const auto res = run(
        kCli +
        " phase --loop '[[[0.70710678118654752,0],[0.70710678118654752,0]],"
        "[[0.70710678118654752,0],[0,0.70710678118654752]],[[1,0],[0,0]]]'");
    REQUIRE(res.exit_code == 0);
    const json out = parse_payload(res.output);
    CHECK(std::abs(out["phase"].get<double>() + kPi / 4.0) <= 1e-12);
    CHECK(std::abs(out["solid_angle"].get<double>() - kPi / 2.0) <= 1e-12);
    CHECK(out["holonomy_residual"].get<double>() <= 1e-12);
}

TEST_CASE("phase on higher-dimensional loops omits the sphere fields") {
    const auto res = run(
        kCli +
        " phase --loop '[[[1,0],[1,0],[0,0]],[[1,0],[0,0],[1,0]],"
        "[[1,0],[1,0],[1,0]]]'");
    REQUIRE(res.exit_code == 0);
    const json out = parse_payload(res.output);
    CHECK(out.contains("phase"));
    CHECK_FALSE(out.contains("solid_angle"));
}

TEST_CASE("locus reports the derived radius") {
    const auto res = run(kCli + " locus --k 0.5 --r 2 --coeff 0.25");
    REQUIRE(res.exit_code == 0);
    const json out = parse_payload(res.output);
    CHECK(out["R"].get<double>() == 4.0);
    CHECK(out["max_level_residual"].get<double>() <= 1e-12);
}

} // TEST_SUITE
