// Command-line surface for the rayspace library. Every command emits a JSON
// payload on stdout; with --output csv the table goes to stdout and the JSON
// summary to stderr. Errors are JSON objects on stderr with a machine
// readable kind: exit 2 for input/usage problems, 3 for mathematical domain
// errors. All sampling is driven by --seed, so equal invocations produce
// byte-identical output.

#include <cstdio>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "rayspace/atlas.hpp"
#include "rayspace/complex_coords.hpp"
#include "rayspace/fubini_study.hpp"
#include "rayspace/geodesic_opt.hpp"
#include "rayspace/harmonics.hpp"
#include "rayspace/hilbert.hpp"
#include "rayspace/json_io.hpp"
#include "rayspace/phase.hpp"
#include "rayspace/rng.hpp"

namespace {

using namespace rayspace;

// Full double precision, 17 significant digits, locale-independent.
std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

// Minimal JSON object assembler; field order is insertion order.
class JsonObject {
public:
    JsonObject& field(const std::string& key, const std::string& raw_value) {
        if (!body_.empty()) body_ += ",";
        body_ += quoted(key) + ":" + raw_value;
        return *this;
    }
    JsonObject& number(const std::string& key, double v) {
        return field(key, num(v));
    }
    JsonObject& integer(const std::string& key, long long v) {
        return field(key, std::to_string(v));
    }
    JsonObject& text(const std::string& key, const std::string& v) {
        return field(key, quoted(v));
    }
    std::string str() const { return "{" + body_ + "}"; }

private:
    std::string body_;
};

void emit_error(const Error& e) {
    JsonObject err;
    err.text("kind", e.kind()).text("message", e.what());
    std::cerr << "{\"error\":" << err.str() << "}\n";
}

// A state argument is inline JSON when it starts with '['; otherwise it
// names a file.
StateVector load_state(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '[') {
        return parse_state_json(arg);
    }
    return parse_state_json(read_file(arg));
}

std::vector<StateVector> load_state_list(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '[') {
        return parse_state_list_json(arg);
    }
    return parse_state_list_json(read_file(arg));
}

PlanePoint parse_xy(const std::string& arg) {
    std::istringstream ss(arg);
    double x = 0.0, y = 0.0;
    char comma = 0;
    if (!(ss >> x >> comma >> y) || comma != ',' || !(ss >> std::ws).eof()) {
        throw ParseError("expected a coordinate pair x,y, got: " + arg);
    }
    return {x, y};
}

Atlas atlas_by_name(const std::string& name) {
    if (name == "four-chart") return four_chart_atlas();
    if (name == "angular") return angular_atlas();
    throw ParseError("unknown atlas: " + name +
                     " (expected four-chart or angular)");
}

struct GlobalOpts {
    std::uint64_t seed = 42;
    std::size_t samples = 0; // 0: per-command default
    std::string output = "json";
    bool parallel = false;

    std::size_t samples_or(std::size_t fallback) const {
        return samples > 0 ? samples : fallback;
    }
    bool csv() const { return output == "csv"; }
};

// ---------------------------------------------------------------- commands

int cmd_fsdist(const std::string& arg_a, const std::string& arg_b) {
    const StateVector a = load_state(arg_a);
    const StateVector b = load_state(arg_b);
    const double distance = fs_distance(a, b);
    const double overlap =
        std::abs(inner_product(normalize(a), normalize(b)));
    JsonObject out;
    out.number("distance", distance).number("overlap_modulus", overlap);
    std::cout << out.str() << "\n";
    return 0;
}

int cmd_geodesic(const PlanePoint& from, const PlanePoint& to, int n_points,
                 const std::string& solver, const GlobalOpts& g) {
    const Complex a = complexify(from);
    const Complex b = complexify(to);

    SolverStats stats;
    PlanarCurve curve = [&] {
        if (solver == "minimize") {
            SolverConfig cfg;
            cfg.n_points = n_points;
            return minimize_geodesic(a, b, cfg, &stats);
        }
        if (solver == "analytic") {
            return analytic_geodesic(a, b, n_points);
        }
        throw ParseError("unknown solver: " + solver +
                         " (expected minimize or analytic)");
    }();

    const double length_numeric = discrete_length(curve);
    const double length_analytic =
        great_circle_angle(inverse_stereographic(a), inverse_stereographic(b));

    JsonObject summary;
    summary.number("length_numeric", length_numeric)
        .number("length_analytic", length_analytic)
        .number("residual", std::abs(length_numeric - length_analytic))
        .integer("iterations", stats.iterations);

    std::ostringstream rows;
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const SpherePoint n = inverse_stereographic(curve[i]);
        rows << i << "," << num(curve[i].real()) << "," << num(curve[i].imag())
             << "," << num(n.n1) << "," << num(n.n2) << "," << num(n.n3)
             << "\n";
    }

    if (g.csv()) {
        std::cout << "index,Zx,Zy,n1,n2,n3\n" << rows.str();
        std::cerr << summary.str() << "\n";
    } else {
        std::string points = "[";
        for (std::size_t i = 0; i < curve.size(); ++i) {
            const SpherePoint n = inverse_stereographic(curve[i]);
            if (i > 0) points += ",";
            points += "[" + std::to_string(i) + "," + num(curve[i].real()) +
                      "," + num(curve[i].imag()) + "," + num(n.n1) + "," +
                      num(n.n2) + "," + num(n.n3) + "]";
        }
        points += "]";
        JsonObject out;
        out.field("summary", summary.str()).field("points", points);
        std::cout << out.str() << "\n";
    }
    return 0;
}

int cmd_atlas_check(const std::string& atlas_name, const GlobalOpts& g) {
    const Atlas atlas = atlas_by_name(atlas_name);
    const std::size_t n = g.samples_or(100000);

    double max_roundtrip = 0.0;
    const std::size_t n_homeo =
        std::max<std::size_t>(2, std::min<std::size_t>(n, 100000));
    for (const auto& chart : atlas.charts()) {
        const auto report = verify_homeomorphism(chart, n_homeo);
        max_roundtrip = std::max(max_roundtrip, report.max_roundtrip_error);
    }

    const CoverageReport coverage = verify_coverage(atlas, n, g.parallel);

    // Transition consistency: at sampled points lying in two charts, the
    // transition of one local coordinate must reproduce the other.
    double max_transition = 0.0;
    const std::size_t n_trans = std::min<std::size_t>(n, 100000);
    for (std::size_t i = 0; i < n_trans; ++i) {
        const double theta = 2.0 * std::numbers::pi *
                             (static_cast<double>(i) + 0.5) /
                             static_cast<double>(n_trans);
        const PlanePoint p{atlas.radius() * std::cos(theta),
                           atlas.radius() * std::sin(theta)};
        const auto located = locate(atlas, p);
        for (const auto& [from_name, from_u] : located) {
            for (const auto& [to_name, to_u] : located) {
                const double mapped = transition(atlas, from_name, to_name, from_u);
                max_transition = std::max(max_transition, std::abs(mapped - to_u));
            }
        }
    }

    JsonObject out;
    out.text("atlas", atlas_name)
        .integer("samples", static_cast<long long>(n))
        .number("max_roundtrip_error", max_roundtrip)
        .integer("uncovered_count",
                 static_cast<long long>(coverage.uncovered_points.size()))
        .number("transition_max_error", max_transition);
    std::cout << out.str() << "\n";
    return 0;
}

int cmd_chart(const std::string& atlas_name,
              const std::optional<std::string>& chart_name,
              const std::optional<std::string>& point_arg,
              const GlobalOpts& g) {
    const Atlas atlas = atlas_by_name(atlas_name);
    if (point_arg) {
        const PlanePoint p = parse_xy(*point_arg);
        const auto located = locate(atlas, p);
        std::string charts = "[";
        for (std::size_t i = 0; i < located.size(); ++i) {
            if (i > 0) charts += ",";
            JsonObject entry;
            entry.text("chart", located[i].first)
                .number("coordinate", located[i].second);
            charts += entry.str();
        }
        charts += "]";
        JsonObject out;
        out.text("atlas", atlas_name)
            .field("point", "[" + num(p.x) + "," + num(p.y) + "]")
            .field("charts", charts);
        std::cout << out.str() << "\n";
        return 0;
    }
    if (!chart_name) {
        throw ParseError("chart requires --point or --name");
    }
    const std::size_t n = g.samples_or(1000);
    const auto report = verify_homeomorphism(atlas.chart(*chart_name), n);
    JsonObject out;
    out.text("atlas", atlas_name)
        .text("chart", *chart_name)
        .integer("samples", static_cast<long long>(n))
        .number("max_roundtrip_error", report.max_roundtrip_error)
        .number("continuity_modulus", report.continuity_modulus);
    std::cout << out.str() << "\n";
    return 0;
}

int cmd_metric_check(const GlobalOpts& g) {
    const std::size_t n = g.samples_or(1000);
    Rng rng(g.seed);

    struct Sample {
        PlanePoint p, dp;
    };
    // Samples are drawn up front in a fixed order, so the parallel path can
    // split the residual evaluation without touching the stream.
    std::vector<Sample> samples(n);
    for (auto& s : samples) {
        s.p = {rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
        s.dp = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    }

    struct Residuals {
        double euclid, sphere;
    };
    std::vector<Residuals> residuals(n);
    auto evaluate = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const Sample& s = samples[i];
            const Complex dz = complexify(s.dp);
            const Complex z = complexify(s.p);
            const double exact = sphere_metric_sq(z, dz);
            residuals[i].euclid =
                std::abs(euclidean_metric_sq(s.p, s.dp) - std::norm(dz));
            residuals[i].sphere =
                exact > 0.0
                    ? std::abs(pushforward_metric_sq_fd(z, dz) - exact) / exact
                    : 0.0;
        }
    };
    if (g.parallel && n >= 512) {
        const std::size_t n_chunks = std::min<std::size_t>(
            std::max(1u, std::thread::hardware_concurrency()), n / 128);
        std::vector<std::future<void>> futures;
        for (std::size_t k = 0; k < n_chunks; ++k) {
            futures.push_back(std::async(std::launch::async, evaluate,
                                         n * k / n_chunks,
                                         n * (k + 1) / n_chunks));
        }
        for (auto& f : futures) f.get();
    } else {
        evaluate(0, n);
    }

    double max_euclid = 0.0;
    double max_sphere = 0.0;
    std::ostringstream rows;
    for (std::size_t i = 0; i < n; ++i) {
        max_euclid = std::max(max_euclid, residuals[i].euclid);
        max_sphere = std::max(max_sphere, residuals[i].sphere);
        rows << num(samples[i].p.x) << "," << num(samples[i].p.y) << ","
             << num(samples[i].dp.x) << "," << num(samples[i].dp.y) << ","
             << num(residuals[i].euclid) << "," << num(residuals[i].sphere)
             << "\n";
    }

    JsonObject summary;
    summary.integer("samples", static_cast<long long>(n))
        .integer("seed", static_cast<long long>(g.seed))
        .number("max_euclid_residual", max_euclid)
        .number("max_sphere_residual", max_sphere);

    if (g.csv()) {
        std::cout << "x,y,dx,dy,euclid_residual,sphere_residual\n" << rows.str();
        std::cerr << summary.str() << "\n";
    } else {
        std::cout << summary.str() << "\n";
    }
    return 0;
}

int cmd_phase(const std::string& loop_arg) {
    const std::vector<StateVector> vertices = load_state_list(loop_arg);
    const ClosedLoop loop{vertices};
    const double phase = pancharatnam_phase(loop);
    JsonObject out;
    out.number("phase", phase);
    if (vertices.front().dim() == 2) {
        out.number("solid_angle", solid_angle(loop))
            .number("holonomy_residual", holonomy_check(loop));
    }
    std::cout << out.str() << "\n";
    return 0;
}

int cmd_locus(double k, double r, double coeff, const GlobalOpts& g) {
    LocusSpec spec{k, r, coeff};
    validate(spec);
    const double radius = level_set_radius(spec);
    const double k_sq = spec.k * spec.k;
    const std::size_t n = g.samples_or(1000);

    double max_residual = 0.0;
    std::ostringstream rows;
    for (std::size_t i = 0; i < n; ++i) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) /
                             static_cast<double>(n);
        const PlanePoint p{radius * std::cos(theta), radius * std::sin(theta)};
        const Complex psi = psi_1_1(p, spec.r, spec.coefficient());
        const double residual = std::abs(std::norm(psi) - k_sq);
        max_residual = std::max(max_residual, residual);
        if (g.csv()) {
            rows << num(p.x) << "," << num(p.y) << "," << num(residual) << "\n";
        }
    }

    JsonObject summary;
    summary.number("R", radius)
        .number("max_level_residual", max_residual)
        .integer("samples", static_cast<long long>(n));

    if (g.csv()) {
        std::cout << "x,y,level_residual\n" << rows.str();
        std::cerr << summary.str() << "\n";
    } else {
        std::cout << summary.str() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Projective-space geometry toolkit"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "PRNG seed (default 42)");
    app.add_option("--samples", g.samples, "sample count for sweep commands");
    app.add_option("--output", g.output, "payload format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--parallel", g.parallel,
                 "parallelize sampling loops (deterministic reduction)");

    std::string state_a, state_b;
    auto* fsdist = app.add_subcommand(
        "fsdist", "Geodesic distance between two rays");
    fsdist->add_option("state1", state_a, "state JSON (inline or file)")
        ->required();
    fsdist->add_option("state2", state_b, "state JSON (inline or file)")
        ->required();
    fsdist->fallthrough();

    std::string from_arg, to_arg, solver = "minimize";
    int n_points = 64;
    auto* geodesic = app.add_subcommand(
        "geodesic", "Geodesic between two chart points");
    geodesic->add_option("--from", from_arg, "start point x,y")->required();
    geodesic->add_option("--to", to_arg, "end point x,y")->required();
    geodesic->add_option("--points", n_points, "curve resolution (default 64)");
    geodesic->add_option("--solver", solver, "minimize (default) or analytic");
    geodesic->fallthrough();

    std::string atlas_name;
    auto* atlas_check = app.add_subcommand(
        "atlas-check", "Verify charts, coverage and transitions of an atlas");
    atlas_check->add_option("--atlas", atlas_name, "four-chart or angular")
        ->required();
    atlas_check->fallthrough();

    std::string chart_atlas;
    std::optional<std::string> chart_name, chart_point;
    auto* chart = app.add_subcommand(
        "chart", "Locate a point or verify a single chart");
    chart->add_option("--atlas", chart_atlas, "four-chart or angular")
        ->required();
    chart->add_option("--name", chart_name, "chart to verify");
    chart->add_option("--point", chart_point, "circle point x,y to locate");
    chart->fallthrough();

    auto* metric_check = app.add_subcommand(
        "metric-check", "Sampled residuals of the plane and sphere metrics");
    metric_check->fallthrough();

    std::string loop_arg;
    auto* phase = app.add_subcommand(
        "phase", "Geometric phase of a closed loop of states");
    phase->add_option("--loop", loop_arg, "loop JSON (inline or file)")
        ->required();
    phase->fallthrough();

    double locus_k = 0.0, locus_r = 0.0, locus_coeff = 0.0;
    auto* locus = app.add_subcommand(
        "locus", "Level-set circle of the l=1 harmonics");
    locus->add_option("--k", locus_k, "level value")->required();
    locus->add_option("--r", locus_r, "radial coordinate")->required();
    locus->add_option("--coeff", locus_coeff,
                      "prefactor (default 3/(8*pi))");
    locus->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error(rayspace::ParseError(e.what()));
        return 2;
    }

    try {
        if (*fsdist) return cmd_fsdist(state_a, state_b);
        if (*geodesic) {
            return cmd_geodesic(parse_xy(from_arg), parse_xy(to_arg), n_points,
                                solver, g);
        }
        if (*atlas_check) return cmd_atlas_check(atlas_name, g);
        if (*chart) return cmd_chart(chart_atlas, chart_name, chart_point, g);
        if (*metric_check) return cmd_metric_check(g);
        if (*phase) return cmd_phase(loop_arg);
        if (*locus) return cmd_locus(locus_k, locus_r, locus_coeff, g);
    } catch (const rayspace::ParseError& e) {
        emit_error(e);
        return 2;
    } catch (const rayspace::Error& e) {
        emit_error(e);
        return 3;
    }
    return 0;
}
