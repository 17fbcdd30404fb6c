#include "rayspace/atlas.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <thread>

namespace rayspace {

namespace {

constexpr double kPi = std::numbers::pi;

double hypot_dist(const PlanePoint& a, const PlanePoint& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

} // namespace

Chart::Chart(std::string name, DomainPredicate domain, ForwardMap forward,
             InverseMap inverse, Interval codomain)
    : name_(std::move(name)),
      domain_(std::move(domain)),
      forward_(std::move(forward)),
      inverse_(std::move(inverse)),
      codomain_(codomain) {}

double Chart::forward(const PlanePoint& p) const {
    if (!domain_(p)) {
        throw ChartDomainError("point (" + std::to_string(p.x) + ", " +
                               std::to_string(p.y) + ") is outside chart " +
                               name_);
    }
    return forward_(p);
}

PlanePoint Chart::inverse(double u) const {
    if (!codomain_.contains(u)) {
        throw ChartDomainError("coordinate " + std::to_string(u) +
                               " is outside the codomain of chart " + name_);
    }
    return inverse_(u);
}

Atlas::Atlas(std::vector<Chart> charts, double radius)
    : charts_(std::move(charts)), radius_(radius) {
    if (charts_.empty()) throw DomainError("an atlas needs at least one chart");
    if (!(radius_ > 0.0)) throw DomainError("atlas radius must be positive");
}

const Chart& Atlas::chart(const std::string& name) const {
    for (const auto& c : charts_) {
        if (c.name() == name) return c;
    }
    throw DomainError("no chart named " + name + " in this atlas");
}

Atlas four_chart_atlas(double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw DomainError("circle radius must be positive and finite");
    }
    const double R = radius;
    const Interval V{-R, R};
    auto root = [R](double u) { return std::sqrt(std::max(0.0, R * R - u * u)); };

    std::vector<Chart> charts;
    charts.reserve(4);
    charts.emplace_back(
        "U1", [](const PlanePoint& p) { return p.y > 0.0; },
        [](const PlanePoint& p) { return p.x; },
        [root](double u) { return PlanePoint{u, root(u)}; }, V);
    charts.emplace_back(
        "U2", [](const PlanePoint& p) { return p.y < 0.0; },
        [](const PlanePoint& p) { return p.x; },
        [root](double u) { return PlanePoint{u, -root(u)}; }, V);
    charts.emplace_back(
        "U3", [](const PlanePoint& p) { return p.x > 0.0; },
        [](const PlanePoint& p) { return p.y; },
        [root](double u) { return PlanePoint{root(u), u}; }, V);
    charts.emplace_back(
        "U4", [](const PlanePoint& p) { return p.x < 0.0; },
        [](const PlanePoint& p) { return p.y; },
        [root](double u) { return PlanePoint{-root(u), u}; }, V);
    return Atlas(std::move(charts), R);
}

Atlas angular_atlas() {
    std::vector<Chart> charts;
    charts.reserve(2);
    // The excluded points are exact: on the unit circle y == 0 happens only
    // at (+-1, 0).
    charts.emplace_back(
        "U1", [](const PlanePoint& p) { return !(p.y == 0.0 && p.x < 0.0); },
        [](const PlanePoint& p) { return std::atan2(p.y, p.x); },
        [](double u) { return PlanePoint{std::cos(u), std::sin(u)}; },
        Interval{-kPi, kPi});
    charts.emplace_back(
        "U2", [](const PlanePoint& p) { return !(p.y == 0.0 && p.x > 0.0); },
        [](const PlanePoint& p) {
            const double theta = std::atan2(p.y, p.x);
            return theta > 0.0 ? theta : theta + 2.0 * kPi;
        },
        [](double u) { return PlanePoint{std::cos(u), std::sin(u)}; },
        Interval{0.0, 2.0 * kPi});
    return Atlas(std::move(charts), 1.0);
}

std::vector<std::pair<std::string, double>> locate(const Atlas& a,
                                                   const PlanePoint& p) {
    const double r_sq = a.radius() * a.radius();
    const double defect = std::abs(p.x * p.x + p.y * p.y - r_sq);
    if (defect > 1e-9 * std::max(1.0, r_sq)) {
        throw OffManifoldError("point (" + std::to_string(p.x) + ", " +
                               std::to_string(p.y) + ") is not on the circle");
    }
    std::vector<std::pair<std::string, double>> found;
    for (const auto& c : a.charts()) {
        if (c.contains(p)) found.emplace_back(c.name(), c.forward(p));
    }
    return found;
}

HomeomorphismReport verify_homeomorphism(const Chart& c,
                                         std::size_t n_samples) {
    if (n_samples < 2) throw DomainError("need at least 2 samples");

    const Interval& V = c.codomain();
    const double span = V.hi - V.lo;

    HomeomorphismReport report;
    PlanePoint prev{};
    double prev_u = 0.0;
    for (std::size_t i = 0; i < n_samples; ++i) {
        // Strictly interior samples; the codomain is open.
        const double u = V.lo + span * (static_cast<double>(i) + 1.0) /
                                    (static_cast<double>(n_samples) + 1.0);
        try {
            const PlanePoint p = c.inverse(u);

            const double coord_err = std::abs(c.forward(p) - u);
            const double point_err = hypot_dist(c.inverse(c.forward(p)), p);
            report.max_roundtrip_error =
                std::max({report.max_roundtrip_error, coord_err, point_err});

            if (i > 0) {
                const double dist = hypot_dist(p, prev);
                if (dist > 0.0) {
                    report.continuity_modulus =
                        std::max(report.continuity_modulus,
                                 std::abs(c.forward(p) - prev_u) / dist);
                }
            }
            prev = p;
            prev_u = u;
        } catch (const ChartDomainError&) {
            // A chart whose inverse escapes its own domain (or whose forward
            // leaves the codomain) fails the homeomorphism test outright.
            report.max_roundtrip_error =
                std::numeric_limits<double>::infinity();
        }
    }
    return report;
}

namespace {

CoverageReport coverage_scan(const Atlas& a, std::size_t begin,
                             std::size_t end, std::size_t n_samples) {
    CoverageReport report;
    const double R = a.radius();
    for (std::size_t i = begin; i < end; ++i) {
        const double theta =
            2.0 * kPi * static_cast<double>(i) / static_cast<double>(n_samples);
        const PlanePoint p{R * std::cos(theta), R * std::sin(theta)};
        bool covered = false;
        for (const auto& c : a.charts()) {
            if (c.contains(p)) {
                covered = true;
                break;
            }
        }
        if (!covered) report.uncovered_points.push_back(p);
    }
    report.samples_checked = end - begin;
    return report;
}

} // namespace

CoverageReport verify_coverage(const Atlas& a, std::size_t n_samples,
                               bool parallel) {
    if (n_samples < 1) throw DomainError("need at least 1 sample");

    if (!parallel || n_samples < 4096) {
        return coverage_scan(a, 0, n_samples, n_samples);
    }

    const std::size_t n_chunks =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()),
                              n_samples / 1024);
    std::vector<std::future<CoverageReport>> futures;
    futures.reserve(n_chunks);
    for (std::size_t k = 0; k < n_chunks; ++k) {
        const std::size_t begin = n_samples * k / n_chunks;
        const std::size_t end = n_samples * (k + 1) / n_chunks;
        futures.push_back(std::async(std::launch::async, coverage_scan,
                                     std::cref(a), begin, end, n_samples));
    }
    // Merge in chunk order: output is identical to the serial scan.
    CoverageReport merged;
    for (auto& f : futures) {
        CoverageReport part = f.get();
        merged.samples_checked += part.samples_checked;
        merged.uncovered_points.insert(merged.uncovered_points.end(),
                                       part.uncovered_points.begin(),
                                       part.uncovered_points.end());
    }
    return merged;
}

double transition(const Chart& from, const Chart& to, double u) {
    const PlanePoint p = from.inverse(u);
    if (!to.contains(p)) {
        throw ChartDomainError("coordinate " + std::to_string(u) + " in chart " +
                               from.name() + " maps outside chart " + to.name());
    }
    return to.forward(p);
}

double transition(const Atlas& a, const std::string& from_chart,
                  const std::string& to_chart, double u) {
    return transition(a.chart(from_chart), a.chart(to_chart), u);
}

} // namespace rayspace
