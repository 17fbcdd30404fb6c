#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rayspace/complex_coords.hpp"
#include "rayspace/errors.hpp"

namespace rayspace {

// Open interval of local coordinates.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double u) const noexcept { return u > lo && u < hi; }
};

// A chart (U, phi) on a circle: an open domain given as a predicate on
// circle points, a forward map onto an open interval of local coordinates,
// and its inverse. Domains and codomains are open; forward/inverse validate
// membership and throw ChartDomainError outside.
class Chart {
public:
    using DomainPredicate = std::function<bool(const PlanePoint&)>;
    using ForwardMap = std::function<double(const PlanePoint&)>;
    using InverseMap = std::function<PlanePoint(double)>;

    Chart(std::string name, DomainPredicate domain, ForwardMap forward,
          InverseMap inverse, Interval codomain);

    const std::string& name() const noexcept { return name_; }
    const Interval& codomain() const noexcept { return codomain_; }

    bool contains(const PlanePoint& p) const { return domain_(p); }

    double forward(const PlanePoint& p) const;
    PlanePoint inverse(double u) const;

private:
    std::string name_;
    DomainPredicate domain_;
    ForwardMap forward_;
    InverseMap inverse_;
    Interval codomain_;
};

struct HomeomorphismReport {
    double max_roundtrip_error = 0.0;
    double continuity_modulus = 0.0;
};

struct CoverageReport {
    std::vector<PlanePoint> uncovered_points;
    std::size_t samples_checked = 0;
};

// Charts covering a circle of the given radius.
class Atlas {
public:
    Atlas(std::vector<Chart> charts, double radius);

    static constexpr int manifold_dim = 1;

    const std::vector<Chart>& charts() const noexcept { return charts_; }
    double radius() const noexcept { return radius_; }
    const Chart& chart(const std::string& name) const;

private:
    std::vector<Chart> charts_;
    double radius_;
};

// The four axis-projection charts: U1 = {y > 0}, U2 = {y < 0}, U3 = {x > 0},
// U4 = {x < 0}, with forward maps x, x, y, y, codomains (-radius, radius),
// and the explicit square-root inverses.
Atlas four_chart_atlas(double radius = 1.0);

// Two angular charts on the unit circle: U1 is the circle minus (-1, 0) with
// angle in (-pi, pi); U2 is the circle minus (1, 0) with angle in (0, 2*pi).
// The local coordinates coincide on the upper semicircle and differ by
// exactly 2*pi on the lower one.
Atlas angular_atlas();

// Local coordinates of p in every chart whose domain contains it. p must lie
// on the atlas's circle to within |x^2 + y^2 - R^2| <= 1e-9 * max(1, R^2).
std::vector<std::pair<std::string, double>> locate(const Atlas& a,
                                                   const PlanePoint& p);

// Samples the chart's codomain and domain, reporting the worst round-trip
// error in either direction and a sampled Lipschitz-style modulus of the
// forward map. Small round trips plus a finite modulus are the numerical
// evidence that the chart is a homeomorphism.
HomeomorphismReport verify_homeomorphism(const Chart& c, std::size_t n_samples);

// Checks n uniformly spaced angles against all chart domains and lists the
// points covered by none. `parallel` splits the scan into chunks combined in
// a fixed order, so results do not depend on scheduling.
CoverageReport verify_coverage(const Atlas& a, std::size_t n_samples,
                               bool parallel = false);

// Transition map between charts: forward_to(inverse_from(u)). The point must
// lie in both domains.
double transition(const Chart& from, const Chart& to, double u);
double transition(const Atlas& a, const std::string& from_chart,
                  const std::string& to_chart, double u);

} // namespace rayspace
