#include "rayspace/harmonics.hpp"

#include <cmath>
#include <numbers>

namespace rayspace {

double default_harmonic_coefficient() { return 3.0 / (8.0 * std::numbers::pi); }

void validate(const LocusSpec& spec) {
    if (!(spec.k > 0.0) || !std::isfinite(spec.k)) {
        throw DomainError("level value k must be positive and finite");
    }
    if (!(spec.r > 0.0) || !std::isfinite(spec.r)) {
        throw DomainError("radial coordinate r must be positive and finite");
    }
    if (spec.c != 0.0 && (!(spec.c > 0.0) || !std::isfinite(spec.c))) {
        throw DomainError("coefficient c must be positive and finite");
    }
}

namespace {

void check_radial(double r) {
    if (!(r > 0.0)) {
        throw DomainError("radial coordinate r must be positive");
    }
}

} // namespace

Complex psi_1_1(const PlanePoint& p, double r, double coefficient) {
    check_radial(r);
    return Complex{-coefficient * p.x / r, -coefficient * p.y / r};
}

Complex psi_1_m1(const PlanePoint& p, double r, double coefficient) {
    check_radial(r);
    return Complex{coefficient * p.x / r, -coefficient * p.y / r};
}

double level_set_radius(const LocusSpec& spec) {
    validate(spec);
    // |psi|^2 = c^2 (x^2 + y^2) / r^2, so the level k^2 is hit exactly on
    // the circle of radius k*r/c.
    return spec.k * spec.r / spec.coefficient();
}

Atlas locus_as_manifold(const LocusSpec& spec) {
    return four_chart_atlas(level_set_radius(spec));
}

} // namespace rayspace
