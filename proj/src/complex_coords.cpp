#include "rayspace/complex_coords.hpp"

#include <algorithm>

#include "rayspace/fubini_study.hpp"

namespace rayspace {

Complex complexify(const PlanePoint& p) { return Complex{p.x, p.y}; }

PlanePoint realify(const Complex& z) { return {z.real(), z.imag()}; }

Complex jacobian_det() {
    // dZ/dx = 1, dZ/dy = i, dZbar/dx = 1, dZbar/dy = -i.
    const Complex a{1.0, 0.0}, b{0.0, 1.0};
    const Complex c{1.0, 0.0}, d{0.0, -1.0};
    return a * d - b * c;
}

double euclidean_metric_sq(const PlanePoint& /*p*/, const PlanePoint& dp) {
    return dp.x * dp.x + dp.y * dp.y;
}

double sphere_metric_sq(const Complex& at, const Complex& dz) {
    const double denom = 1.0 + std::norm(at);
    return 4.0 * std::norm(dz) / (denom * denom);
}

SpherePoint inverse_stereographic(const Complex& z) {
    const double r_sq = std::norm(z);
    const double inv = 1.0 / (1.0 + r_sq);
    return {2.0 * z.real() * inv, 2.0 * z.imag() * inv, (r_sq - 1.0) * inv};
}

Complex stereographic(const SpherePoint& n) {
    const SpherePoint north{0.0, 0.0, 1.0};
    if ((n - north).norm() <= 1e-12) {
        throw PoleSingularityError(
            "the north pole is the excluded singular point of the chart");
    }
    const Complex horizontal{n.n1, n.n2};
    if (n.n3 > 0.0) {
        // Near the north pole 1 - n3 cancels; use the equivalent form with
        // n1^2 + n2^2 = (1 - n3)(1 + n3) in the denominator.
        return horizontal * (1.0 + n.n3) / (n.n1 * n.n1 + n.n2 * n.n2);
    }
    return horizontal / (1.0 - n.n3);
}

SpherePoint bloch_map(const StateVector& s) {
    if (s.dim() != 2) {
        throw DimensionError("bloch_map requires a 2-level state, got dimension " +
                             std::to_string(s.dim()));
    }
    const StateVector u = normalize(s);
    const Complex cross = std::conj(u[0]) * u[1];
    return {2.0 * cross.real(), 2.0 * cross.imag(),
            std::norm(u[1]) - std::norm(u[0])};
}

double great_circle_angle(const SpherePoint& a, const SpherePoint& b) {
    return std::atan2(a.cross(b).norm(), a.dot(b));
}

double fs_vs_sphere_consistency(const StateVector& a, const StateVector& b) {
    const double fs = fs_distance(a, b);
    const double sphere = great_circle_angle(bloch_map(a), bloch_map(b));
    return std::abs(fs - sphere);
}

double pushforward_metric_sq_fd(const Complex& at, const Complex& dz,
                                double step) {
    const SpherePoint plus = inverse_stereographic(at + step * dz);
    const SpherePoint minus = inverse_stereographic(at - step * dz);
    const double inv = 1.0 / (2.0 * step);
    const double d1 = (plus.n1 - minus.n1) * inv;
    const double d2 = (plus.n2 - minus.n2) * inv;
    const double d3 = (plus.n3 - minus.n3) * inv;
    return d1 * d1 + d2 * d2 + d3 * d3;
}

} // namespace rayspace
