#include "rayspace/phase.hpp"

#include <cmath>
#include <numbers>

#include "rayspace/complex_coords.hpp"

namespace rayspace {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kOrthogonalTol = 1e-12;
constexpr double kAntipodalTol = 1e-12;

// Spherical excess of the triangle (a, b, c) by L'Huilier's formula, with
// side lengths taken as central angles.
double triangle_excess(const SpherePoint& a, const SpherePoint& b,
                       const SpherePoint& c) {
    const double sa = great_circle_angle(b, c);
    const double sb = great_circle_angle(c, a);
    const double sc = great_circle_angle(a, b);
    const double s = 0.5 * (sa + sb + sc);
    const double product = std::tan(0.5 * s) * std::tan(0.5 * (s - sa)) *
                           std::tan(0.5 * (s - sb)) * std::tan(0.5 * (s - sc));
    return 4.0 * std::atan(std::sqrt(std::max(0.0, product)));
}

} // namespace

double wrap_angle(double angle) {
    double a = std::remainder(angle, 2.0 * kPi);
    if (a <= -kPi) a += 2.0 * kPi;
    return a;
}

ClosedLoop::ClosedLoop(std::vector<StateVector> vertices)
    : vertices_(std::move(vertices)) {
    if (vertices_.size() < 3) {
        throw DomainError("a closed loop needs at least 3 vertices");
    }
    const std::size_t m = vertices_.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (vertices_[i].dim() != vertices_[0].dim()) {
            throw DimensionError("all loop vertices must share one dimension");
        }
        const StateVector cur = normalize(vertices_[i]);
        const StateVector nxt = normalize(vertices_[(i + 1) % m]);
        if (std::abs(inner_product(cur, nxt)) <= kOrthogonalTol) {
            throw OrthogonalSegmentError(
                "consecutive loop vertices " + std::to_string(i) + " and " +
                std::to_string((i + 1) % m) + " are orthogonal");
        }
    }
}

double pancharatnam_phase(const ClosedLoop& loop) {
    const std::size_t m = loop.size();
    std::vector<StateVector> unit;
    unit.reserve(m);
    for (std::size_t i = 0; i < m; ++i) unit.push_back(normalize(loop[i]));

    // Accumulate the product of overlaps, rescaled to unit modulus at each
    // step; only the argument matters and this avoids underflow on long
    // loops.
    Complex acc{1.0, 0.0};
    for (std::size_t i = 0; i < m; ++i) {
        const Complex overlap = inner_product(unit[i], unit[(i + 1) % m]);
        acc *= overlap / std::abs(overlap);
    }
    return -std::arg(acc);
}

double solid_angle(const ClosedLoop& loop) {
    if (loop[0].dim() != 2) {
        throw DimensionError("solid_angle requires 2-level states");
    }
    const std::size_t m = loop.size();
    std::vector<SpherePoint> pts;
    pts.reserve(m);
    for (std::size_t i = 0; i < m; ++i) pts.push_back(bloch_map(loop[i]));

    for (std::size_t i = 0; i < m; ++i) {
        if (1.0 + pts[i].dot(pts[(i + 1) % m]) <= kAntipodalTol) {
            throw DegenerateGeodesicError(
                "successive loop images are antipodal on the sphere");
        }
    }

    // Fan triangulation from vertex 0. The triple-product sign is mapped so
    // that the phase/solid-angle identity below holds with this library's
    // south-pole orientation of the sphere map.
    double total = 0.0;
    for (std::size_t i = 1; i + 1 < m; ++i) {
        // The fan diagonal must not be antipodal either, or the triangle has
        // no well-defined interior.
        if (1.0 + pts[0].dot(pts[i]) <= kAntipodalTol ||
            1.0 + pts[0].dot(pts[i + 1]) <= kAntipodalTol) {
            throw DegenerateGeodesicError(
                "fan diagonal from vertex 0 is antipodal; the triangulation "
                "cannot resolve this loop");
        }
        const double triple = pts[0].dot(pts[i].cross(pts[i + 1]));
        const double excess = triangle_excess(pts[0], pts[i], pts[i + 1]);
        if (triple < 0.0) {
            total += excess;
        } else if (triple > 0.0) {
            total -= excess;
        }
    }
    return total;
}

double holonomy_check(const ClosedLoop& loop) {
    const double phase = pancharatnam_phase(loop);
    const double omega = solid_angle(loop);
    return std::abs(wrap_angle(phase - wrap_angle(-0.5 * omega)));
}

} // namespace rayspace
