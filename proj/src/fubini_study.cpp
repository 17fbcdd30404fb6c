#include "rayspace/fubini_study.hpp"

#include <algorithm>
#include <cmath>

namespace rayspace {

namespace {

constexpr double kNormTol = 1e-10;
constexpr double kSameRayTol = 1e-12;

void check_same_dim(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("states must have equal dimensions (" +
                             std::to_string(a.dim()) + " vs " +
                             std::to_string(b.dim()) + ")");
    }
}

double clamped_overlap(const StateVector& a, const StateVector& b) {
    return std::min(1.0, std::abs(inner_product(a, b)));
}

} // namespace

DiscreteCurve::DiscreteCurve(std::vector<StateVector> points)
    : points_(std::move(points)) {
    if (points_.size() < 2) {
        throw DomainError("a discrete curve needs at least 2 points");
    }
    for (const auto& p : points_) {
        if (p.dim() != points_.front().dim()) {
            throw DimensionError("all curve points must share one dimension");
        }
    }
}

bool DiscreteCurve::closed(double tol) const {
    return rays_equal(project_to_ray(points_.front()),
                      project_to_ray(points_.back()), tol);
}

double fs_line_element_sq(const StateVector& a, const StateVector& b) {
    check_same_dim(a, b);
    if (!a.is_normalized(kNormTol) || !b.is_normalized(kNormTol)) {
        throw NormalizationError("fs_line_element_sq requires unit states");
    }
    const double overlap = clamped_overlap(a, b);
    return 4.0 * (1.0 - overlap * overlap);
}

double curve_length(const DiscreteCurve& c) {
    double total = 0.0;
    StateVector prev = normalize(c[0]);
    for (std::size_t i = 1; i < c.size(); ++i) {
        StateVector next = normalize(c[i]);
        total += std::sqrt(fs_line_element_sq(prev, next));
        prev = std::move(next);
    }
    return total;
}

double fs_distance(const StateVector& a, const StateVector& b) {
    check_same_dim(a, b);
    const StateVector ua = normalize(a);
    const StateVector ub = normalize(b);
    const Complex overlap = inner_product(ua, ub);
    const double mag = std::min(1.0, std::abs(overlap));

    // Equal to 2*acos(mag), but evaluated through the perpendicular component
    // of b, whose norm is sin of the half-angle. acos alone loses ~8 digits
    // when the rays nearly coincide; this form does not.
    double perp_sq = 0.0;
    for (std::size_t i = 0; i < ua.dim(); ++i) {
        perp_sq += std::norm(ub[i] - overlap * ua[i]);
    }
    return 2.0 * std::atan2(std::sqrt(perp_sq), mag);
}

StateVector geodesic_interpolate(const StateVector& a, const StateVector& b,
                                 double t) {
    check_same_dim(a, b);
    const StateVector ua = normalize(a);
    const StateVector ub = normalize(b);

    const Complex overlap = inner_product(ua, ub);
    const double mag = std::min(1.0, std::abs(overlap));
    if (1.0 - mag <= kSameRayTol) {
        throw DegenerateGeodesicError(
            "geodesic through two copies of one ray is not unique");
    }

    // Re-phase b so the overlap is real >= 0; leave it alone when orthogonal.
    Complex phase{1.0, 0.0};
    if (mag > 0.0) phase = std::conj(overlap) / std::abs(overlap);

    const double theta = std::acos(mag);
    const double inv_sin = 1.0 / std::sin(theta);
    const double wa = std::sin((1.0 - t) * theta) * inv_sin;
    const double wb = std::sin(t * theta) * inv_sin;

    std::vector<Complex> out(ua.dim());
    for (std::size_t i = 0; i < ua.dim(); ++i) {
        out[i] = wa * ua[i] + wb * (phase * ub[i]);
    }
    return StateVector(std::move(out));
}

} // namespace rayspace
