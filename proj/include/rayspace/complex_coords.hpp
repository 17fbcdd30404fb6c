#pragma once

#include <array>
#include <cmath>

#include "rayspace/hilbert.hpp"

namespace rayspace {

struct PlanePoint {
    double x = 0.0;
    double y = 0.0;
};

// Embedding coordinates of a point on the unit 2-sphere.
struct SpherePoint {
    double n1 = 0.0;
    double n2 = 0.0;
    double n3 = 0.0;

    double dot(const SpherePoint& o) const noexcept {
        return n1 * o.n1 + n2 * o.n2 + n3 * o.n3;
    }
    SpherePoint cross(const SpherePoint& o) const noexcept {
        return {n2 * o.n3 - n3 * o.n2, n3 * o.n1 - n1 * o.n3,
                n1 * o.n2 - n2 * o.n1};
    }
    double norm() const noexcept { return std::sqrt(dot(*this)); }
};

inline SpherePoint operator-(const SpherePoint& a, const SpherePoint& b) {
    return {a.n1 - b.n1, a.n2 - b.n2, a.n3 - b.n3};
}

// Z = x + iy.
Complex complexify(const PlanePoint& p);
PlanePoint realify(const Complex& z);

// Determinant of the (x, y) -> (Z, Zbar) Jacobi matrix [[1, i], [1, -i]].
// Always -2i; nonzero, so the coordinate change is regular.
Complex jacobian_det();

// Flat metric dx^2 + dy^2; equals |dZ|^2 with dZ = dx + i dy.
double euclidean_metric_sq(const PlanePoint& p, const PlanePoint& dp);

// Round-sphere metric in the complex chart: 4|dZ|^2 / (1 + |Z|^2)^2.
double sphere_metric_sq(const Complex& at, const Complex& dz);

// Chart inverse from the plane onto the sphere minus the north pole:
// n = (2 Re Z, 2 Im Z, |Z|^2 - 1) / (1 + |Z|^2). Z = 0 maps to the south
// pole; the north pole is reached only in the |Z| -> infinity limit.
SpherePoint inverse_stereographic(const Complex& z);

// Z = (n1 + i n2)/(1 - n3). The north pole is the excluded singular point;
// inputs within 1e-12 of it raise PoleSingularityError.
Complex stereographic(const SpherePoint& n);

// Hopf projection of a 2-level state (alpha, beta) onto the sphere:
// n = (2 Re(conj(alpha) beta), 2 Im(conj(alpha) beta), |beta|^2 - |alpha|^2).
// Invariant under s -> lambda s, which is the fiber collapse. (1, 0) maps to
// the south pole, so Z = beta/alpha is the stereographic coordinate and the
// excluded north pole corresponds to alpha = 0.
SpherePoint bloch_map(const StateVector& s);

// |fs_distance(a, b) - arccos(n_a . n_b)|: the residual tying the projective
// line element to the unit-radius sphere metric. Zero up to rounding.
double fs_vs_sphere_consistency(const StateVector& a, const StateVector& b);

// Squared length of the pushforward of dz through inverse_stereographic,
// by central finite differences. Agrees with sphere_metric_sq up to the
// differencing error; the default step balances truncation against roundoff.
double pushforward_metric_sq_fd(const Complex& at, const Complex& dz,
                                double step = 1e-6);

// Central angle between two unit vectors, computed stably via atan2.
double great_circle_angle(const SpherePoint& a, const SpherePoint& b);

} // namespace rayspace
