#pragma once

#include <vector>

#include "rayspace/hilbert.hpp"

namespace rayspace {

// Ordered list of states representing a discretized curve. Open in the
// Hilbert space in general; `closed(tol)` tests whether the endpoints lie
// on the same ray, i.e. whether the projected curve closes in ray space.
class DiscreteCurve {
public:
    explicit DiscreteCurve(std::vector<StateVector> points);

    std::size_t size() const noexcept { return points_.size(); }
    const StateVector& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<StateVector>& points() const noexcept { return points_; }

    bool closed(double tol) const;

private:
    std::vector<StateVector> points_;
};

// Squared line element 4*(1 - |<a|b>|^2) between unit states. Symmetric,
// gauge-invariant, valued in [0, 4]. Arguments must be normalized to within
// 1e-10 or NormalizationError is thrown.
double fs_line_element_sq(const StateVector& a, const StateVector& b);

// Chord-sum length: sum of sqrt(fs_line_element_sq) over consecutive points,
// each normalized first. For a geodesic arc the sum converges to fs_distance
// from below as the sampling is refined.
double curve_length(const DiscreteCurve& c);

// Geodesic distance between the rays of a and b: 2*arccos|<a^|b^>|, the
// great-circle arc length. Valued in [0, pi]; a metric on rays.
double fs_distance(const StateVector& a, const StateVector& b);

// Point at parameter t along the great-circle arc from a to b. b is re-phased
// so that <a|b'> is real and nonnegative; for exactly orthogonal inputs b is
// used unchanged. Endpoints are reproduced at t = 0 and t = 1, and
// fs_distance(a, result) = t * fs_distance(a, b). Throws
// DegenerateGeodesicError when a and b lie on the same ray.
StateVector geodesic_interpolate(const StateVector& a, const StateVector& b,
                                 double t);

} // namespace rayspace
