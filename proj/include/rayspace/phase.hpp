#pragma once

#include <vector>

#include "rayspace/hilbert.hpp"

namespace rayspace {

// Closed chain of states; the segment from the last vertex back to the first
// is implied. Consecutive vertices must not be orthogonal (their overlap
// enters a product whose argument would otherwise be undefined); violations
// raise OrthogonalSegmentError at construction.
class ClosedLoop {
public:
    explicit ClosedLoop(std::vector<StateVector> vertices);

    std::size_t size() const noexcept { return vertices_.size(); }
    const StateVector& operator[](std::size_t i) const { return vertices_[i]; }
    const std::vector<StateVector>& vertices() const noexcept {
        return vertices_;
    }

private:
    std::vector<StateVector> vertices_;
};

// Geometric phase of the loop: -arg of the cyclic product of consecutive
// overlaps <v_k|v_{k+1}>. Invariant under independent rescaling of every
// vertex; principal value in (-pi, pi].
double pancharatnam_phase(const ClosedLoop& loop);

// Signed solid angle subtended by the loop's geodesic polygon on the sphere
// (2-level loops only). Fan-triangulated from vertex 0, per-triangle excess
// by L'Huilier's formula, orientation from the scalar triple product. The
// sign is fixed so that phase = -solid_angle/2 on geodesic polygons. Throws
// DegenerateGeodesicError when successive images are antipodal, or when a
// fan diagonal is: the triangulation assumes the loop is star-shaped around
// vertex 0 and refuses configurations it cannot resolve.
double solid_angle(const ClosedLoop& loop);

// |pancharatnam_phase + solid_angle/2| reduced mod 2*pi into (-pi, pi].
// Near zero whenever the loop edges are geodesic, which vertex loops are.
double holonomy_check(const ClosedLoop& loop);

// Reduce an angle into (-pi, pi].
double wrap_angle(double angle);

} // namespace rayspace
