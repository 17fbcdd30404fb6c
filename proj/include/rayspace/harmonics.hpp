#pragma once

#include "rayspace/atlas.hpp"
#include "rayspace/complex_coords.hpp"

namespace rayspace {

// Default prefactor of the l = 1, m = +-1 functions, 3/(8*pi). The textbook
// spherical harmonic carries sqrt(3/(8*pi)) instead; only the shape of the
// level set matters here, so the coefficient is configurable.
double default_harmonic_coefficient();

// Level-set description: the locus |psi|^2 = k^2 evaluated at radial
// coordinate r with prefactor c.
struct LocusSpec {
    double k;
    double r;
    double c = 0.0; // 0 means: use the default coefficient

    double coefficient() const {
        return c > 0.0 ? c : default_harmonic_coefficient();
    }
};

void validate(const LocusSpec& spec);

// psi_{1,1}(x, y; r) = -c (x + iy) / r.
Complex psi_1_1(const PlanePoint& p, double r,
                double coefficient = default_harmonic_coefficient());

// psi_{1,-1}(x, y; r) = +c (x - iy) / r = -conj(psi_{1,1}).
Complex psi_1_m1(const PlanePoint& p, double r,
                 double coefficient = default_harmonic_coefficient());

// Radius R = k*r/c of the circle x^2 + y^2 = R^2 on which |psi_{1,1}|^2 = k^2.
double level_set_radius(const LocusSpec& spec);

// The level-set circle as a manifold: the four axis-projection charts
// rescaled to the locus radius.
Atlas locus_as_manifold(const LocusSpec& spec);

} // namespace rayspace
