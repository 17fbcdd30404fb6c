#pragma once

#include <vector>

#include "rayspace/complex_coords.hpp"
#include "rayspace/errors.hpp"

namespace rayspace {

// Discretized curve in the complex chart. The endpoints are held fixed by
// the solver; interior points are the optimization variables.
class PlanarCurve {
public:
    explicit PlanarCurve(std::vector<Complex> points);

    std::size_t size() const noexcept { return points_.size(); }
    const Complex& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<Complex>& points() const noexcept { return points_; }
    std::vector<Complex>& mutable_points() noexcept { return points_; }

private:
    std::vector<Complex> points_;
};

struct SolverConfig {
    int max_iterations = 100000;
    double step_size = 0.1;
    double gradient_tolerance = 1e-8;
    int n_points = 64;
};

// Filled in as the solver runs, so the fields are meaningful even when a
// ConvergenceError interrupts it.
struct SolverStats {
    int iterations = 0;
    double final_gradient_norm = 0.0;
    double final_energy = 0.0;
};

// Discretized Dirichlet energy of the curve under the sphere metric:
// sum_k G(m_k) |Z_{k+1} - Z_k|^2 with G(W) = 4/(1+|W|^2)^2 evaluated at the
// segment midpoint m_k. Zero iff all points coincide.
double discrete_energy(const PlanarCurve& c);

// Length of the curve under the sphere metric: sum_k sqrt(G(m_k)) |dZ_k|.
double discrete_length(const PlanarCurve& c);

// Analytic d/d(x_j, y_j) of discrete_energy for each interior point j,
// packed as dE/dx + i dE/dy.
std::vector<Complex> energy_gradient(const PlanarCurve& c);

// Gradient descent with backtracking line search from the straight chord:
// the step halves until the energy decreases and grows by 1.5 after each
// accepted step. Returns once the gradient max-norm falls below
// cfg.gradient_tolerance; throws ConvergenceError (carrying the final
// gradient norm) if the budget runs out, and DegenerateGeodesicError for
// coincident or antipodal endpoints, where the minimizer is not unique.
PlanarCurve minimize_geodesic(const Complex& a, const Complex& b,
                              const SolverConfig& cfg = {},
                              SolverStats* stats = nullptr);

// Great-circle arc between the embedded endpoints, sampled uniformly and
// mapped back through the chart. Independent reference for the solver.
PlanarCurve analytic_geodesic(const Complex& a, const Complex& b, int n_points);

} // namespace rayspace
