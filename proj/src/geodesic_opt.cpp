#include "rayspace/geodesic_opt.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace rayspace {

namespace {

constexpr double kAntipodalGuard = 1e-6;

double conformal_factor(const Complex& w) {
    const double denom = 1.0 + std::norm(w);
    return 4.0 / (denom * denom);
}

void check_finite(const Complex& z, const char* label) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainError(std::string(label) + " must be finite");
    }
}

std::string fmt_norm(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

} // namespace

PlanarCurve::PlanarCurve(std::vector<Complex> points)
    : points_(std::move(points)) {
    if (points_.size() < 3) {
        throw DomainError("a planar curve needs at least 3 points");
    }
    for (const auto& z : points_) check_finite(z, "curve point");
}

double discrete_energy(const PlanarCurve& c) {
    double energy = 0.0;
    for (std::size_t k = 0; k + 1 < c.size(); ++k) {
        const Complex mid = 0.5 * (c[k] + c[k + 1]);
        energy += conformal_factor(mid) * std::norm(c[k + 1] - c[k]);
    }
    return energy;
}

double discrete_length(const PlanarCurve& c) {
    double length = 0.0;
    for (std::size_t k = 0; k + 1 < c.size(); ++k) {
        const Complex mid = 0.5 * (c[k] + c[k + 1]);
        length += std::sqrt(conformal_factor(mid)) * std::abs(c[k + 1] - c[k]);
    }
    return length;
}

std::vector<Complex> energy_gradient(const PlanarCurve& c) {
    const std::size_t n = c.size();
    std::vector<Complex> grad(n - 2, Complex{0.0, 0.0});

    // Segment energy e = G(m)|B - A|^2 with m = (A + B)/2 contributes
    //   de/dB = 2G(m)(B - A) + |B - A|^2 G'(|m|^2) m
    //   de/dA = -2G(m)(B - A) + |B - A|^2 G'(|m|^2) m
    // where G'(s) = -8/(1+s)^3.
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const Complex a = c[k];
        const Complex b = c[k + 1];
        const Complex mid = 0.5 * (a + b);
        const double d = 1.0 + std::norm(mid);
        const double g = 4.0 / (d * d);
        const double dg = -8.0 / (d * d * d);
        const Complex diff = b - a;
        const Complex radial = std::norm(diff) * dg * mid;

        if (k >= 1) grad[k - 1] += -2.0 * g * diff + radial;
        if (k + 1 <= n - 2) grad[k] += 2.0 * g * diff + radial;
    }
    return grad;
}

PlanarCurve minimize_geodesic(const Complex& a, const Complex& b,
                              const SolverConfig& cfg, SolverStats* stats) {
    check_finite(a, "endpoint");
    check_finite(b, "endpoint");
    if (cfg.n_points < 3 || cfg.max_iterations <= 0 || !(cfg.step_size > 0.0) ||
        !(cfg.gradient_tolerance > 0.0)) {
        throw DomainError("invalid solver configuration");
    }
    if (a == b) {
        throw DegenerateGeodesicError("endpoints coincide");
    }
    const SpherePoint na = inverse_stereographic(a);
    const SpherePoint nb = inverse_stereographic(b);
    if (na.dot(nb) <= -1.0 + kAntipodalGuard) {
        throw DegenerateGeodesicError(
            "antipodal endpoints: the minimizing arc is not unique");
    }

    // Straight chord initialization.
    const std::size_t n = static_cast<std::size_t>(cfg.n_points);
    std::vector<Complex> pts(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n - 1);
        pts[i] = a + t * (b - a);
    }
    PlanarCurve curve(std::move(pts));

    double energy = discrete_energy(curve);
    double step = cfg.step_size;
    double grad_norm = 0.0;

    SolverStats local;
    SolverStats& st = stats != nullptr ? *stats : local;
    st = SolverStats{};

    for (int iter = 0; iter < cfg.max_iterations; ++iter) {
        const std::vector<Complex> grad = energy_gradient(curve);
        grad_norm = 0.0;
        for (const auto& g : grad) grad_norm = std::max(grad_norm, std::abs(g));

        st.iterations = iter;
        st.final_gradient_norm = grad_norm;
        st.final_energy = energy;
        if (grad_norm <= cfg.gradient_tolerance) return curve;

        // Backtracking: halve until the energy decreases, then regrow.
        PlanarCurve trial = curve;
        while (true) {
            auto& tp = trial.mutable_points();
            for (std::size_t j = 0; j + 2 < curve.size(); ++j) {
                tp[j + 1] = curve[j + 1] - step * grad[j];
            }
            const double trial_energy = discrete_energy(trial);
            if (trial_energy < energy) {
                curve = std::move(trial);
                energy = trial_energy;
                step *= 1.5;
                break;
            }
            step *= 0.5;
            if (step < 1e-300) {
                throw ConvergenceError("line search stalled at gradient "
                                       "max-norm " + fmt_norm(grad_norm),
                                       grad_norm);
            }
        }
    }
    throw ConvergenceError("no convergence after " +
                               std::to_string(cfg.max_iterations) +
                               " iterations; gradient max-norm " +
                               fmt_norm(grad_norm),
                           grad_norm);
}

PlanarCurve analytic_geodesic(const Complex& a, const Complex& b,
                              int n_points) {
    if (n_points < 3) throw DomainError("need at least 3 points");
    const SpherePoint na = inverse_stereographic(a);
    const SpherePoint nb = inverse_stereographic(b);
    const double angle = great_circle_angle(na, nb);
    if (angle >= std::acos(-1.0 + kAntipodalGuard)) {
        throw DegenerateGeodesicError(
            "antipodal endpoints: the connecting arc is not unique");
    }
    if (!(angle > 0.0)) {
        throw DegenerateGeodesicError("endpoints coincide");
    }

    const double inv_sin = 1.0 / std::sin(angle);
    std::vector<Complex> pts(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n_points - 1);
        const double wa = std::sin((1.0 - t) * angle) * inv_sin;
        const double wb = std::sin(t * angle) * inv_sin;
        const SpherePoint p{wa * na.n1 + wb * nb.n1, wa * na.n2 + wb * nb.n2,
                            wa * na.n3 + wb * nb.n3};
        pts[static_cast<std::size_t>(i)] = stereographic(p);
    }
    // Pin the endpoints exactly.
    pts.front() = a;
    pts.back() = b;
    return PlanarCurve(std::move(pts));
}

} // namespace rayspace
