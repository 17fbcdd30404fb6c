#include "rayspace/hilbert.hpp"

#include <cmath>
#include <limits>

namespace rayspace {

namespace {

void check_valid_amplitudes(const std::vector<Complex>& amps) {
    if (amps.empty()) {
        throw DomainError("state vector must have dimension >= 1");
    }
    double norm_sq = 0.0;
    for (const auto& a : amps) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw DomainError("state vector amplitudes must be finite");
        }
        norm_sq += std::norm(a);
    }
    if (!(norm_sq > 0.0) || !std::isfinite(norm_sq)) {
        throw ZeroVectorError("state vector must be nonzero with finite norm");
    }
}

} // namespace

StateVector::StateVector(std::vector<Complex> amplitudes)
    : amplitudes_(std::move(amplitudes)) {
    check_valid_amplitudes(amplitudes_);
}

StateVector::StateVector(std::initializer_list<Complex> amplitudes)
    : StateVector(std::vector<Complex>(amplitudes)) {}

double StateVector::norm_sq() const noexcept {
    double s = 0.0;
    for (const auto& a : amplitudes_) s += std::norm(a);
    return s;
}

double StateVector::norm() const noexcept { return std::sqrt(norm_sq()); }

bool StateVector::is_normalized(double tol) const noexcept {
    return std::abs(norm() - 1.0) <= tol;
}

StateVector operator*(const Complex& scale, const StateVector& v) {
    std::vector<Complex> out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) out[i] = scale * v[i];
    return StateVector(std::move(out));
}

Complex inner_product(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("inner product requires equal dimensions (" +
                             std::to_string(a.dim()) + " vs " +
                             std::to_string(b.dim()) + ")");
    }
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

StateVector normalize(const StateVector& v) {
    const double n = v.norm();
    // Nonzero by the StateVector invariant.
    return Complex{1.0 / n, 0.0} * v;
}

Ray project_to_ray(const StateVector& v) {
    StateVector unit = normalize(v);

    double max_mag = 0.0;
    for (std::size_t i = 0; i < unit.dim(); ++i) {
        max_mag = std::max(max_mag, std::abs(unit[i]));
    }
    const double threshold = 1e-12 * max_mag;

    std::size_t anchor = 0;
    for (std::size_t i = 0; i < unit.dim(); ++i) {
        if (std::abs(unit[i]) > threshold) {
            anchor = i;
            break;
        }
    }

    const Complex a = unit[anchor];
    const Complex phase = std::conj(a) / std::abs(a);
    return Ray(phase * unit);
}

bool rays_equal(const Ray& p, const Ray& q, double tol) {
    const Complex overlap = inner_product(p.representative(), q.representative());
    return 1.0 - std::abs(overlap) <= tol;
}

} // namespace rayspace
