#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "rayspace/errors.hpp"

namespace rayspace {

using Complex = std::complex<double>;

// Finite-dimensional complex amplitude vector. The zero vector is rejected
// at construction, so every StateVector names a valid physical state.
class StateVector {
public:
    explicit StateVector(std::vector<Complex> amplitudes);
    StateVector(std::initializer_list<Complex> amplitudes);

    std::size_t dim() const noexcept { return amplitudes_.size(); }
    const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }
    const std::vector<Complex>& amplitudes() const noexcept { return amplitudes_; }

    double norm_sq() const noexcept;
    double norm() const noexcept;

    // Membership in the unit-norm sub-bundle.
    bool is_normalized(double tol = 1e-10) const noexcept;

private:
    std::vector<Complex> amplitudes_;
};

StateVector operator*(const Complex& scale, const StateVector& v);

// <a|b> = sum_k conj(a_k) * b_k. Conjugate-symmetric in its arguments.
Complex inner_product(const StateVector& a, const StateVector& b);

// Rescale to unit norm. The result is parallel to the input (same ray).
StateVector normalize(const StateVector& v);

// Equivalence class of a StateVector under nonzero complex scaling, stored
// via a canonical representative: unit norm with the first significant
// amplitude real and strictly positive. "First significant" means the first
// amplitude whose magnitude exceeds 1e-12 times the largest magnitude, which
// keeps the gauge stable under small perturbations.
class Ray {
public:
    const StateVector& representative() const noexcept { return rep_; }
    std::size_t dim() const noexcept { return rep_.dim(); }

    friend Ray project_to_ray(const StateVector& v);

private:
    explicit Ray(StateVector rep) : rep_(std::move(rep)) {}
    StateVector rep_;
};

// The projection onto ray space: strips scale and global phase.
Ray project_to_ray(const StateVector& v);

// True iff 1 - |<p|q>| <= tol for the unit representatives.
bool rays_equal(const Ray& p, const Ray& q, double tol);

} // namespace rayspace
