#pragma once

#include <stdexcept>
#include <string>

namespace rayspace {

// Base class for all library errors. `kind()` is a stable machine-readable
// tag; the CLI forwards it verbatim in error payloads.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& message)
        : Error("dimension", message) {}
};

class ZeroVectorError : public Error {
public:
    explicit ZeroVectorError(const std::string& message)
        : Error("zero_vector", message) {}
};

class NormalizationError : public Error {
public:
    explicit NormalizationError(const std::string& message)
        : Error("normalization", message) {}
};

class DegenerateGeodesicError : public Error {
public:
    explicit DegenerateGeodesicError(const std::string& message)
        : Error("degenerate_geodesic", message) {}
};

class PoleSingularityError : public Error {
public:
    explicit PoleSingularityError(const std::string& message)
        : Error("pole_singularity", message) {}
};

class ChartDomainError : public Error {
public:
    explicit ChartDomainError(const std::string& message)
        : Error("chart_domain", message) {}
};

class OffManifoldError : public Error {
public:
    explicit OffManifoldError(const std::string& message)
        : Error("off_manifold", message) {}
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& message)
        : Error("domain", message) {}
};

class OrthogonalSegmentError : public Error {
public:
    explicit OrthogonalSegmentError(const std::string& message)
        : Error("orthogonal_segment", message) {}
};

// Raised by the geodesic solver when the gradient tolerance is not reached
// within the iteration budget; carries the last gradient max-norm seen.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& message, double final_gradient_norm)
        : Error("convergence", message),
          final_gradient_norm_(final_gradient_norm) {}

    double final_gradient_norm() const noexcept { return final_gradient_norm_; }

private:
    double final_gradient_norm_;
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& message)
        : Error("parse", message) {}
};

} // namespace rayspace
