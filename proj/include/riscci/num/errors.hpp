#pragma once

#include <stdexcept>
#include <string>

namespace riscci {

// Base class for every numeric failure the library can report.
class NumericsError : public std::runtime_error {
public:
    explicit NumericsError(const std::string& what) : std::runtime_error(what) {}
};

// Gamma function evaluated at a non-positive integer.
class PoleError : public NumericsError {
public:
    explicit PoleError(const std::string& what) : NumericsError(what) {}
};

// A series hit its term cap without meeting the convergence tolerance.
class DivergenceError : public NumericsError {
public:
    explicit DivergenceError(const std::string& what) : NumericsError(what) {}
};

// No vertical contour separates the two pole groups of a Meijer G spec.
class ContourError : public NumericsError {
public:
    explicit ContourError(const std::string& what) : NumericsError(what) {}
};

// Adaptive quadrature exhausted its refinement budget.
class QuadratureError : public NumericsError {
public:
    explicit QuadratureError(const std::string& what) : NumericsError(what) {}
};

// Moment matching produced parameters outside the admissible region.
class FitError : public NumericsError {
public:
    explicit FitError(const std::string& what) : NumericsError(what) {}
};

// Bad user-supplied configuration (CLI / scenario layer).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace riscci
