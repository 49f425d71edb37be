#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace conjlab {

// bad input: outside the model disk, precondition violated, ...
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// no consistent configuration exists (e.g. no angle solves the relation)
class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// unreadable input, unwritable output
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NumericalFailure : public std::runtime_error {
public:
    NumericalFailure(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_(achieved) {}
    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

class SolverFailure : public std::runtime_error {
public:
    SolverFailure(const std::string& what, double last_residual, int iterations)
        : std::runtime_error(what), last_residual_(last_residual), iterations_(iterations) {}
    double last_residual() const noexcept { return last_residual_; }
    int iterations() const noexcept { return iterations_; }

private:
    double last_residual_;
    int iterations_;
};

} // namespace conjlab
