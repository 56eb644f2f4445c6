#pragma once

#include <stdexcept>
#include <string>

namespace cgpot {

/// Evaluation requested at a logarithmic pole (coincident points, exact node hit).
class singularity_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An adaptive quadrature failed to reach the requested tolerance.
class quadrature_error : public std::runtime_error {
public:
    quadrature_error(const std::string& what, double achieved_tolerance)
        : std::runtime_error(what), achieved(achieved_tolerance) {}
    double achieved;
};

/// A bracketed root search or exchange iteration failed to converge.
class convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cgpot
