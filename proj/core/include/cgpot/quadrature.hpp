#pragma once

#include <functional>
#include <initializer_list>
#include <vector>

namespace cgpot {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

/// Globally adaptive Gauss-Kronrod 15(7) integration of f over [lo, hi].
/// Bisects the segment with the largest error estimate until the summed
/// estimate drops below abs_tol or max_segments is reached. Integrable
/// endpoint/interior singularities (log, inverse square root) are fine as
/// long as f itself is finite at every quadrature node.
QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           double abs_tol, int max_segments = 2000);

/// Same, but the initial segment list is split at the given interior
/// breakpoints (e.g. at a known singularity of the integrand).
QuadratureResult integrate_split(const std::function<double(double)>& f, double lo, double hi,
                                 std::vector<double> breakpoints, double abs_tol,
                                 int max_segments = 2000);

/// integrate() that throws quadrature_error when the tolerance is not reached.
double integrate_or_throw(const std::function<double(double)>& f, double lo, double hi,
                          double abs_tol, int max_segments = 2000);

} // namespace cgpot
