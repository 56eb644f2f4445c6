#pragma once

#include "cgpot/interval.hpp"

#include <functional>
#include <string>
#include <vector>

namespace cgpot {

struct AdmissibilityFlags {
    bool nonnegative = false;
    bool increasing = false;
    bool concave = false;
    bool ratio_convex = false; // g(t)/(t - a) convex on (a, b)
    bool all() const { return nonnegative && increasing && concave && ratio_convex; }
};

/// A probability measure on [a, b] written as d(mu) = g d(omega) with omega
/// the arcsine measure of the interval. g must be defined on (a, b].
struct ArcsineWeightedDensity {
    Interval interval;
    std::function<double(double)> g;
    AdmissibilityFlags flags;
    std::string name;

    double density(double t) const; // d(mu)/dt = g(t) robin_density(t)
};

/// g == 1: the arcsine measure itself.
ArcsineWeightedDensity flat_density(const Interval& I);

/// g(x) proportional to (x + 1)^theta on [-1, 1], theta in [0, 1],
/// normalized to unit arcsine-weighted mass via log-gamma.
ArcsineWeightedDensity power_density(double theta);

/// Numeric audit of the density against the hypotheses the discretization
/// needs: sign, monotonicity, concavity of g, convexity of g/(t-a), unit
/// mass, and the two consequences g(b) <= 2 and g(midpoint) >= 1.
struct DensityAuditEntry {
    std::string property;
    bool pass;
    double worst_margin; // >= 0 when satisfied with slack
    double location;
};

struct DensityAudit {
    bool ok = false;
    std::vector<DensityAuditEntry> entries;
    std::string diagnostic; // first failing property, empty when ok
};

DensityAudit check_admissibility(const ArcsineWeightedDensity& d, int grid_points = 512);

/// Arcsine-weighted mass of g: integral of g d(omega) over [a, b].
double arcsine_mass(const ArcsineWeightedDensity& d, double abs_tol = 1e-11);

/// Logarithmic potential U^mu(x) of mu = g d(omega), by adaptive quadrature
/// in the angular variable; valid for every real x (the interior log
/// singularity is split off and is integrable).
double potential_U(const ArcsineWeightedDensity& d, double x, double abs_tol = 1e-10);

} // namespace cgpot
