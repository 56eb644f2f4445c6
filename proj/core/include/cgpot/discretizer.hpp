#pragma once

#include "cgpot/density.hpp"
#include "cgpot/equilibrium.hpp"

#include <string>
#include <vector>

namespace cgpot {

/// Equal-mass partition of [a, b] together with the barycentric nodes of the
/// weighted midpoint rule; the roots of the monic certificate polynomial P_k.
struct DiscretizationCertificate {
    int k;
    ArcsineWeightedDensity density;
    std::vector<double> partition; // t_0 = a < t_1 < ... < t_k = b
    std::vector<double> angles;    // alpha_j = arccos(-normalized t_j), alpha_0 = 0, alpha_k = pi
    std::vector<double> nodes;     // xi_0 < ... < xi_{k-1}, xi_j in (t_j, t_{j+1})

    DiscretizationCertificate(int k_, ArcsineWeightedDensity density_)
        : k(k_), density(std::move(density_)) {}

    const Interval& interval() const { return density.interval; }
};

/// Cumulative distribution W_g(x) = k mu([a, x]); strictly increasing from 0 to k.
double cumulative_W(const ArcsineWeightedDensity& d, int k, double x, double abs_tol = 1e-11);

/// Solve W_g(t_j) = j for the partition and compute the in-cell barycenters.
/// Requires k >= 2.
DiscretizationCertificate build_partition(const ArcsineWeightedDensity& d, int k);

/// log |P_k(x)| = sum of log |x - xi_j|, accumulated smallest magnitude first.
/// Throws singularity_error on an exact node hit.
double log_abs_Pk(const DiscretizationCertificate& c, double x);

/// The quantity everything is about: log |P_k(x)| + k U^mu(x).
/// Nonnegative outside (a, b), bounded by the explicit constant on [a, b].
double discretization_error(const DiscretizationCertificate& c, double x,
                            double potential_tol = 1e-10);

/// Single-cell quadrature error k * integral over [t_j, t_{j+1}] of
/// log |(x - xi_j)/(x - t)| d(mu); the cellwise building block.
double cell_quadrature_error(const DiscretizationCertificate& c, int j, double x,
                             double abs_tol = 1e-11);

/// Index j0 of the cell with x in [t_j0, t_j0+1]; exact hits on an interior
/// t_j resolve to the left cell.
int locate_cell(const DiscretizationCertificate& c, double x);

struct ThreeSums {
    double sum1; // cells left of the j0-neighborhood, quadratic upper-bound form
    double sum2; // the <= 3 cells around x, by direct quadrature
    double sum3; // cells right of the j0-neighborhood, quadratic upper-bound form
    double total() const { return sum1 + sum2 + sum3; }
};

/// Decomposition of the discretization-error upper bound at x in [a, b].
ThreeSums three_sums(const DiscretizationCertificate& c, double x);

struct MeanValueCheck {
    double difference_quotient; // (W(t) - W(x)) / (t - x)
    double midpoint_derivative; // W'((t + x)/2)
    double quotient;            // their ratio, in [1/4, pi sqrt(2)] for admissible g
};

MeanValueCheck mean_value_check(const ArcsineWeightedDensity& d, int k, double x, double t);

struct AuditEntry {
    std::string check;
    bool pass;
    double worst_margin; // bound minus value at the tightest site; >= 0 when satisfied
    std::string location;
};

struct PartitionAudit {
    std::vector<AuditEntry> entries;
    bool all_pass = false;
};

/// Inequality battery for a built certificate (angle gaps, cell-size ratios,
/// edge-cell widths, sign of t_{k-1}, ...). Everything is checked in the
/// frame rescaled to [-1, 1]. A violation indicates an inadmissible density
/// or broken numerics.
PartitionAudit audit_partition(const DiscretizationCertificate& c);

/// Observed supremum of discretization_error over [a, b]: per-segment scans
/// between consecutive nodes followed by local maximization. grid_multiplier
/// scales the scan resolution (for refinement-stability checks).
double observed_sup_error(const DiscretizationCertificate& c, int grid_multiplier = 1,
                          double potential_tol = 1e-10);

/// Attained sharpness ratio r = w(x0)^k |P_k(x0)| / sup_[a,b] |w^k P_k| for
/// the external-field problem the certificate was built from; x0 outside [a, b].
double certificate_ratio(const ExternalFieldProblem& p, const EquilibriumSolution& sol,
                         const DiscretizationCertificate& c, double x0);

/// log of certificate_ratio, safe for large k f(x0).
double log_certificate_ratio(const ExternalFieldProblem& p, const EquilibriumSolution& sol,
                             const DiscretizationCertificate& c, double x0);

/// sup over [lo, hi] of log(w(x)^k |P_k(x)|) = -U^rho(x) + log|P_k(x)|,
/// via a Chebyshev-spaced scan plus local polish around every candidate cell.
double log_weighted_sup_norm(const ExternalFieldProblem& p, const DiscretizationCertificate& c,
                             double lo, double hi);

} // namespace cgpot
