#pragma once

#include "cgpot/density.hpp"
#include "cgpot/interval.hpp"

#include <vector>

namespace cgpot {

struct Atom {
    double location;
    double mass;
};

/// Finite positive measure given by point masses.
struct AtomicMeasure {
    std::vector<Atom> atoms;

    double total_mass() const;
    double max_location() const; // -inf when empty
    bool empty() const { return atoms.empty(); }

    /// Unit mass at each of the given locations.
    static AtomicMeasure unit_masses(const std::vector<double>& locations);
};

/// External-field equilibrium problem: field Q = U^{rho/k} on Sigma = [alpha, b],
/// with rho supported on (-inf, alpha].
struct ExternalFieldProblem {
    int k;
    AtomicMeasure rho;
    Interval sigma; // [alpha, b]

    ExternalFieldProblem(int k_, AtomicMeasure rho_, Interval sigma_);
    double alpha() const { return sigma.a; }
    double b() const { return sigma.b; }
    double field_strength() const; // k + ||rho||
};

/// eta(a) = sum of m_j sqrt((b - y_j)/(a - y_j)); strictly decreasing in a.
/// Returns +inf when some atom sits exactly at a; throws for a below an atom.
double eta(const AtomicMeasure& rho, double b, double a);

/// Closed-form derivative of eta with respect to a (used to polish roots).
double eta_derivative(const AtomicMeasure& rho, double b, double a);

/// Left endpoint a of the support [a, b]: alpha when k + ||rho|| >= eta(alpha),
/// otherwise the unique root of eta(a) = k + ||rho|| in (alpha, b), to
/// relative tolerance 1e-12.
double solve_support_endpoint(const ExternalFieldProblem& p);

/// Density g = d(mu)/d(omega_[a,b]) of the equilibrium measure, for t in (a, b]:
/// (k + ||rho|| - eta(a))/k + (t - a)/k * sum_j m_j sqrt((b-y_j)/(a-y_j)) / (t-y_j).
double equilibrium_density_value(const ExternalFieldProblem& p, double a, double t);

/// Exponent of the weighted Bernstein-Walsh inequality:
/// k f(x) = (k + ||rho||) g_[a,b](x, inf) - sum_j m_j g_[a,b](x, y_j),
/// for x outside (a, b). Atoms located exactly at x raise singularity_error.
double exponent_f(const ExternalFieldProblem& p, double a, double x);

/// External field Q(x) = U^{rho/k}(x), a finite sum of logarithms.
double external_field_Q(const ExternalFieldProblem& p, double x);

struct EquilibriumSolution {
    Interval support;
    ArcsineWeightedDensity density_g;
    double total_mass_check;
    double F; // modified Robin constant
};

/// F from the equilibrium identity F = U^mu(x) + Q(x) on the support,
/// evaluated at the midpoint and cross-checked at a + (b-a)/4; a divergence
/// beyond 1e-6 signals an inconsistent solution and throws.
double robin_constant_F(const ExternalFieldProblem& p, const ArcsineWeightedDensity& density);

/// Full pipeline: endpoint, density, mass check, constant.
EquilibriumSolution solve_equilibrium(const ExternalFieldProblem& p);

/// U^mu(x) for the solved equilibrium measure (adaptive quadrature, abs_tol).
double potential_U_mu(const EquilibriumSolution& sol, double x, double abs_tol = 1e-10);

} // namespace cgpot
