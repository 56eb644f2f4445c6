#include "cgpot/equilibrium.hpp"
#include "cgpot/errors.hpp"
#include "cgpot/rootfind.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cgpot {

double AtomicMeasure::total_mass() const {
    double m = 0.0;
    for (const Atom& a : atoms) m += a.mass;
    return m;
}

double AtomicMeasure::max_location() const {
    double m = -std::numeric_limits<double>::infinity();
    for (const Atom& a : atoms) m = std::max(m, a.location);
    return m;
}

AtomicMeasure AtomicMeasure::unit_masses(const std::vector<double>& locations) {
    AtomicMeasure rho;
    rho.atoms.reserve(locations.size());
    for (double x : locations) rho.atoms.push_back({x, 1.0});
    return rho;
}

ExternalFieldProblem::ExternalFieldProblem(int k_, AtomicMeasure rho_, Interval sigma_)
    : k(k_), rho(std::move(rho_)), sigma(sigma_) {
    if (k < 1) throw std::domain_error("ExternalFieldProblem: k must be >= 1");
    for (const Atom& a : rho.atoms) {
        if (!(a.mass > 0.0)) throw std::domain_error("ExternalFieldProblem: masses must be > 0");
        if (!std::isfinite(a.location) || a.location > sigma.a)
            throw std::domain_error("ExternalFieldProblem: atoms must lie in (-inf, alpha]");
    }
}

double ExternalFieldProblem::field_strength() const { return k + rho.total_mass(); }

double eta(const AtomicMeasure& rho, double b, double a) {
    double sum = 0.0;
    for (const Atom& atom : rho.atoms) {
        if (a < atom.location) throw std::domain_error("eta: a below an atom of rho");
        if (a == atom.location) return std::numeric_limits<double>::infinity();
        sum += atom.mass * std::sqrt((b - atom.location) / (a - atom.location));
    }
    return sum;
}

double eta_derivative(const AtomicMeasure& rho, double b, double a) {
    double sum = 0.0;
    for (const Atom& atom : rho.atoms) {
        const double d = a - atom.location;
        if (d <= 0.0) throw std::domain_error("eta_derivative: a at or below an atom of rho");
        sum += -0.5 * atom.mass * std::sqrt(b - atom.location) / (d * std::sqrt(d));
    }
    return sum;
}

double solve_support_endpoint(const ExternalFieldProblem& p) {
    const double alpha = p.alpha();
    const double b = p.b();
    const double target = p.field_strength();
    if (p.rho.empty()) return alpha;

    const double eta_alpha = eta(p.rho, b, alpha);
    if (target >= eta_alpha) return alpha;

    // eta is strictly decreasing with eta(b) = ||rho|| < target, so the root
    // is bracketed once we find a left endpoint with finite eta above target
    // (eta(alpha) may be +inf when an atom sits at alpha).
    double lo = alpha;
    double f_lo = eta_alpha - target;
    if (!std::isfinite(f_lo)) {
        double step = (b - alpha);
        do {
            step *= 0.5;
            lo = alpha + step;
            f_lo = eta(p.rho, b, lo) - target;
        } while (!(f_lo > 0.0) && step > 1e-300);
        if (!(f_lo > 0.0))
            throw convergence_error("solve_support_endpoint: could not bracket the eta equation");
    }

    auto fn = [&](double a) { return eta(p.rho, b, a) - target; };
    double a = find_root(fn, lo, b, 0.0, 1e-13);
    // Two Newton steps with the closed-form derivative tighten the root to
    // the requested relative tolerance.
    for (int i = 0; i < 2; ++i) {
        const double fa = eta(p.rho, b, a) - target;
        const double da = eta_derivative(p.rho, b, a);
        if (da == 0.0) break;
        const double next = a - fa / da;
        if (next > alpha && next < b) a = next;
    }
    return a;
}

double equilibrium_density_value(const ExternalFieldProblem& p, double a, double t) {
    const double b = p.b();
    if (!(t > a && t <= b))
        throw std::domain_error("equilibrium_density_value: t must lie in (a, b]");
    const double base = (p.field_strength() - eta(p.rho, b, a)) / p.k;
    double sum = 0.0;
    for (const Atom& atom : p.rho.atoms)
        sum += atom.mass * std::sqrt((b - atom.location) / (a - atom.location)) /
               (t - atom.location);
    return base + (t - a) * sum / p.k;
}

double exponent_f(const ExternalFieldProblem& p, double a, double x) {
    const Interval support(a, p.b());
    double kf = p.field_strength() * green_infinity(support, x);
    for (const Atom& atom : p.rho.atoms)
        kf -= atom.mass * green_pole(support, x, atom.location);
    return kf / p.k;
}

double external_field_Q(const ExternalFieldProblem& p, double x) {
    double q = 0.0;
    for (const Atom& atom : p.rho.atoms) {
        const double d = std::abs(x - atom.location);
        if (d == 0.0) throw singularity_error("external_field_Q: x coincides with an atom");
        q -= atom.mass * std::log(d);
    }
    return q / p.k;
}

double robin_constant_F(const ExternalFieldProblem& p, const ArcsineWeightedDensity& density) {
    const Interval& s = density.interval;
    const double x1 = s.midpoint();
    const double x2 = s.a + 0.25 * (s.b - s.a);
    const double f1 = potential_U(density, x1, 1e-11) + external_field_Q(p, x1);
    const double f2 = potential_U(density, x2, 1e-11) + external_field_Q(p, x2);
    if (std::abs(f1 - f2) > 1e-6)
        throw convergence_error("robin_constant_F: checkpoint values disagree, solution inconsistent");
    return f1;
}

EquilibriumSolution solve_equilibrium(const ExternalFieldProblem& p) {
    const double a = solve_support_endpoint(p);
    const double b = p.b();
    const Interval support(a, b);

    // Freeze the atom coefficients so the density handle is self-contained.
    const double base = (p.field_strength() - eta(p.rho, b, a)) / p.k;
    struct Term {
        double coeff, location;
    };
    std::vector<Term> terms;
    terms.reserve(p.rho.atoms.size());
    for (const Atom& atom : p.rho.atoms)
        terms.push_back({atom.mass * std::sqrt((b - atom.location) / (a - atom.location)),
                         atom.location});
    const double inv_k = 1.0 / p.k;

    ArcsineWeightedDensity density{
        support,
        [base, terms, a, inv_k](double t) {
            double sum = 0.0;
            for (const Term& term : terms) sum += term.coeff / (t - term.location);
            return base + (t - a) * sum * inv_k;
        },
        AdmissibilityFlags{true, true, true, true}, // established by the solved problem
        "equilibrium"};

    EquilibriumSolution sol{support, density, arcsine_mass(density), 0.0};
    sol.F = robin_constant_F(p, density);
    return sol;
}

double potential_U_mu(const EquilibriumSolution& sol, double x, double abs_tol) {
    return potential_U(sol.density_g, x, abs_tol);
}

} // namespace cgpot
