#include "cgpot/density.hpp"
#include "cgpot/errors.hpp"
#include "cgpot/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace cgpot {

double ArcsineWeightedDensity::density(double t) const {
    return g(t) * robin_density(interval, t);
}

ArcsineWeightedDensity flat_density(const Interval& I) {
    AdmissibilityFlags flags{true, true, true, true};
    return {I, [](double) { return 1.0; }, flags, "flat"};
}

ArcsineWeightedDensity power_density(double theta) {
    if (theta < 0.0 || theta > 1.0)
        throw std::domain_error("power_density: exponent must lie in [0, 1]");
    // Normalizer pi Gamma(theta+1) / (2^theta Gamma(1/2) Gamma(theta+1/2)).
    const double log_c = std::log(M_PI) - theta * std::log(2.0) + std::lgamma(theta + 1.0) -
                         0.5 * std::log(M_PI) - std::lgamma(theta + 0.5);
    const double c = std::exp(log_c);
    AdmissibilityFlags flags{true, true, true, true};
    return {Interval(-1.0, 1.0), [c, theta](double x) { return c * std::pow(1.0 + x, theta); },
            flags, "power(" + std::to_string(theta) + ")"};
}

namespace {

// Angular parametrization t(alpha) = midpoint - radius * cos(alpha) turns
// d(omega) into d(alpha)/pi and removes the endpoint singularities.
double angle_of(const Interval& I, double t) {
    // Two-term form keeps the ratio exact at the endpoints; acos amplifies
    // one-ulp errors near +-1 into 1e-8 angle errors otherwise.
    double c = ((I.a - t) + (I.b - t)) / (I.b - I.a);
    c = std::min(1.0, std::max(-1.0, c));
    return std::acos(c);
}

} // namespace

DensityAudit check_admissibility(const ArcsineWeightedDensity& d, int grid_points) {
    DensityAudit audit;
    const Interval& I = d.interval;
    const int n = std::max(grid_points, 16);

    // Sample at strictly interior points, clustered like Chebyshev nodes so
    // the edges where g and g/(t-a) vary fastest are well covered.
    std::vector<double> ts(n), gs(n), hs(n);
    for (int i = 0; i < n; ++i) {
        const double alpha = M_PI * (i + 0.5) / n;
        ts[i] = I.midpoint() - I.radius() * std::cos(alpha);
        gs[i] = d.g(ts[i]);
        hs[i] = gs[i] / (ts[i] - I.a);
    }

    const double scale = std::abs(gs[n - 1]) + 1.0;
    const double tol = 1e-9 * scale;

    auto push = [&](const std::string& property, bool pass, double margin, double loc) {
        audit.entries.push_back({property, pass, margin, loc});
        if (!pass && audit.diagnostic.empty()) audit.diagnostic = property;
    };

    double worst = gs[0], worst_loc = ts[0];
    for (int i = 0; i < n; ++i)
        if (gs[i] < worst) { worst = gs[i]; worst_loc = ts[i]; }
    push("g nonnegative", worst >= -tol, worst, worst_loc);

    worst = 0.0; worst_loc = ts[0];
    for (int i = 0; i + 1 < n; ++i) {
        const double slope = gs[i + 1] - gs[i];
        if (slope < worst) { worst = slope; worst_loc = ts[i]; }
    }
    push("g increasing", worst >= -tol, worst, worst_loc);

    // Concavity via divided differences on the (non-uniform) grid.
    worst = 0.0; worst_loc = ts[0];
    for (int i = 0; i + 2 < n; ++i) {
        const double left = (gs[i + 1] - gs[i]) / (ts[i + 1] - ts[i]);
        const double right = (gs[i + 2] - gs[i + 1]) / (ts[i + 2] - ts[i + 1]);
        const double bend = (left - right) * (ts[i + 2] - ts[i]);
        if (bend < worst) { worst = bend; worst_loc = ts[i + 1]; }
    }
    push("g concave", worst >= -tol, worst, worst_loc);

    worst = 0.0; worst_loc = ts[0];
    for (int i = 0; i + 2 < n; ++i) {
        const double left = (hs[i + 1] - hs[i]) / (ts[i + 1] - ts[i]);
        const double right = (hs[i + 2] - hs[i + 1]) / (ts[i + 2] - ts[i + 1]);
        const double bend = (right - left) * (ts[i + 2] - ts[i]);
        if (bend < worst * (std::abs(hs[i + 1]) + 1.0)) { worst = bend / (std::abs(hs[i + 1]) + 1.0); worst_loc = ts[i + 1]; }
    }
    push("g/(t-a) convex", worst >= -1e-7, worst, worst_loc);

    const double mass = arcsine_mass(d);
    push("unit mass", std::abs(mass - 1.0) <= 1e-7, 1e-7 - std::abs(mass - 1.0), 0.0);

    const double g_at_b = d.g(I.b);
    push("g(b) <= 2", g_at_b <= 2.0 + 1e-9, 2.0 - g_at_b, I.b);
    const double g_mid = d.g(I.midpoint());
    push("g(midpoint) >= 1", g_mid >= 1.0 - 1e-7, g_mid - 1.0, I.midpoint());

    audit.ok = audit.diagnostic.empty();
    return audit;
}

double arcsine_mass(const ArcsineWeightedDensity& d, double abs_tol) {
    const Interval I = d.interval;
    auto f = [&](double alpha) { return d.g(I.midpoint() - I.radius() * std::cos(alpha)) / M_PI; };
    return integrate_or_throw(f, 0.0, M_PI, abs_tol);
}

double potential_U(const ArcsineWeightedDensity& d, double x, double abs_tol) {
    const Interval I = d.interval;
    auto f = [&](double alpha) {
        const double t = I.midpoint() - I.radius() * std::cos(alpha);
        const double dist = std::abs(x - t);
        if (dist == 0.0) return 0.0; // integrable log point, measure zero
        return -std::log(dist) * d.g(t) / M_PI;
    };
    QuadratureResult r;
    if (x >= I.a && x <= I.b) {
        r = integrate_split(f, 0.0, M_PI, {angle_of(I, x)}, abs_tol, 4000);
    } else {
        r = integrate(f, 0.0, M_PI, abs_tol, 4000);
    }
    if (!r.converged)
        throw quadrature_error("potential_U: tolerance not reached", r.error_estimate);
    return r.value;
}

} // namespace cgpot
