#include "cgpot/spectra.hpp"
#include "cgpot/errors.hpp"
#include "cgpot/quadrature.hpp"
#include "cgpot/rootfind.hpp"

#include <boost/math/special_functions/beta.hpp>

#include <cmath>
#include <stdexcept>

namespace cgpot {

SpectralDensity make_example11() {
    SpectralDensity s;
    s.support = Interval(0.0, 1.0);
    s.mass = 1.0;
    s.density = [](double x) { return 0.5 / std::sqrt(1.0 - x); };
    s.cdf = [](double x) {
        if (x <= 0.0) return 0.0;
        if (x >= 1.0) return 1.0;
        return 1.0 - std::sqrt(1.0 - x);
    };
    s.quantile = [](double u) { return u * (2.0 - u); };
    s.family = SpectralFamily::Example11;
    return s;
}

double example12_normalizer(double beta, double b) {
    if (beta < 0.0 || b <= 0.0)
        throw std::domain_error("example12_normalizer: need beta >= 0 and b > 0");
    const double log_B =
        std::lgamma(beta + 1.0) + std::lgamma(0.5) - std::lgamma(beta + 1.5);
    return std::exp(-(beta + 0.5) * std::log(b) - log_B);
}

SpectralDensity make_example12(double beta, double b) {
    const double gamma = example12_normalizer(beta, b);
    SpectralDensity s;
    s.support = Interval(0.0, b);
    s.mass = 1.0;
    s.density = [gamma, beta, b](double x) {
        return gamma * std::pow(x, beta) / std::sqrt(b - x);
    };
    // sigma([0, x]) = I_{x/b}(beta + 1, 1/2), the regularized incomplete beta.
    s.cdf = [beta, b](double x) {
        if (x <= 0.0) return 0.0;
        if (x >= b) return 1.0;
        return boost::math::ibeta(beta + 1.0, 0.5, x / b);
    };
    s.quantile = [beta, b](double u) {
        if (u <= 0.0) return 0.0;
        if (u >= 1.0) return b;
        return b * boost::math::ibeta_inv(beta + 1.0, 0.5, u);
    };
    s.family = SpectralFamily::Example12;
    s.beta = beta;
    return s;
}

bool interval_family_admissible(const SpectralDensity& s, int grid_points) {
    const Interval& I = s.support;
    const int n = std::max(grid_points, 16);
    auto phi = [&](double x) { return std::sqrt((x - I.a) * (I.b - x)) * s.density(x); };

    // phi must vanish at the left edge and rise strictly across the interval.
    const double edge = phi(I.a + 1e-9 * I.length());
    const double mid = phi(I.midpoint());
    if (!std::isfinite(edge) || !std::isfinite(mid) || !(edge < 0.01 * mid)) return false;
    double prev = edge;
    for (int i = 1; i <= n; ++i) {
        const double x = I.a + I.length() * double(i) / (n + 1);
        const double value = phi(x);
        if (!std::isfinite(value) || !(value > prev)) return false;
        prev = value;
    }
    return true;
}

double endpoint_a_of_t(const SpectralDensity& s, double t) {
    const Interval& I = s.support;
    if (!(t > 0.0 && t < s.mass))
        throw std::domain_error("endpoint_a_of_t: need 0 < t < total mass");

    // phi(a) = integral over [a0, a] of sqrt((b-x)/(a-x)) d(sigma), with the
    // substitution x = a - u^2 removing the inverse-square-root singularity.
    auto phi = [&](double a) {
        if (a <= I.a) return 0.0;
        const double umax = std::sqrt(a - I.a);
        auto f = [&](double u) {
            const double x = a - u * u;
            return 2.0 * std::sqrt(I.b - a + u * u) * s.density(x);
        };
        QuadratureResult r = integrate(f, 0.0, umax, 1e-13, 4000);
        if (!r.converged)
            throw quadrature_error("endpoint_a_of_t: inner quadrature stalled",
                                   r.error_estimate);
        return r.value;
    };

    auto fn = [&](double a) { return phi(a) - t; };
    return find_root(fn, I.a, I.b, 1e-15, 1e-13);
}

SpectrumSample generate_spectrum(const SpectralDensity& s, int N, SampleMode mode) {
    if (N < 2) throw std::domain_error("generate_spectrum: N must be >= 2");
    if (std::abs(s.mass - 1.0) > 1e-12)
        throw std::domain_error("generate_spectrum: sampling requires a probability measure");

    auto quantile_of = [&](double u) {
        if (s.quantile) return s.quantile(u);
        // Custom density without a quantile: invert the cdf numerically.
        auto fn = [&](double x) { return s.cdf(x) - u; };
        if (u >= 1.0) return s.support.b;
        return find_root(fn, s.support.a, s.support.b, 1e-15, 1e-13);
    };

    SpectrumSample sample;
    sample.N = N;
    sample.eigenvalues.resize(N);
    for (int j = 1; j <= N; ++j) {
        const double level =
            mode == SampleMode::Equality ? double(j) / N : std::min(1.0, (j + 0.5) / N);
        sample.eigenvalues[j - 1] = quantile_of(level);
    }
    for (int j = 1; j < N; ++j)
        if (!(sample.eigenvalues[j] > sample.eigenvalues[j - 1]))
            throw convergence_error("generate_spectrum: quantiles not strictly increasing");
    return sample;
}

} // namespace cgpot
