#include "cgpot/bounds.hpp"
#include "cgpot/equilibrium.hpp"
#include "cgpot/errors.hpp"
#include "cgpot/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cgpot {

double cond_number_log_bound(double a, double b, int n) {
    if (!(0.0 < a && a < b)) throw std::domain_error("cond_number_bound: need 0 < a < b");
    if (n < 0) throw std::domain_error("cond_number_bound: n must be >= 0");
    const double s = std::sqrt(b / a);
    return std::log(2.0) + n * std::log((s - 1.0) / (s + 1.0));
}

double cond_number_bound(double a, double b, int n) {
    return std::exp(cond_number_log_bound(a, b, n));
}

namespace {

void check_spectrum(const std::vector<double>& lambdas, double b) {
    if (lambdas.empty()) throw std::domain_error("outlier bounds: empty spectrum");
    for (size_t i = 0; i < lambdas.size(); ++i) {
        if (!(lambdas[i] > 0.0))
            throw std::domain_error("outlier bounds: eigenvalues must be positive");
        if (i > 0 && !(lambdas[i] > lambdas[i - 1]))
            throw std::domain_error("outlier bounds: eigenvalues must be strictly increasing");
    }
    if (!(lambdas.back() <= b))
        throw std::domain_error("outlier bounds: b must dominate the spectrum");
}

} // namespace

double outlier_endpoint(const std::vector<double>& lambdas, int d, int n, double b) {
    check_spectrum(lambdas, b);
    if (d < 0 || d >= static_cast<int>(lambdas.size()))
        throw std::domain_error("outlier_endpoint: need 0 <= d < N");
    if (!(n > d + 1)) throw std::domain_error("outlier_endpoint: need n > d + 1");
    if (d == 0) return lambdas[0];

    const double alpha = lambdas[d]; // lambda_{d+1} in 1-based counting
    AtomicMeasure rho = AtomicMeasure::unit_masses(
        std::vector<double>(lambdas.begin(), lambdas.begin() + d));
    // eta(alpha) <= n means the field is too weak to push the endpoint.
    const double eta_alpha = eta(rho, b, alpha);
    if (n >= eta_alpha) return alpha;
    // Same eta-equation as the equilibrium problem with k = n - d.
    ExternalFieldProblem p(n - d, std::move(rho), Interval(alpha, b));
    return solve_support_endpoint(p);
}

double corollary_log_bound(const std::vector<double>& lambdas, int d, int n, double b, double C) {
    const double a = outlier_endpoint(lambdas, d, n, b);
    const Interval I(a, b);
    double log_bound = C - n * green_infinity(I, 0.0);
    for (int j = 0; j < d; ++j) log_bound += green_pole(I, 0.0, lambdas[j]);
    return log_bound;
}

double corollary_bound(const std::vector<double>& lambdas, int d, int n, double b, double C) {
    return std::exp(corollary_log_bound(lambdas, d, n, b, C));
}

BoundCurve envelope(const std::vector<double>& lambdas, int n_lo, int n_hi, double b, double C,
                    int max_d) {
    check_spectrum(lambdas, b);
    BoundCurve curve;
    curve.kind = BoundKind::Envelope;
    curve.C = C;
    const int N = static_cast<int>(lambdas.size());
    for (int n = n_lo; n <= n_hi; ++n) {
        BoundPoint pt;
        pt.n = n;
        pt.log_value = std::numeric_limits<double>::infinity();
        const int d_cap = std::min(max_d < 0 ? N - 1 : max_d, std::min(n - 2, N - 1));
        for (int d = 0; d <= d_cap; ++d) {
            if (d > 0 && !(lambdas[d] < b)) break; // degenerate comparison interval
            const double lg = corollary_log_bound(lambdas, d, n, b, C);
            if (lg < pt.log_value) {
                pt.log_value = lg;
                pt.d = d;
                pt.a_dn = outlier_endpoint(lambdas, d, n, b);
                pt.feasible = true;
            }
        }
        if (pt.feasible) pt.value = std::exp(pt.log_value);
        curve.points.push_back(pt);
    }
    return curve;
}

int thsuper_d(const SpectralDensity& s, int N, int n, const std::vector<double>& lambdas) {
    if (n < 1) throw std::domain_error("thsuper_d: n must be >= 1");
    const double t = double(n - 1) / N;
    if (t >= s.mass)
        throw std::domain_error("thsuper_d: n beyond the mass of the spectral density");
    double a;
    if (t <= 0.0) {
        a = s.support.a;
    } else {
        a = endpoint_a_of_t(s, t);
    }
    if (!lambdas.empty() && a > lambdas.back())
        throw std::domain_error("thsuper_d: endpoint escaped past lambda_N, n infeasible");
    int d = 0;
    for (double l : lambdas) {
        if (l < a) ++d;
        else break;
    }
    return d;
}

namespace {

double green_at_zero(const SpectralDensity& s, double t) {
    if (t <= 0.0) return 0.0;
    const double a = endpoint_a_of_t(s, t);
    if (a <= 0.0) return 0.0;
    return green_infinity(Interval(a, s.support.b), 0.0);
}

} // namespace

std::vector<IntegralBoundValue> integral_bound_curve(const SpectralDensity& s, int N, int n_max,
                                                     double C) {
    if (!(s.support.a >= 0.0))
        throw std::domain_error("integral_bound: spectral support must sit in [0, inf)");
    std::vector<IntegralBoundValue> out(n_max + 1);
    auto integrand = [&](double t) { return green_at_zero(s, t); };

    double integral = 0.0;  // integral of g over [0, n/N]
    double product_log = 0.0; // sum over j < n of -g(j/N)
    for (int n = 0; n <= n_max; ++n) {
        if (n > 0) {
            const double t_lo = double(n - 1) / N;
            const double t_hi = double(n) / N;
            if (t_hi >= s.mass)
                throw std::domain_error("integral_bound: n/N beyond the total mass");
            integral += integrate_or_throw(integrand, t_lo, t_hi, 1e-12, 4000);
            product_log += -green_at_zero(s, double(n - 1) / N);
        }
        IntegralBoundValue v;
        v.log_value = C - N * integral;
        v.value = std::exp(v.log_value);
        v.product_log = C + product_log;
        v.product_value = std::exp(v.product_log);
        out[n] = v;
    }
    return out;
}

IntegralBoundValue integral_bound(const SpectralDensity& s, int N, int n, double C) {
    if (n < 0) throw std::domain_error("integral_bound: n must be >= 0");
    return integral_bound_curve(s, N, n, C).at(n);
}

ThSuperBound thsuper_bound(const SpectralDensity& s, int N, int n,
                           const std::vector<double>& lambdas, double C) {
    const int d = thsuper_d(s, N, n, lambdas);
    if (!(n > d + 1))
        throw std::domain_error("thsuper_bound: n <= d + 1, bound infeasible at this step");
    ThSuperBound out;
    out.d = d;
    out.a_dn = outlier_endpoint(lambdas, d, n, s.support.b);
    out.log_value = corollary_log_bound(lambdas, d, n, s.support.b, C);
    out.value = std::exp(out.log_value);
    return out;
}

} // namespace cgpot
