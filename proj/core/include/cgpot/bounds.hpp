#pragma once

#include "cgpot/spectra.hpp"

#include <vector>

namespace cgpot {

enum class BoundKind { CondNumber, Outlier, Envelope, Integral, ThSuper };

struct BoundPoint {
    int n = 0;
    bool feasible = false;
    double value = 0.0;     // exp(log_value); may overflow to inf for large C
    double log_value = 0.0; // always finite when feasible
    int d = -1;             // outlier count used (where applicable)
    double a_dn = 0.0;      // endpoint used (where applicable)
};

struct BoundCurve {
    BoundKind kind = BoundKind::CondNumber;
    double C = 0.0;
    std::vector<BoundPoint> points;
};

/// Condition-number bound 2 ((sqrt(b/a)-1)/(sqrt(b/a)+1))^n for 0 < a < b.
double cond_number_bound(double a, double b, int n);
double cond_number_log_bound(double a, double b, int n);

/// Endpoint a_{d,n} for the d-outlier bound: lambda_{d+1} once
/// n >= eta(lambda_{d+1}), else the unique root > lambda_{d+1} of
/// n = sum_{j<=d} sqrt((b - lambda_j)/(a - lambda_j)). lambdas ascending.
double outlier_endpoint(const std::vector<double>& lambdas, int d, int n, double b);

/// log of the d-outlier bound exp(C - n g_[a,b](0,inf) + sum_{j<=d} g_[a,b](0,lambda_j)).
double corollary_log_bound(const std::vector<double>& lambdas, int d, int n, double b, double C);
double corollary_bound(const std::vector<double>& lambdas, int d, int n, double b, double C);

/// Pointwise minimum over feasible d of the outlier bounds, with the argmin
/// recorded per n. max_d < 0 means all feasible d.
BoundCurve envelope(const std::vector<double>& lambdas, int n_lo, int n_hi, double b, double C,
                    int max_d = -1);

/// Near-optimal outlier count for step n: the number of eigenvalues lying
/// strictly below the shrunk-support endpoint a((n-1)/N). Throws when the
/// endpoint escapes past lambda_N (n infeasible).
int thsuper_d(const SpectralDensity& s, int N, int n, const std::vector<double>& lambdas);

struct IntegralBoundValue {
    double value = 0.0;        // exp(C - N * integral of g_{S(t)}(0, inf) dt)
    double log_value = 0.0;
    double product_value = 0.0; // discrete product variant (upper)
    double product_log = 0.0;
};

/// Integral-of-Green-functions bound at iteration n with offset C.
IntegralBoundValue integral_bound(const SpectralDensity& s, int N, int n, double C);

/// All of 1..n_max at once (the integral is accumulated incrementally).
std::vector<IntegralBoundValue> integral_bound_curve(const SpectralDensity& s, int N, int n_max,
                                                     double C);

struct ThSuperBound {
    double value = 0.0;
    double log_value = 0.0;
    int d = 0;
    double a_dn = 0.0;
};

/// Outlier bound evaluated at d = thsuper_d(n).
ThSuperBound thsuper_bound(const SpectralDensity& s, int N, int n,
                           const std::vector<double>& lambdas, double C);

} // namespace cgpot
