#pragma once

#include "cgpot/interval.hpp"

#include <functional>
#include <vector>

namespace cgpot {

/// Families selectable through the CLI / config key "family".
enum class SpectralFamily { Example11, Example12, Custom };

/// An eigenvalue distribution sigma on [a(0), b] whose shrinking support
/// sets stay intervals [a(t), b].
struct SpectralDensity {
    Interval support{0.0, 1.0};             // [a0, b]
    double mass = 1.0;                      // ||sigma||
    std::function<double(double)> density;  // sigma'
    std::function<double(double)> cdf;      // sigma((-inf, x])
    std::function<double(double)> quantile; // inverse cdf on [0, mass]; may be empty
    SpectralFamily family = SpectralFamily::Custom;
    double beta = 0.0; // exponent parameter of the example12 family
};

/// sigma' = 1 / (2 sqrt(1 - x)) on [0, 1]; closed-form cdf and quantile.
SpectralDensity make_example11();

/// sigma' = gamma x^beta / sqrt(b - x) on [0, b], normalized to unit mass;
/// cdf/quantile via the regularized incomplete beta function. beta = 0
/// with b = 1 coincides with the example11 family.
SpectralDensity make_example12(double beta, double b);

/// Normalizer gamma = 1 / (b^(beta+1/2) B(beta+1, 1/2)), via log-gamma.
double example12_normalizer(double beta, double b);

/// Admissibility for interval-shaped shrinking supports: the function
/// x -> sqrt((x - a0)(b - x)) sigma'(x) vanishes at a0 and is strictly
/// increasing. Checked on a grid of interior points.
bool interval_family_admissible(const SpectralDensity& s, int grid_points = 256);

/// Left endpoint a(t) of the shrinking support, the unique solution of
/// t = integral over [a0, a] of sqrt((b - x)/(a - x)) d(sigma); requires
/// 0 < t < ||sigma||. Strictly increasing in t.
double endpoint_a_of_t(const SpectralDensity& s, double t);

enum class SampleMode {
    Equality,     // sigma((-inf, lambda_j]) = j/N
    UpperQuantile // inequality-only sampling: sigma((-inf, lambda_j]) >= j/N
};

struct SpectrumSample {
    int N = 0;
    std::vector<double> eigenvalues; // strictly increasing
};

/// Eigenvalues from the quantile function; requires unit total mass.
/// UpperQuantile shifts each level to (j + 1/2)/N, capped at 1, which keeps
/// the defining inequality strict below the top eigenvalue; it is a sampling
/// hook, no sharpness is claimed for it.
SpectrumSample generate_spectrum(const SpectralDensity& s, int N,
                                 SampleMode mode = SampleMode::Equality);

} // namespace cgpot
