#pragma once

namespace cgpot {

/// A nondegenerate real interval [a, b].
struct Interval {
    double a;
    double b;

    Interval(double a_, double b_);
    double midpoint() const { return 0.5 * (a + b); }
    double radius() const { return 0.5 * (b - a); }
    double length() const { return b - a; }
    bool contains_strictly(double x) const { return x > a && x < b; }
    /// Affine coordinate z with z(a) = -1, z(b) = +1.
    double normalized(double x) const { return (2.0 * x - a - b) / (b - a); }
    double from_normalized(double z) const { return midpoint() + radius() * z; }
};

enum class PointRelation { LeftOfInterval, RightOfInterval, Inside };

struct ExteriorPoint {
    double x;
    PointRelation relation;
};

/// Position of x relative to [a, b]; endpoints count as exterior.
ExteriorPoint classify(const Interval& I, double x);

/// Exterior inverse Joukowski map psi with |psi| >= 1 outside (a, b),
/// psi(a) = -1, psi(b) = +1, and sign(psi) = sign of the normalized
/// coordinate. Real-valued on both exterior rays.
double joukowski_exterior(const Interval& I, double x);

/// Green function of the complement of [a, b] with pole at infinity,
/// g(x) = log|psi(x)|; zero exactly on the interval endpoints.
double green_infinity(const Interval& I, double x);

/// Green function with finite pole y: log|(psi(x) psi(y) - 1)/(psi(x) - psi(y))|.
/// Symmetric in (x, y); throws singularity_error when x == y.
double green_pole(const Interval& I, double x, double y);

/// Density of the arcsine (Robin) equilibrium measure of [a, b] at an
/// interior point t: 1 / (pi sqrt((t - a)(b - t))).
double robin_density(const Interval& I, double t);

} // namespace cgpot
