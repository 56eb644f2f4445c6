#include "cgpot/interval.hpp"
#include "cgpot/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cgpot {

Interval::Interval(double a_, double b_) : a(a_), b(b_) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
        throw std::domain_error("Interval: endpoints must be finite with a < b");
}

ExteriorPoint classify(const Interval& I, double x) {
    if (x <= I.a) return {x, PointRelation::LeftOfInterval};
    if (x >= I.b) return {x, PointRelation::RightOfInterval};
    return {x, PointRelation::Inside};
}

double joukowski_exterior(const Interval& I, double x) {
    if (I.contains_strictly(x))
        throw std::domain_error("joukowski_exterior: x inside (a, b)");
    const double z = I.normalized(x);
    const double az = std::abs(z);
    // sqrt(z^2 - 1) as sqrt((|z|-1)(|z|+1)) avoids cancellation near |z| = 1.
    const double root = std::sqrt((az - 1.0) * (az + 1.0));
    const double psi = az + root;
    return z < 0.0 ? -psi : psi;
}

double green_infinity(const Interval& I, double x) {
    const double psi = std::abs(joukowski_exterior(I, x));
    if (psi <= 1.0) return 0.0;
    // log1p for accuracy when x sits just outside the interval.
    return std::log1p(psi - 1.0);
}

double green_pole(const Interval& I, double x, double y) {
    if (I.contains_strictly(x) || I.contains_strictly(y))
        throw std::domain_error("green_pole: argument inside (a, b)");
    if (x == y)
        throw singularity_error("green_pole: coincident pole and evaluation point");
    const double px = joukowski_exterior(I, x);
    const double py = joukowski_exterior(I, y);
    const double denom = px - py;
    if (denom == 0.0)
        throw singularity_error("green_pole: points indistinguishable under the exterior map");
    const double value = std::log(std::abs((px * py - 1.0) / denom));
    return value > 0.0 ? value : 0.0;
}

double robin_density(const Interval& I, double t) {
    if (!I.contains_strictly(t))
        throw std::domain_error("robin_density: t must lie strictly inside (a, b)");
    return 1.0 / (M_PI * std::sqrt((t - I.a) * (I.b - t)));
}

} // namespace cgpot
