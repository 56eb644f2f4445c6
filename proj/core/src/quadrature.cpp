#include "cgpot/quadrature.hpp"
#include "cgpot/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace cgpot {
namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1,1].
constexpr double kXgk[15] = {
    -0.99145537112081263920685469752633, -0.94910791234275852452618968404785,
    -0.86486442335976907278971278864093, -0.74153118559939443986386477328079,
    -0.58608723546769113029414483825873, -0.40584515137739716690660641207696,
    -0.20778495500789846760068940377324, 0.0,
    0.20778495500789846760068940377324,  0.40584515137739716690660641207696,
    0.58608723546769113029414483825873,  0.74153118559939443986386477328079,
    0.86486442335976907278971278864093,  0.94910791234275852452618968404785,
    0.99145537112081263920685469752633};

constexpr double kWgk[15] = {
    0.02293532201052922496373200805897, 0.06309209262997855329070066318920,
    0.10479001032225018383987632254152, 0.14065325971552591874518959051024,
    0.16900472663926790282658342659855, 0.19035057806478540991325640242101,
    0.20443294007529889241416199923465, 0.20948214108472782801299917489171,
    0.20443294007529889241416199923465, 0.19035057806478540991325640242101,
    0.16900472663926790282658342659855, 0.14065325971552591874518959051024,
    0.10479001032225018383987632254152, 0.06309209262997855329070066318920,
    0.02293532201052922496373200805897};

constexpr double kWg[4] = {0.12948496616886969327061143267908, 0.27970539148927666790146777142378,
                           0.38183005050511894495036977548898, 0.41795918367346938775510204081633};

struct Segment {
    double lo, hi;
    double value;
    double error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

Segment evaluate_segment(const std::function<double(double)>& f, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double kronrod = 0.0, gauss = 0.0, abs_sum = 0.0;
    double fv[15];
    for (int i = 0; i < 15; ++i) {
        fv[i] = f(mid + half * kXgk[i]);
        if (!std::isfinite(fv[i])) fv[i] = 0.0; // measure-zero hit on an integrable singularity
        kronrod += kWgk[i] * fv[i];
        abs_sum += kWgk[i] * std::abs(fv[i]);
    }
    gauss = kWg[3] * fv[7];
    for (int i = 0; i < 3; ++i) gauss += kWg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);

    Segment seg;
    seg.lo = lo;
    seg.hi = hi;
    seg.value = kronrod * half;
    // Standard QUADPACK-style rescaled error estimate.
    double err = std::abs((kronrod - gauss) * half);
    double resabs = abs_sum * half;
    if (resabs > 0.0 && err > 0.0)
        err = resabs * std::min(1.0, std::pow(200.0 * err / resabs, 1.5));
    seg.error = std::max(err, 10.0 * std::numeric_limits<double>::epsilon() * std::abs(resabs));
    return seg;
}

QuadratureResult run(const std::function<double(double)>& f, std::vector<Segment> segments,
                     double abs_tol, int max_segments) {
    QuadratureResult res;
    std::priority_queue<Segment> queue;
    double total = 0.0, total_err = 0.0;
    for (const Segment& s : segments) {
        total += s.value;
        total_err += s.error;
        queue.push(s);
    }
    res.evaluations = 15 * static_cast<long>(segments.size());

    int count = static_cast<int>(segments.size());
    while (total_err > abs_tol && count < max_segments) {
        Segment worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi) {
            // Segment no longer splittable in double precision.
            queue.push(worst);
            break;
        }
        Segment left = evaluate_segment(f, worst.lo, mid);
        Segment right = evaluate_segment(f, mid, worst.hi);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        res.evaluations += 30;
        ++count;
    }

    res.value = total;
    res.error_estimate = total_err;
    res.converged = total_err <= abs_tol;
    return res;
}

} // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           double abs_tol, int max_segments) {
    if (lo == hi) return {0.0, 0.0, 0, true};
    if (lo > hi) {
        QuadratureResult r = integrate(f, hi, lo, abs_tol, max_segments);
        r.value = -r.value;
        return r;
    }
    return run(f, {evaluate_segment(f, lo, hi)}, abs_tol, max_segments);
}

QuadratureResult integrate_split(const std::function<double(double)>& f, double lo, double hi,
                                 std::vector<double> breakpoints, double abs_tol,
                                 int max_segments) {
    if (lo == hi) return {0.0, 0.0, 0, true};
    breakpoints.erase(std::remove_if(breakpoints.begin(), breakpoints.end(),
                                     [&](double b) { return !(b > lo && b < hi); }),
                      breakpoints.end());
    std::sort(breakpoints.begin(), breakpoints.end());
    std::vector<Segment> segments;
    double left = lo;
    for (double b : breakpoints) {
        if (b > left) {
            segments.push_back(evaluate_segment(f, left, b));
            left = b;
        }
    }
    segments.push_back(evaluate_segment(f, left, hi));
    return run(f, std::move(segments), abs_tol, max_segments);
}

double integrate_or_throw(const std::function<double(double)>& f, double lo, double hi,
                          double abs_tol, int max_segments) {
    QuadratureResult r = integrate(f, lo, hi, abs_tol, max_segments);
    if (!r.converged)
        throw quadrature_error("adaptive quadrature did not reach requested tolerance",
                               r.error_estimate);
    return r.value;
}

} // namespace cgpot
