#include "cgpot/discretizer.hpp"
#include "cgpot/constants.hpp"
#include "cgpot/errors.hpp"
#include "cgpot/quadrature.hpp"
#include "cgpot/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <stdexcept>

namespace cgpot {
namespace {

double angle_of(const Interval& I, double x) {
    // Two-term form keeps the ratio exact at the endpoints; acos amplifies
    // one-ulp errors near +-1 into 1e-8 angle errors otherwise.
    double c = ((I.a - x) + (I.b - x)) / (I.b - I.a);
    c = std::min(1.0, std::max(-1.0, c));
    return std::acos(c);
}

double point_at_angle(const Interval& I, double alpha) {
    return I.midpoint() - I.radius() * std::cos(alpha);
}

// mu-mass between two angles: (1/pi) * integral of g(t(alpha)) d(alpha).
double mass_between_angles(const ArcsineWeightedDensity& d, double th1, double th2,
                           double abs_tol) {
    if (th1 == th2) return 0.0;
    auto f = [&](double alpha) { return d.g(point_at_angle(d.interval, alpha)) / M_PI; };
    QuadratureResult r = integrate(f, th1, th2, abs_tol, 4000);
    if (!r.converged)
        throw quadrature_error("mass_between_angles: tolerance not reached", r.error_estimate);
    return r.value;
}

} // namespace

double cumulative_W(const ArcsineWeightedDensity& d, int k, double x, double abs_tol) {
    const Interval& I = d.interval;
    if (!(x >= I.a && x <= I.b))
        throw std::domain_error("cumulative_W: x outside [a, b]");
    return k * mass_between_angles(d, 0.0, angle_of(I, x), abs_tol / k);
}

DiscretizationCertificate build_partition(const ArcsineWeightedDensity& d, int k) {
    if (k < 2) throw std::domain_error("build_partition: k must be >= 2");
    const Interval I = d.interval;

    DiscretizationCertificate cert(k, d);
    cert.angles.assign(k + 1, 0.0);
    cert.partition.assign(k + 1, 0.0);
    cert.angles[k] = M_PI;
    cert.partition[0] = I.a;
    cert.partition[k] = I.b;

    // Solve for the partition in the angular variable, cell by cell; each
    // t_j is the point where the mass since t_{j-1} reaches 1/k.
    const double cell_mass = 1.0 / k;
    const double mass_tol = 1e-13;
    for (int j = 1; j < k; ++j) {
        const double prev = cert.angles[j - 1];
        auto fn = [&](double th) { return mass_between_angles(d, prev, th, mass_tol) - cell_mass; };
        cert.angles[j] = find_root(fn, prev, M_PI, 1e-14, 1e-13);
        cert.partition[j] = point_at_angle(I, cert.angles[j]);
    }

    // Weighted midpoints: barycenter of each cell under mu.
    cert.nodes.assign(k, 0.0);
    for (int j = 0; j < k; ++j) {
        const double lo = cert.angles[j], hi = cert.angles[j + 1];
        auto numer = [&](double alpha) {
            const double t = point_at_angle(I, alpha);
            return t * d.g(t) / M_PI;
        };
        const double num = integrate_or_throw(numer, lo, hi, 1e-13, 4000);
        const double den = mass_between_angles(d, lo, hi, 1e-13);
        cert.nodes[j] = num / den;
        if (!(cert.nodes[j] > cert.partition[j] && cert.nodes[j] < cert.partition[j + 1]))
            throw convergence_error("build_partition: barycenter escaped its cell");
    }
    return cert;
}

double log_abs_Pk(const DiscretizationCertificate& c, double x) {
    std::vector<double> dist(c.nodes.size());
    for (size_t j = 0; j < c.nodes.size(); ++j) {
        dist[j] = std::abs(x - c.nodes[j]);
        if (dist[j] == 0.0)
            throw singularity_error("log_abs_Pk: x coincides with a node");
    }
    std::sort(dist.begin(), dist.end());
    double sum = 0.0;
    for (double dj : dist) sum += std::log(dj);
    return sum;
}

double discretization_error(const DiscretizationCertificate& c, double x, double potential_tol) {
    return log_abs_Pk(c, x) + c.k * potential_U(c.density, x, potential_tol);
}

int locate_cell(const DiscretizationCertificate& c, double x) {
    const Interval& I = c.interval();
    if (!(x >= I.a && x <= I.b)) throw std::domain_error("locate_cell: x outside [a, b]");
    auto it = std::upper_bound(c.partition.begin(), c.partition.end(), x);
    int j0 = static_cast<int>(it - c.partition.begin()) - 1;
    if (j0 > 0 && c.partition[j0] == x) --j0; // tie: take the left cell
    return std::min(j0, c.k - 1);
}

double cell_quadrature_error(const DiscretizationCertificate& c, int j, double x,
                             double abs_tol) {
    if (j < 0 || j >= c.k) throw std::domain_error("cell_quadrature_error: bad cell index");
    const double xi = c.nodes[j];
    if (std::abs(x - xi) == 0.0)
        throw singularity_error("cell_quadrature_error: x on a node");
    const double log_xi_dist = std::log(std::abs(x - xi));
    const Interval& I = c.interval();
    auto f = [&](double alpha) {
        const double t = point_at_angle(I, alpha);
        const double dist = std::abs(x - t);
        if (dist == 0.0) return 0.0;
        return (log_xi_dist - std::log(dist)) * c.density.g(t) / M_PI;
    };
    const double lo = c.angles[j], hi = c.angles[j + 1];
    std::vector<double> breaks;
    if (x > c.partition[j] && x < c.partition[j + 1]) breaks.push_back(angle_of(I, x));
    QuadratureResult r = integrate_split(f, lo, hi, breaks, abs_tol / c.k, 4000);
    if (!r.converged)
        throw quadrature_error("cell_quadrature_error: tolerance not reached", r.error_estimate);
    return c.k * r.value;
}

ThreeSums three_sums(const DiscretizationCertificate& c, double x) {
    const int j0 = locate_cell(c, x);
    const std::vector<double>& t = c.partition;
    ThreeSums sums{0.0, 0.0, 0.0};

    for (int j = 0; j <= j0 - 2; ++j) {
        const double w = t[j + 1] - t[j];
        const double gap = t[j0] - t[j + 1];
        sums.sum1 += 0.25 * w * w / (gap * gap);
    }
    for (int j = j0 + 2; j <= c.k - 1; ++j) {
        const double w = t[j + 1] - t[j];
        const double gap = t[j] - t[j0 + 1];
        sums.sum3 += 0.25 * w * w / (gap * gap);
    }
    const int j1 = std::max(0, j0 - 1);
    const int j2 = std::min(j0 + 1, c.k - 1);
    for (int j = j1; j <= j2; ++j) sums.sum2 += cell_quadrature_error(c, j, x);
    return sums;
}

MeanValueCheck mean_value_check(const ArcsineWeightedDensity& d, int k, double x, double t) {
    const Interval& I = d.interval;
    if (!(x >= I.a && x <= I.b) || !(t >= I.a && t <= I.b))
        throw std::domain_error("mean_value_check: points outside [a, b]");
    if (x == t) throw std::domain_error("mean_value_check: points must be distinct");

    const double mid = 0.5 * (x + t);
    const double derivative = k * d.g(mid) * robin_density(I, mid);

    MeanValueCheck out{};
    out.midpoint_derivative = derivative;
    if (std::abs(t - x) < 1e-9 * I.radius()) {
        // Below quadrature resolution: the difference quotient is the
        // derivative up to O(|t-x|).
        out.difference_quotient = derivative;
        out.quotient = 1.0;
        return out;
    }
    const double th_x = angle_of(I, x), th_t = angle_of(I, t);
    const double tol = std::max(5e-15, 1e-12 * std::abs(th_t - th_x));
    const double mass = mass_between_angles(d, th_x, th_t, tol); // signed with the angle order
    out.difference_quotient = k * mass / (t - x);
    out.quotient = out.difference_quotient / derivative;
    return out;
}

namespace {

std::string loc_string(const char* what, int j) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s j=%d", what, j);
    return buf;
}

struct WorstTracker {
    double margin = std::numeric_limits<double>::infinity();
    std::string location = "-";
    void offer(double m, const std::string& loc) {
        if (m < margin) {
            margin = m;
            location = loc;
        }
    }
};

} // namespace

PartitionAudit audit_partition(const DiscretizationCertificate& c) {
    PartitionAudit audit;
    const int k = c.k;
    const std::vector<double>& alpha = c.angles;
    const Interval& I = c.interval();

    // Everything below lives in the frame rescaled to [-1, 1].
    std::vector<double> t(k + 1);
    for (int j = 0; j <= k; ++j) t[j] = I.normalized(c.partition[j]);
    t[0] = -1.0;
    t[k] = 1.0;

    const double tol = 1e-9;
    auto add = [&](const std::string& name, const WorstTracker& w, double bound_scale = 1.0) {
        audit.entries.push_back(
            {name, w.margin >= -tol * std::max(1.0, std::abs(bound_scale)), w.margin, w.location});
    };

    {
        WorstTracker w;
        for (int j = 0; j + 2 <= k; ++j)
            w.offer((alpha[j + 1] - alpha[j]) - (alpha[j + 2] - alpha[j + 1]),
                    loc_string("gap", j));
        add("angle gaps decreasing", w);
    }
    {
        WorstTracker w;
        for (int j = 1; j <= k - 1; ++j)
            w.offer(1.0 / j - (alpha[j + 1] - alpha[j]) / alpha[j], loc_string("gap ratio", j));
        add("angle gap over angle <= 1/j", w);
    }
    {
        WorstTracker w;
        for (int j = 0; j + 2 <= k; ++j)
            w.offer(4.0 - (alpha[k] - alpha[j]) / (alpha[k] - alpha[j + 1]),
                    loc_string("tail ratio", j));
        add("tail angle ratio <= 4", w, 4.0);
    }
    {
        WorstTracker w;
        for (int j = 1; j <= k - 1; ++j)
            w.offer(constants::kLeftCellFactor * (1.0 + t[j]) - (1.0 + 0.5 * (t[j] + t[j + 1])),
                    loc_string("left midpoint", j));
        add("left cell midpoint factor", w, constants::kLeftCellFactor);
    }
    {
        WorstTracker w;
        for (int j = 0; j + 2 <= k; ++j)
            w.offer(9.0 * (1.0 - t[j + 1]) - (1.0 - 0.5 * (t[j] + t[j + 1])),
                    loc_string("right midpoint", j));
        add("right cell midpoint factor", w, 9.0);
    }
    {
        WorstTracker w;
        const double lo = 2.0 / (3.0 * M_PI);
        const double hi = 6.0 * constants::kMeanUpper * std::sqrt(constants::kLeftCellFactor) /
                          constants::kMeanLower;
        for (int j = 0; j + 2 <= k; ++j) {
            const double ratio = (t[j + 1] - t[j]) / (t[j + 2] - t[j + 1]);
            w.offer(ratio - lo, loc_string("cell ratio lower", j));
            w.offer(hi - ratio, loc_string("cell ratio upper", j));
        }
        add("consecutive cell ratio", w, hi);
    }
    {
        WorstTracker w;
        const double g1 = c.density.g(c.partition[1]);
        w.offer(3.0 * M_PI / (std::sqrt(2.0) * g1) - k * std::sqrt(t[1] - t[0]), "first cell");
        add("first cell width", w);
    }
    {
        WorstTracker w;
        const double gb = c.density.g(c.partition[k]);
        w.offer(M_PI / gb - k * std::sqrt(t[k] - t[k - 1]), "last cell");
        add("last cell width", w);
    }
    {
        WorstTracker w;
        const double cap = std::cbrt(12.0 * M_PI / k);
        for (int j = 0; j < k; ++j)
            w.offer(cap - (t[j + 1] - t[j]), loc_string("cell", j));
        add("max cell width", w);
    }
    {
        WorstTracker w;
        w.offer(t[k - 1], "t_{k-1}");
        add("t_{k-1} nonnegative", w);
    }
    {
        // Pole-side midpoint comparison quantified over all cell pairs.
        WorstTracker w;
        for (int j0 = 1; j0 <= k - 1; ++j0)
            for (int j = 0; j <= j0 - 1; ++j) {
                const double lhs = (1.0 + 0.5 * (t[j + 1] + t[j0])) / (1.0 + t[j + 1]);
                const double cap = M_PI * M_PI / 8.0 * (double(j0) * j0) / (double(j + 1) * (j + 1));
                w.offer(cap - lhs, loc_string("pair ending", j0));
            }
        add("pole-side midpoint factor", w);
    }

    audit.all_pass = std::all_of(audit.entries.begin(), audit.entries.end(),
                                 [](const AuditEntry& e) { return e.pass; });
    return audit;
}

namespace {

// Scan a segment (no singularities inside) and polish the best point.
double segment_max(const std::function<double(double)>& f, double lo, double hi, int scans) {
    if (!(hi > lo)) return -std::numeric_limits<double>::infinity();
    double best_x = lo, best = -std::numeric_limits<double>::infinity();
    std::vector<double> xs(scans);
    for (int i = 0; i < scans; ++i) {
        // Chebyshev-like clustering handles maxima hugging the segment ends.
        const double u = std::cos(M_PI * (i + 0.5) / scans);
        xs[i] = 0.5 * (lo + hi) - 0.5 * (hi - lo) * u;
    }
    int best_i = 0;
    for (int i = 0; i < scans; ++i) {
        const double v = f(xs[i]);
        if (v > best) {
            best = v;
            best_x = xs[i];
            best_i = i;
        }
    }
    const double bracket_lo = best_i > 0 ? xs[best_i - 1] : lo;
    const double bracket_hi = best_i + 1 < scans ? xs[best_i + 1] : hi;
    const double polished = maximize(f, bracket_lo, bracket_hi, 1e-11);
    return std::max(best, f(polished));
}

} // namespace

double observed_sup_error(const DiscretizationCertificate& c, int grid_multiplier,
                          double potential_tol) {
    const Interval& I = c.interval();
    auto f = [&](double x) { return discretization_error(c, x, potential_tol); };
    const int scans = 9 * std::max(1, grid_multiplier);

    double sup = std::max(f(I.a), f(I.b));
    double left = I.a;
    for (int j = 0; j <= c.k; ++j) {
        const double right = (j < c.k) ? c.nodes[j] : I.b;
        // Trim the node endpoints where the error dives to -inf.
        const double pad = 1e-13 * I.length();
        sup = std::max(sup, segment_max(f, left + (j > 0 ? pad : 0.0),
                                        right - (j < c.k ? pad : 0.0), scans));
        left = right;
    }
    return sup;
}

double log_weighted_sup_norm(const ExternalFieldProblem& p, const DiscretizationCertificate& c,
                             double lo, double hi) {
    // log(w(x)^k |P_k(x)|) with w^k = exp(-U^rho), i.e. the atom logs enter
    // with a plus sign.
    auto f = [&](double x) {
        double v = log_abs_Pk(c, x);
        for (const Atom& atom : p.rho.atoms) v += atom.mass * std::log(std::abs(x - atom.location));
        return v;
    };
    const int grid = std::max(64 * c.k, 4096);
    std::vector<double> xs(grid), vs(grid);
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid; ++i) {
        const double u = std::cos(M_PI * (i + 0.5) / grid);
        xs[i] = 0.5 * (lo + hi) - 0.5 * (hi - lo) * u;
        vs[i] = f(xs[i]);
        best = std::max(best, vs[i]);
    }
    best = std::max(best, std::max(f(lo), f(hi)));
    // Polish every local maximum that could still take the lead.
    for (int i = 0; i < grid; ++i) {
        const bool local_max = (i == 0 || vs[i] >= vs[i - 1]) && (i + 1 == grid || vs[i] >= vs[i + 1]);
        if (!local_max || vs[i] < best - 2.0) continue;
        const double bl = i > 0 ? xs[i - 1] : lo;
        const double bh = i + 1 < grid ? xs[i + 1] : hi;
        best = std::max(best, f(maximize(f, bl, bh, 1e-12)));
    }
    return best;
}

double log_certificate_ratio(const ExternalFieldProblem& p, const EquilibriumSolution& sol,
                             const DiscretizationCertificate& c, double x0) {
    const Interval& support = sol.support;
    if (x0 > support.a && x0 < support.b)
        throw std::domain_error("certificate_ratio: x0 must lie outside [a, b]");
    double log_num = log_abs_Pk(c, x0) - p.k * external_field_Q(p, x0);
    return log_num - log_weighted_sup_norm(p, c, support.a, support.b);
}

double certificate_ratio(const ExternalFieldProblem& p, const EquilibriumSolution& sol,
                         const DiscretizationCertificate& c, double x0) {
    return std::exp(log_certificate_ratio(p, sol, c, x0));
}

} // namespace cgpot
