#include "cgpot/cg.hpp"
#include "cgpot/bigfloat.hpp"
#include "cgpot/discretizer.hpp"
#include "cgpot/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace cgpot {

void DiagonalSystem::validate() const {
    if (eigenvalues.empty()) throw std::domain_error("DiagonalSystem: empty spectrum");
    for (double l : eigenvalues)
        if (!(l > 0.0)) throw std::domain_error("DiagonalSystem: eigenvalues must be positive");
    if (!rhs.empty() && rhs.size() != eigenvalues.size())
        throw std::domain_error("DiagonalSystem: rhs size mismatch");
}

namespace {

template <typename Real>
void run_cg_impl(const DiagonalSystem& sys, int n_max, ErrorCurve& out) {
    const size_t N = sys.eigenvalues.size();
    std::vector<Real> lam(N), x(N), r(N), p(N), xstar(N);
    Real err_den = 0;
    for (size_t i = 0; i < N; ++i) {
        lam[i] = sys.eigenvalues[i];
        const Real c = sys.rhs.empty() ? Real(1) : Real(sys.rhs[i]);
        x[i] = 0;
        r[i] = c;
        p[i] = c;
        xstar[i] = c / lam[i];
        err_den += lam[i] * xstar[i] * xstar[i];
    }

    auto record = [&](const Real& num) {
        using std::sqrt;
        const Real e = sqrt(num / err_den);
        const double ed = static_cast<double>(e);
        out.values.push_back(ed);
        if (e > 0) {
            using std::log;
            out.log_values.push_back(static_cast<double>(log(e)));
        } else {
            out.log_values.push_back(-std::numeric_limits<double>::infinity());
        }
    };

    record(err_den); // e_0 = 1

    Real rr = 0;
    for (size_t i = 0; i < N; ++i) rr += r[i] * r[i];

    for (int n = 1; n <= n_max; ++n) {
        if (rr == 0) {
            out.exact_convergence = true;
            out.terminated_at = n - 1;
            break;
        }
        Real pAp = 0;
        for (size_t i = 0; i < N; ++i) pAp += p[i] * lam[i] * p[i];
        if (pAp == 0) {
            out.exact_convergence = true;
            out.terminated_at = n - 1;
            break;
        }
        const Real alpha = rr / pAp;
        Real rr_next = 0;
        for (size_t i = 0; i < N; ++i) {
            x[i] += alpha * p[i];
            r[i] -= alpha * lam[i] * p[i];
            rr_next += r[i] * r[i];
        }
        Real num = 0;
        for (size_t i = 0; i < N; ++i) {
            const Real diff = x[i] - xstar[i];
            num += lam[i] * diff * diff;
        }
        record(num);
        const Real beta = rr_next / rr;
        for (size_t i = 0; i < N; ++i) p[i] = r[i] + beta * p[i];
        rr = rr_next;
        if (num == 0) {
            out.exact_convergence = true;
            out.terminated_at = n;
            break;
        }
    }
}

} // namespace

ErrorCurve run_cg(const DiagonalSystem& sys, int n_max, Precision prec) {
    sys.validate();
    if (n_max > static_cast<int>(sys.eigenvalues.size()))
        throw std::domain_error("run_cg: n_max exceeds the system dimension");
    ErrorCurve out;
    out.precision = prec;
    if (prec.kind == Precision::Kind::Double) {
        run_cg_impl<double>(sys, n_max, out);
    } else {
        PrecisionScope scope(prec.digits);
        run_cg_impl<BigFloat>(sys, n_max, out);
    }
    return out;
}

namespace {

template <typename Real>
std::vector<double> weighted_error_curve_impl(const std::vector<double>& lambdas, int n_max) {
    const size_t N = lambdas.size();
    std::vector<Real> lam(N), w(N);
    Real total = 0;
    for (size_t i = 0; i < N; ++i) {
        lam[i] = lambdas[i];
        w[i] = Real(1) / lam[i];
        total += w[i];
    }
    for (size_t i = 0; i < N; ++i) w[i] /= total;

    // Stieltjes procedure for the orthonormal polynomials of the discrete
    // measure sum w_j delta_{lambda_j}; the minimum of sum w q^2 over
    // q(0) = 1, deg q <= n is 1 / sum_{i<=n} p_i(0)^2.
    std::vector<Real> p_prev(N, Real(0)), p_cur(N, Real(1)), scratch(N);
    Real q_prev = 0, q_cur = 1;
    Real b_prev = 0;
    Real kernel = q_cur * q_cur;

    std::vector<double> errors;
    errors.reserve(n_max + 1);
    using std::sqrt;
    errors.push_back(1.0);

    bool terminated = false;
    for (int n = 1; n <= n_max; ++n) {
        if (terminated || static_cast<size_t>(n) >= N) {
            errors.push_back(0.0);
            continue;
        }
        Real a = 0;
        for (size_t i = 0; i < N; ++i) a += w[i] * lam[i] * p_cur[i] * p_cur[i];
        Real norm2 = 0;
        for (size_t i = 0; i < N; ++i) {
            scratch[i] = (lam[i] - a) * p_cur[i] - b_prev * p_prev[i];
            norm2 += w[i] * scratch[i] * scratch[i];
        }
        if (norm2 == 0) {
            // Recurrence breakdown: the measure has been exhausted (n >= N).
            terminated = true;
            errors.push_back(0.0);
            continue;
        }
        const Real b = sqrt(norm2);
        for (size_t i = 0; i < N; ++i) {
            const Real next = scratch[i] / b;
            p_prev[i] = p_cur[i];
            p_cur[i] = next;
        }
        const Real q_next = ((Real(0) - a) * q_cur - b_prev * q_prev) / b;
        q_prev = q_cur;
        q_cur = q_next;
        b_prev = b;
        kernel += q_cur * q_cur;
        errors.push_back(static_cast<double>(Real(1) / sqrt(kernel)));
    }
    return errors;
}

} // namespace

std::vector<double> weighted_error_curve(const std::vector<double>& lambdas, int n_max,
                                         Precision prec) {
    for (double l : lambdas)
        if (!(l > 0.0)) throw std::domain_error("weighted_error_curve: eigenvalues must be > 0");
    if (prec.kind == Precision::Kind::Double)
        return weighted_error_curve_impl<double>(lambdas, n_max);
    PrecisionScope scope(prec.digits);
    return weighted_error_curve_impl<BigFloat>(lambdas, n_max);
}

double weighted_error_oracle(const std::vector<double>& lambdas, int n, Precision prec) {
    if (n < 0) throw std::domain_error("weighted_error_oracle: n must be >= 0");
    return weighted_error_curve(lambdas, n, prec).at(n);
}

namespace {

// Weighted discrete Chebyshev approximation: the minimax problem
// min over q in Pi_n, q(0) = 1 of max |q(lambda_j)| rewritten with
// q(x) = 1 - x p(x) as a weight-x approximation of 1/x by p in Pi_{n-1}.
// One-point exchange on references of n+1 points; the leveled reference
// error h comes from divided differences in barycentric form.

struct LevelResult {
    double h = 0.0;            // signed leveled error
    std::vector<double> vals;  // interpolation values f_i - sigma_i h / u_i
};

LevelResult level_on_reference(const std::vector<double>& xs, const std::vector<int>& ref) {
    const int m = static_cast<int>(ref.size());
    std::vector<double> omega(m, 1.0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j) omega[i] /= (xs[ref[i]] - xs[ref[j]]);
    double num = 0.0, den = 0.0;
    for (int i = 0; i < m; ++i) {
        const double x = xs[ref[i]];
        const double sign = (i % 2 == 0) ? 1.0 : -1.0;
        num += omega[i] / x;        // divided difference of f = 1/x
        den += omega[i] * sign / x; // divided difference of sigma / u, u = x
    }
    LevelResult out;
    out.h = num / den;
    out.vals.resize(m);
    for (int i = 0; i < m; ++i) {
        const double x = xs[ref[i]];
        const double sign = (i % 2 == 0) ? 1.0 : -1.0;
        out.vals[i] = 1.0 / x - sign * out.h / x;
    }
    return out;
}

// Error u(x)(f(x) - p(x)) with p the barycentric interpolant on the reference.
double exchange_error_at(const std::vector<double>& xs, const std::vector<int>& ref,
                         const LevelResult& lev, int idx) {
    const int m = static_cast<int>(ref.size());
    for (int i = 0; i < m; ++i)
        if (ref[i] == idx) return (i % 2 == 0 ? lev.h : -lev.h);
    const double x = xs[idx];
    double num = 0.0, den = 0.0;
    for (int i = 0; i < m; ++i) {
        const double w = 1.0 / (x - xs[ref[i]]);
        double omega = 1.0;
        for (int j = 0; j < m; ++j)
            if (i != j) omega /= (xs[ref[i]] - xs[ref[j]]);
        num += omega * w * lev.vals[i];
        den += omega * w;
    }
    const double p = num / den;
    return x * (1.0 / x - p);
}

double enumerate_minimax(const std::vector<double>& xs, int n) {
    // de la Vallee Poussin: the minimax value is the largest leveled |h|
    // over all references of n+1 points.
    const int M = static_cast<int>(xs.size());
    std::vector<int> ref(n + 1);
    std::vector<int> idx(n + 1);
    for (int i = 0; i <= n; ++i) idx[i] = i;
    double best = 0.0;
    while (true) {
        const LevelResult lev = level_on_reference(xs, idx);
        best = std::max(best, std::abs(lev.h));
        int pos = n;
        while (pos >= 0 && idx[pos] == M - 1 - (n - pos)) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i <= n; ++i) idx[i] = idx[i - 1] + 1;
    }
    return best;
}

} // namespace

double minimax_discrete_oracle(std::vector<double> lambdas, int n) {
    for (double l : lambdas)
        if (!(l > 0.0)) throw std::domain_error("minimax oracle: eigenvalues must be > 0");
    std::sort(lambdas.begin(), lambdas.end());
    lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());
    const int M = static_cast<int>(lambdas.size());
    if (n < 0) throw std::domain_error("minimax oracle: n must be >= 0");
    if (n >= M) return 0.0;
    if (n == 0) return 1.0;
    if (M > 40 || n > 20)
        throw std::domain_error("minimax oracle: instance beyond the supported size caps");

    // Initial reference: n+1 indices spread across the set.
    std::vector<int> ref(n + 1);
    for (int i = 0; i <= n; ++i)
        ref[i] = static_cast<int>(std::lround(double(i) * (M - 1) / n));
    for (int i = 1; i <= n; ++i) ref[i] = std::max(ref[i], ref[i - 1] + 1);

    for (int iter = 0; iter < 400; ++iter) {
        const LevelResult lev = level_on_reference(lambdas, ref);
        double worst = 0.0;
        int worst_idx = -1;
        for (int j = 0; j < M; ++j) {
            const double e = std::abs(exchange_error_at(lambdas, ref, lev, j));
            if (e > worst) {
                worst = e;
                worst_idx = j;
            }
        }
        if (worst <= std::abs(lev.h) * (1.0 + 1e-12) + 1e-300) return worst;

        // Single-point exchange keeping alternation.
        const double e_new = exchange_error_at(lambdas, ref, lev, worst_idx);
        const int sign_new = e_new >= 0.0 ? 1 : -1;
        auto sign_at = [&](int i) {
            return ((i % 2 == 0) ? 1 : -1) * (lev.h >= 0.0 ? 1 : -1);
        };
        if (worst_idx < ref.front()) {
            if (sign_new == sign_at(0)) {
                ref.front() = worst_idx;
            } else {
                ref.pop_back();
                ref.insert(ref.begin(), worst_idx);
            }
        } else if (worst_idx > ref.back()) {
            const int m = static_cast<int>(ref.size());
            if (sign_new == sign_at(m - 1)) {
                ref.back() = worst_idx;
            } else {
                ref.erase(ref.begin());
                ref.push_back(worst_idx);
            }
        } else {
            for (int i = 0; i + 1 < static_cast<int>(ref.size()); ++i) {
                if (worst_idx > ref[i] && worst_idx < ref[i + 1]) {
                    if (sign_new == sign_at(i)) ref[i] = worst_idx;
                    else ref[i + 1] = worst_idx;
                    break;
                }
            }
        }
    }

    if (M <= 15) return enumerate_minimax(lambdas, n);
    throw convergence_error("minimax oracle: exchange failed to settle");
}

CertificateValue en_with_outliers_certificate(const ExternalFieldProblem& p, int n, int d,
                                              const std::vector<double>& lambdas) {
    if (!(n > d + 1)) throw std::domain_error("en_with_outliers_certificate: need n > d + 1");
    if (p.k != n - d)
        throw std::domain_error("en_with_outliers_certificate: problem degree must equal n - d");
    if (d > static_cast<int>(lambdas.size()) || std::abs(p.rho.total_mass() - d) > 1e-9)
        throw std::domain_error("en_with_outliers_certificate: rho must carry d unit atoms");

    const EquilibriumSolution sol = solve_equilibrium(p);
    const DiscretizationCertificate cert = build_partition(sol.density_g, p.k);

    // Norm over the full comparison interval [lambda_{d+1}, b].
    const double log_sup = log_weighted_sup_norm(p, cert, p.alpha(), p.b());
    const double log_at_zero = log_abs_Pk(cert, 0.0) - p.k * external_field_Q(p, 0.0);
    const double log_value = log_sup - log_at_zero;
    return {std::exp(log_value), log_value};
}

} // namespace cgpot
