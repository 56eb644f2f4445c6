#pragma once

#include "cgpot/equilibrium.hpp"

#include <vector>

namespace cgpot {

/// Arithmetic used by a CG run or an oracle evaluation.
struct Precision {
    enum class Kind { Double, Extended };
    Kind kind = Kind::Double;
    int digits = 64; // decimal digits of the Extended scalar

    static Precision dbl() { return {Kind::Double, 0}; }
    static Precision extended(int digits10 = 64) { return {Kind::Extended, digits10}; }
};

/// A x = c with A = diag(eigenvalues), start vector 0.
struct DiagonalSystem {
    std::vector<double> eigenvalues; // all > 0
    std::vector<double> rhs;         // empty means (1, ..., 1)^T

    void validate() const;
};

/// Relative energy-norm error history e_0 = 1, e_1, ..., with logs kept
/// separately so tails below double range stay comparable.
struct ErrorCurve {
    std::vector<double> values;
    std::vector<double> log_values; // natural log; -inf once exactly converged
    bool exact_convergence = false;
    int terminated_at = -1; // first step with zero residual, -1 if none
    Precision precision;
};

/// Conjugate gradients on the diagonal system, error measured exactly
/// against A^{-1} c at every step.
ErrorCurve run_cg(const DiagonalSystem& sys, int n_max, Precision prec = Precision::dbl());

/// E_n(Lambda) = min over q in Pi_n with q(0) = 1 of max_j |q(lambda_j)|,
/// by a discrete weighted exchange algorithm (enumeration fallback for
/// very small sets). Small instances only: |lambdas| <= 40, n <= 20.
double minimax_discrete_oracle(std::vector<double> lambdas, int n);

/// Exact relative CG energy error for rhs = ones, x0 = 0, via orthogonal
/// polynomials of the discrete measure sum of delta_{lambda_j}/lambda_j
/// (Stieltjes three-term recurrence). Entry n of the result is e_n.
std::vector<double> weighted_error_curve(const std::vector<double>& lambdas, int n_max,
                                         Precision prec = Precision::dbl());

/// Single value of weighted_error_curve.
double weighted_error_oracle(const std::vector<double>& lambdas, int n,
                             Precision prec = Precision::dbl());

struct CertificateValue {
    double value;
    double log_value;
};

/// Attained value of the constructed certificate polynomial for the
/// spectrum's d smallest eigenvalues prescribed as roots: an upper bound on
/// E_n([lambda_{d+1}, b]) lying within exp(observed sup) of the Green
/// function expression exp(-n g(0, inf) + sum_j g(0, lambda_j)).
CertificateValue en_with_outliers_certificate(const ExternalFieldProblem& p, int n, int d,
                                              const std::vector<double>& lambdas);

} // namespace cgpot
