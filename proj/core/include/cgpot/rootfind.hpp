#pragma once

#include <functional>

namespace cgpot {

/// Brent's method on a bracketing interval: f(lo) and f(hi) must have
/// opposite signs (or one of them be zero). Converges to |x - root| below
/// xtol_abs + xtol_rel * |x|. Throws convergence_error on a bad bracket.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double xtol_abs = 1e-14, double xtol_rel = 1e-14, int max_iter = 200);

/// Brent-style derivative-free maximizer of f on [lo, hi] (unimodal f
/// assumed). Returns the abscissa of the maximum.
double maximize(const std::function<double(double)>& f, double lo, double hi,
                double xtol = 1e-11, int max_iter = 200);

} // namespace cgpot
