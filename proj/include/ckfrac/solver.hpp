#pragma once

#include <functional>
#include <vector>

#include "ckfrac/types.hpp"

namespace ckfrac::solve {

struct CauchyProblem {
    std::function<double(double, double)> f;  // (t, x) -> dx
    OrderParams p;
    Interval iv;
    double x_a;
    double L;  // Lipschitz constant of f in x, user-supplied

    void validate() const;
};

struct PicardConfig {
    double contraction_target = 0.5;
    double tol = 1e-10;
    int max_iter = 200;
    int grid_per_subinterval = 128;

    void validate() const;
};

struct DecompSolveConfig {
    int N = 15;
    double step = 1e-3;
    double delta_start = 0.0;  // 0 means 1e-6 * (b - a)

    void validate(const Interval& iv) const;
};

// Per-subinterval bookkeeping from the Picard chain.
struct PicardStats {
    std::vector<double> boundaries;   // t_0 = a, ..., t_l = b
    std::vector<double> contraction;  // L rho^{-a} (t_k^r - t_{k-1}^r)^a / Gamma(1+a)
    std::vector<int> iterations;
};

// Picard iteration on the equivalent Volterra equation, chained over
// subintervals chosen so the integral operator contracts on each.
SolutionGrid solve_picard(const CauchyProblem& prob,
                          const PicardConfig& cfg = {},
                          PicardStats* stats = nullptr);

// Decomposition into N+1 ODEs integrated with classical RK4 on a fixed
// output grid, started at a + delta to sidestep the degenerate coefficient
// at t = a. Near the left endpoint the fixed step is subdivided to keep RK4
// inside its stability region for the system's fast decaying mode (see the
// implementation); away from it the nominal step is used unchanged.
SolutionGrid solve_decomposition(const CauchyProblem& prob,
                                 const DecompSolveConfig& cfg);

// Product-trapezoidal discretization of the Volterra equation; the
// independent oracle for the other two solvers.
SolutionGrid solve_reference(const CauchyProblem& prob, int nodes);

// Strict upper bound (a^rho + rho (Gamma(1+alpha)/L)^{1/alpha})^{1/rho} on
// the interval where the decomposition solutions are guaranteed to converge,
// clamped to b.
double convergence_horizon(const CauchyProblem& prob);

struct StudyRow {
    int N;
    double sup_error;
};

struct StudyResult {
    std::vector<StudyRow> rows;
    double fitted_slope;  // least-squares slope of log(err) vs log(N)
};

// Sup error over [a, min(b, horizon)] per truncation order. Baseline is the
// exact callback when supplied, otherwise solve_reference at
// 64 * max(Ns) nodes.
StudyResult convergence_study(const CauchyProblem& prob,
                              const std::function<double(double)>& exact,
                              const std::vector<int>& Ns,
                              const DecompSolveConfig& tmpl);

// Piecewise-linear interpolation on a solution grid.
double interpolate(const SolutionGrid& g, double t);

double fit_loglog_slope(const std::vector<StudyRow>& rows);

}  // namespace ckfrac::solve
