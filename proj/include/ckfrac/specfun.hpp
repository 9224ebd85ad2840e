#pragma once

#include <vector>

namespace ckfrac::specfun {

// Truncation control for series evaluation.
struct SeriesControl {
    double rel_tol = 1e-14;
    int max_terms = 500;

    void validate() const;
};

enum class CoeffMode { derivative, solution };

// Gamma-ratio coefficient sequence c_0..c_N of the decomposition formula,
// computed by recurrence so that Gamma is never evaluated at a negative
// argument.
//   derivative mode: c_k = Gamma(k-1+alpha) / (Gamma(alpha-1) k!)
//   solution   mode: c_k = Gamma(k-alpha)   / (Gamma(-alpha)  k!)
struct CoeffSeq {
    double alpha;
    CoeffMode mode;
    std::vector<double> c;  // c[0..N]

    double sum() const;
};

double gamma(double x);
double log_gamma(double x);  // x > 0
double beta(double p, double q);

// |Gamma(-alpha)| for alpha in (0,1), via the reflection formula.
double abs_gamma_neg(double alpha);

CoeffSeq coeff_seq(double alpha, int N, CoeffMode mode);

// Closed form for |sum_{k=0}^N c_k| in solution mode:
// Gamma(N+1-alpha) / (alpha Gamma(N+1) |Gamma(-alpha)|).
double solution_partial_sum_magnitude(double alpha, int N);

// Two-parameter Mittag-Leffler function E_{mu,beta}(x), direct series.
// Stops once two consecutive terms fall below rel_tol times the partial sum.
double mittag_leffler(double mu, double beta, double x,
                      const SeriesControl& ctl = {});

}  // namespace ckfrac::specfun
