#include "ckfrac/specfun.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ckfrac::specfun {

void SeriesControl::validate() const {
    if (!(rel_tol > 0.0 && rel_tol < 1.0))
        throw std::invalid_argument("SeriesControl: rel_tol must be in (0,1)");
    if (max_terms < 1)
        throw std::invalid_argument("SeriesControl: max_terms must be >= 1");
}

double CoeffSeq::sum() const {
    double s = 0.0;
    for (double v : c) s += v;
    return s;
}

double gamma(double x) {
    if (!std::isfinite(x))
        throw std::domain_error("gamma: argument must be finite");
    if (x <= 0.0 && x == std::floor(x)) {
        std::ostringstream os;
        os << "gamma: pole at non-positive integer " << x;
        throw std::domain_error(os.str());
    }
    if (x > 171.7)
        throw std::overflow_error("gamma: argument above representable range");
    return std::tgamma(x);
}

double log_gamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("log_gamma: argument must be positive");
    return std::lgamma(x);
}

double beta(double p, double q) {
    if (!(p > 0.0) || !(q > 0.0))
        throw std::domain_error("beta: arguments must be positive");
    return std::exp(log_gamma(p) + log_gamma(q) - log_gamma(p + q));
}

double abs_gamma_neg(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("abs_gamma_neg: alpha must be in (0,1)");
    // Gamma(-alpha) Gamma(1+alpha) = -pi / sin(pi alpha)
    return M_PI / (std::sin(M_PI * alpha) * gamma(1.0 + alpha));
}

CoeffSeq coeff_seq(double alpha, int N, CoeffMode mode) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("coeff_seq: alpha must be in (0,1)");
    if (N < 1)
        throw std::invalid_argument("coeff_seq: N must be >= 1");

    CoeffSeq seq{alpha, mode, {}};
    seq.c.resize(static_cast<size_t>(N) + 1);
    seq.c[0] = 1.0;
    if (mode == CoeffMode::derivative) {
        seq.c[1] = alpha - 1.0;
        for (int k = 2; k <= N; ++k)
            seq.c[k] = seq.c[k - 1] * (k - 2 + alpha) / k;
    } else {
        seq.c[1] = -alpha;
        for (int k = 2; k <= N; ++k)
            seq.c[k] = seq.c[k - 1] * (k - 1 - alpha) / k;
    }
    return seq;
}

double solution_partial_sum_magnitude(double alpha, int N) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument(
            "solution_partial_sum_magnitude: alpha must be in (0,1)");
    if (N < 1)
        throw std::invalid_argument(
            "solution_partial_sum_magnitude: N must be >= 1");
    double lg = log_gamma(N + 1.0 - alpha) - log_gamma(N + 1.0);
    return std::exp(lg) / (alpha * abs_gamma_neg(alpha));
}

double mittag_leffler(double mu, double beta, double x,
                      const SeriesControl& ctl) {
    if (!(mu > 0.0) || !(beta > 0.0))
        throw std::domain_error("mittag_leffler: parameters must be positive");
    ctl.validate();

    double sum = 0.0;
    int small_run = 0;
    for (int k = 0; k < ctl.max_terms; ++k) {
        double lg = log_gamma(mu * k + beta);
        double term;
        if (k == 0) {
            term = std::exp(-lg);
        } else {
            // log-space keeps x^k from overflowing before the Gamma cancels it
            term = std::exp(k * std::log(std::abs(x)) - lg);
            if (x < 0.0 && (k % 2)) term = -term;
        }
        sum += term;
        if (std::abs(term) <= ctl.rel_tol * std::abs(sum)) {
            if (++small_run >= 2) return sum;
        } else {
            small_run = 0;
        }
    }
    std::ostringstream os;
    os << "mittag_leffler: series did not converge within " << ctl.max_terms
       << " terms (mu=" << mu << ", beta=" << beta << ", x=" << x << ")";
    throw std::runtime_error(os.str());
}

}  // namespace ckfrac::specfun
