#include "ckfrac/decomposition.hpp"

#include <cmath>
#include <stdexcept>

#include "ckfrac/quadrature.hpp"

namespace ckfrac::decomp {

DecompCoeffs decomp_coeffs(const OrderParams& p, int N, CoeffMode mode) {
    p.validate();
    if (N < 1) throw std::invalid_argument("decomp_coeffs: N must be >= 1");

    auto seq = specfun::coeff_seq(p.alpha, N, mode);
    DecompCoeffs dc{N, mode, p.alpha, p.rho, 0.0, {}};
    double front, bfront;
    if (mode == CoeffMode::derivative) {
        double g2 = specfun::gamma(2.0 - p.alpha);
        front = std::pow(p.rho, p.alpha - 1.0) / g2;
        bfront = std::pow(p.rho, p.alpha) / g2;
    } else {
        double g1 = specfun::gamma(1.0 + p.alpha);
        front = std::pow(p.rho, -p.alpha) / g1;
        bfront = std::pow(p.rho, 1.0 - p.alpha) / g1;
    }
    dc.A = front * seq.sum();
    dc.B.resize(static_cast<size_t>(N));
    for (int k = 1; k <= N; ++k) dc.B[k - 1] = bfront * seq.c[k] * k;
    return dc;
}

std::vector<double> moments(const std::function<double(double)>& xprime,
                            const OrderParams& p, const Interval& iv, double t,
                            int N, Side side, const QuadSpec& q) {
    p.validate();
    iv.validate();
    if (N < 1) throw std::invalid_argument("moments: N must be >= 1");
    if (!(t >= iv.a && t <= iv.b))
        throw std::invalid_argument("moments: t outside interval");

    std::vector<double> out(static_cast<size_t>(N), 0.0);
    const double base = (side == Side::left) ? std::pow(iv.a, p.rho)
                                             : std::pow(iv.b, p.rho);
    const double delta = (side == Side::left) ? std::pow(t, p.rho) - base
                                              : base - std::pow(t, p.rho);
    if (delta <= 0.0) return out;

    // In u = |tau^rho - base| / delta the moment becomes
    //   V_k = (delta^k / rho) int_0^1 u^{k-1} tau(u)^{1-rho} x'(tau(u)) du,
    // and v = u^k flattens the peak at u = 1 for large k.
    auto tau_of = [&](double u) {
        double zr = (side == Side::left) ? base + u * delta : base - u * delta;
        return std::pow(zr, 1.0 / p.rho);
    };
    auto g = [&](double u) {
        double tau = tau_of(u);
        return std::pow(tau, 1.0 - p.rho) * xprime(tau);
    };
    for (int k = 1; k <= N; ++k) {
        auto integrand = [&](double v) { return g(std::pow(v, 1.0 / k)); };
        double core = quad::unit_refined(integrand, q);
        out[k - 1] = std::pow(delta, k) / (p.rho * k) * core;
    }
    return out;
}

namespace {

double bound_formula(double Mt, const OrderParams& p, double delta,
                     double dist, int N, CoeffMode mode) {
    const double a = p.alpha;
    if (mode == CoeffMode::derivative) {
        return Mt * std::exp((1.0 - a) * (1.0 - a) + 1.0 - a) *
               std::pow(p.rho, a - 1.0) /
               (std::pow(double(N), 1.0 - a) * (1.0 - a) *
                specfun::gamma(2.0 - a)) *
               std::pow(delta, 1.0 - a) * dist;
    }
    return Mt * std::exp(a * a + a) * std::pow(p.rho, -a) /
           (a * std::pow(double(N), a) * specfun::gamma(1.0 + a)) *
           std::pow(delta, a) * dist;
}

}  // namespace

double error_bound(double Mt, const OrderParams& p, const Interval& iv,
                   double t, int N, CoeffMode mode) {
    p.validate();
    iv.validate();
    if (Mt < 0.0) throw std::invalid_argument("error_bound: Mt must be >= 0");
    if (N < 1) throw std::invalid_argument("error_bound: N must be >= 1");
    const double delta = std::pow(t, p.rho) - std::pow(iv.a, p.rho);
    return bound_formula(Mt, p, delta, t - iv.a, N, mode);
}

double derivative_bound_constant(const Func1& x, const OrderParams& p,
                                 const Interval& iv, double t, Side side) {
    if (!x.has_deriv1())
        throw std::invalid_argument("derivative_bound_constant: deriv1 missing");
    const double lo = (side == Side::left) ? iv.a : t;
    const double hi = (side == Side::left) ? t : iv.b;
    if (!(hi > lo)) return 0.0;

    const int n = 64;
    const double h = 1e-5 * iv.width();
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
        double tau = lo + (hi - lo) * (i + 0.5) / n;
        double d;
        if (x.has_deriv2()) {
            d = (1.0 - p.rho) * std::pow(tau, -p.rho) * x.deriv1(tau) +
                std::pow(tau, 1.0 - p.rho) * x.deriv2(tau);
        } else {
            auto g = [&](double s) {
                return std::pow(s, 1.0 - p.rho) * x.deriv1(s);
            };
            d = (g(tau + h) - g(tau - h)) / (2.0 * h);
        }
        best = std::max(best, std::abs(d));
    }
    return best;
}

ApproxResult approx_derivative(const Func1& x, const OrderParams& p,
                               const Interval& iv, double t, int N, Side side,
                               const QuadSpec& q) {
    p.validate();
    iv.validate();
    if (N < 1) throw std::invalid_argument("approx_derivative: N must be >= 1");
    if (!x.has_deriv1())
        throw std::invalid_argument("approx_derivative: x.deriv1 missing");
    if (!(t >= iv.a && t <= iv.b))
        throw std::invalid_argument("approx_derivative: t outside interval");

    const double base = (side == Side::left) ? std::pow(iv.a, p.rho)
                                             : std::pow(iv.b, p.rho);
    const double delta = (side == Side::left) ? std::pow(t, p.rho) - base
                                              : base - std::pow(t, p.rho);
    const double dist = (side == Side::left) ? t - iv.a : iv.b - t;
    double Mt = derivative_bound_constant(x, p, iv, t, side);
    double bound = bound_formula(Mt, p, delta, dist, N, CoeffMode::derivative);
    if (delta < 1e-10) return {0.0, bound};  // V_k = O(delta^k) dominates

    auto dc = decomp_coeffs(p, N, CoeffMode::derivative);
    auto V = moments(x.deriv1, p, iv, t, N, side, q);

    double lead = dc.A * std::pow(delta, 1.0 - p.alpha) *
                  std::pow(t, 1.0 - p.rho) * x.deriv1(t);
    double sum = 0.0;
    const double logd = std::log(delta);
    for (int k = 1; k <= N; ++k) {
        double bv = dc.B[k - 1] * V[k - 1];
        if (bv == 0.0) continue;
        // log-space product keeps delta^{1-alpha-k} from overflowing
        double mag = std::exp(std::log(std::abs(bv)) +
                              (1.0 - p.alpha - k) * logd);
        sum += (bv > 0.0 ? mag : -mag);
    }
    double value = (side == Side::left) ? lead - sum : -lead + sum;
    return {value, bound};
}

}  // namespace ckfrac::decomp
