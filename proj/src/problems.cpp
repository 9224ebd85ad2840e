#include "ckfrac/problems.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ckfrac/specfun.hpp"

namespace ckfrac::problems {

Id parse_id(const std::string& name) {
    if (name == "example1") return Id::example1;
    if (name == "example2") return Id::example2;
    if (name == "example3") return Id::example3;
    throw std::invalid_argument("unknown problem: " + name);
}

namespace {

// x(t) = (t^rho - a^rho)^2 with its closed-form CK derivative
// 2 rho^alpha / Gamma(3-alpha) (t^rho - a^rho)^{2-alpha}.
Problem power_problem(Id id, const OrderParams& p, Interval iv) {
    Problem pr{};
    pr.id = id;
    pr.default_iv = iv;
    const double a = iv.a, rho = p.rho, alpha = p.alpha;
    const double za = std::pow(a, rho);

    pr.function.value = [za, rho](double t) {
        double d = std::pow(t, rho) - za;
        return d * d;
    };
    pr.function.deriv1 = [za, rho](double t) {
        return 2.0 * rho * std::pow(t, rho - 1.0) * (std::pow(t, rho) - za);
    };
    pr.function.deriv2 = [za, rho](double t) {
        return 2.0 * rho * (rho - 1.0) * std::pow(t, rho - 2.0) *
                   (std::pow(t, rho) - za) +
               2.0 * rho * rho * std::pow(t, 2.0 * rho - 2.0);
    };
    const double dfac = 2.0 * std::pow(rho, alpha) / specfun::gamma(3.0 - alpha);
    pr.exact_derivative = [za, rho, alpha, dfac](double t) {
        return dfac * std::pow(std::pow(t, rho) - za, 2.0 - alpha);
    };
    const double ifac = 2.0 * std::pow(rho, -alpha) / specfun::gamma(3.0 + alpha);
    pr.exact_integral = [za, rho, alpha, ifac](double t) {
        return ifac * std::pow(std::pow(t, rho) - za, 2.0 + alpha);
    };

    if (id == Id::example2) {
        auto exact = pr.function.value;
        auto dexact = pr.exact_derivative;
        pr.cauchy.f = [exact, dexact](double t, double x) {
            return x + dexact(t) - exact(t);
        };
        pr.cauchy.p = p;
        pr.cauchy.iv = iv;
        pr.cauchy.x_a = 0.0;
        pr.cauchy.L = 1.0;
        pr.has_cauchy = true;
    }
    return pr;
}

// Series for d^m/dt^m E_alpha(t^{rho alpha}), m = 0,1,2.
double ml_power_series(double alpha, double rho, double t, int m) {
    const double e = rho * alpha;
    if (t == 0.0) {
        if (m == 0) return 1.0;
        // leading term ~ t^{e-m}; only meaningful when it vanishes
        return (e > m) ? 0.0 : std::numeric_limits<double>::infinity();
    }
    double sum = (m == 0) ? 1.0 : 0.0;
    const double lt = std::log(t);
    for (int k = 1; k < 500; ++k) {
        double fac = 1.0;
        for (int j = 0; j < m; ++j) fac *= e * k - j;
        double term = fac * std::exp((e * k - m) * lt -
                                     specfun::log_gamma(alpha * k + 1.0));
        sum += term;
        if (std::abs(term) <= 1e-15 * std::abs(sum) && k > 2) break;
    }
    return sum;
}

Problem ml_problem(const OrderParams& p, Interval iv) {
    Problem pr{};
    pr.id = Id::example3;
    pr.default_iv = iv;
    const double alpha = p.alpha, rho = p.rho;

    pr.function.value = [alpha, rho](double t) {
        return ml_power_series(alpha, rho, t, 0);
    };
    pr.function.deriv1 = [alpha, rho](double t) {
        return ml_power_series(alpha, rho, t, 1);
    };
    pr.function.deriv2 = [alpha, rho](double t) {
        return ml_power_series(alpha, rho, t, 2);
    };
    const double ra = std::pow(rho, alpha);
    auto exact = pr.function.value;
    pr.exact_derivative = [ra, exact](double t) { return ra * exact(t); };

    pr.cauchy.f = [ra](double, double x) { return ra * x; };
    pr.cauchy.p = p;
    pr.cauchy.iv = iv;
    pr.cauchy.x_a = 1.0;
    pr.cauchy.L = ra;
    pr.has_cauchy = true;
    return pr;
}

}  // namespace

Problem make(Id id, const OrderParams& p, std::optional<Interval> iv) {
    p.validate();
    switch (id) {
        case Id::example1:
            return power_problem(id, p, iv.value_or(Interval{1.0, 2.0}));
        case Id::example2:
            return power_problem(id, p, iv.value_or(Interval{1.0, 2.0}));
        case Id::example3:
            return ml_problem(p, iv.value_or(Interval{0.0, 1.0}));
    }
    throw std::logic_error("problems::make: unreachable");
}

}  // namespace ckfrac::problems
