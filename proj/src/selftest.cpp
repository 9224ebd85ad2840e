#include "ckfrac/selftest.hpp"

#include <cmath>
#include <functional>

#include "ckfrac/decomposition.hpp"
#include "ckfrac/grid_eval.hpp"
#include "ckfrac/operators.hpp"
#include "ckfrac/problems.hpp"
#include "ckfrac/specfun.hpp"

namespace ckfrac::selftest {

namespace {

bool check(std::ostream& os, const char* name, bool ok) {
    os << (ok ? "ok   " : "FAIL ") << name << "\n";
    return ok;
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

bool run(std::ostream& os) {
    bool all = true;
    namespace sf = specfun;

    all &= check(os, "gamma spot values",
                 close(sf::gamma(0.5), std::sqrt(M_PI), 1e-14) &&
                     close(sf::gamma(5.0), 24.0, 1e-12));
    all &= check(os, "beta(0.5,0.5) = pi", close(sf::beta(0.5, 0.5), M_PI, 1e-13));

    {
        auto seq = sf::coeff_seq(0.3, 10, sf::CoeffMode::solution);
        double lhs = std::abs(seq.sum());
        double rhs = sf::solution_partial_sum_magnitude(0.3, 10);
        all &= check(os, "solution partial-sum identity",
                     close(lhs, rhs, 1e-12 * rhs));
    }
    all &= check(os, "mittag_leffler(1,1,x) = exp(x)",
                 close(sf::mittag_leffler(1, 1, 2.5), std::exp(2.5),
                       1e-12 * std::exp(2.5)));

    OrderParams p{0.5, 0.6};
    Interval iv{1.0, 2.0};
    {
        // scaled power ((t^rho-a^rho)/rho)^2 against the closed form
        Func1 x;
        double rho = p.rho, za = 1.0;
        x.value = [rho, za](double t) {
            double d = (std::pow(t, rho) - za) / rho;
            return d * d;
        };
        x.deriv1 = [rho, za](double t) {
            return 2.0 * (std::pow(t, rho) - za) / rho * std::pow(t, rho - 1.0);
        };
        bool ok = true;
        for (double t : {1.3, 1.7, 2.0}) {
            double num = ops::ck_derivative(x, p, iv, t, Side::left);
            double ref = ops::power_closed_form(2.0, p, iv, t, Side::left);
            ok = ok && close(num, ref, 1e-8 * std::abs(ref));
        }
        all &= check(os, "closed-form power agreement", ok);
        all &= check(os, "endpoint vanishing",
                     ops::ck_derivative(x, p, iv, iv.a, Side::left) == 0.0);
    }
    {
        auto pr = problems::make(problems::Id::example1, p);
        auto V = decomp::moments(pr.function.deriv1, p, iv, 1.8, 1, Side::left);
        double ref = pr.function.value(1.8) - pr.function.value(iv.a);
        all &= check(os, "V_1 = x - x(a)", close(V[0], ref, 1e-10));

        auto ts = grid::linspace(iv.a, iv.b, 21);
        auto par = grid::approx_derivative(pr.function, p, iv, ts, 5, Side::left);
        auto ser =
            grid::approx_derivative_serial(pr.function, p, iv, ts, 5, Side::left);
        all &= check(os, "parallel grid matches serial", par == ser);
    }
    {
        Func1 x;
        x.value = [](double t) { return std::pow(t, 1.2) + 2.0; };
        x.deriv1 = [](double t) { return 1.2 * std::pow(t, 0.2); };
        auto y = ops::integral_as_func(x, p, iv, QuadSpec{16, 16});
        double got = ops::ck_derivative(y, p, iv, 1.6, Side::left, QuadSpec{16, 16});
        all &= check(os, "inversion D(I x) = x",
                     close(got, x.value(1.6), 1e-6));
    }
    return all;
}

}  // namespace ckfrac::selftest
