#include <cmath>

#include <doctest.h>

#include "ckfrac/specfun.hpp"

#include <stdexcept>
namespace sf = ckfrac::specfun;
using sf::CoeffMode;
using sf::SeriesControl;
using sf::coeff_seq;
using sf::beta;
using sf::mittag_leffler;
using sf::solution_partial_sum_magnitude;

namespace {

// Extended-precision oracle for the Gamma-ratio coefficients, computed from
// log-Gamma at positive arguments; tgammal handles the single negative
// argument in the denominator.
long double coeff_oracle(long double alpha, int k, CoeffMode mode) {
    if (k == 0) return 1.0L;
    if (mode == CoeffMode::derivative)
        return expl(lgammal(k - 1 + alpha) - lgammal(k + 1.0L)) /
               tgammal(alpha - 1.0L);
    return expl(lgammal(k - alpha) - lgammal(k + 1.0L)) / tgammal(-alpha);
}

long double ml_oracle(long double mu, long double beta, long double x) {
    long double sum = 0.0L;
    for (int k = 0; k < 400; ++k) {
        long double term = (k == 0 ? 1.0L : powl(x, k)) / tgammal(mu * k + beta);
        sum += term;
        if (fabsl(term) < 1e-25L * fabsl(sum) && k > 4) break;
    }
    return sum;
}

}  // namespace

TEST_CASE("gamma spot values") {
    CHECK(sf::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(sf::gamma(0.5) == doctest::Approx(1.7724538509055160).epsilon(1e-14));
    // oracle: 1.5 * 0.5 * sqrt(pi) by the recurrence
    CHECK(sf::gamma(2.5) ==
          doctest::Approx(1.5 * 0.5 * std::sqrt(M_PI)).epsilon(1e-14));
}

TEST_CASE("gamma accuracy across [-10, 170]") {
    for (double x = -9.75; x <= 170.0; x += 0.37) {
        long double ref = tgammal((long double)x);
        CHECK(std::abs(sf::gamma(x) - (double)ref) <=
              1e-13 * std::abs((double)ref));
    }
}

TEST_CASE("gamma error paths") {
    CHECK_THROWS_AS(sf::gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(sf::gamma(-3.0), std::domain_error);
    CHECK_THROWS_AS(sf::gamma(200.0), std::overflow_error);
    CHECK_THROWS_AS(sf::gamma(std::nan("")), std::domain_error);
}

TEST_CASE("beta values and domain") {
    CHECK(beta(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(beta(0.5, 0.5) == doctest::Approx(M_PI).epsilon(1e-13));
    // oracle: int_0^1 u^{-1/2}(1-u) du = 2 - 2/3
    CHECK(beta(0.5, 2.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
    CHECK_THROWS_AS(beta(-1.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(beta(1.0, 0.0), std::domain_error);
}

TEST_CASE("coeff_seq recurrence start values") {
    auto d = coeff_seq(0.5, 2, CoeffMode::derivative);
    CHECK(d.c[0] == 1.0);
    CHECK(d.c[1] == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(d.c[2] == doctest::Approx(-0.125).epsilon(1e-15));

    auto s = coeff_seq(0.5, 2, CoeffMode::solution);
    CHECK(s.c[0] == 1.0);
    CHECK(s.c[1] == doctest::Approx((double)coeff_oracle(0.5L, 1, CoeffMode::solution)).epsilon(1e-14));
    CHECK(s.c[2] == doctest::Approx((double)coeff_oracle(0.5L, 2, CoeffMode::solution)).epsilon(1e-14));
}

TEST_CASE("coeff_seq matches Gamma-ratio oracle up to N = 50") {
    for (double alpha : {0.1, 0.25, 0.5, 0.75, 0.9}) {
        for (auto mode : {CoeffMode::derivative, CoeffMode::solution}) {
            auto seq = coeff_seq(alpha, 50, mode);
            for (int k = 0; k <= 50; ++k) {
                long double ref = coeff_oracle(alpha, k, mode);
                CHECK(std::abs(seq.c[k] - (double)ref) <=
                      1e-12 * std::abs((double)ref));
            }
        }
    }
}

TEST_CASE("solution partial sums match the closed form") {
    for (double alpha : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        for (int N = 1; N <= 40; ++N) {
            auto seq = coeff_seq(alpha, N, CoeffMode::solution);
            double lhs = std::abs(seq.sum());
            double rhs = solution_partial_sum_magnitude(alpha, N);
            CHECK(std::abs(lhs - rhs) <= 1e-10 * rhs);
        }
    }
}

TEST_CASE("derivative-mode coefficients are negative past k = 0") {
    auto seq = coeff_seq(0.35, 30, CoeffMode::derivative);
    for (int k = 1; k <= 30; ++k) CHECK(seq.c[k] < 0.0);
}

TEST_CASE("mittag_leffler special values") {
    CHECK(mittag_leffler(1, 1, 1.0) ==
          doctest::Approx(2.718281828459045).epsilon(1e-13));
    CHECK(mittag_leffler(0.7, 1.3, 0.0) ==
          doctest::Approx(1.0 / sf::gamma(1.3)).epsilon(1e-14));
    // oracle: extended-precision series; E_{2,1}(4) = cosh(2)
    CHECK(mittag_leffler(2, 1, 4.0) ==
          doctest::Approx((double)ml_oracle(2, 1, 4.0L)).epsilon(1e-13));
    CHECK(mittag_leffler(2, 1, 4.0) ==
          doctest::Approx(std::cosh(2.0)).epsilon(1e-13));
}

TEST_CASE("mittag_leffler reduces to exp for mu = beta = 1") {
    for (double x = -5.0; x <= 5.0; x += 0.5) {
        CHECK(std::abs(mittag_leffler(1, 1, x) - std::exp(x)) <=
              1e-12 * std::exp(std::abs(x)));
    }
}

TEST_CASE("mittag_leffler stopping rule is stable under a larger cap") {
    SeriesControl ctl{1e-12, 250};
    SeriesControl ctl2{1e-12, 500};
    for (double x : {-8.0, -1.0, 0.5, 10.0, 25.0}) {
        double v1 = mittag_leffler(0.8, 1.0, x, ctl);
        double v2 = mittag_leffler(0.8, 1.0, x, ctl2);
        CHECK(std::abs(v1 - v2) <= ctl.rel_tol * std::abs(v2) + 1e-300);
    }
}

TEST_CASE("mittag_leffler error paths") {
    CHECK_THROWS_AS(mittag_leffler(-1, 1, 0.5), std::domain_error);
    CHECK_THROWS_AS(mittag_leffler(1, 0, 0.5), std::domain_error);
    SeriesControl tiny{1e-14, 4};
    CHECK_THROWS_AS(mittag_leffler(0.3, 1.0, 20.0, tiny), std::runtime_error);
    SeriesControl bad{2.0, 10};
    CHECK_THROWS_AS(mittag_leffler(1, 1, 0.5, bad), std::invalid_argument);
}
