#pragma once

#include "ckfrac/quadrature.hpp"
#include "ckfrac/types.hpp"

namespace ckfrac::ops {

// Katugampola fractional integral of x at t.
//   left : (rho^{1-alpha}/Gamma(alpha)) int_a^t tau^{rho-1} (t^rho-tau^rho)^{alpha-1} x(tau) dtau
//   right: mirrored over [t,b]
// The endpoint singularity is absorbed analytically by the substitutions
// u = (tau^rho-a^rho)/(t^rho-a^rho), w = (1-u)^alpha.
double katugampola_integral(const Func1& x, const OrderParams& p,
                            const Interval& iv, double t, Side side,
                            const QuadSpec& q = {});

// Caputo-Katugampola derivative of x at t, via the C^1 integral form
//   (rho^alpha/Gamma(1-alpha)) int_a^t (t^rho-tau^rho)^{-alpha} x'(tau) dtau
// (left; right mirrored and negated). Requires x.deriv1.
double ck_derivative(const Func1& x, const OrderParams& p, const Interval& iv,
                     double t, Side side, const QuadSpec& q = {});

// CK derivative of the scaled power ((t^rho-a^rho)/rho)^v:
//   rho^{alpha-v} Gamma(1+v)/Gamma(1-alpha+v) (t^rho-a^rho)^{v-alpha}
// (right side with b^rho-t^rho).
double power_closed_form(double v, const OrderParams& p, const Interval& iv,
                         double t, Side side);

// CK derivative of (t^rho-a^rho)^{beta-1} E_{mu,beta}[lambda (t^rho-a^rho)^mu],
// beta >= 1 (right side mirrored).
double ml_closed_form(double mu, double beta, double lambda,
                      const OrderParams& p, const Interval& iv, double t,
                      Side side);

// Operator norm K_{alpha,rho} of the Katugampola integral on C([a,b]).
double integral_norm_constant(const OrderParams& p, const Interval& iv);

// Operator norm bound M of the CK derivative from C^1 to C.
double derivative_norm_constant(const OrderParams& p, const Interval& iv);

// Left Katugampola integral of x packaged as a Func1 whose deriv1 is the
// integral form differentiated analytically under the u-substitution (no
// finite differences). Feeds ck_derivative in the inversion identity
// D(I x) = x.
Func1 integral_as_func(Func1 x, OrderParams p, Interval iv, QuadSpec q = {});

}  // namespace ckfrac::ops
