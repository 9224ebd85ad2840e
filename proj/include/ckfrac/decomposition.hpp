#pragma once

#include <vector>

#include "ckfrac/specfun.hpp"
#include "ckfrac/types.hpp"

namespace ckfrac::decomp {

using specfun::CoeffMode;

// Truncation coefficients of the decomposition formula.
//   derivative mode: A = (rho^{alpha-1}/Gamma(2-alpha)) sum c_k,
//                    B_k = (rho^alpha/Gamma(2-alpha)) c_k k
//   solution   mode: A = (rho^{-alpha}/Gamma(1+alpha)) sum c_k,
//                    B_k = (rho^{1-alpha}/Gamma(1+alpha)) c_k k
struct DecompCoeffs {
    int N;
    CoeffMode mode;
    double alpha;
    double rho;
    double A;
    std::vector<double> B;  // B[0] = B_1, ..., B[N-1] = B_N
};

DecompCoeffs decomp_coeffs(const OrderParams& p, int N, CoeffMode mode);

// Moment functions V_1..V_N (left) or W_1..W_N (right):
//   V_k(t) = int_a^t (tau^rho - a^rho)^{k-1} x'(tau) dtau
//   W_k(t) = int_t^b (b^rho - tau^rho)^{k-1} x'(tau) dtau
std::vector<double> moments(const std::function<double(double)>& xprime,
                            const OrderParams& p, const Interval& iv, double t,
                            int N, Side side, const QuadSpec& q = {});

struct ApproxResult {
    double value;
    double bound;
};

// Truncated decomposition of the CK derivative at t, with the truncation
// error bound evaluated alongside. M(t) comes from x.deriv2 when present,
// otherwise from a 64-point finite-difference scan (an estimate, not a
// certified bound).
ApproxResult approx_derivative(const Func1& x, const OrderParams& p,
                               const Interval& iv, double t, int N, Side side,
                               const QuadSpec& q = {});

// The truncation error bounds, exactly as stated:
//   derivative mode: M exp((1-a)^2+1-a) rho^{a-1} / (N^{1-a}(1-a)Gamma(2-a))
//                      * (t^rho-a^rho)^{1-a} (t-a)
//   solution   mode: M exp(a^2+a) rho^{-a} / (a N^a Gamma(1+a))
//                      * (t^rho-a^rho)^a (t-a)
double error_bound(double Mt, const OrderParams& p, const Interval& iv,
                   double t, int N, CoeffMode mode);

// max over [a,t] (left) of |d/dtau (tau^{1-rho} x'(tau))|, analytic when
// deriv2 is present, 64-point central differences otherwise.
double derivative_bound_constant(const Func1& x, const OrderParams& p,
                                 const Interval& iv, double t, Side side);

}  // namespace ckfrac::decomp
