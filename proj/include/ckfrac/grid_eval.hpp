#pragma once

#include <vector>

#include "ckfrac/decomposition.hpp"
#include "ckfrac/operators.hpp"
#include "ckfrac/types.hpp"

namespace ckfrac::grid {

// Pointwise operator evaluation over a whole grid. The *_serial variants are
// the reference implementations; the unsuffixed ones run the loop over grid
// points with OpenMP and must produce identical values (each point is an
// independent, deterministic computation).

std::vector<double> ck_derivative_serial(const Func1& x, const OrderParams& p,
                                         const Interval& iv,
                                         const std::vector<double>& ts,
                                         Side side, const QuadSpec& q = {});

std::vector<double> ck_derivative(const Func1& x, const OrderParams& p,
                                  const Interval& iv,
                                  const std::vector<double>& ts, Side side,
                                  const QuadSpec& q = {});

std::vector<double> katugampola_integral_serial(const Func1& x,
                                                const OrderParams& p,
                                                const Interval& iv,
                                                const std::vector<double>& ts,
                                                Side side,
                                                const QuadSpec& q = {});

std::vector<double> katugampola_integral(const Func1& x, const OrderParams& p,
                                         const Interval& iv,
                                         const std::vector<double>& ts,
                                         Side side, const QuadSpec& q = {});

std::vector<double> approx_derivative_serial(const Func1& x,
                                             const OrderParams& p,
                                             const Interval& iv,
                                             const std::vector<double>& ts,
                                             int N, Side side,
                                             const QuadSpec& q = {});

std::vector<double> approx_derivative(const Func1& x, const OrderParams& p,
                                      const Interval& iv,
                                      const std::vector<double>& ts, int N,
                                      Side side, const QuadSpec& q = {});

// Uniform grid of n points including both endpoints.
std::vector<double> linspace(double a, double b, int n);

}  // namespace ckfrac::grid
