#include "ckfrac/grid_eval.hpp"

#include <exception>

namespace ckfrac::grid {

namespace {

template <typename Fn>
std::vector<double> map_serial(const std::vector<double>& ts, Fn&& fn) {
    std::vector<double> out(ts.size());
    for (size_t i = 0; i < ts.size(); ++i) out[i] = fn(ts[i]);
    return out;
}

template <typename Fn>
std::vector<double> map_parallel(const std::vector<double>& ts, Fn&& fn) {
    std::vector<double> out(ts.size());
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(ts.size()); ++i) {
        try {
            out[i] = fn(ts[i]);
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return out;
}

}  // namespace

std::vector<double> ck_derivative_serial(const Func1& x, const OrderParams& p,
                                         const Interval& iv,
                                         const std::vector<double>& ts,
                                         Side side, const QuadSpec& q) {
    return map_serial(ts, [&](double t) {
        return ops::ck_derivative(x, p, iv, t, side, q);
    });
}

std::vector<double> ck_derivative(const Func1& x, const OrderParams& p,
                                  const Interval& iv,
                                  const std::vector<double>& ts, Side side,
                                  const QuadSpec& q) {
    return map_parallel(ts, [&](double t) {
        return ops::ck_derivative(x, p, iv, t, side, q);
    });
}

std::vector<double> katugampola_integral_serial(const Func1& x,
                                                const OrderParams& p,
                                                const Interval& iv,
                                                const std::vector<double>& ts,
                                                Side side, const QuadSpec& q) {
    return map_serial(ts, [&](double t) {
        return ops::katugampola_integral(x, p, iv, t, side, q);
    });
}

std::vector<double> katugampola_integral(const Func1& x, const OrderParams& p,
                                         const Interval& iv,
                                         const std::vector<double>& ts,
                                         Side side, const QuadSpec& q) {
    return map_parallel(ts, [&](double t) {
        return ops::katugampola_integral(x, p, iv, t, side, q);
    });
}

std::vector<double> approx_derivative_serial(const Func1& x,
                                             const OrderParams& p,
                                             const Interval& iv,
                                             const std::vector<double>& ts,
                                             int N, Side side,
                                             const QuadSpec& q) {
    return map_serial(ts, [&](double t) {
        return decomp::approx_derivative(x, p, iv, t, N, side, q).value;
    });
}

std::vector<double> approx_derivative(const Func1& x, const OrderParams& p,
                                      const Interval& iv,
                                      const std::vector<double>& ts, int N,
                                      Side side, const QuadSpec& q) {
    return map_parallel(ts, [&](double t) {
        return decomp::approx_derivative(x, p, iv, t, N, side, q).value;
    });
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> ts(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) ts[i] = a + (b - a) * i / (n - 1);
    ts.back() = b;
    return ts;
}

}  // namespace ckfrac::grid
