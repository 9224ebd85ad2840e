// Times the OpenMP grid kernels against their serial references.

#include <chrono>
#include <cstdio>

#include "ckfrac/grid_eval.hpp"
#include "ckfrac/problems.hpp"

using namespace ckfrac;

namespace {

template <typename Fn>
double time_ms(Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
    OrderParams p{0.5, 0.6};
    auto pr = problems::make(problems::Id::example1, p);
    const Interval iv = pr.default_iv;
    auto ts = grid::linspace(iv.a, iv.b, 801);

    std::vector<double> serial, parallel;
    double ts_ms = time_ms([&] {
        serial = grid::ck_derivative_serial(pr.function, p, iv, ts, Side::left);
    });
    double tp_ms = time_ms([&] {
        parallel = grid::ck_derivative(pr.function, p, iv, ts, Side::left);
    });
    std::printf("ck_derivative      %4zu pts  serial %8.2f ms  parallel %8.2f ms  match %s\n",
                ts.size(), ts_ms, tp_ms, serial == parallel ? "yes" : "NO");

    ts_ms = time_ms([&] {
        serial = grid::approx_derivative_serial(pr.function, p, iv, ts, 20,
                                                Side::left);
    });
    tp_ms = time_ms([&] {
        parallel = grid::approx_derivative(pr.function, p, iv, ts, 20, Side::left);
    });
    std::printf("approx_derivative  %4zu pts  serial %8.2f ms  parallel %8.2f ms  match %s\n",
                ts.size(), ts_ms, tp_ms, serial == parallel ? "yes" : "NO");
    return 0;
}
