#include "ckfrac/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

namespace ckfrac::quad {

GaussLegendre::GaussLegendre(int n) {
    if (n < 1) throw std::invalid_argument("GaussLegendre: n must be >= 1");
    x.resize(n);
    w.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev initial guess, then Newton on P_n.
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

const GaussLegendre& rule(int n) {
    static std::map<int, GaussLegendre> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, GaussLegendre(n)).first;
    return it->second;
}

double panels(const std::function<double(double)>& f,
              const std::vector<double>& edges, const GaussLegendre& gl) {
    double total = 0.0;
    for (size_t p = 0; p + 1 < edges.size(); ++p) {
        if (!(edges[p + 1] > edges[p])) continue;
        const double mid = 0.5 * (edges[p] + edges[p + 1]);
        const double half = 0.5 * (edges[p + 1] - edges[p]);
        double s = 0.0;
        for (size_t i = 0; i < gl.x.size(); ++i)
            s += gl.w[i] * f(mid + half * gl.x[i]);
        total += half * s;
    }
    return total;
}

std::vector<double> uniform_edges(double a, double b, int n) {
    std::vector<double> e(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) e[i] = a + (b - a) * i / n;
    e.back() = b;
    return e;
}

std::vector<double> edges_refined_both_ends(int n, double ratio) {
    // n geometric panels on [0, 1/2] shrinking toward 0, mirrored on [1/2, 1].
    // Widths are floored so nodes near the ends stay representable away from
    // 0 and 1 (panels() skips the resulting zero-width entries).
    constexpr double min_edge = 1e-13;
    std::vector<double> left(static_cast<size_t>(n) + 1);
    left[0] = 0.0;
    double len = 0.5;
    for (int i = n; i >= 1; --i) {
        left[i] = len;
        len = std::max(len * ratio, min_edge);
        if (len >= left[i]) len = left[i];  // keep monotone when clamped
    }
    std::vector<double> e;
    e.reserve(2 * static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) e.push_back(left[i]);
    for (int i = n - 1; i >= 0; --i) e.push_back(1.0 - left[i]);
    return e;
}

namespace {

double rel_diff(double coarse, double fine) {
    if (!std::isfinite(coarse) || !std::isfinite(fine))
        return std::numeric_limits<double>::infinity();
    double scale = std::max(std::abs(fine), 1e-12);
    return std::abs(fine - coarse) / scale;
}

}  // namespace

double unit_refined(const std::function<double(double)>& f, const QuadSpec& q,
                    double rel_tol) {
    q.validate();
    const auto& gl = rule(q.nodes_per_panel);
    double coarse = panels(f, edges_refined_both_ends(q.panels), gl);
    double fine = panels(f, edges_refined_both_ends(2 * q.panels), gl);
    if (rel_diff(coarse, fine) > rel_tol)
        throw quadrature_error("quadrature: estimated error above tolerance");
    return fine;
}

double smooth_checked(const std::function<double(double)>& f, double a,
                      double b, const QuadSpec& q, double rel_tol) {
    q.validate();
    const auto& gl = rule(q.nodes_per_panel);
    double coarse = panels(f, uniform_edges(a, b, q.panels), gl);
    double fine = panels(f, uniform_edges(a, b, 2 * q.panels), gl);
    if (rel_diff(coarse, fine) > rel_tol)
        throw quadrature_error("quadrature: estimated error above tolerance");
    return fine;
}

}  // namespace ckfrac::quad
