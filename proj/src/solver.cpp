#include "ckfrac/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ckfrac/specfun.hpp"

namespace ckfrac::solve {

void CauchyProblem::validate() const {
    p.validate();
    iv.validate();
    if (!f) throw std::invalid_argument("CauchyProblem: f missing");
    if (!(L > 0.0) || !std::isfinite(L))
        throw std::invalid_argument("CauchyProblem: L must be positive and finite");
}

void PicardConfig::validate() const {
    if (!(contraction_target > 0.0 && contraction_target < 1.0))
        throw std::invalid_argument("PicardConfig: contraction_target in (0,1)");
    if (!(tol > 0.0)) throw std::invalid_argument("PicardConfig: tol > 0");
    if (max_iter < 1) throw std::invalid_argument("PicardConfig: max_iter >= 1");
    if (grid_per_subinterval < 2)
        throw std::invalid_argument("PicardConfig: grid_per_subinterval >= 2");
}

void DecompSolveConfig::validate(const Interval& iv) const {
    if (N < 1) throw std::invalid_argument("DecompSolveConfig: N >= 1");
    if (!(step > 0.0 && step < iv.width()))
        throw std::invalid_argument("DecompSolveConfig: 0 < step < b-a");
    double d = delta_start > 0.0 ? delta_start : 1e-6 * iv.width();
    if (!(d > 0.0 && d < step))
        throw std::invalid_argument("DecompSolveConfig: 0 < delta_start < step");
}

namespace {

// Row of product-trapezoidal weights for the Abel kernel:
//   int_{z_0}^{z_i} (z_i - z)^{alpha-1} g(z) dz
// with g piecewise linear on the z grid; fills w[0..i].
void abel_weights(const std::vector<double>& z, size_t i, double alpha,
                  std::vector<double>& w) {
    std::fill(w.begin(), w.begin() + i + 1, 0.0);
    const double Z = z[i];
    double s0 = Z - z[0];
    double s0a = std::pow(s0, alpha);
    for (size_t j = 0; j + 1 <= i; ++j) {
        const double s1 = Z - z[j + 1];
        const double s1a = (s1 > 0.0) ? std::pow(s1, alpha) : 0.0;
        const double I0 = (s0a - s1a) / alpha;
        const double I1 =
            s0 * I0 - (s0a * s0 - s1a * s1) / (alpha + 1.0);
        const double len = z[j + 1] - z[j];
        w[j] += I0 - I1 / len;
        w[j + 1] += I1 / len;
        s0 = s1;
        s0a = s1a;
    }
}

double prefactor(const OrderParams& p) {
    return std::pow(p.rho, -p.alpha) / specfun::gamma(p.alpha);
}

}  // namespace

double convergence_horizon(const CauchyProblem& prob) {
    prob.validate();
    const auto& p = prob.p;
    double T = std::pow(
        std::pow(prob.iv.a, p.rho) +
            p.rho * std::pow(specfun::gamma(1.0 + p.alpha) / prob.L,
                             1.0 / p.alpha),
        1.0 / p.rho);
    return std::min(T, prob.iv.b);
}

SolutionGrid solve_picard(const CauchyProblem& prob, const PicardConfig& cfg,
                          PicardStats* stats) {
    prob.validate();
    cfg.validate();
    const auto& p = prob.p;
    const double a = prob.iv.a, b = prob.iv.b;
    const double kfac =
        prob.L * std::pow(p.rho, -p.alpha) / specfun::gamma(1.0 + p.alpha);

    auto contraction = [&](double t0, double t1) {
        return kfac * std::pow(std::pow(t1, p.rho) - std::pow(t0, p.rho),
                               p.alpha);
    };

    // Subinterval boundaries: largest h with contraction == target, by
    // bisection; the whole remaining interval when it already contracts.
    std::vector<double> bounds{a};
    while (bounds.back() < b) {
        double t0 = bounds.back();
        if (contraction(t0, b) <= cfg.contraction_target) {
            bounds.push_back(b);
            break;
        }
        double lo = 0.0, hi = b - t0;
        for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (lo + hi);
            if (contraction(t0, t0 + mid) < cfg.contraction_target)
                lo = mid;
            else
                hi = mid;
            if (hi - lo <= 1e-10 * hi) break;
        }
        if (!(lo > 0.0))
            throw std::runtime_error(
                "solve_picard: cannot find a contracting subinterval");
        bounds.push_back(t0 + lo);
    }

    const int m = cfg.grid_per_subinterval;
    std::vector<double> t{a}, x{prob.x_a}, g;
    g.push_back(prob.f(a, prob.x_a));
    std::vector<double> z{std::pow(a, p.rho)};
    const double c = prefactor(p);

    if (stats) {
        stats->boundaries = bounds;
        stats->contraction.clear();
        stats->iterations.clear();
    }

    std::vector<double> row;
    for (size_t s = 0; s + 1 < bounds.size(); ++s) {
        const double t0 = bounds[s], t1 = bounds[s + 1];
        const size_t i0 = t.size() - 1;  // boundary node, value fixed
        for (int j = 1; j <= m; ++j) {
            double frac = double(j) / m;
            // graded toward a on the first subinterval: the composed
            // right-hand side is typically only C^1 there
            if (s == 0) frac = frac * frac * frac;
            double tj = t0 + frac * (t1 - t0);
            if (j == m) tj = t1;
            t.push_back(tj);
            z.push_back(std::pow(tj, p.rho));
            x.push_back(x[i0]);
            g.push_back(0.0);
        }
        const size_t n = t.size();

        // Weight rows and fixed history contribution per target node.
        std::vector<double> hist(n - i0 - 1, prob.x_a);
        std::vector<std::vector<double>> wcur(n - i0 - 1);
        row.resize(n);
        for (size_t i = i0 + 1; i < n; ++i) {
            abel_weights(z, i, p.alpha, row);
            double h = prob.x_a;
            for (size_t j = 0; j <= i0; ++j) h += c * row[j] * g[j];
            hist[i - i0 - 1] = h;
            wcur[i - i0 - 1].assign(row.begin() + i0 + 1, row.begin() + i + 1);
        }

        // Picard sweeps: x_new = S x_old on this subinterval.
        std::vector<double> xold(x.begin() + i0 + 1, x.end());
        std::vector<double> gold(xold.size()), xnew(xold.size());
        int iters = 0;
        for (; iters < cfg.max_iter; ++iters) {
            for (size_t j = 0; j < xold.size(); ++j)
                gold[j] = prob.f(t[i0 + 1 + j], xold[j]);
            double diff = 0.0;
            for (size_t i = 0; i < xnew.size(); ++i) {
                double v = hist[i];
                const auto& w = wcur[i];
                for (size_t j = 0; j < w.size(); ++j) v += c * w[j] * gold[j];
                diff = std::max(diff, std::abs(v - xold[i]));
                xnew[i] = v;
            }
            xold.swap(xnew);
            if (diff <= cfg.tol) break;
        }
        if (iters >= cfg.max_iter)
            throw std::runtime_error("solve_picard: max_iter exceeded");
        for (size_t j = 0; j < xold.size(); ++j) {
            x[i0 + 1 + j] = xold[j];
            g[i0 + 1 + j] = prob.f(t[i0 + 1 + j], xold[j]);
        }
        if (stats) {
            stats->contraction.push_back(contraction(t0, t1));
            stats->iterations.push_back(iters + 1);
        }
    }

    SolutionGrid out;
    out.t = std::move(t);
    out.x = std::move(x);
    return out;
}

SolutionGrid solve_reference(const CauchyProblem& prob, int nodes) {
    prob.validate();
    if (nodes < 16)
        throw std::invalid_argument("solve_reference: nodes must be >= 16");
    const auto& p = prob.p;
    const double a = prob.iv.a, b = prob.iv.b;
    const double c = prefactor(p);

    std::vector<double> t(static_cast<size_t>(nodes) + 1);
    std::vector<double> z(t.size()), x(t.size()), g(t.size());
    for (int i = 0; i <= nodes; ++i) {
        t[i] = a + (b - a) * i / nodes;
        z[i] = std::pow(t[i], p.rho);
    }
    t.back() = b;
    x[0] = prob.x_a;
    g[0] = prob.f(a, prob.x_a);

    std::vector<double> row(t.size());
    for (size_t i = 1; i < t.size(); ++i) {
        abel_weights(z, i, p.alpha, row);
        double h = prob.x_a;
        for (size_t j = 0; j < i; ++j) h += c * row[j] * g[j];
        const double wii = c * row[i];
        // implicit node value by fixed-point iteration
        double xi = x[i - 1];
        bool done = false;
        for (int sweep = 0; sweep < 50; ++sweep) {
            double next = h + wii * prob.f(t[i], xi);
            if (std::abs(next - xi) <= 1e-12 * std::max(1.0, std::abs(next))) {
                xi = next;
                done = true;
                break;
            }
            xi = next;
        }
        if (!done && std::abs(wii) * prob.L >= 1.0)
            throw std::runtime_error(
                "solve_reference: implicit step fixed point diverged");
        x[i] = xi;
        g[i] = prob.f(t[i], xi);
    }

    SolutionGrid out;
    out.t = std::move(t);
    out.x = std::move(x);
    return out;
}

SolutionGrid solve_decomposition(const CauchyProblem& prob,
                                 const DecompSolveConfig& cfg) {
    prob.validate();
    cfg.validate(prob.iv);
    const auto& p = prob.p;
    const double a = prob.iv.a, b = prob.iv.b;
    const double delta0 = cfg.delta_start > 0.0 ? cfg.delta_start
                                                : 1e-6 * prob.iv.width();
    const int N = cfg.N;

    auto seq = specfun::coeff_seq(p.alpha, N, specfun::CoeffMode::derivative);
    const double g2 = specfun::gamma(2.0 - p.alpha);
    const double A = std::pow(p.rho, p.alpha - 1.0) / g2 * seq.sum();
    if (A == 0.0)
        throw std::invalid_argument("solve_decomposition: A_N vanishes");
    std::vector<double> B(static_cast<size_t>(N));
    double Bsum = 0.0;
    for (int k = 1; k <= N; ++k) {
        B[k - 1] = std::pow(p.rho, p.alpha) / g2 * seq.c[k] * k;
        Bsum += B[k - 1];
    }

    const double za = std::pow(a, p.rho);
    // state y = (x, V_1..V_N); dy returns the derivatives
    auto deriv = [&](double tt, const std::vector<double>& y,
                     std::vector<double>& dy) {
        const double delta = std::pow(tt, p.rho) - za;
        const double logd = std::log(delta);
        double sum = 0.0;
        for (int k = 1; k <= N; ++k) {
            double bv = B[k - 1] * y[k];
            if (bv == 0.0) continue;
            double mag = std::exp(std::log(std::abs(bv)) +
                                  (1.0 - p.alpha - k) * logd);
            sum += (bv > 0.0 ? mag : -mag);
        }
        const double denom = A * std::pow(delta, 1.0 - p.alpha) *
                             std::pow(tt, 1.0 - p.rho);
        const double xp = (prob.f(tt, y[0]) + sum) / denom;
        if (!std::isfinite(xp))
            throw std::runtime_error(
                "solve_decomposition: non-finite derivative");
        dy[0] = xp;
        for (int k = 1; k <= N; ++k)
            dy[k] = std::pow(delta, k - 1.0) * xp;
    };
    // The coupled (x, V) system carries one fast decaying mode with
    // eigenvalue mu = sum_k B_k / (A Delta t^{1-rho}) < 0, which blows past
    // the explicit stability limit near t = a (|mu| ~ 1/(t - a)). Sub-steps
    // capped at 2/|mu| keep RK4 inside its stability region there and
    // coarsen geometrically back to the nominal step; the output grid keeps
    // the nominal spacing.
    auto stable_step = [&](double tt) {
        const double delta = std::pow(tt, p.rho) - za;
        const double mu =
            Bsum / (A * delta * std::pow(tt, 1.0 - p.rho));
        return 2.0 / std::abs(mu);
    };

    std::vector<double> y(static_cast<size_t>(N) + 1, 0.0);
    y[0] = prob.x_a;
    double tt = a + delta0;

    SolutionGrid out;
    out.t.push_back(a);
    out.x.push_back(prob.x_a);
    out.t.push_back(tt);
    out.x.push_back(y[0]);

    std::vector<double> k1(y.size()), k2(y.size()), k3(y.size()), k4(y.size()),
        tmp(y.size());
    const double eps = 1e-15 * prob.iv.width();
    long substeps = 0;
    while (tt < b - eps) {
        const double tnext = std::min(tt + cfg.step, b);
        while (tt < tnext - eps) {
            double h = std::min(tnext - tt, stable_step(tt));
            if (++substeps > 100000000L)
                throw std::runtime_error(
                    "solve_decomposition: sub-step budget exhausted");
            deriv(tt, y, k1);
            for (size_t i = 0; i < y.size(); ++i)
                tmp[i] = y[i] + 0.5 * h * k1[i];
            deriv(tt + 0.5 * h, tmp, k2);
            for (size_t i = 0; i < y.size(); ++i)
                tmp[i] = y[i] + 0.5 * h * k2[i];
            deriv(tt + 0.5 * h, tmp, k3);
            for (size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + h * k3[i];
            deriv(tt + h, tmp, k4);
            for (size_t i = 0; i < y.size(); ++i)
                y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
            tt += h;
        }
        tt = tnext;
        out.t.push_back(tt);
        out.x.push_back(y[0]);
    }
    return out;
}

double interpolate(const SolutionGrid& g, double t) {
    if (g.t.empty()) throw std::invalid_argument("interpolate: empty grid");
    if (t <= g.t.front()) return g.x.front();
    if (t >= g.t.back()) return g.x.back();
    auto it = std::upper_bound(g.t.begin(), g.t.end(), t);
    size_t i = static_cast<size_t>(it - g.t.begin());
    double t0 = g.t[i - 1], t1 = g.t[i];
    double w = (t - t0) / (t1 - t0);
    return (1.0 - w) * g.x[i - 1] + w * g.x[i];
}

double fit_loglog_slope(const std::vector<StudyRow>& rows) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    size_t n = 0;
    for (const auto& r : rows) {
        if (!(r.sup_error > 0.0)) continue;
        double lx = std::log(double(r.N)), ly = std::log(r.sup_error);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    if (n < 2) throw std::invalid_argument("fit_loglog_slope: need >= 2 rows");
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

StudyResult convergence_study(const CauchyProblem& prob,
                              const std::function<double(double)>& exact,
                              const std::vector<int>& Ns,
                              const DecompSolveConfig& tmpl) {
    prob.validate();
    if (Ns.size() < 3)
        throw std::invalid_argument("convergence_study: need >= 3 N values");

    SolutionGrid baseline;
    if (!exact) {
        int maxN = *std::max_element(Ns.begin(), Ns.end());
        baseline = solve_reference(prob, 64 * maxN);
    }
    auto ref = [&](double t) {
        return exact ? exact(t) : interpolate(baseline, t);
    };

    const double Thor = std::min(prob.iv.b, convergence_horizon(prob));
    StudyResult res;
    for (int N : Ns) {
        DecompSolveConfig cfg = tmpl;
        cfg.N = N;
        auto sol = solve_decomposition(prob, cfg);
        double sup = 0.0;
        for (size_t i = 0; i < sol.t.size(); ++i) {
            if (sol.t[i] > Thor) break;
            sup = std::max(sup, std::abs(sol.x[i] - ref(sol.t[i])));
        }
        res.rows.push_back({N, sup});
    }
    res.fitted_slope = fit_loglog_slope(res.rows);
    return res;
}

}  // namespace ckfrac::solve
