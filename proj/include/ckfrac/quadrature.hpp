#pragma once

#include <functional>
#include <vector>

#include "ckfrac/types.hpp"

namespace ckfrac::quad {

// Gauss-Legendre rule on [-1,1]; nodes by Newton iteration on P_n.
struct GaussLegendre {
    std::vector<double> x;
    std::vector<double> w;

    explicit GaussLegendre(int n);
};

// Cached rule lookup (rules are cheap to build but reused heavily).
const GaussLegendre& rule(int n);

// Integrate f over consecutive panels [edges[i], edges[i+1]].
double panels(const std::function<double(double)>& f,
              const std::vector<double>& edges, const GaussLegendre& gl);

// Uniform panel edges over [a,b].
std::vector<double> uniform_edges(double a, double b, int n);

// Panel edges on [0,1] geometrically refined toward both endpoints,
// n panels per half with the given ratio.
std::vector<double> edges_refined_both_ends(int n, double ratio = 0.15);

// Integrate f over [0,1] with end-refined composite Gauss-Legendre, with a
// panels-vs-2x-panels error estimate. Throws quadrature_error when the
// estimated relative discretization error exceeds rel_tol.
double unit_refined(const std::function<double(double)>& f, const QuadSpec& q,
                    double rel_tol = 1e-6);

// Same Richardson-style check for a smooth integrand over [a,b] with
// uniform panels.
double smooth_checked(const std::function<double(double)>& f, double a,
                      double b, const QuadSpec& q, double rel_tol = 1e-6);

}  // namespace ckfrac::quad
