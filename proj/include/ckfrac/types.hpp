#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace ckfrac {

enum class Side { left, right };

// Order alpha in (0,1) and scale exponent rho > 0.
struct OrderParams {
    double alpha;
    double rho;

    void validate() const {
        if (!(alpha > 0.0 && alpha < 1.0))
            throw std::invalid_argument("OrderParams: alpha must be in (0,1)");
        if (!(rho > 0.0))
            throw std::invalid_argument("OrderParams: rho must be positive");
    }
};

// Working interval [a,b], a >= 0. The operator definitions assume a > 0,
// but a = 0 is admitted; see ck_derivative for how the endpoint is handled.
struct Interval {
    double a;
    double b;

    void validate() const {
        if (!(a >= 0.0 && a < b))
            throw std::invalid_argument("Interval: need 0 <= a < b");
    }
    double width() const { return b - a; }
};

// Evaluable real function with optional derivative callbacks.
//
// deriv1_offset, when present, evaluates x' as a function of the exact
// z-offset dz = tau^rho - a^rho from the left interval endpoint. Quadratures
// use it instead of deriv1 near tau = a, where recovering dz from tau alone
// loses all precision; it is what lets derivatives with an integrable
// singularity at a (e.g. a computed fractional integral) be integrated
// accurately.
struct Func1 {
    std::function<double(double)> value;
    std::function<double(double)> deriv1;  // may be empty
    std::function<double(double)> deriv2;  // may be empty
    std::function<double(double)> deriv1_offset;  // may be empty

    bool has_deriv1() const { return static_cast<bool>(deriv1); }
    bool has_deriv2() const { return static_cast<bool>(deriv2); }
    bool has_deriv1_offset() const { return static_cast<bool>(deriv1_offset); }
};

// Composite Gauss-Legendre resolution.
struct QuadSpec {
    int nodes_per_panel = 16;
    int panels = 8;

    void validate() const {
        if (nodes_per_panel < 2)
            throw std::invalid_argument("QuadSpec: nodes_per_panel must be >= 2");
        if (panels < 1)
            throw std::invalid_argument("QuadSpec: panels must be >= 1");
    }
};

struct quadrature_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Time grid plus solution values; exact/abs_err filled when a closed form
// is available.
struct SolutionGrid {
    std::vector<double> t;
    std::vector<double> x;
    std::vector<double> exact;    // empty or same length as t
    std::vector<double> abs_err;  // empty or same length as t
};

}  // namespace ckfrac
