#pragma once

#include <optional>
#include <string>

#include "ckfrac/solver.hpp"
#include "ckfrac/types.hpp"

namespace ckfrac::problems {

// Built-in benchmark problems. Each carries a test function and/or a Cauchy
// problem together with its closed-form solution.
enum class Id { example1, example2, example3 };

Id parse_id(const std::string& name);

struct Problem {
    Id id;
    Interval default_iv;
    // the function whose CK derivative is studied (example1) or the exact
    // solution of the Cauchy problem (example2/3); value+deriv1+deriv2
    Func1 function;
    // closed form of the left CK derivative of `function`, when available
    std::function<double(double)> exact_derivative;
    // Katugampola integral of `function` in closed form, when available
    std::function<double(double)> exact_integral;
    // the Cauchy problem (empty f for example1)
    solve::CauchyProblem cauchy;
    bool has_cauchy;
};

// Instantiate a built-in problem for the given order parameters. The
// interval may be overridden; passing std::nullopt keeps the default.
Problem make(Id id, const OrderParams& p,
             std::optional<Interval> iv = std::nullopt);

}  // namespace ckfrac::problems
