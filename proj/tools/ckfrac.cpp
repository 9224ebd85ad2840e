// Command-line front end: evaluate the fractional operators on the built-in
// problems, solve their Cauchy problems, and run convergence studies,
// emitting CSV for plotting.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ckfrac/grid_eval.hpp"
#include "ckfrac/problems.hpp"
#include "ckfrac/selftest.hpp"
#include "ckfrac/solver.hpp"

namespace {

using namespace ckfrac;

constexpr int kGridPoints = 201;

struct Options {
    std::string problem;
    double alpha = 0.5;
    double rho = 1.0;
    std::optional<double> a, b;
    std::vector<int> Ns;
    double step = 1e-3;
    double tol = 1e-10;
    std::string method = "decomp";
    std::string out;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

class Output {
  public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

problems::Problem make_problem(const Options& o) {
    OrderParams p{o.alpha, o.rho};
    auto id = problems::parse_id(o.problem);
    std::optional<Interval> iv;
    if (o.a || o.b) {
        Interval def = problems::make(id, p).default_iv;
        iv = Interval{o.a.value_or(def.a), o.b.value_or(def.b)};
    }
    return problems::make(id, p, iv);
}

void write_grid_csv(std::ostream& os, const std::vector<double>& t,
                    const std::vector<double>& x,
                    const std::function<double(double)>& exact) {
    os << "t,x,exact,abs_err\n";
    for (size_t i = 0; i < t.size(); ++i) {
        os << fmt(t[i]) << ',' << fmt(x[i]) << ',';
        if (exact) {
            double e = exact(t[i]);
            os << fmt(e) << ',' << fmt(std::abs(x[i] - e));
        } else {
            os << ',';
        }
        os << '\n';
    }
}

int run_deriv(const Options& o) {
    auto pr = make_problem(o);
    OrderParams p{o.alpha, o.rho};
    int N = o.Ns.empty() ? 15 : o.Ns.front();
    auto ts = grid::linspace(pr.default_iv.a, pr.default_iv.b, kGridPoints);
    auto vals =
        grid::approx_derivative(pr.function, p, pr.default_iv, ts, N, Side::left);
    Output out(o.out);
    write_grid_csv(out.stream(), ts, vals, pr.exact_derivative);
    return 0;
}

int run_integ(const Options& o) {
    auto pr = make_problem(o);
    OrderParams p{o.alpha, o.rho};
    auto ts = grid::linspace(pr.default_iv.a, pr.default_iv.b, kGridPoints);
    auto vals =
        grid::katugampola_integral(pr.function, p, pr.default_iv, ts, Side::left);
    Output out(o.out);
    write_grid_csv(out.stream(), ts, vals, pr.exact_integral);
    return 0;
}

int run_solve(const Options& o) {
    auto pr = make_problem(o);
    if (!pr.has_cauchy)
        throw CLI::ValidationError("--problem", "no Cauchy problem for " + o.problem);
    int N = o.Ns.empty() ? 15 : o.Ns.front();

    SolutionGrid sol;
    if (o.method == "picard") {
        solve::PicardConfig cfg;
        cfg.tol = o.tol;
        sol = solve::solve_picard(pr.cauchy, cfg);
    } else if (o.method == "decomp") {
        solve::DecompSolveConfig cfg;
        cfg.N = N;
        cfg.step = o.step;
        sol = solve::solve_decomposition(pr.cauchy, cfg);
    } else if (o.method == "reference") {
        sol = solve::solve_reference(pr.cauchy, std::max(16, 16 * N));
    } else {
        throw CLI::ValidationError("--method", "unknown method " + o.method);
    }

    auto ts = grid::linspace(pr.cauchy.iv.a, pr.cauchy.iv.b, kGridPoints);
    std::vector<double> xs(ts.size());
    for (size_t i = 0; i < ts.size(); ++i) xs[i] = solve::interpolate(sol, ts[i]);
    Output out(o.out);
    write_grid_csv(out.stream(), ts, xs, pr.function.value);
    return 0;
}

int run_study(const Options& o) {
    auto pr = make_problem(o);
    if (o.Ns.size() < 3)
        throw CLI::ValidationError("--N", "study needs at least 3 N values");
    OrderParams p{o.alpha, o.rho};

    solve::StudyResult res;
    if (pr.id == problems::Id::example1) {
        // derivative-approximation study against the closed form
        auto ts = grid::linspace(pr.default_iv.a, pr.default_iv.b, kGridPoints);
        for (int N : o.Ns) {
            auto vals = grid::approx_derivative(pr.function, p, pr.default_iv,
                                                ts, N, Side::left);
            double sup = 0.0;
            for (size_t i = 0; i < ts.size(); ++i)
                sup = std::max(sup,
                               std::abs(vals[i] - pr.exact_derivative(ts[i])));
            res.rows.push_back({N, sup});
        }
        res.fitted_slope = solve::fit_loglog_slope(res.rows);
    } else {
        solve::DecompSolveConfig tmpl;
        tmpl.step = o.step;
        res = solve::convergence_study(pr.cauchy, pr.function.value, o.Ns, tmpl);
    }

    Output out(o.out);
    auto& os = out.stream();
    os << "N,sup_error\n";
    for (const auto& r : res.rows)
        os << r.N << ',' << fmt(r.sup_error) << '\n';
    os << "# fitted_slope=" << fmt(res.fitted_slope) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Caputo-Katugampola fractional calculus toolkit"};
    app.require_subcommand(1);

    Options o;
    auto add_common = [&](CLI::App* sub, bool needs_problem) {
        auto* popt = sub->add_option("--problem", o.problem,
                                     "built-in problem (example1|example2|example3)");
        if (needs_problem) popt->required();
        sub->add_option("--alpha", o.alpha, "fractional order in (0,1)");
        sub->add_option("--rho", o.rho, "scale exponent > 0");
        sub->add_option("--a", o.a, "interval left endpoint");
        sub->add_option("--b", o.b, "interval right endpoint");
        sub->add_option("--N", o.Ns, "truncation order (repeatable for study)");
        sub->add_option("--step", o.step, "ODE step size");
        sub->add_option("--tol", o.tol, "fixed-point tolerance");
        sub->add_option("--out", o.out, "output CSV path (default stdout)");
    };

    auto* deriv = app.add_subcommand("deriv", "approximate CK derivative vs closed form");
    add_common(deriv, true);
    auto* integ = app.add_subcommand("integ", "Katugampola integral over the grid");
    add_common(integ, true);
    auto* solve_cmd = app.add_subcommand("solve", "solve the Cauchy problem");
    add_common(solve_cmd, true);
    solve_cmd->add_option("--method", o.method, "picard|decomp|reference");
    auto* study = app.add_subcommand("study", "convergence study over N");
    add_common(study, true);
    auto* selftest = app.add_subcommand("selftest", "run invariant checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (*deriv) return run_deriv(o);
        if (*integ) return run_integ(o);
        if (*solve_cmd) return run_solve(o);
        if (*study) return run_study(o);
        if (*selftest) return ckfrac::selftest::run(std::cout) ? 0 : 4;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
