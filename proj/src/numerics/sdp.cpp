// SPDX-License-Identifier: Apache-2.0

#include "wpt/numerics/sdp.hpp"
#include "wpt/numerics/barrier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace wpt::numerics
{
    namespace
    {
        // Normal and bound of constraint m in "a.x <= b" form over x = [S coords, q].
        std::pair<RVector, double> le_form(const SdpConstraint &c, Eigen::Index ns, std::size_t nq)
        {
            RVector a(ns + Eigen::Index(nq));
            a.head(ns) = trace_coords(c.A);
            for (std::size_t i = 0; i < nq; ++i)
                a(ns + Eigen::Index(i)) = i < c.scalar_coeffs.size() ? c.scalar_coeffs[i] : 0.0;
            if (c.relation == Relation::GreaterEqual)
                return {-a, -c.bound};
            return {a, c.bound};
        }

        RVector default_start(const SdpProblem &p)
        {
            const Eigen::Index d = p.dim();
            const Eigen::Index ns = d * d;
            double s0 = 1.0;
            for (const auto &c : p.constraints)
            {
                const double tr = c.A.trace();
                if (c.relation == Relation::LessEqual && tr > 0.0 && c.bound > 0.0)
                    s0 = std::min(s0, 0.5 * c.bound / tr);
            }
            RVector x = RVector::Zero(ns + Eigen::Index(p.scalar_count()));
            for (Eigen::Index i = 0; i < d; ++i)
                x(i) = s0;
            return x;
        }

        LogBarrier build(const SdpProblem &p)
        {
            const Eigen::Index d = p.dim();
            const Eigen::Index ns = d * d;
            const std::size_t nq = p.scalar_count();
            LogBarrier bar(d, Eigen::Index(nq));
            for (const auto &c : p.constraints)
            {
                auto [a, b] = le_form(c, ns, nq);
                bar.add_inequality(a, b);
            }
            RVector obj(ns + Eigen::Index(nq));
            obj.head(ns) = trace_coords(p.objective);
            for (std::size_t i = 0; i < nq; ++i)
                obj(ns + Eigen::Index(i)) = p.scalar_objective[i];
            bar.set_objective(obj);
            return bar;
        }

        // Maximize the smallest slack s over {S > 0, tr S <= T, |q_i| <= Q}.
        RVector phase_one(const SdpProblem &p, const LogBarrier &original, RVector x0, const SdpOptions &opt)
        {
            const Eigen::Index d = p.dim();
            const Eigen::Index ns = d * d;
            const Eigen::Index nq = Eigen::Index(p.scalar_count());
            const Eigen::Index n = ns + nq + 1;

            double scale = 1.0;
            for (std::size_t m = 0; m < original.inequality_count(); ++m)
                scale = std::max(scale, std::abs(original.bound(m)));
            const double trace_cap = 1e6 * std::max(1.0, x0.head(d).sum()) * scale;
            const double scalar_cap = 1e6 * scale;

            LogBarrier ph(d, nq + 1);
            double min_slack = std::numeric_limits<double>::infinity();
            for (std::size_t m = 0; m < original.inequality_count(); ++m)
            {
                RVector a = RVector::Zero(n);
                a.head(ns + nq) = original.normal(m);
                a(n - 1) = 1.0;
                ph.add_inequality(a, original.bound(m));
                min_slack = std::min(min_slack, original.slack(m, x0));
            }
            {
                RVector a = RVector::Zero(n);
                a.head(d).setOnes();
                ph.add_inequality(a, trace_cap);
            }
            for (Eigen::Index i = 0; i < nq; ++i)
            {
                RVector a = RVector::Zero(n);
                a(ns + i) = 1.0;
                ph.add_inequality(a, scalar_cap);
                ph.add_inequality(-a, scalar_cap);
            }
            {
                RVector a = RVector::Zero(n);
                a(n - 1) = 1.0;
                ph.add_inequality(a, 1.0);
            }
            RVector c = RVector::Zero(n);
            c(n - 1) = 1.0;
            ph.set_objective(c);

            RVector x(n);
            x.head(ns + nq) = x0;
            x(n - 1) = std::min(min_slack - 1.0, 0.0);

            double t = 1.0;
            for (int outer = 0; outer < opt.max_outer; ++outer)
            {
                auto res = ph.center(t, x, opt.newton_tol, opt.max_newton);
                x = res.x;
                const double s = x(n - 1);
                RVector candidate = x.head(ns + nq);
                if (s > 0.0 && original.strictly_feasible(candidate))
                    return candidate;
                const double bound_on_best = s + ph.barrier_parameter() / t;
                if (res.converged && bound_on_best <= 1e-12 * scale)
                    throw SdpInfeasibleError("solve_sdp: problem has no strictly feasible point (phase-I optimum " +
                                                 std::to_string(s) + ")",
                                             s);
                t *= opt.barrier_growth;
            }
            throw SdpInfeasibleError("solve_sdp: phase-I did not find a strictly feasible point", x(n - 1));
        }

        SdpSolution assemble(const SdpProblem &p, const LogBarrier &bar, const RVector &x, double t)
        {
            const Eigen::Index d = p.dim();
            const Eigen::Index ns = d * d;
            SdpSolution s;
            s.S = bar.matrix_part(x);
            for (std::size_t i = 0; i < p.scalar_count(); ++i)
                s.scalars.push_back(x(ns + Eigen::Index(i)));
            s.objective = bar.objective().dot(x);
            s.dual_objective = 0.0;
            for (std::size_t m = 0; m < bar.inequality_count(); ++m)
            {
                const double y = 1.0 / (t * bar.slack(m, x));
                s.multipliers.push_back(y);
                s.dual_objective += y * bar.bound(m);
            }
            s.gap = bar.barrier_parameter() / t;
            return s;
        }
    }

    void SdpProblem::validate() const
    {
        require(dim() >= 1, "SdpProblem: empty objective matrix");
        for (std::size_t m = 0; m < constraints.size(); ++m)
        {
            const auto &c = constraints[m];
            require(c.A.dim() == dim(), "SdpProblem: constraint " + std::to_string(m) + " has wrong dimension");
            require(c.scalar_coeffs.size() <= scalar_count(),
                    "SdpProblem: constraint " + std::to_string(m) + " references unknown scalar");
            require(std::isfinite(c.bound), "SdpProblem: constraint " + std::to_string(m) + " has non-finite bound");
        }
        for (std::size_t i = 0; i < scalar_count(); ++i)
        {
            bool used = false;
            for (const auto &c : constraints)
                used = used || (i < c.scalar_coeffs.size() && c.scalar_coeffs[i] != 0.0);
            require(used, "SdpProblem: scalar variable " + std::to_string(i) + " appears in no constraint");
        }
    }

    SdpSolution solve_sdp(const SdpProblem &problem, double tol, const SdpOptions &opt)
    {
        problem.validate();
        require(tol >= 1e-10 && tol <= 1e-4, "solve_sdp: tol must lie in [1e-10, 1e-4]");
        require(problem.dim() <= 64, "solve_sdp: dim must be <= 64");

        const LogBarrier bar = build(problem);
        const Eigen::Index ns = problem.dim() * problem.dim();

        RVector x;
        if (opt.warm_start)
        {
            x.resize(bar.size());
            x.head(ns) = to_coords(opt.warm_start->S);
            for (std::size_t i = 0; i < problem.scalar_count(); ++i)
                x(ns + Eigen::Index(i)) = opt.warm_start->scalars.at(i);
            require(bar.strictly_feasible(x), "solve_sdp: warm start is not strictly feasible");
        }
        else
        {
            x = default_start(problem);
            if (!bar.strictly_feasible(x))
                x = phase_one(problem, bar, x, opt);
        }

        double t = 1.0;
        int newton_total = 0;
        for (int outer = 1; outer <= opt.max_outer; ++outer)
        {
            auto res = bar.center(t, x, opt.newton_tol, opt.max_newton);
            x = res.x;
            newton_total += res.newton_steps;
            SdpSolution sol = assemble(problem, bar, x, t);
            sol.outer_iterations = outer;
            sol.newton_steps = newton_total;
            if (!res.converged)
                throw SdpConvergenceError("solve_sdp: Newton centering did not converge (decrement " +
                                              std::to_string(res.decrement) + ")",
                                          std::move(sol));
            if (sol.gap <= tol * (1.0 + std::abs(sol.objective)))
                return sol;
            if (std::abs(sol.objective) > 1e30)
                throw SdpConvergenceError("solve_sdp: objective appears unbounded", std::move(sol));
            t *= opt.barrier_growth;
        }
        SdpSolution last = assemble(problem, bar, x, t);
        throw SdpConvergenceError("solve_sdp: outer iteration cap reached", std::move(last));
    }
}
