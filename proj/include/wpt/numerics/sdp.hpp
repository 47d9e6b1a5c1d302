// SPDX-License-Identifier: Apache-2.0

#ifndef WPT_NUMERICS_SDP_HPP
#define WPT_NUMERICS_SDP_HPP

#include "wpt/errors.hpp"
#include "wpt/numerics/hermitian.hpp"

#include <optional>
#include <vector>

namespace wpt::numerics
{
    enum class Relation
    {
        LessEqual,
        GreaterEqual
    };

    // tr(A S) + sum_i scalar_coeffs[i] * q_i  (<= or >=)  bound
    struct SdpConstraint
    {
        HermitianMatrix A;
        std::vector<double> scalar_coeffs; // empty == all zero
        Relation relation = Relation::LessEqual;
        double bound = 0.0;
    };

    // maximize tr(C S) + sum_i scalar_objective[i] * q_i
    // over Hermitian S >= 0 and free scalars q, subject to the constraints.
    struct SdpProblem
    {
        HermitianMatrix objective;
        std::vector<double> scalar_objective;
        std::vector<SdpConstraint> constraints;

        Eigen::Index dim() const { return objective.dim(); }
        std::size_t scalar_count() const { return scalar_objective.size(); }
        void validate() const;
    };

    struct SdpSolution
    {
        HermitianMatrix S;
        std::vector<double> scalars;
        double objective = 0.0;
        std::vector<double> multipliers; // dual variables, one per constraint, all >= 0
        double dual_objective = 0.0;
        double gap = 0.0; // barrier bound (d + m) / t on the duality gap
        int outer_iterations = 0;
        int newton_steps = 0;
    };

    struct SdpOptions
    {
        double barrier_growth = 10.0;
        double newton_tol = 1e-10;
        int max_outer = 60;
        int max_newton = 200;
        std::optional<SdpSolution> warm_start; // S and scalars must be strictly feasible
    };

    class SdpInfeasibleError : public InfeasibleError
    {
    public:
        SdpInfeasibleError(const std::string &what, double phase1_value)
            : InfeasibleError(what), phase1_value(phase1_value) {}
        double phase1_value; // best achievable minimum constraint slack (<= 0)
    };

    class SdpConvergenceError : public ConvergenceError
    {
    public:
        SdpConvergenceError(const std::string &what, SdpSolution last)
            : ConvergenceError(what), last_iterate(std::move(last)) {}
        SdpSolution last_iterate;
    };

    // Dense infeasible-start log-barrier interior-point method.
    //
    // A Phase-I problem (maximize the smallest constraint slack) is solved when
    // the default start S = s0 I, q = 0 is not strictly feasible. On return the
    // iterate is strictly feasible and the duality gap is <= tol (1 + |objective|).
    // Intended for dim <= 64; cost grows like dim^6.
    SdpSolution solve_sdp(const SdpProblem &problem, double tol, const SdpOptions &options = {});
}

#endif
