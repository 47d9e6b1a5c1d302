// SPDX-License-Identifier: Apache-2.0

#ifndef WPT_NUMERICS_BARRIER_HPP
#define WPT_NUMERICS_BARRIER_HPP

#include "wpt/numerics/hermitian.hpp"

#include <vector>

namespace wpt::numerics
{
    // Log-barrier over the set {x : S(x) > 0, a_m . x < b_m}.
    //
    // The variable x stacks the d^2 real Hermitian coordinates of S (see
    // to_coords) followed by free scalar variables. For t > 0 the centering
    // problem minimizes
    //
    //     phi_t(x) = -t c.x - log det S(x) - sum_m log(b_m - a_m.x)
    //
    // with damped Newton steps. t = 0 gives the analytic center.
    class LogBarrier
    {
    public:
        LogBarrier(Eigen::Index dim, Eigen::Index scalar_count);

        Eigen::Index dim() const { return dim_; }
        Eigen::Index scalar_count() const { return scalars_; }
        Eigen::Index size() const { return dim_ * dim_ + scalars_; }
        std::size_t inequality_count() const { return bounds_.size(); }

        void add_inequality(const RVector &a, double b); // a.x <= b
        void pop_inequality();
        void set_objective(const RVector &c);            // maximize c.x
        const RVector &objective() const { return objective_; }
        const RVector &normal(std::size_t m) const { return normals_[m]; }
        double bound(std::size_t m) const { return bounds_[m]; }

        // Self-concordance parameter d + #inequalities; equals t * gap on the central path.
        double barrier_parameter() const { return double(dim_) + double(bounds_.size()); }

        HermitianMatrix matrix_part(const RVector &x) const;
        double slack(std::size_t m, const RVector &x) const { return bounds_[m] - normals_[m].dot(x); }
        bool strictly_feasible(const RVector &x) const;

        // phi_t(x); +infinity outside the domain.
        double value(double t, const RVector &x) const;

        struct CenterResult
        {
            RVector x;
            int newton_steps = 0;
            double decrement = 0.0; // lambda^2 / 2 at the returned point
            bool converged = false;
        };
        CenterResult center(double t, RVector x0, double newton_tol = 1e-10, int max_steps = 200) const;

    private:
        struct Term
        {
            Eigen::Index a, b;
            cplx c;
        };

        Eigen::Index dim_;
        Eigen::Index scalars_;
        std::vector<RVector> normals_;
        std::vector<double> bounds_;
        RVector objective_;
        std::vector<std::vector<Term>> basis_; // B_k = sum c e_a e_b^T
    };
}

#endif
