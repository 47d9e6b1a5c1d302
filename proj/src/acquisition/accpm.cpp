// SPDX-License-Identifier: Apache-2.0

#include "wpt/acquisition/accpm.hpp"
#include "wpt/errors.hpp"
#include "wpt/numerics/eig.hpp"

#include <cmath>

namespace wpt::acquisition
{
    using numerics::RVector;

    namespace
    {
        double min_eigenvalue(const HermitianMatrix &m)
        {
            return numerics::eig_hermitian(m).values.minCoeff();
        }
    }

    AccpmLearner::AccpmLearner(int M_t, const AccpmOptions &options, numerics::RngStream &rng)
        : m_t_(M_t), opt_(options), rng_(&rng), barrier_(M_t, 0)
    {
        require(M_t >= 1, "AccpmLearner: M_t must be >= 1");
        require(options.probe_power > 0.0, "AccpmLearner: probe power must be positive");
        require(options.slot_length > 0.0, "AccpmLearner: slot length must be positive");
        require(options.max_cuts >= 0, "AccpmLearner: max_cuts must be non-negative");
        require(options.psd_margin > 0.0 && options.psd_margin < 1.0, "AccpmLearner: psd_margin must be in (0, 1)");

        barrier_.add_inequality(numerics::trace_coords(HermitianMatrix::identity(M_t)), 1.0);
        probe_ = HermitianMatrix::identity(M_t) * (opt_.probe_power / M_t);
        if (!recenter(numerics::to_coords(HermitianMatrix::identity(M_t) * (0.5 / M_t))))
            throw ConvergenceError("AccpmLearner: initial analytic center did not converge");
    }

    bool AccpmLearner::recenter(RVector start)
    {
        const auto c = barrier_.center(0.0, std::move(start));
        if (!c.converged && !(c.decrement <= 1e-6))
            return false;
        x_ = c.x;
        estimate_ = barrier_.matrix_part(x_);
        potential_ = barrier_.value(0.0, x_);
        return true;
    }

    HermitianMatrix AccpmLearner::propose()
    {
        require(m_t_ >= 2, "AccpmLearner::propose: nothing to learn for M_t == 1");
        const double unit = opt_.probe_power / m_t_;
        const HermitianMatrix centre = HermitianMatrix::identity(m_t_) * (0.5 * unit);

        HermitianMatrix r = rng_->random_hermitian(m_t_);
        HermitianMatrix d = r * (opt_.random_weight * unit / r.frobenius_norm()) +
                            (centre - probe_) * opt_.recenter_weight;
        // neutral cut: remove the component along the current center
        const double gg = estimate_.inner(estimate_);
        d = d - estimate_ * (d.inner(estimate_) / gg);

        const double floor = opt_.psd_margin * unit;
        double eps = 1.0;
        for (int k = 0; k < 80; ++k, eps *= 0.5)
        {
            for (double sign : {1.0, -1.0})
            {
                HermitianMatrix next = probe_ + d * (sign * eps);
                if (next.trace() <= opt_.probe_power && min_eigenvalue(next) >= floor)
                    return next;
            }
        }
        // the only way here is d == 0, which needs a rank-deficient estimate
        throw ConsistencyError("AccpmLearner::propose: no admissible neutral probe step");
    }

    bool AccpmLearner::feedback(const HermitianMatrix &next_probe, int f)
    {
        require(f == 1 || f == -1, "AccpmLearner::feedback: feedback must be +1 or -1");
        require(next_probe.dim() == m_t_, "AccpmLearner::feedback: probe dimension mismatch");
        const HermitianMatrix step = next_probe - probe_;
        const double norm = step.frobenius_norm();
        require(norm > 0.0, "AccpmLearner::feedback: zero probe step");

        // slack = -f tr(G D)/||D||_F <= ||G||_F <= tr(G) <= 1, so every added
        // barrier term is non-negative and the center potential cannot drop
        const RVector a = numerics::trace_coords(step) * (double(f) / norm);
        barrier_.add_inequality(a, 0.0);

        double delta = 0.5;
        for (int k = 0; k < 200; ++k, delta *= 0.5)
        {
            RVector start = x_ - delta * a;
            if (barrier_.strictly_feasible(start))
            {
                if (!recenter(std::move(start)))
                    break;
                cuts_.push_back({f, step});
                probe_ = next_probe;
                return true;
            }
        }
        barrier_.pop_inequality();
        return false;
    }

    bool AccpmLearner::consistent_with(const HermitianMatrix &G, double tol) const
    {
        for (const auto &cut : cuts_)
            if (cut.feedback * G.inner(cut.step) > tol * G.frobenius_norm() * cut.step.frobenius_norm())
                return false;
        return true;
    }

    double normalized_error(const HermitianMatrix &estimate, const HermitianMatrix &truth)
    {
        const double ne = estimate.frobenius_norm(), nt = truth.frobenius_norm();
        require(ne > 0.0 && nt > 0.0, "normalized_error: zero matrix");
        return (estimate * (1.0 / ne) - truth * (1.0 / nt)).frobenius_norm();
    }

    AccpmResult accpm_learn(const HermitianMatrix &G, const AccpmOptions &options, numerics::RngStream &rng)
    {
        const int M_t = int(G.dim());
        require(M_t >= 1, "accpm_learn: empty channel matrix");
        require(G.trace() > 0.0, "accpm_learn: G must be nonzero");

        AccpmLearner learner(M_t, options, rng);
        AccpmResult out;
        auto record = [&]()
        {
            out.estimates.push_back(learner.estimate());
            out.errors.push_back(normalized_error(learner.estimate(), G));
            out.potentials.push_back(learner.potential());
        };
        record();
        out.probes.push_back(learner.probe());

        if (M_t == 1)
        {
            // a positive scalar is fully known up to scale
            out.reached_tol = true;
            return out;
        }

        double q_prev = options.slot_length * G.inner(learner.probe());
        for (int i = 0; i < options.max_cuts; ++i)
        {
            const HermitianMatrix next = learner.propose();
            const double q = options.slot_length * G.inner(next);
            const int f = q <= q_prev ? 1 : -1;
            if (!learner.feedback(next, f))
            {
                out.saturated = true;
                break;
            }
            q_prev = q;

            out.cuts_used = i + 1;
            out.probes.push_back(next);
            record();
            if (options.tol > 0.0 && out.errors.back() < options.tol)
            {
                out.reached_tol = true;
                break;
            }
        }
        out.cuts = learner.cuts();
        if (options.tol > 0.0 && !out.errors.empty() && out.errors.back() < options.tol)
            out.reached_tol = true;
        return out;
    }
}
