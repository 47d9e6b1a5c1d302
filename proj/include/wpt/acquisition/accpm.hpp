// SPDX-License-Identifier: Apache-2.0

#ifndef WPT_ACQUISITION_ACCPM_HPP
#define WPT_ACQUISITION_ACCPM_HPP

#include "wpt/numerics/barrier.hpp"
#include "wpt/numerics/hermitian.hpp"
#include "wpt/numerics/rng.hpp"

#include <vector>

namespace wpt::acquisition
{
    using numerics::HermitianMatrix;

    struct AccpmOptions
    {
        int max_cuts = 200;        // tau_max
        double slot_length = 1.0;  // T_s
        double probe_power = 1.0;  // tr(S_i) <= probe_power
        double tol = 0.0;          // stop early once the (oracle-measured) error is below tol; 0 = never
        double random_weight = 1.0; // rho: random component of the probe step
        double recenter_weight = 0.5; // kappa: pull towards the isotropic probe
        double psd_margin = 1e-3;  // min eigenvalue of S_i, relative to probe_power / M_t
    };

    struct AccpmCut
    {
        int feedback = 1;        // f_i: +1 if Q_i <= Q_{i-1}, else -1
        HermitianMatrix step;    // S_i - S_{i-1}
    };

    // Cutting-plane state: G is Hermitian PSD with tr(G) <= 1 and
    // f_i tr(G (S_i - S_{i-1})) <= 0 for every cut. The feedback is invariant to
    // positive scaling of G, so the trace bound is normalized to one.
    class AccpmLearner
    {
    public:
        AccpmLearner(int M_t, const AccpmOptions &options, numerics::RngStream &rng);

        int M_t() const { return m_t_; }
        const HermitianMatrix &estimate() const { return estimate_; } // analytic center
        const HermitianMatrix &probe() const { return probe_; }       // S_i currently transmitted
        const std::vector<AccpmCut> &cuts() const { return cuts_; }
        // Barrier value of the current polyhedron at its analytic center.
        double potential() const { return potential_; }

        // Next probe S_{i+1} with tr(G_hat (S_{i+1} - S_i)) = 0.
        HermitianMatrix propose();
        // Record the one-bit comparison for the proposal and recenter. Returns
        // false, leaving the state untouched, when the cut cannot be resolved in
        // floating point (the set is already pinned down to working precision).
        bool feedback(const HermitianMatrix &next_probe, int f);

        // tr(G (S_i - S_{i-1})) f_i <= 0 for every stored cut.
        bool consistent_with(const HermitianMatrix &G, double tol = 0.0) const;

    private:
        bool recenter(numerics::RVector start);

        int m_t_;
        AccpmOptions opt_;
        numerics::RngStream *rng_;
        numerics::LogBarrier barrier_;
        numerics::RVector x_;
        HermitianMatrix estimate_;
        HermitianMatrix probe_;
        std::vector<AccpmCut> cuts_;
        double potential_ = 0.0;
    };

    struct AccpmResult
    {
        std::vector<HermitianMatrix> estimates; // G_hat after each cut (index 0 = before any cut)
        std::vector<double> errors;             // || G_hat/||G_hat|| - G/||G|| ||_F per entry of estimates
        std::vector<double> potentials;         // analytic-center barrier value per entry
        std::vector<AccpmCut> cuts;
        std::vector<HermitianMatrix> probes;    // S_0, S_1, ...
        int cuts_used = 0;
        bool reached_tol = false;
        bool saturated = false; // stopped early: further cuts below working precision
    };

    // Normalized Frobenius distance between two nonzero Hermitian matrices.
    double normalized_error(const HermitianMatrix &estimate, const HermitianMatrix &truth);

    // Learn G from energy comparisons Q_i = T_s tr(G S_i). The oracle holds the
    // true G; the learner only sees the sign bits.
    AccpmResult accpm_learn(const HermitianMatrix &G, const AccpmOptions &options, numerics::RngStream &rng);
}

#endif
