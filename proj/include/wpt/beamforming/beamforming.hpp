// SPDX-License-Identifier: Apache-2.0

#ifndef WPT_BEAMFORMING_BEAMFORMING_HPP
#define WPT_BEAMFORMING_BEAMFORMING_HPP

#include "wpt/channel/channel.hpp"
#include "wpt/numerics/hermitian.hpp"

#include <vector>

namespace wpt::beamforming
{
    using numerics::HermitianMatrix;

    // Per-subband transmit covariances S_n (M_t x M_t, PSD).
    struct TransmitDesign
    {
        std::vector<HermitianMatrix> S;

        std::vector<double> powers() const; // p_n = tr(S_n)
        double total_power() const;
    };

    // Total transmit power P_rf^t and per-subband limit P_s,
    // with P_s <= P_rf^t <= N P_s.
    struct PowerBudget
    {
        double total = 1.0;
        double per_subband = 1.0;

        void validate(int N) const;
        // P_rf^t / P_s; need not be an integer.
        double active_subbands() const { return total / per_subband; }
    };

    // True if every S_n is PSD (to tol) and both power limits hold (to tol, relative).
    bool is_feasible(const TransmitDesign &design, const PowerBudget &budget, double tol = 1e-9);

    // sum_n tr(H_n^H H_n S_n)
    double received_rf_power(const channel::ChannelRealization &ch, const TransmitDesign &design);

    struct OptimalDesign
    {
        TransmitDesign design;
        double received_power = 0.0;
        // Subband indices sorted by lambda_max(H_n^H H_n) descending, ties by lower index.
        std::vector<int> permutation;
        std::vector<double> lambda_max; // per subband, natural order
    };

    // Rank-1 dominant-eigenvector beam on the strongest subbands: P_s on each of
    // the floor(P/P_s) strongest, the remainder on the next one, zero elsewhere.
    OptimalDesign optimal_design(const channel::ChannelRealization &ch, const PowerBudget &budget);
}

#endif
