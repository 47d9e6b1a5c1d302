// SPDX-License-Identifier: Apache-2.0

#ifndef WPT_POWERREGION_POWERREGION_HPP
#define WPT_POWERREGION_POWERREGION_HPP

#include "wpt/channel/channel.hpp"
#include "wpt/numerics/hermitian.hpp"

#include <vector>

namespace wpt::powerregion
{
    using numerics::CMatrix;
    using numerics::CVector;
    using numerics::HermitianMatrix;

    // J cooperating ETs with M_t antennas each, serving K ERs. H[k] is ER k's
    // M_r x (J M_t) channel to all ET antennas, ET-major.
    struct NetworkTopology
    {
        int J = 1;
        int M_t = 1;
        std::vector<double> P; // per-ET power limits P_rf,j^t
        std::vector<CMatrix> H;

        int K() const { return int(H.size()); }
        int dim() const { return J * M_t; }
        void validate() const;
        HermitianMatrix gram(int k) const { return HermitianMatrix::gram(H[std::size_t(k)]); }
        // E_j: ones on the diagonal block of ET j
        HermitianMatrix selector(int j) const;
    };

    // Single-antenna ERs and one channel snapshot at `frequency`, from a placement.
    NetworkTopology topology_from_placement(const channel::Placement &placement, double frequency, int M_t,
                                            const std::vector<double> &P);

    // tr(R S) <= eta
    struct SarConstraint
    {
        HermitianMatrix R;
        double eta = 0.0;
    };

    struct PowerRegionPoint
    {
        std::vector<double> Q; // tr(H_k^H H_k S)
        HermitianMatrix S;
        std::vector<double> weights; // mu or alpha used
        double objective = 0.0;      // weighted sum (wspmax) or common level Q (power profile)
    };

    struct RegionOptions
    {
        double tol = 1e-9;
        std::vector<SarConstraint> sar;
    };

    // Received power of every ER for a covariance S.
    std::vector<double> received_powers(const NetworkTopology &topo, const HermitianMatrix &S);

    // max sum_k mu_k tr(H_k^H H_k S) s.t. tr(E_j S) <= P_j, SAR, S >= 0.
    PowerRegionPoint wspmax(const NetworkTopology &topo, const std::vector<double> &mu, const RegionOptions &opt = {});

    // max Q s.t. tr(H_k^H H_k S) >= alpha_k Q, tr(E_j S) <= P_j, SAR, S >= 0.
    PowerRegionPoint power_profile(const NetworkTopology &topo, const std::vector<double> &alpha,
                                   const RegionOptions &opt = {});

    // Two-ER boundary from the power-profile sweep alpha_1 = i/(resolution-1),
    // sorted by Q_1 ascending.
    std::vector<PowerRegionPoint> trace_boundary(const NetworkTopology &topo, int resolution,
                                                 const RegionOptions &opt = {}, unsigned workers = 1);
    // Same sweep over mu_1, for cross-checking (finds vertex points only).
    std::vector<PowerRegionPoint> wspmax_sweep(const NetworkTopology &topo, int resolution,
                                               const RegionOptions &opt = {}, unsigned workers = 1);

    struct TimeShareBeam
    {
        double fraction = 0.0; // lambda_i / sum lambda
        double power = 0.0;    // transmit power during the interval
        CVector w;             // unit beam
    };

    // Eigen-split of a single-ET covariance into rank-1 beams used in turn.
    // Requires tr(S) == P to 1e-6 relative; eigenvalues below 1e-10 lambda_1 are dropped.
    std::vector<TimeShareBeam> time_share_decompose(const HermitianMatrix &S, double P);

    // sum_i fraction_i power_i w_i^H G w_i
    double time_shared_power(const std::vector<TimeShareBeam> &beams, const HermitianMatrix &G);
}

#endif
