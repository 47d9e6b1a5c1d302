// SPDX-License-Identifier: Apache-2.0

#ifndef WPT_ACQUISITION_TRAINING_HPP
#define WPT_ACQUISITION_TRAINING_HPP

#include "wpt/numerics/rng.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace wpt::acquisition
{
    // Reverse-link training over one coherence block of length T: the ER sends
    // pilots from M_r' of its antennas with total energy p_r tau, the ET
    // estimates the channel and beamforms with power P_rf^t for the remaining
    // T - tau.
    struct TrainingConfig
    {
        double T = 1.0;
        double tau = 0.0;
        double p_r = 0.0;
        int M_r_prime = 1;
        double sigma2 = 1.0; // ET receiver noise power
        double beta = 1.0;   // channel variance
        double P_t = 1.0;    // ET transmit power

        void validate(int M_r) const;
    };

    struct LambdaEstimate
    {
        double mean = 0.0;
        double stderr_ = 0.0; // zero for the closed-form cases
        std::int64_t trials = 0;
    };

    // Lambda(M_t, M_r') = E[lambda_max(X^H X)], X an M_r' x M_t matrix of
    // i.i.d. CN(0, 1) entries. Exact for min(M_t, M_r') == 1, Monte-Carlo otherwise.
    LambdaEstimate lambda_stat(int M_t, int M_r_prime, std::int64_t trials, numerics::RngStream &rng);

    // Memoized lambda_stat keyed by (M_t, M_r'). Each key draws from its own
    // stream, so values do not depend on lookup order. Thread-safe.
    class LambdaTable
    {
    public:
        LambdaTable(std::uint64_t seed, std::int64_t trials);
        LambdaEstimate get(int M_t, int M_r_prime);

    private:
        std::uint64_t seed_;
        std::int64_t trials_;
        std::mutex mutex_;
        std::map<std::pair<int, int>, LambdaEstimate> cache_;
    };

    // Average harvested energy
    //   (T - tau) P_t beta [ (p_r tau beta L + sigma2 M_r'^2) / (p_r tau beta + sigma2 M_r') + M_r - M_r' ]
    // with L = Lambda(M_t, M_r'). The bracket's first term is M_r' when p_r tau == 0.
    double avg_harvested_energy(const TrainingConfig &cfg, int M_r, double lambda);

    // Same with perfect CSI (p_r tau -> infinity at fixed tau).
    double perfect_csi_energy(const TrainingConfig &cfg, int M_r, double lambda);

    struct TrainingGrid
    {
        std::vector<double> tau;
        std::vector<double> p_r;
        std::vector<int> M_r_prime;
    };
    // tau = T k/64 (k = 1..64), p_r = p_max k/63 (k = 0..63), M_r' = 1..M_r.
    TrainingGrid default_training_grid(double T, double p_max, int M_r);

    struct TradeoffRow
    {
        double tau;
        double p_r;
        int M_r_prime;
        double energy;     // Q
        double net_energy; // Q - p_r tau
    };

    struct TrainingResult
    {
        TrainingConfig best;
        double energy = 0.0;
        double net_energy = 0.0;
        std::vector<TradeoffRow> rows; // every grid point, tau-major
        // Best net energy at each tau over the other grid axes.
        std::vector<TradeoffRow> tau_curve;
    };

    // Exhaustive grid search for max Q - p_r tau. Ties keep the first point in
    // (tau, p_r, M_r') order.
    TrainingResult optimize_training(int M_t, int M_r, const TrainingConfig &base, const TrainingGrid &grid,
                                     LambdaTable &lambda);

    struct PipelineEstimate
    {
        double mean = 0.0;
        double stderr_ = 0.0;
        std::int64_t trials = 0;
    };

    // End-to-end simulation: Rayleigh H (M_r x M_t), per-antenna pilots of energy
    // p_r tau / M_r' received through the reverse link H^T, per-entry MMSE
    // estimate, dominant-eigenvector beam of the estimated H'^H H', and the
    // energy actually delivered over T - tau.
    PipelineEstimate simulate_training_pipeline(const TrainingConfig &cfg, int M_t, int M_r, std::int64_t trials,
                                                numerics::RngStream &rng);
}

#endif
