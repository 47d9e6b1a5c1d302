// SPDX-License-Identifier: Apache-2.0

#include "wpt/acquisition/training.hpp"
#include "wpt/channel/channel.hpp"
#include "wpt/errors.hpp"
#include "wpt/numerics/eig.hpp"

#include <cmath>

namespace wpt::acquisition
{
    using numerics::CMatrix;
    using numerics::CVector;
    using numerics::HermitianMatrix;

    void TrainingConfig::validate(int M_r) const
    {
        require(T > 0.0 && std::isfinite(T), "TrainingConfig: T must be positive");
        require(tau >= 0.0 && tau <= T, "TrainingConfig: requires 0 <= tau <= T");
        require(p_r >= 0.0 && std::isfinite(p_r), "TrainingConfig: p_r must be non-negative");
        require(M_r >= 1, "TrainingConfig: M_r must be >= 1");
        require(M_r_prime >= 1 && M_r_prime <= M_r, "TrainingConfig: requires 1 <= M_r' <= M_r");
        require(sigma2 >= 0.0, "TrainingConfig: sigma2 must be non-negative");
        require(beta > 0.0, "TrainingConfig: beta must be positive");
        require(P_t >= 0.0, "TrainingConfig: P_t must be non-negative");
    }

    LambdaEstimate lambda_stat(int M_t, int M_r_prime, std::int64_t trials, numerics::RngStream &rng)
    {
        require(M_t >= 1 && M_r_prime >= 1, "lambda_stat: dimensions must be >= 1");
        require(trials >= 10000, "lambda_stat: need at least 1e4 trials");
        if (M_t == 1 || M_r_prime == 1)
            return {double(std::max(M_t, M_r_prime)), 0.0, 0};

        double sum = 0.0, sumsq = 0.0;
        for (std::int64_t t = 0; t < trials; ++t)
        {
            const CMatrix x = rng.complex_normal_matrix(M_r_prime, M_t, 1.0);
            // nonzero spectrum of X^H X equals that of X X^H; use the smaller one
            const CMatrix g = M_r_prime < M_t ? CMatrix(x * x.adjoint()) : CMatrix(x.adjoint() * x);
            const double l = numerics::eig_hermitian(HermitianMatrix(g)).values(0);
            sum += l;
            sumsq += l * l;
        }
        const double n = double(trials);
        const double mean = sum / n;
        return {mean, std::sqrt(std::max(0.0, sumsq / n - mean * mean) / (n - 1.0)), trials};
    }

    LambdaTable::LambdaTable(std::uint64_t seed, std::int64_t trials) : seed_(seed), trials_(trials) {}

    LambdaEstimate LambdaTable::get(int M_t, int M_r_prime)
    {
        const auto key = std::make_pair(M_t, M_r_prime);
        {
            std::lock_guard lock(mutex_);
            if (auto it = cache_.find(key); it != cache_.end())
                return it->second;
        }
        numerics::RngStream rng(seed_, (std::uint64_t(M_t) << 32) | std::uint64_t(M_r_prime));
        const LambdaEstimate est = lambda_stat(M_t, M_r_prime, trials_, rng);
        std::lock_guard lock(mutex_);
        return cache_.emplace(key, est).first->second;
    }

    double avg_harvested_energy(const TrainingConfig &cfg, int M_r, double lambda)
    {
        cfg.validate(M_r);
        const double mp = cfg.M_r_prime;
        const double e = cfg.p_r * cfg.tau * cfg.beta;
        const double den = e + cfg.sigma2 * mp;
        const double trained = den > 0.0 ? (e * lambda + cfg.sigma2 * mp * mp) / den : mp;
        return (cfg.T - cfg.tau) * cfg.P_t * cfg.beta * (trained + double(M_r) - mp);
    }

    double perfect_csi_energy(const TrainingConfig &cfg, int M_r, double lambda)
    {
        cfg.validate(M_r);
        return (cfg.T - cfg.tau) * cfg.P_t * cfg.beta * (lambda + double(M_r - cfg.M_r_prime));
    }

    TrainingGrid default_training_grid(double T, double p_max, int M_r)
    {
        require(T > 0.0 && p_max >= 0.0 && M_r >= 1, "default_training_grid: invalid arguments");
        TrainingGrid g;
        for (int k = 1; k <= 64; ++k)
            g.tau.push_back(T * k / 64.0);
        for (int k = 0; k <= 63; ++k)
            g.p_r.push_back(p_max * k / 63.0);
        for (int m = 1; m <= M_r; ++m)
            g.M_r_prime.push_back(m);
        return g;
    }

    TrainingResult optimize_training(int M_t, int M_r, const TrainingConfig &base, const TrainingGrid &grid,
                                     LambdaTable &lambda)
    {
        require(!grid.tau.empty() && !grid.p_r.empty() && !grid.M_r_prime.empty(),
                "optimize_training: grids must be nonempty");
        require(M_t >= 1, "optimize_training: M_t must be >= 1");

        std::vector<double> lam;
        for (int mp : grid.M_r_prime)
        {
            require(mp >= 1 && mp <= M_r, "optimize_training: M_r' grid value out of range");
            lam.push_back(lambda.get(M_t, mp).mean);
        }

        TrainingResult out;
        bool have_best = false;
        for (double tau : grid.tau)
        {
            TradeoffRow tau_best{};
            bool have_tau = false;
            for (double p_r : grid.p_r)
                for (std::size_t j = 0; j < grid.M_r_prime.size(); ++j)
                {
                    TrainingConfig cfg = base;
                    cfg.tau = tau;
                    cfg.p_r = p_r;
                    cfg.M_r_prime = grid.M_r_prime[j];
                    const double q = avg_harvested_energy(cfg, M_r, lam[j]);
                    const TradeoffRow row{tau, p_r, cfg.M_r_prime, q, q - p_r * tau};
                    out.rows.push_back(row);
                    if (!have_tau || row.net_energy > tau_best.net_energy)
                    {
                        tau_best = row;
                        have_tau = true;
                    }
                    if (!have_best || row.net_energy > out.net_energy)
                    {
                        out.best = cfg;
                        out.energy = q;
                        out.net_energy = row.net_energy;
                        have_best = true;
                    }
                }
            out.tau_curve.push_back(tau_best);
        }
        return out;
    }

    PipelineEstimate simulate_training_pipeline(const TrainingConfig &cfg, int M_t, int M_r, std::int64_t trials,
                                                numerics::RngStream &rng)
    {
        cfg.validate(M_r);
        require(M_t >= 1, "simulate_training_pipeline: M_t must be >= 1");
        require(trials >= 1, "simulate_training_pipeline: trials must be >= 1");

        channel::FrequencyGrid grid;
        const int mp = cfg.M_r_prime;
        const double e = cfg.p_r * cfg.tau / mp; // pilot energy per trained antenna
        const double gain = e * cfg.beta + cfg.sigma2 > 0.0 ? std::sqrt(e) * cfg.beta / (e * cfg.beta + cfg.sigma2) : 0.0;

        double sum = 0.0, sumsq = 0.0;
        for (std::int64_t t = 0; t < trials; ++t)
        {
            const auto fwd = channel::gen_rayleigh(M_t, M_r, grid, cfg.beta, rng);
            const CMatrix rev = channel::reverse_link(fwd).H[0]; // M_t x M_r

            // Pilot from ER antenna i arrives as column i of H^T.
            CMatrix est(mp, M_t);
            for (int i = 0; i < mp; ++i)
            {
                CVector y = std::sqrt(e) * rev.col(i);
                for (int m = 0; m < M_t; ++m)
                    y(m) += rng.complex_normal(cfg.sigma2);
                est.row(i) = gain * y.transpose();
            }

            CVector w;
            if (e > 0.0)
                w = numerics::dominant_eigenpair(HermitianMatrix::gram(est)).vector;
            else
            {
                w = CVector::Zero(M_t); // no training: fixed beam
                w(0) = 1.0;
            }

            const double q = (cfg.T - cfg.tau) * cfg.P_t * (fwd.H[0] * w).squaredNorm();
            sum += q;
            sumsq += q * q;
        }
        const double n = double(trials);
        const double mean = sum / n;
        return {mean, trials > 1 ? std::sqrt(std::max(0.0, sumsq / n - mean * mean) / (n - 1.0)) : 0.0, trials};
    }
}
