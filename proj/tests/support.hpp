// SPDX-License-Identifier: Apache-2.0

#ifndef WPT_TESTS_SUPPORT_HPP
#define WPT_TESTS_SUPPORT_HPP

#include "wpt/numerics/hermitian.hpp"
#include "wpt/numerics/rng.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace wpt::test
{
    inline double rel_err(double got, double want)
    {
        return std::abs(got - want) / std::max(std::abs(want), 1e-300);
    }

    // Random PSD matrix of the given rank (full rank by default).
    inline numerics::HermitianMatrix random_psd(numerics::RngStream &rng, Eigen::Index dim, Eigen::Index rank = -1)
    {
        if (rank < 0)
            rank = dim;
        return numerics::HermitianMatrix::gram(rng.complex_normal_matrix(rank, dim, 1.0));
    }

    // Reference eigenvalues from Eigen, descending.
    inline numerics::RVector eigen_values_desc(const numerics::HermitianMatrix &m)
    {
        Eigen::SelfAdjointEigenSolver<numerics::CMatrix> es(m.matrix());
        return es.eigenvalues().reverse();
    }

    inline double lambda_max(const numerics::HermitianMatrix &m) { return eigen_values_desc(m)(0); }

    // Random PSD matrix with trace `power` and random rank.
    inline numerics::HermitianMatrix random_covariance(numerics::RngStream &rng, Eigen::Index dim, double power)
    {
        const auto rank = 1 + Eigen::Index(rng.next_u64() % std::uint64_t(dim));
        const auto w = random_psd(rng, dim, rank);
        return w * (power / w.trace());
    }

    // Per-subband powers with sum <= total and each <= per_subband. Mixes
    // interior points with "fill the strongest-looking subbands" vertices.
    inline std::vector<double> random_power_split(numerics::RngStream &rng, int N, double total, double per_subband)
    {
        std::vector<double> p(static_cast<std::size_t>(N), 0.0);
        if (rng.uniform() < 0.3)
        {
            // random order, greedy fill to the limits
            std::vector<int> order(static_cast<std::size_t>(N));
            for (int n = 0; n < N; ++n)
                order[std::size_t(n)] = n;
            std::shuffle(order.begin(), order.end(), rng.engine());
            double left = total;
            for (int n : order)
            {
                p[std::size_t(n)] = std::min(per_subband, left);
                left -= p[std::size_t(n)];
            }
            return p;
        }
        double sum = 0.0;
        for (auto &x : p)
            sum += x = -std::log(1.0 - rng.uniform());
        const double scale = total * std::pow(rng.uniform(), 0.25) / sum;
        double peak = 0.0;
        for (auto &x : p)
            peak = std::max(peak, x *= scale);
        if (peak > per_subband)
            for (auto &x : p)
                x *= per_subband / peak;
        return p;
    }
}

#endif
