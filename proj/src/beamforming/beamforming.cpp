// SPDX-License-Identifier: Apache-2.0

#include "wpt/beamforming/beamforming.hpp"
#include "wpt/errors.hpp"
#include "wpt/numerics/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wpt::beamforming
{
    std::vector<double> TransmitDesign::powers() const
    {
        std::vector<double> p;
        p.reserve(S.size());
        for (const auto &s : S)
            p.push_back(s.trace());
        return p;
    }

    double TransmitDesign::total_power() const
    {
        double total = 0.0;
        for (const auto &s : S)
            total += s.trace();
        return total;
    }

    void PowerBudget::validate(int N) const
    {
        require(N >= 1, "PowerBudget: N must be >= 1");
        require(per_subband > 0.0 && std::isfinite(per_subband), "PowerBudget: P_s must be positive");
        require(total > 0.0 && std::isfinite(total), "PowerBudget: P_rf^t must be positive");
        const double slack = 1e-12 * total;
        require(per_subband <= total + slack, "PowerBudget: requires P_s <= P_rf^t");
        require(total <= double(N) * per_subband + slack, "PowerBudget: requires P_rf^t <= N P_s (N' > N)");
    }

    bool is_feasible(const TransmitDesign &design, const PowerBudget &budget, double tol)
    {
        double total = 0.0;
        for (const auto &s : design.S)
        {
            const auto e = numerics::eig_hermitian(s);
            if (e.values.size() > 0 && e.values.minCoeff() < -tol * std::max(1.0, e.values.maxCoeff()))
                return false;
            const double p = s.trace();
            if (p > budget.per_subband * (1.0 + tol))
                return false;
            total += p;
        }
        return total <= budget.total * (1.0 + tol);
    }

    double received_rf_power(const channel::ChannelRealization &ch, const TransmitDesign &design)
    {
        require(design.S.size() == ch.H.size(), "received_rf_power: subband count mismatch");
        double q = 0.0;
        for (std::size_t n = 0; n < ch.H.size(); ++n)
        {
            require(design.S[n].dim() == ch.M_t, "received_rf_power: covariance dimension != M_t");
            q += ch.gram(int(n)).inner(design.S[n]);
        }
        return q;
    }

    OptimalDesign optimal_design(const channel::ChannelRealization &ch, const PowerBudget &budget)
    {
        ch.validate();
        const int N = ch.grid.N;
        budget.validate(N);

        OptimalDesign out;
        std::vector<numerics::CVector> beams(static_cast<std::size_t>(N));
        out.lambda_max.resize(std::size_t(N));
        for (int n = 0; n < N; ++n)
        {
            auto dom = numerics::dominant_eigenpair(ch.gram(n));
            out.lambda_max[std::size_t(n)] = dom.value;
            beams[std::size_t(n)] = std::move(dom.vector);
        }

        out.permutation.resize(std::size_t(N));
        std::iota(out.permutation.begin(), out.permutation.end(), 0);
        std::stable_sort(out.permutation.begin(), out.permutation.end(),
                         [&](int a, int b) { return out.lambda_max[std::size_t(a)] > out.lambda_max[std::size_t(b)]; });

        out.design.S.assign(std::size_t(N), HermitianMatrix::zero(ch.M_t));
        double remaining = budget.total;
        for (int rank = 0; rank < N && remaining > 0.0; ++rank)
        {
            const int n = out.permutation[std::size_t(rank)];
            const double p = std::min(budget.per_subband, remaining);
            remaining -= p;
            out.design.S[std::size_t(n)] = HermitianMatrix::outer(beams[std::size_t(n)]) * p;
            out.received_power += p * out.lambda_max[std::size_t(n)];
        }
        return out;
    }
}
