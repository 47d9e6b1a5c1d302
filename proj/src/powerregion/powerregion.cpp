// SPDX-License-Identifier: Apache-2.0

#include "wpt/powerregion/powerregion.hpp"
#include "wpt/errors.hpp"
#include "wpt/numerics/eig.hpp"
#include "wpt/numerics/parallel.hpp"
#include "wpt/numerics/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wpt::powerregion
{
    using numerics::Relation;
    using numerics::SdpConstraint;
    using numerics::SdpProblem;

    void NetworkTopology::validate() const
    {
        require(J >= 1, "NetworkTopology: J must be >= 1");
        require(M_t >= 1, "NetworkTopology: M_t must be >= 1");
        require(int(P.size()) == J, "NetworkTopology: need one power limit per ET");
        for (double p : P)
            require(p > 0.0 && std::isfinite(p), "NetworkTopology: power limits must be positive");
        require(!H.empty(), "NetworkTopology: need at least one ER");
        for (const auto &h : H)
        {
            require(h.cols() == dim(), "NetworkTopology: channel width must be J * M_t");
            require(h.rows() >= 1, "NetworkTopology: channel needs at least one receive antenna");
            require(h.allFinite(), "NetworkTopology: non-finite channel entry");
        }
    }

    HermitianMatrix NetworkTopology::selector(int j) const
    {
        require(j >= 0 && j < J, "NetworkTopology::selector: ET index out of range");
        numerics::RMatrix e = numerics::RMatrix::Zero(dim(), dim());
        for (int m = 0; m < M_t; ++m)
            e(j * M_t + m, j * M_t + m) = 1.0;
        return HermitianMatrix(e);
    }

    NetworkTopology topology_from_placement(const channel::Placement &placement, double frequency, int M_t,
                                            const std::vector<double> &P)
    {
        channel::FrequencyGrid grid;
        grid.N = 1;
        grid.f1 = frequency;
        const auto ch = channel::gen_los_ula(placement, grid, M_t);
        NetworkTopology topo;
        topo.J = int(placement.transmitters.size());
        topo.M_t = M_t;
        topo.P = P;
        for (Eigen::Index k = 0; k < ch.H[0].rows(); ++k)
            topo.H.push_back(ch.H[0].row(k));
        topo.validate();
        return topo;
    }

    std::vector<double> received_powers(const NetworkTopology &topo, const HermitianMatrix &S)
    {
        require(S.dim() == topo.dim(), "received_powers: covariance dimension mismatch");
        std::vector<double> q;
        for (int k = 0; k < topo.K(); ++k)
            q.push_back(topo.gram(k).inner(S));
        return q;
    }

    namespace
    {
        void check_simplex(const std::vector<double> &w, int K, const char *what)
        {
            require(int(w.size()) == K, std::string(what) + ": need one weight per ER");
            double sum = 0.0;
            for (double x : w)
            {
                require(x >= 0.0 && std::isfinite(x), std::string(what) + ": weights must be non-negative");
                sum += x;
            }
            require(std::abs(sum - 1.0) <= 1e-9, std::string(what) + ": weights must sum to 1");
        }

        // Problem data rescaled so the largest channel eigenvalue and the largest
        // per-ET budget are both one.
        struct Scaled
        {
            double g = 1.0; // multiply G_k
            double p = 1.0; // divide powers
            std::vector<HermitianMatrix> G;
            std::vector<SdpConstraint> budget;
        };

        Scaled scale(const NetworkTopology &topo, const RegionOptions &opt)
        {
            topo.validate();
            Scaled s;
            double lmax = 0.0;
            for (int k = 0; k < topo.K(); ++k)
            {
                s.G.push_back(topo.gram(k));
                lmax = std::max(lmax, numerics::eig_hermitian(s.G.back()).values(0));
            }
            if (lmax > 0.0)
                s.g = 1.0 / lmax;
            for (auto &g : s.G)
                g = g * s.g;
            s.p = *std::max_element(topo.P.begin(), topo.P.end());

            for (int j = 0; j < topo.J; ++j)
                s.budget.push_back({topo.selector(j), {}, Relation::LessEqual, topo.P[std::size_t(j)] / s.p});
            for (const auto &sar : opt.sar)
            {
                require(sar.R.dim() == topo.dim(), "SarConstraint: matrix dimension mismatch");
                require(sar.eta >= 0.0, "SarConstraint: limit must be non-negative");
                const double n = sar.R.frobenius_norm();
                require(n > 0.0, "SarConstraint: zero matrix");
                require(numerics::eig_hermitian(sar.R).values.minCoeff() >= -1e-12 * n, "SarConstraint: R must be PSD");
                s.budget.push_back({sar.R * (1.0 / n), {}, Relation::LessEqual, sar.eta / (s.p * n)});
            }
            return s;
        }
    }

    PowerRegionPoint wspmax(const NetworkTopology &topo, const std::vector<double> &mu, const RegionOptions &opt)
    {
        check_simplex(mu, topo.K(), "wspmax");
        const Scaled s = scale(topo, opt);

        SdpProblem prob;
        prob.objective = HermitianMatrix::zero(topo.dim());
        for (int k = 0; k < topo.K(); ++k)
            prob.objective += s.G[std::size_t(k)] * mu[std::size_t(k)];
        prob.constraints = s.budget;
        const auto sol = numerics::solve_sdp(prob, opt.tol);

        PowerRegionPoint out;
        out.S = sol.S * s.p;
        out.Q = received_powers(topo, out.S);
        out.weights = mu;
        out.objective = sol.objective * s.p / s.g;
        return out;
    }

    PowerRegionPoint power_profile(const NetworkTopology &topo, const std::vector<double> &alpha,
                                   const RegionOptions &opt)
    {
        check_simplex(alpha, topo.K(), "power_profile");
        const Scaled s = scale(topo, opt);

        SdpProblem prob;
        prob.objective = HermitianMatrix::zero(topo.dim());
        prob.scalar_objective = {1.0};
        prob.constraints = s.budget;
        for (int k = 0; k < topo.K(); ++k)
        {
            const double a = alpha[std::size_t(k)];
            if (a > 0.0) // alpha_k = 0 leaves tr(G_k S) >= 0, implied by S >= 0
                prob.constraints.push_back({s.G[std::size_t(k)], {-a}, Relation::GreaterEqual, 0.0});
        }
        const auto sol = numerics::solve_sdp(prob, opt.tol);

        PowerRegionPoint out;
        out.S = sol.S * s.p;
        out.Q = received_powers(topo, out.S);
        out.weights = alpha;
        out.objective = sol.scalars[0] * s.p / s.g;
        return out;
    }

    namespace
    {
        template <class Solve>
        std::vector<PowerRegionPoint> sweep(const NetworkTopology &topo, int resolution, unsigned workers, Solve solve)
        {
            require(topo.K() == 2, "boundary sweep: needs exactly two ERs");
            require(resolution >= 2, "boundary sweep: resolution must be >= 2");
            std::vector<PowerRegionPoint> pts(static_cast<std::size_t>(resolution));
            numerics::parallel_for(pts.size(), workers,
                                   [&](std::size_t i)
                                   {
                                       const double a = double(i) / double(resolution - 1);
                                       pts[i] = solve(std::vector<double>{a, 1.0 - a});
                                   });
            std::stable_sort(pts.begin(), pts.end(),
                             [](const PowerRegionPoint &x, const PowerRegionPoint &y) { return x.Q[0] < y.Q[0]; });
            return pts;
        }
    }

    std::vector<PowerRegionPoint> trace_boundary(const NetworkTopology &topo, int resolution, const RegionOptions &opt,
                                                 unsigned workers)
    {
        return sweep(topo, resolution, workers, [&](const std::vector<double> &a) { return power_profile(topo, a, opt); });
    }

    std::vector<PowerRegionPoint> wspmax_sweep(const NetworkTopology &topo, int resolution, const RegionOptions &opt,
                                               unsigned workers)
    {
        return sweep(topo, resolution, workers, [&](const std::vector<double> &m) { return wspmax(topo, m, opt); });
    }

    std::vector<TimeShareBeam> time_share_decompose(const HermitianMatrix &S, double P)
    {
        require(P > 0.0, "time_share_decompose: power must be positive");
        require(std::abs(S.trace() - P) <= 1e-6 * P, "time_share_decompose: requires tr(S) == P (full power)");
        const auto e = numerics::eig_hermitian(S);
        const double l1 = e.values(0);
        require(l1 > 0.0, "time_share_decompose: covariance has no positive eigenvalue");

        std::vector<TimeShareBeam> beams;
        double kept = 0.0;
        for (Eigen::Index i = 0; i < e.values.size(); ++i)
            if (e.values(i) > 1e-10 * l1)
            {
                kept += e.values(i);
                beams.push_back({e.values(i), 0.0, e.vectors.col(i)});
            }
        for (auto &b : beams)
        {
            b.fraction /= kept;
            b.power = kept;
        }
        return beams;
    }

    double time_shared_power(const std::vector<TimeShareBeam> &beams, const HermitianMatrix &G)
    {
        double q = 0.0;
        for (const auto &b : beams)
            q += b.fraction * b.power * G.quadratic_form(b.w);
        return q;
    }
}
