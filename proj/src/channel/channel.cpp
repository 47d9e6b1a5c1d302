// SPDX-License-Identifier: Apache-2.0

#include "wpt/channel/channel.hpp"
#include "wpt/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace wpt::channel
{
    void FrequencyGrid::validate() const
    {
        require(N >= 1, "FrequencyGrid: N must be >= 1");
        require(delta_f > 0.0, "FrequencyGrid: delta_f must be positive");
        require(f1 > 0.0, "FrequencyGrid: f1 must be positive");
        require(B_s > 0.0, "FrequencyGrid: B_s must be positive");
    }

    void ChannelRealization::validate() const
    {
        grid.validate();
        require(M_t >= 1 && M_r >= 1, "ChannelRealization: antenna counts must be >= 1");
        require(int(H.size()) == grid.N, "ChannelRealization: need one matrix per subband");
        for (const auto &h : H)
        {
            require(h.rows() == M_r && h.cols() == M_t, "ChannelRealization: matrix has wrong shape");
            require(h.allFinite(), "ChannelRealization: non-finite entry");
        }
    }

    CVector ChannelRealization::miso_vector(int n) const
    {
        require(M_r == 1, "miso_vector: channel has more than one receive antenna");
        return H.at(n).row(0).adjoint();
    }

    ChannelRealization gen_rayleigh(int M_t, int M_r, const FrequencyGrid &grid, double beta, numerics::RngStream &rng)
    {
        grid.validate();
        require(beta > 0.0, "gen_rayleigh: beta must be positive");
        require(M_t >= 1 && M_r >= 1, "gen_rayleigh: antenna counts must be >= 1");
        ChannelRealization ch;
        ch.grid = grid;
        ch.M_t = M_t;
        ch.M_r = M_r;
        ch.beta = beta;
        ch.H.reserve(grid.N);
        for (int n = 0; n < grid.N; ++n)
            ch.H.push_back(rng.complex_normal_matrix(M_r, M_t, beta));
        return ch;
    }

    void MultipathSpec::validate(const FrequencyGrid &grid, int M_t, int M_r) const
    {
        require(!paths.empty(), "MultipathSpec: need at least one path");
        const std::size_t expected = std::size_t(grid.N) * std::size_t(M_r) * std::size_t(M_t);
        for (std::size_t l = 0; l < paths.size(); ++l)
        {
            const auto &p = paths[l];
            require(std::isfinite(p.alpha) && p.alpha >= 0.0, "MultipathSpec: path " + std::to_string(l) + " alpha must be >= 0");
            require(std::isfinite(p.tau), "MultipathSpec: path " + std::to_string(l) + " delay must be finite");
            require(p.xi.empty() || p.xi.size() == expected,
                    "MultipathSpec: path " + std::to_string(l) + " phase table must have N*M_r*M_t entries");
        }
    }

    double MultipathSpec::delay_spread() const
    {
        if (paths.empty())
            return 0.0;
        auto [lo, hi] = std::minmax_element(paths.begin(), paths.end(),
                                            [](const Path &a, const Path &b) { return a.tau < b.tau; });
        return hi->tau - lo->tau;
    }

    MultipathSpec ula_multipath(const std::vector<double> &alpha, const std::vector<double> &tau,
                                const std::vector<double> &aod, const std::vector<double> &aoa,
                                const FrequencyGrid &grid, int M_t, int M_r, double spacing_t_m, double spacing_r_m)
    {
        require(alpha.size() == tau.size() && tau.size() == aod.size() && aod.size() == aoa.size(),
                "ula_multipath: per-path vectors must have equal length");
        MultipathSpec spec;
        for (std::size_t l = 0; l < alpha.size(); ++l)
        {
            Path p{alpha[l], tau[l], {}};
            p.xi.resize(std::size_t(grid.N) * M_r * M_t);
            for (int n = 0; n < grid.N; ++n)
            {
                const double k = 2.0 * std::numbers::pi * grid.frequency(n) / kSpeedOfLight;
                for (int i = 0; i < M_r; ++i)
                    for (int m = 0; m < M_t; ++m)
                        p.xi[(std::size_t(n) * M_r + i) * M_t + m] =
                            -k * (m * spacing_t_m * std::sin(aod[l]) - i * spacing_r_m * std::sin(aoa[l]));
            }
            spec.paths.push_back(std::move(p));
        }
        return spec;
    }

    ChannelRealization gen_multipath(const MultipathSpec &spec, const FrequencyGrid &grid, int M_t, int M_r)
    {
        grid.validate();
        require(M_t >= 1 && M_r >= 1, "gen_multipath: antenna counts must be >= 1");
        spec.validate(grid, M_t, M_r);
        ChannelRealization ch;
        ch.grid = grid;
        ch.M_t = M_t;
        ch.M_r = M_r;
        ch.narrowband_violation = spec.delay_spread() * grid.B_s > 0.1;
        for (int n = 0; n < grid.N; ++n)
        {
            CMatrix h = CMatrix::Zero(M_r, M_t);
            const double fn = grid.frequency(n);
            for (const auto &p : spec.paths)
            {
                const cplx delay = std::polar(1.0, -2.0 * std::numbers::pi * fn * p.tau);
                for (int i = 0; i < M_r; ++i)
                    for (int m = 0; m < M_t; ++m)
                    {
                        const double xi = p.xi.empty() ? 0.0 : p.xi[(std::size_t(n) * M_r + i) * M_t + m];
                        h(i, m) += p.alpha * std::polar(1.0, xi) * delay;
                    }
            }
            ch.H.push_back(std::move(h));
        }
        return ch;
    }

    void Placement::validate() const
    {
        require(!transmitters.empty(), "Placement: need at least one transmitter");
        require(!receivers.empty(), "Placement: need at least one receiver");
        require(spacing_wavelengths > 0.0, "Placement: element spacing must be positive");
        require(gain_tx > 0.0 && gain_rx > 0.0, "Placement: antenna gains must be positive");
    }

    Point ula_element(const Placement &p, const Point &centre, int m, int M_t, double lambda)
    {
        const double offset = (double(m) - 0.5 * double(M_t - 1)) * p.spacing_wavelengths * lambda;
        return {centre.x + offset * std::cos(p.orientation_rad), centre.y + offset * std::sin(p.orientation_rad)};
    }

    CVector los_row(const Placement &placement, const Point &receiver, double frequency, int M_t, double min_distance)
    {
        const double lambda = kSpeedOfLight / frequency;
        const double amp0 = std::sqrt(placement.gain_tx * placement.gain_rx) * lambda / (4.0 * std::numbers::pi);
        const int J = int(placement.transmitters.size());
        CVector row(J * M_t);
        for (int j = 0; j < J; ++j)
            for (int m = 0; m < M_t; ++m)
            {
                const Point e = ula_element(placement, placement.transmitters[j], m, M_t, lambda);
                double d = std::hypot(receiver.x - e.x, receiver.y - e.y);
                if (min_distance > 0.0)
                    d = std::max(d, min_distance);
                require(d > 0.0, "gen_los_ula: receiver coincides with a transmit element");
                row(j * M_t + m) = std::polar(amp0 / d, -2.0 * std::numbers::pi * d / lambda);
            }
        return row;
    }

    ChannelRealization gen_los_ula(const Placement &placement, const FrequencyGrid &grid, int M_t)
    {
        placement.validate();
        grid.validate();
        require(M_t >= 1, "gen_los_ula: M_t must be >= 1");
        const int J = int(placement.transmitters.size());
        const int K = int(placement.receivers.size());
        ChannelRealization ch;
        ch.grid = grid;
        ch.M_t = J * M_t;
        ch.M_r = K;
        for (int n = 0; n < grid.N; ++n)
        {
            CMatrix h(K, J * M_t);
            for (int k = 0; k < K; ++k)
                h.row(k) = los_row(placement, placement.receivers[k], grid.frequency(n), M_t).transpose();
            ch.H.push_back(std::move(h));
        }
        return ch;
    }

    ChannelRealization reverse_link(const ChannelRealization &forward)
    {
        ChannelRealization rev = forward;
        std::swap(rev.M_t, rev.M_r);
        for (std::size_t n = 0; n < rev.H.size(); ++n)
            rev.H[n] = forward.H[n].transpose();
        return rev;
    }
}
