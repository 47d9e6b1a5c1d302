// SPDX-License-Identifier: Apache-2.0

#include "wpt/rectenna/rectenna.hpp"
#include "wpt/errors.hpp"

#include <cmath>
#include <string>

namespace wpt::rectenna
{
    double RectennaModel::k(int i) const
    {
        require(i >= 0, "RectennaModel::k: order must be non-negative");
        double factorial = 1.0;
        for (int j = 2; j <= i; ++j)
            factorial *= j;
        return i_s / (factorial * std::pow(n_f * v_t, i));
    }

    void RectennaModel::validate() const
    {
        require(i_s > 0.0, "RectennaModel: i_s must be positive");
        require(n_f > 0.0, "RectennaModel: n_f must be positive");
        require(v_t > 0.0, "RectennaModel: v_t must be positive");
        require(R_ant > 0.0, "RectennaModel: R_ant must be positive");
        require(n_o >= 2 && n_o % 2 == 0, "RectennaModel: n_o must be an even integer >= 2");
        if (n_o > 4)
            throw UnsupportedOrderError("RectennaModel: truncation order " + std::to_string(n_o) +
                                        " not supported (max 4)");
    }

    double second_moment(std::span<const cplx> c)
    {
        double s = 0.0;
        for (const auto &x : c)
            s += std::norm(x);
        return s;
    }

    double fourth_moment(std::span<const cplx> c)
    {
        const std::size_t n = c.size();
        if (n == 0)
            return 0.0;
        double acc = 0.0;
        for (std::size_t k = 0; k + 1 < 2 * n; ++k)
        {
            cplx u = 0.0;
            const std::size_t lo = k >= n ? k - n + 1 : 0;
            const std::size_t hi = std::min(k, n - 1);
            for (std::size_t i = lo; i <= hi; ++i)
                u += c[i] * c[k - i];
            acc += std::norm(u);
        }
        return 1.5 * acc;
    }

    ZdcTerms z_dc(const RectennaModel &model, std::span<const cplx> received)
    {
        model.validate();
        ZdcTerms z;
        z.second = model.k(2) * model.R_ant * second_moment(received);
        if (model.n_o == 4)
            z.fourth = model.k(4) * model.R_ant * model.R_ant * fourth_moment(received);
        return z;
    }

    double f_sum(std::span<const double> s)
    {
        std::vector<cplx> c(s.begin(), s.end());
        return fourth_moment(c) / 1.5;
    }

    std::int64_t f_sum_term_count(int N)
    {
        require(N >= 0, "f_sum_term_count: N must be non-negative");
        const std::int64_t n = N;
        return n * (2 * n * n + 1) / 3;
    }

    std::vector<ScalingPoint> scaling_curve(const RectennaModel &model, std::span<const int> Ns, double P)
    {
        require(P >= 0.0, "scaling_curve: received power must be non-negative");
        std::vector<ScalingPoint> out;
        for (int N : Ns)
        {
            require(N >= 1, "scaling_curve: N must be >= 1");
            std::vector<cplx> c(std::size_t(N), cplx(std::sqrt(P / N), 0.0));
            out.push_back({N, z_dc(model, c)});
        }
        return out;
    }

    double regime_boundary(const RectennaModel &model, int N, double G)
    {
        model.validate();
        require(N >= 1, "regime_boundary: N must be >= 1");
        require(G > 0.0, "regime_boundary: G must be positive");
        if (std::isinf(G))
            return 0.0;
        return model.k(2) / (model.k(4) * model.R_ant * double(N) * G);
    }

    ModulatedEstimate z_dc_modulated_expectation(const RectennaModel &model, int N, double P, std::int64_t trials,
                                                 numerics::RngStream &rng)
    {
        model.validate();
        require(N >= 1, "z_dc_modulated_expectation: N must be >= 1");
        require(P >= 0.0, "z_dc_modulated_expectation: power must be non-negative");
        require(trials >= 10000, "z_dc_modulated_expectation: need at least 1e4 trials");

        double s2 = 0.0, s2sq = 0.0, s4 = 0.0, s4sq = 0.0;
        std::vector<cplx> c(static_cast<std::size_t>(N));
        for (std::int64_t t = 0; t < trials; ++t)
        {
            for (auto &x : c)
                x = rng.complex_normal(P / N);
            const ZdcTerms z = z_dc(model, c);
            s2 += z.second;
            s2sq += z.second * z.second;
            s4 += z.fourth;
            s4sq += z.fourth * z.fourth;
        }
        const double n = double(trials);
        ModulatedEstimate est;
        est.trials = trials;
        est.mean.second = s2 / n;
        est.mean.fourth = s4 / n;
        est.second_stderr = std::sqrt(std::max(0.0, s2sq / n - est.mean.second * est.mean.second) / (n - 1.0));
        est.fourth_stderr = std::sqrt(std::max(0.0, s4sq / n - est.mean.fourth * est.mean.fourth) / (n - 1.0));
        return est;
    }
}
