// SPDX-License-Identifier: Apache-2.0

#ifndef WPT_RECTENNA_RECTENNA_HPP
#define WPT_RECTENNA_RECTENNA_HPP

#include "wpt/numerics/hermitian.hpp"
#include "wpt/numerics/rng.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace wpt::rectenna
{
    using numerics::cplx;

    // Single series-diode rectenna, Taylor-expanded around its quiescent point.
    //
    // k_i = i_s / (i! (n_f v_t)^i) are the operating-point-independent
    // coefficients of the DC surrogate
    //
    //     z_DC = sum_{i even, 2 <= i <= n_o} k_i R_ant^{i/2} E[y(t)^i].
    //
    // The output current i_out, output voltage v_out, load R_L, quiescent point a
    // and the point-dependent k_i' of the full model are not evaluated here; z_DC
    // is the optimization surrogate for i_out.
    struct RectennaModel
    {
        double i_s = 5e-6;    // saturation current (A)
        double n_f = 1.05;    // ideality factor
        double v_t = 25.86e-3; // thermal voltage (V)
        double R_ant = 50.0;  // antenna resistance (ohm)
        int n_o = 4;          // truncation order

        double k(int i) const;
        void validate() const;
    };

    struct ZdcTerms
    {
        double second = 0.0; // k_2 R_ant E[y^2]
        double fourth = 0.0; // k_4 R_ant^2 E[y^4], zero when n_o == 2
        double total() const { return second + fourth; }
    };

    // Moments of y(t) = sqrt(2) Re{ sum_n c_n exp(j 2 pi f_n t) } on an equally
    // spaced grid with the carrier far above the span (no sum-frequency DC):
    //   E[y^2] = sum |c_n|^2
    //   E[y^4] = 3/2 sum_{n0+n1=n2+n3} c_n0 c_n1 conj(c_n2) conj(c_n3)
    //          = 3/2 sum_k |u_k|^2,  u = c * c (self-convolution).
    double second_moment(std::span<const cplx> received);
    double fourth_moment(std::span<const cplx> received);

    // z_DC for received per-subband scalars c_n = h_n^H s_n. Throws
    // UnsupportedOrderError for n_o other than 2 or 4.
    ZdcTerms z_dc(const RectennaModel &model, std::span<const cplx> received);

    // F = sum over index quadruples with n0 + n1 = n2 + n3 of s_n0 s_n1 s_n2 s_n3.
    double f_sum(std::span<const double> amplitudes);
    // Number of such quadruples, N (2N^2 + 1) / 3.
    std::int64_t f_sum_term_count(int N);

    struct ScalingPoint
    {
        int N;
        ZdcTerms z;
    };
    // Flat channel, uniform in-phase allocation s_n = sqrt(P / N).
    std::vector<ScalingPoint> scaling_curve(const RectennaModel &model, std::span<const int> Ns, double received_power);

    // Largest received power for which the second-order term is at least G times
    // the fourth-order term of a uniform flat multisine (large-N form):
    // k_2 / (k_4 R_ant N G).
    double regime_boundary(const RectennaModel &model, int N, double G);

    struct ModulatedEstimate
    {
        ZdcTerms mean;
        double second_stderr = 0.0;
        double fourth_stderr = 0.0;
        std::int64_t trials = 0;
    };
    // Monte-Carlo mean of z_DC over i.i.d. CN(0, P/N) symbols on each of N
    // subbands of a flat unit-gain channel.
    ModulatedEstimate z_dc_modulated_expectation(const RectennaModel &model, int N, double received_power,
                                                 std::int64_t trials, numerics::RngStream &rng);
}

#endif
