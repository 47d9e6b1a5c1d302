// SPDX-License-Identifier: Apache-2.0

#ifndef WPT_CHANNEL_CHANNEL_HPP
#define WPT_CHANNEL_CHANNEL_HPP

#include "wpt/numerics/hermitian.hpp"
#include "wpt/numerics/rng.hpp"

#include <vector>

namespace wpt::channel
{
    using numerics::CMatrix;
    using numerics::CVector;
    using numerics::cplx;

    inline constexpr double kSpeedOfLight = 299792458.0;

    // f_n = f1 + (n - 1) delta_f, n = 1..N (stored 0-based)
    struct FrequencyGrid
    {
        int N = 1;
        double f1 = 915e6;      // Hz
        double delta_f = 1e6;   // Hz
        double B_s = 1e6;       // Hz, per-subband bandwidth

        double frequency(int n) const { return f1 + double(n) * delta_f; } // 0-based
        void validate() const;
    };

    struct ChannelRealization
    {
        FrequencyGrid grid;
        int M_t = 1;
        int M_r = 1;
        std::vector<CMatrix> H; // N matrices of size M_r x M_t; row i is h_in^H
        double beta = 0.0;      // average entry power (Rayleigh model), 0 if not applicable
        bool narrowband_violation = false;

        // G_n = H_n^H H_n
        numerics::HermitianMatrix gram(int n) const { return numerics::HermitianMatrix::gram(H[n]); }
        // Channel vector h_n for an M_r = 1 link, so the received scalar is h_n^H s_n.
        CVector miso_vector(int n) const;
        void validate() const;
    };

    ChannelRealization gen_rayleigh(int M_t, int M_r, const FrequencyGrid &grid, double beta, numerics::RngStream &rng);

    struct Path
    {
        double alpha = 1.0; // linear amplitude gain
        double tau = 0.0;   // delay (s)
        // xi[(n * M_r + i) * M_t + m] = phase shift of this path between transmit
        // antenna m and receive antenna i at subband n (rad). Empty == all zero.
        std::vector<double> xi;
    };

    struct MultipathSpec
    {
        std::vector<Path> paths;
        void validate(const FrequencyGrid &grid, int M_t, int M_r) const;
        // max |tau_l - tau_l'|
        double delay_spread() const;
    };

    // Uniform-linear-array phases from angles of departure/arrival: for each path,
    // xi = -2 pi f_n (m d_t sin(aod) - i d_r sin(aoa)) / c, spacings in metres.
    MultipathSpec ula_multipath(const std::vector<double> &alpha, const std::vector<double> &tau,
                                const std::vector<double> &aod, const std::vector<double> &aoa,
                                const FrequencyGrid &grid, int M_t, int M_r, double spacing_t_m, double spacing_r_m);

    // [H_n]_{i,m} = sum_l alpha_l exp(j xi_imnl) exp(-j 2 pi f_n tau_l).
    // Sets narrowband_violation when delay spread * B_s > 0.1.
    ChannelRealization gen_multipath(const MultipathSpec &spec, const FrequencyGrid &grid, int M_t, int M_r);

    struct Point
    {
        double x = 0.0;
        double y = 0.0;
    };

    struct Placement
    {
        std::vector<Point> transmitters; // ET array centres (m)
        std::vector<Point> receivers;    // single-antenna ERs (m)
        double orientation_rad = 0.0;    // ULA axis angle from the x-axis
        double spacing_wavelengths = 0.5;
        double gain_tx = 1.0; // linear
        double gain_rx = 1.0; // linear
        void validate() const;
    };

    // Element m of an M_t-element ULA centred at `centre`, for wavelength lambda.
    Point ula_element(const Placement &p, const Point &centre, int m, int M_t, double lambda);

    // Line-of-sight channel. Row k of H_n is ER k's channel over all ET elements
    // (ET-major order). Entry = sqrt(G_t G_r) lambda/(4 pi d) exp(-j 2 pi d / lambda)
    // with d the exact element-to-ER distance.
    ChannelRealization gen_los_ula(const Placement &placement, const FrequencyGrid &grid, int M_t);

    // Channel from every ET element to a single point; min_distance clamps d
    // from below (0 == throw on coincidence).
    CVector los_row(const Placement &placement, const Point &receiver, double frequency, int M_t,
                    double min_distance = 0.0);

    // Reverse link by reciprocity: H_n^T for every subband.
    ChannelRealization reverse_link(const ChannelRealization &forward);
}

#endif
