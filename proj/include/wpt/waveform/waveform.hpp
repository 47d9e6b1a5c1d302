// SPDX-License-Identifier: Apache-2.0

#ifndef WPT_WAVEFORM_WAVEFORM_HPP
#define WPT_WAVEFORM_WAVEFORM_HPP

#include "wpt/numerics/hermitian.hpp"
#include "wpt/rectenna/rectenna.hpp"

#include <cstdint>
#include <vector>

namespace wpt::waveform
{
    using numerics::cplx;
    using numerics::CVector;

    // Per-subband channel vectors h_n (length M_t); the rectenna sees h_n^H s_n.
    struct WaveformProblem
    {
        std::vector<CVector> h;
        double P = 1.0; // P_rf^t (W)
        rectenna::RectennaModel model;

        int N() const { return int(h.size()); }
        int M_t() const { return h.empty() ? 0 : int(h.front().size()); }
        void validate() const;
    };

    // phase(s_n) = phase(h_n), so h_n^* s_n is real and non-negative. Zero
    // subbands get phase 0 and active[n] = false.
    struct MatchedPhases
    {
        std::vector<double> phase;
        std::vector<bool> active;
    };
    MatchedPhases matched_phases(const std::vector<cplx> &h);

    // h_n^H s_n for every subband.
    std::vector<cplx> received_scalars(const std::vector<CVector> &h, const std::vector<CVector> &s);

    // z_DC of an in-phase multisine with real amplitudes A_n over real
    // non-negative effective gains g_n (received scalar g_n A_n).
    double zdc_inphase(const rectenna::RectennaModel &model, const std::vector<double> &gains,
                       const std::vector<double> &amplitudes);
    // d z_DC / d A_n for the same.
    std::vector<double> zdc_inphase_gradient(const rectenna::RectennaModel &model, const std::vector<double> &gains,
                                             const std::vector<double> &amplitudes);

    // Log of the AM-GM monomial underestimator of z_DC built at A0, evaluated
    // at A. Enumerates every posynomial term; meant for checking the SCA step.
    double amgm_log_surrogate(const rectenna::RectennaModel &model, const std::vector<double> &gains,
                              const std::vector<double> &A0, const std::vector<double> &A);

    struct ScaOptions
    {
        double tol = 1e-8;   // relative z_DC change, 3 iterations in a row
        int max_iter = 500;
        int restarts = 8;    // random starts in addition to the uniform one
        std::uint64_t seed = 0;
    };

    struct ScaTrace
    {
        std::vector<std::vector<double>> amplitudes;
        std::vector<double> z;
        // Monomial exponents A_n dz/dA_n / z of each expansion point, normalized
        // to sum to one (the AM-GM weights aggregated per subband).
        std::vector<std::vector<double>> weights;
    };

    struct ScaResult
    {
        std::vector<double> amplitudes; // A_n >= 0, sum A_n^2 = P
        double z = 0.0;
        double kkt_residual = 0.0; // max_n |A_n dz_n / sum - A_n^2 / P|
        bool converged = false;
        int iterations = 0;
        int best_start = 0; // 0 = uniform, r = random restart r, -1 = single-sinewave start
        ScaTrace trace;     // of the best start
    };

    // Maximize z_DC over A >= 0, sum A_n^2 <= P by successive AM-GM monomial
    // approximations, each solved in closed form A_n^2 = P w_n / sum w.
    // Starts: uniform, `restarts` random splits, and all power on the strongest
    // subband; the best final point wins.
    ScaResult optimize_sca(const rectenna::RectennaModel &model, const std::vector<double> &gains, double P,
                           const ScaOptions &opt = {});

    // One SCA run from a given start (used by optimize_sca).
    ScaResult sca_from(const rectenna::RectennaModel &model, const std::vector<double> &gains, double P,
                       std::vector<double> start, const ScaOptions &opt);

    struct WaveformDesign
    {
        std::vector<CVector> s; // per-subband weight vectors
        double z = 0.0;
        ScaResult sca;
    };

    // MRT per subband, s_n = A_n h_n / ||h_n||, with A from optimize_sca on the
    // gains ||h_n||.
    WaveformDesign mrt_decouple(const WaveformProblem &problem, const ScaOptions &opt = {});

    // All power on the strongest subband (lowest index on ties), MRT beam.
    WaveformDesign adaptive_ss(const WaveformProblem &problem);

    // Uniform power over all subbands with MRT beams.
    WaveformDesign uniform_mrt(const WaveformProblem &problem);

    // z_DC of arbitrary complex weights.
    double evaluate(const WaveformProblem &problem, const std::vector<CVector> &s);

    // Two-tone SISO closed form with real gains:
    // k2 R (a + b) + 1.5 k4 R^2 ((a + b)^2 + 2 a b), a = s1^2 h1^2, b = s2^2 h2^2.
    double two_tone_zdc(const rectenna::RectennaModel &model, double h1, double h2, double s1sq, double s2sq);
}

#endif
