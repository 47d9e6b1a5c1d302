// SPDX-License-Identifier: Apache-2.0

#include "wpt/waveform/waveform.hpp"
#include "wpt/errors.hpp"
#include "wpt/numerics/rng.hpp"

#include <algorithm>
#include <cmath>

namespace wpt::waveform
{
    void WaveformProblem::validate() const
    {
        require(!h.empty(), "WaveformProblem: need at least one subband");
        require(h.size() <= 64, "WaveformProblem: N must be <= 64");
        require(P >= 0.0 && std::isfinite(P), "WaveformProblem: P must be non-negative");
        for (const auto &v : h)
        {
            require(v.size() == h.front().size() && v.size() >= 1, "WaveformProblem: inconsistent M_t");
            require(v.allFinite(), "WaveformProblem: non-finite channel entry");
        }
        require(model.n_o == 4, "WaveformProblem: waveform design uses n_o = 4");
        model.validate();
    }

    MatchedPhases matched_phases(const std::vector<cplx> &h)
    {
        MatchedPhases m;
        for (const cplx &x : h)
        {
            const bool on = std::abs(x) > 0.0;
            m.active.push_back(on);
            m.phase.push_back(on ? std::arg(x) : 0.0);
        }
        return m;
    }

    std::vector<cplx> received_scalars(const std::vector<CVector> &h, const std::vector<CVector> &s)
    {
        require(h.size() == s.size(), "received_scalars: subband count mismatch");
        std::vector<cplx> c;
        for (std::size_t n = 0; n < h.size(); ++n)
        {
            require(h[n].size() == s[n].size(), "received_scalars: antenna count mismatch");
            c.push_back(h[n].dot(s[n])); // Eigen dot conjugates the first argument
        }
        return c;
    }

    namespace
    {
        std::vector<double> autoconv(const std::vector<double> &x)
        {
            const std::size_t n = x.size();
            std::vector<double> u(n == 0 ? 0 : 2 * n - 1, 0.0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    u[i + j] += x[i] * x[j];
            return u;
        }

        std::vector<double> received(const std::vector<double> &g, const std::vector<double> &A)
        {
            require(g.size() == A.size(), "waveform: gains and amplitudes differ in length");
            std::vector<double> x(g.size());
            for (std::size_t n = 0; n < g.size(); ++n)
                x[n] = g[n] * A[n];
            return x;
        }
    }

    double zdc_inphase(const rectenna::RectennaModel &model, const std::vector<double> &gains,
                       const std::vector<double> &amplitudes)
    {
        const auto x = received(gains, amplitudes);
        std::vector<cplx> c(x.begin(), x.end());
        return rectenna::z_dc(model, c).total();
    }

    std::vector<double> zdc_inphase_gradient(const rectenna::RectennaModel &model, const std::vector<double> &gains,
                                             const std::vector<double> &amplitudes)
    {
        const auto x = received(gains, amplitudes);
        const auto u = autoconv(x);
        const double k2 = model.k(2) * model.R_ant;
        const double k4 = model.n_o >= 4 ? 1.5 * model.k(4) * model.R_ant * model.R_ant : 0.0;
        const std::size_t N = x.size();
        std::vector<double> grad(N);
        for (std::size_t n = 0; n < N; ++n)
        {
            // d/dx_n sum_k u_k^2 = 4 sum_m u_{n+m} x_m
            double s = 0.0;
            for (std::size_t m = 0; m < N; ++m)
                s += u[n + m] * x[m];
            grad[n] = gains[n] * (2.0 * k2 * x[n] + 4.0 * k4 * s);
        }
        return grad;
    }

    double amgm_log_surrogate(const rectenna::RectennaModel &model, const std::vector<double> &gains,
                              const std::vector<double> &A0, const std::vector<double> &A)
    {
        const auto x0 = received(gains, A0);
        const auto x = received(gains, A);
        const std::size_t N = x.size();
        const double k2 = model.k(2) * model.R_ant;
        const double k4 = 1.5 * model.k(4) * model.R_ant * model.R_ant;

        // terms: k2 x_n^2 and k4 x_a x_b x_c x_d over a + b = c + d
        struct Term
        {
            double at0, at;
        };
        std::vector<Term> terms;
        for (std::size_t n = 0; n < N; ++n)
            terms.push_back({k2 * x0[n] * x0[n], k2 * x[n] * x[n]});
        for (std::size_t a = 0; a < N; ++a)
            for (std::size_t b = 0; b < N; ++b)
                for (std::size_t c = 0; c < N; ++c)
                {
                    if (a + b < c || a + b - c >= N)
                        continue;
                    const std::size_t d = a + b - c;
                    terms.push_back({k4 * x0[a] * x0[b] * x0[c] * x0[d], k4 * x[a] * x[b] * x[c] * x[d]});
                }
        double z0 = 0.0;
        for (const auto &t : terms)
            z0 += t.at0;
        require(z0 > 0.0, "amgm_log_surrogate: expansion point has zero objective");
        double log_s = 0.0;
        for (const auto &t : terms)
        {
            if (t.at0 <= 0.0)
                continue; // zero weight
            const double gamma = t.at0 / z0;
            log_s += gamma * (std::log(t.at) - std::log(gamma));
        }
        return log_s;
    }

    namespace
    {
        struct Step
        {
            std::vector<double> next;
            std::vector<double> weights;
            double residual;
        };

        Step sca_step(const rectenna::RectennaModel &model, const std::vector<double> &g, double P,
                      const std::vector<double> &A)
        {
            const auto grad = zdc_inphase_gradient(model, g, A);
            Step s;
            s.weights.resize(A.size());
            double total = 0.0;
            for (std::size_t n = 0; n < A.size(); ++n)
                total += s.weights[n] = A[n] * grad[n];
            s.next.resize(A.size());
            s.residual = 0.0;
            for (std::size_t n = 0; n < A.size(); ++n)
            {
                s.weights[n] = total > 0.0 ? s.weights[n] / total : 0.0;
                s.next[n] = std::sqrt(P * s.weights[n]);
                s.residual = std::max(s.residual, std::abs(s.weights[n] - (P > 0.0 ? A[n] * A[n] / P : 0.0)));
            }
            return s;
        }
    }

    ScaResult sca_from(const rectenna::RectennaModel &model, const std::vector<double> &gains, double P,
                       std::vector<double> A, const ScaOptions &opt)
    {
        require(A.size() == gains.size(), "sca_from: start has wrong length");
        require(opt.max_iter >= 1 && opt.tol > 0.0, "sca_from: invalid options");
        ScaResult r;
        double z = zdc_inphase(model, gains, A);
        r.trace.amplitudes.push_back(A);
        r.trace.z.push_back(z);
        if (!(z > 0.0))
        {
            r.amplitudes = A;
            r.z = z;
            r.converged = true;
            return r;
        }

        int calm = 0;
        for (int it = 1; it <= opt.max_iter; ++it)
        {
            Step s = sca_step(model, gains, P, A);
            r.trace.weights.push_back(s.weights);
            const double znew = zdc_inphase(model, gains, s.next);
            const double rel = std::abs(znew - z) / z;
            A = std::move(s.next);
            z = znew;
            r.trace.amplitudes.push_back(A);
            r.trace.z.push_back(z);
            r.iterations = it;
            calm = rel < opt.tol ? calm + 1 : 0;
            if (calm >= 3)
            {
                r.converged = true;
                break;
            }
        }
        r.amplitudes = A;
        r.z = z;
        r.kkt_residual = sca_step(model, gains, P, A).residual;
        return r;
    }

    ScaResult optimize_sca(const rectenna::RectennaModel &model, const std::vector<double> &gains, double P,
                           const ScaOptions &opt)
    {
        model.validate();
        require(!gains.empty() && gains.size() <= 64, "optimize_sca: need 1 <= N <= 64");
        require(P >= 0.0, "optimize_sca: P must be non-negative");
        require(opt.restarts >= 0, "optimize_sca: restarts must be non-negative");
        for (double g : gains)
            require(g >= 0.0 && std::isfinite(g), "optimize_sca: gains must be real and non-negative");

        const std::size_t N = gains.size();
        std::size_t active = 0;
        for (double g : gains)
            active += g > 0.0;

        auto start = [&](numerics::RngStream *rng)
        {
            std::vector<double> w(N, 0.0);
            double sum = 0.0;
            for (std::size_t n = 0; n < N; ++n)
                if (gains[n] > 0.0 || active == 0)
                    sum += w[n] = rng ? 1e-3 + rng->uniform() : 1.0;
            std::vector<double> A(N);
            for (std::size_t n = 0; n < N; ++n)
                A[n] = std::sqrt(P * w[n] / sum);
            return A;
        };

        ScaResult best = sca_from(model, gains, P, start(nullptr), opt);
        for (int r = 1; r <= opt.restarts; ++r)
        {
            numerics::RngStream rng(opt.seed, std::uint64_t(r));
            ScaResult cand = sca_from(model, gains, P, start(&rng), opt);
            if (cand.z > best.z)
            {
                best = std::move(cand);
                best.best_start = r;
            }
        }
        // The single-sinewave vertex is a fixed point of the update; keeping it
        // as a candidate makes the result never worse than adaptive SS.
        if (P > 0.0 && active > 0)
        {
            std::vector<double> A(N, 0.0);
            A[std::size_t(std::max_element(gains.begin(), gains.end()) - gains.begin())] = std::sqrt(P);
            ScaResult cand = sca_from(model, gains, P, std::move(A), opt);
            if (cand.z > best.z)
            {
                best = std::move(cand);
                best.best_start = -1;
            }
        }
        return best;
    }

    double evaluate(const WaveformProblem &problem, const std::vector<CVector> &s)
    {
        return rectenna::z_dc(problem.model, received_scalars(problem.h, s)).total();
    }

    namespace
    {
        WaveformDesign with_amplitudes(const WaveformProblem &p, const std::vector<double> &A)
        {
            WaveformDesign d;
            for (int n = 0; n < p.N(); ++n)
            {
                const CVector &h = p.h[std::size_t(n)];
                const double norm = h.norm();
                CVector s = CVector::Zero(h.size());
                if (norm > 0.0)
                    s = h * (A[std::size_t(n)] / norm);
                else
                    s(0) = A[std::size_t(n)];
                d.s.push_back(std::move(s));
            }
            d.z = evaluate(p, d.s);
            return d;
        }

        std::vector<double> gains_of(const WaveformProblem &p)
        {
            std::vector<double> g;
            for (const auto &h : p.h)
                g.push_back(h.norm());
            return g;
        }
    }

    WaveformDesign mrt_decouple(const WaveformProblem &problem, const ScaOptions &opt)
    {
        problem.validate();
        ScaResult r = optimize_sca(problem.model, gains_of(problem), problem.P, opt);
        WaveformDesign d = with_amplitudes(problem, r.amplitudes);
        d.sca = std::move(r);
        return d;
    }

    WaveformDesign adaptive_ss(const WaveformProblem &problem)
    {
        problem.validate();
        const auto g = gains_of(problem);
        const auto best = std::size_t(std::max_element(g.begin(), g.end()) - g.begin()); // first maximum
        std::vector<double> A(g.size(), 0.0);
        A[best] = std::sqrt(problem.P);
        return with_amplitudes(problem, A);
    }

    WaveformDesign uniform_mrt(const WaveformProblem &problem)
    {
        problem.validate();
        std::vector<double> A(std::size_t(problem.N()), std::sqrt(problem.P / problem.N()));
        return with_amplitudes(problem, A);
    }

    double two_tone_zdc(const rectenna::RectennaModel &model, double h1, double h2, double s1sq, double s2sq)
    {
        const double a = s1sq * h1 * h1, b = s2sq * h2 * h2;
        const double k2 = model.k(2) * model.R_ant;
        const double k4 = 1.5 * model.k(4) * model.R_ant * model.R_ant;
        return k2 * (a + b) + k4 * ((a + b) * (a + b) + 2.0 * a * b);
    }
}
