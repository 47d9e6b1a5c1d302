// SPDX-License-Identifier: Apache-2.0

#include "support.hpp"
#include "wpt/errors.hpp"
#include "wpt/harness/scenarios.hpp"
#include "wpt/waveform/waveform.hpp"

#include <doctest.h>

#include <numbers>
#include <numeric>

using namespace wpt;
using namespace wpt::waveform;
using numerics::RngStream;

namespace
{
    const rectenna::RectennaModel kModel{};
    constexpr double kP = 1e-5; // -20 dBm

    // Two in-phase tones over real gains, written out term by term.
    double two_tone(double h1, double h2, double p1, double p2)
    {
        const double R = kModel.R_ant;
        const double a = p1 * h1 * h1, b = p2 * h2 * h2;
        return kModel.k(2) * R * (a + b) + 1.5 * kModel.k(4) * R * R * ((a + b) * (a + b) + 2.0 * a * b);
    }

    // Max over a 200 x 200 grid of (s_1^2, s_2^2) on {p1 + p2 <= P}.
    double two_tone_grid(double h1, double h2, double P)
    {
        double best = 0.0;
        for (int i = 0; i < 200; ++i)
            for (int j = 0; j < 200; ++j)
            {
                const double p1 = P * i / 199.0, p2 = P * j / 199.0;
                if (p1 + p2 <= P * (1.0 + 1e-12))
                    best = std::max(best, two_tone(h1, h2, p1, p2));
            }
        return best;
    }

    std::vector<double> ranks(const std::vector<double> &v)
    {
        std::vector<std::size_t> idx(v.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return v[a] < v[b]; });
        std::vector<double> r(v.size());
        for (std::size_t i = 0; i < idx.size();)
        {
            std::size_t j = i;
            while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]])
                ++j;
            for (std::size_t k = i; k <= j; ++k)
                r[idx[k]] = 0.5 * double(i + j);
            i = j + 1;
        }
        return r;
    }

    double spearman(const std::vector<double> &x, const std::vector<double> &y)
    {
        const auto rx = ranks(x), ry = ranks(y);
        const double n = double(x.size());
        const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
        const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
        double sxy = 0.0, sxx = 0.0, syy = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i)
        {
            sxy += (rx[i] - mx) * (ry[i] - my);
            sxx += (rx[i] - mx) * (rx[i] - mx);
            syy += (ry[i] - my) * (ry[i] - my);
        }
        return sxy / std::sqrt(sxx * syy);
    }

    std::vector<double> random_selective_gains(std::uint64_t seed, int N, double bandwidth = 10e6)
    {
        RngStream rng(seed, 0);
        const auto h = harness::selective_channel(N, bandwidth, 5.18e9, 30, 10e-9, 100e-9, rng);
        std::vector<double> g;
        for (auto x : h)
            g.push_back(std::abs(x));
        return g;
    }
}

TEST_CASE("in-phase evaluator matches the rectenna model and its gradient")
{
    RngStream rng(61, 0);
    const int N = 6;
    std::vector<double> g(N), A(N);
    for (int n = 0; n < N; ++n)
    {
        g[std::size_t(n)] = rng.uniform(0.2, 1.5);
        A[std::size_t(n)] = rng.uniform(0.0, 2e-3);
    }
    std::vector<cplx> c;
    for (int n = 0; n < N; ++n)
        c.push_back(g[std::size_t(n)] * A[std::size_t(n)]);
    CHECK(test::rel_err(zdc_inphase(kModel, g, A), rectenna::z_dc(kModel, c).total()) <= 1e-13);

    const auto grad = zdc_inphase_gradient(kModel, g, A);
    for (int n = 0; n < N; ++n)
    {
        auto up = A, dn = A;
        const double h = 1e-7;
        up[std::size_t(n)] += h;
        dn[std::size_t(n)] -= h;
        const double fd = (zdc_inphase(kModel, g, up) - zdc_inphase(kModel, g, dn)) / (2.0 * h);
        CHECK(test::rel_err(grad[std::size_t(n)], fd) <= 1e-6);
    }
    CHECK(test::rel_err(two_tone_zdc(kModel, 0.7, 1.1, 3e-6, 5e-6), two_tone(0.7, 1.1, 3e-6, 5e-6)) <= 1e-13);
}

TEST_CASE("AM-GM surrogate underestimates and touches at the expansion point")
{
    RngStream rng(62, 0);
    for (int trial = 0; trial < 20; ++trial)
    {
        const int N = 2 + trial % 5;
        std::vector<double> g(static_cast<std::size_t>(N)), A0(g.size());
        for (std::size_t n = 0; n < g.size(); ++n)
        {
            g[n] = rng.uniform(0.1, 2.0);
            A0[n] = rng.uniform(1e-4, 3e-3);
        }
        CHECK(std::abs(amgm_log_surrogate(kModel, g, A0, A0) - std::log(zdc_inphase(kModel, g, A0))) <= 1e-12);
        for (int k = 0; k < 50; ++k)
        {
            std::vector<double> A(g.size());
            for (auto &a : A)
                a = rng.uniform(1e-5, 5e-3);
            CHECK(amgm_log_surrogate(kModel, g, A0, A) <= std::log(zdc_inphase(kModel, g, A)) + 1e-12);
        }
    }
}

TEST_CASE("matched phases put every received scalar on the positive real axis")
{
    const std::vector<cplx> h{std::polar(0.5, 1.0), std::polar(1.2, -2.0), 0.0, 2.0};
    const auto m = matched_phases(h);
    CHECK(m.active == std::vector<bool>{true, true, false, true});
    CHECK(m.phase[3] == 0.0);
    for (std::size_t n = 0; n < h.size(); ++n)
    {
        const cplx y = std::conj(h[n]) * std::polar(1.0, m.phase[n]);
        CHECK(std::abs(y.imag()) <= 1e-15);
        CHECK(y.real() >= 0.0);
    }
}

TEST_CASE("matched phases dominate random phase assignments")
{
    RngStream rng(63, 0);
    const int N = 8;
    WaveformProblem p;
    p.P = kP;
    std::vector<cplx> hs;
    for (int n = 0; n < N; ++n)
    {
        hs.push_back(rng.complex_normal(1.0));
        p.h.push_back(numerics::CVector::Constant(1, hs.back()));
    }
    std::vector<double> A(N);
    double s = 0.0;
    for (auto &a : A)
        s += (a = rng.uniform()) * a;
    for (auto &a : A)
        a *= std::sqrt(kP / s);
    const auto ph = matched_phases(hs);
    std::vector<numerics::CVector> matched;
    for (int n = 0; n < N; ++n)
        matched.push_back(numerics::CVector::Constant(1, std::polar(A[std::size_t(n)], ph.phase[std::size_t(n)])));
    const double best = evaluate(p, matched);
    for (int k = 0; k < 10000; ++k)
    {
        std::vector<numerics::CVector> s_rand;
        for (int n = 0; n < N; ++n)
            s_rand.push_back(numerics::CVector::Constant(1, std::polar(A[std::size_t(n)], rng.uniform(0.0, 2.0 * std::numbers::pi))));
        CHECK(evaluate(p, s_rand) <= best * (1.0 + 1e-12));
    }
}

TEST_CASE("SCA: one tone has no freedom")
{
    const double g = 0.8;
    const auto r = optimize_sca(kModel, {g}, kP);
    const double R = kModel.R_ant;
    const double want = kModel.k(2) * R * kP * g * g + 1.5 * kModel.k(4) * R * R * std::pow(kP * g * g, 2);
    CHECK(test::rel_err(r.z, want) <= 1e-12);
    CHECK(r.amplitudes[0] == doctest::Approx(std::sqrt(kP)).epsilon(1e-12));
}

TEST_CASE("SCA: two tones against the grid oracle")
{
    // strongly selective: the single-sinewave point (P, 0)
    {
        const auto r = optimize_sca(kModel, {1.0, 0.1}, kP);
        CHECK(r.amplitudes[1] <= 1e-6 * r.amplitudes[0]);
        CHECK(test::rel_err(r.z, two_tone_grid(1.0, 0.1, kP)) <= 0.01);
    }
    // equal gains: the interior split beats both single-sinewave points
    {
        const auto r = optimize_sca(kModel, {0.9, 0.9}, kP);
        CHECK(r.z > two_tone(0.9, 0.9, kP, 0.0));
        CHECK(r.amplitudes[0] == doctest::Approx(r.amplitudes[1]).epsilon(1e-6));
        CHECK(test::rel_err(r.z, two_tone_grid(0.9, 0.9, kP)) <= 0.01);
    }
    RngStream rng(64, 0);
    for (int k = 0; k < 30; ++k)
    {
        const double h1 = std::abs(rng.complex_normal(1.0)), h2 = std::abs(rng.complex_normal(1.0));
        const auto r = optimize_sca(kModel, {h1, h2}, kP);
        CHECK(test::rel_err(r.z, two_tone_grid(h1, h2, kP)) <= 0.01);
    }
}

TEST_CASE("SCA: monotone ascent, power tightness and stationarity")
{
    for (int c = 0; c < 20; ++c)
    {
        const auto g = random_selective_gains(6500 + c, 16);
        const auto r = optimize_sca(kModel, g, kP);
        const auto &z = r.trace.z;
        REQUIRE(!z.empty());
        for (std::size_t i = 1; i < z.size(); ++i)
            CHECK(z[i] >= z[i - 1] * (1.0 - 1e-14));
        double power = 0.0;
        for (double a : r.amplitudes)
        {
            CHECK(a >= 0.0);
            power += a * a;
        }
        CHECK(test::rel_err(power, kP) <= 1e-9);
        CHECK(r.converged);
        CHECK(r.kkt_residual <= 1e-4);
        // one weight vector per expansion point; the final iterate is not expanded
        CHECK(r.trace.weights.size() + 1 == r.trace.amplitudes.size());
        for (const auto &w : r.trace.weights)
            CHECK(std::accumulate(w.begin(), w.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    }

    ScaOptions tight;
    tight.tol = 1e-14;
    tight.max_iter = 100000;
    const auto r = optimize_sca(kModel, random_selective_gains(6600, 8), kP, tight);
    CHECK(r.kkt_residual <= 1e-7);
}

TEST_CASE("SCA on a flat channel stays close to uniform")
{
    for (int N : {2, 4, 8, 16})
    {
        const std::vector<double> g(static_cast<std::size_t>(N), 1.0);
        const auto r = optimize_sca(kModel, g, kP);
        const std::vector<double> uni(g.size(), std::sqrt(kP / N));
        const double zu = zdc_inphase(kModel, g, uni);
        CHECK(r.z >= zu * (1.0 - 1e-12));
        CHECK(r.z <= zu * 1.02);
        for (int n = 0; n < N; ++n)
            CHECK(r.amplitudes[std::size_t(n)] ==
                  doctest::Approx(r.amplitudes[std::size_t(N - 1 - n)]).epsilon(1e-4));
    }
}

TEST_CASE("optimized waveform never loses to a single sinewave")
{
    for (int N : {2, 4, 8, 16})
        for (int c = 0; c < 25; ++c)
        {
            const auto g = random_selective_gains(6700 + c, N);
            std::vector<double> ss(g.size(), 0.0);
            ss[std::size_t(std::max_element(g.begin(), g.end()) - g.begin())] = std::sqrt(kP);
            CHECK(optimize_sca(kModel, g, kP).z >= zdc_inphase(kModel, g, ss));
        }
}

TEST_CASE("more power goes to stronger subbands")
{
    double sum = 0.0;
    for (int c = 0; c < 100; ++c)
    {
        const auto g = random_selective_gains(6800 + c, 16);
        sum += spearman(g, optimize_sca(kModel, g, kP).amplitudes);
    }
    CHECK(sum / 100.0 > 0.0);
}

TEST_CASE("MRT decoupling, adaptive SS and the M_t scaling")
{
    RngStream rng(65, 0);
    const int M_t = 4, N = 8;
    WaveformProblem p;
    p.P = kP;
    for (int n = 0; n < N; ++n)
        p.h.push_back(rng.complex_normal_matrix(M_t, 1, 1.0).col(0));
    const auto mrt = mrt_decouple(p);
    CHECK(test::rel_err(evaluate(p, mrt.s), mrt.z) <= 1e-12);
    double power = 0.0;
    for (const auto &s : mrt.s)
        power += s.squaredNorm();
    CHECK(test::rel_err(power, kP) <= 1e-9);
    for (int k = 0; k < 10000; ++k)
    {
        std::vector<numerics::CVector> s;
        double tot = 0.0;
        for (int n = 0; n < N; ++n)
        {
            s.push_back(rng.complex_normal_matrix(M_t, 1, 1.0).col(0) * rng.uniform());
            tot += s.back().squaredNorm();
        }
        for (auto &v : s)
            v *= std::sqrt(kP / tot);
        CHECK(evaluate(p, s) <= mrt.z * (1.0 + 1e-12));
    }

    // adaptive SS: strongest subband, lowest index on ties
    const auto ss = adaptive_ss(p);
    std::size_t best = 0;
    for (std::size_t n = 1; n < p.h.size(); ++n)
        if (p.h[n].norm() > p.h[best].norm())
            best = n;
    CHECK(ss.s[best].squaredNorm() == doctest::Approx(kP));
    WaveformProblem flat;
    flat.P = kP;
    flat.h.assign(4, numerics::CVector::Ones(2));
    CHECK(adaptive_ss(flat).s[0].squaredNorm() == doctest::Approx(kP));

    // equal-gain flat channel, uniform MRT: M_t -> 2 M_t gives x4 / x2
    for (int m : {1, 2, 4, 8})
    {
        WaveformProblem a, b;
        a.P = b.P = kP;
        a.h.assign(8, numerics::CVector::Ones(m));
        b.h.assign(8, numerics::CVector::Ones(2 * m));
        const auto za = rectenna::z_dc(kModel, received_scalars(a.h, uniform_mrt(a).s));
        const auto zb = rectenna::z_dc(kModel, received_scalars(b.h, uniform_mrt(b).s));
        CHECK(std::abs(zb.fourth / za.fourth - 4.0) <= 4e-6);
        CHECK(std::abs(zb.second / za.second - 2.0) <= 2e-6);
    }
}

TEST_CASE("waveform problem validation")
{
    WaveformProblem p;
    p.h.assign(65, numerics::CVector::Ones(1));
    CHECK_THROWS_AS(p.validate(), ValidationError);
    p.h.assign(4, numerics::CVector::Ones(1));
    p.model.n_o = 2;
    CHECK_THROWS(p.validate());
}
