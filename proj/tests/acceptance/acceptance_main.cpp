// SPDX-License-Identifier: Apache-2.0
//
// Acceptance run: one PASS/FAIL line per headline property. Exit status is
// nonzero if any line fails.

#include "../support.hpp"
#include "wpt/acquisition/accpm.hpp"
#include "wpt/acquisition/training.hpp"
#include "wpt/beamforming/beamforming.hpp"
#include "wpt/harness/registry.hpp"
#include "wpt/numerics/parallel.hpp"
#include "wpt/powerregion/powerregion.hpp"
#include "wpt/rectenna/rectenna.hpp"
#include "wpt/waveform/waveform.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <thread>

using namespace wpt;
using numerics::RngStream;

namespace
{
    struct Outcome
    {
        bool pass = false;
        std::string detail;
    };

    std::string fmt(const char *f, auto... args)
    {
        char buf[512];
        std::snprintf(buf, sizeof buf, f, args...);
        return buf;
    }

    unsigned workers()
    {
        return std::max(1u, std::thread::hardware_concurrency());
    }

    harness::Params defaults(const std::string &scenario)
    {
        const auto lc = harness::parse_config({{"scenario", scenario}});
        if (!lc.diagnostics.empty())
            throw std::runtime_error(lc.diagnostics.front());
        return lc.config.params;
    }

    harness::ResultTable table(const std::vector<harness::ResultTable> &tables, const std::string &name)
    {
        for (const auto &t : tables)
            if (t.name() == name)
                return t;
        throw std::runtime_error("missing table " + name);
    }

    const rectenna::RectennaModel kDiode{};

    // ---- 1 ---------------------------------------------------------------

    Outcome regime_constant()
    {
        const double c = rectenna::regime_boundary(kDiode, 1, 1.0);
        const double direct = kDiode.k(2) / (kDiode.k(4) * kDiode.R_ant);
        const double err = test::rel_err(c, 1.776e-4);
        return {err <= 0.005 && test::rel_err(c, direct) <= 1e-14,
                fmt("k2/(k4 R) = %.6e, deviation from 1.776e-4 = %.3f%%", c, 100.0 * err)};
    }

    // ---- 2 ---------------------------------------------------------------

    Outcome term_count()
    {
        bool ok = true;
        for (int N = 1; N <= 12; ++N)
        {
            std::int64_t count = 0;
            for (int a = 0; a < N; ++a)
                for (int b = 0; b < N; ++b)
                    for (int c = 0; c < N; ++c)
                        for (int d = 0; d < N; ++d)
                            count += (a + b == c + d);
            ok = ok && count == std::int64_t(N) * (2 * N * N + 1) / 3 && count == rectenna::f_sum_term_count(N);
        }
        return {ok, "brute-force quadruple count equals N(2N^2+1)/3 for N = 1..12"};
    }

    // ---- 3 ---------------------------------------------------------------

    Outcome flat_scaling()
    {
        const double P = 1e-5, R = kDiode.R_ant;
        std::vector<int> Ns(32);
        std::iota(Ns.begin(), Ns.end(), 1);
        double worst = 0.0;
        for (const auto &pt : rectenna::scaling_curve(kDiode, Ns, P))
        {
            const double N = pt.N;
            worst = std::max(worst, test::rel_err(pt.z.fourth, kDiode.k(4) * R * R * (2.0 * N * N + 1.0) / (2.0 * N) * P * P));
        }

        const std::vector<int> mods{1, 2, 4, 8, 16, 32};
        std::vector<rectenna::ModulatedEstimate> est(mods.size());
        numerics::parallel_for(mods.size(), workers(), [&](std::size_t i) {
            RngStream rng(2024, std::uint64_t(mods[i]));
            est[i] = rectenna::z_dc_modulated_expectation(kDiode, mods[i], P, 100000, rng);
        });
        const double flat = 3.0 * kDiode.k(4) * R * R * P * P;
        const auto det = rectenna::scaling_curve(kDiode, mods, P);
        double worst_sigma = 0.0;
        bool growing = true;
        double gap_prev = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < mods.size(); ++i)
        {
            worst_sigma = std::max(worst_sigma, std::abs(est[i].mean.fourth - flat) / est[i].fourth_stderr);
            const double gap = det[i].z.fourth - est[i].mean.fourth;
            growing = growing && gap > gap_prev;
            gap_prev = gap;
        }
        return {worst <= 1e-9 && worst_sigma <= 3.0 && growing,
                fmt("closed-form max rel err %.2e (N<=32); modulated fourth term within %.2f sigma of 3 k4 R^2 P^2; gap %s",
                    worst, worst_sigma, growing ? "grows with N" : "does NOT grow with N")};
    }

    // ---- 4 ---------------------------------------------------------------

    Outcome beamforming_optimality()
    {
        const int instances = 50, designs = 100000;
        std::vector<double> worst_ratio(instances, 0.0);
        std::vector<char> feasible(instances, 1);
        numerics::parallel_for(std::size_t(instances), workers(), [&](std::size_t inst) {
            RngStream rng(4000, inst);
            const int N = 1 + int(inst % 8), M_t = 1 + int((inst / 8) % 4);
            const channel::FrequencyGrid g{N, 915e6, 1e6, 1e6};
            const auto ch = channel::gen_rayleigh(M_t, 1 + int(inst % 2), g, 1.0, rng);
            const beamforming::PowerBudget b{1.0 + (N - 1) * rng.uniform(), 1.0};
            const double best = beamforming::optimal_design(ch, b).received_power;
            for (int k = 0; k < designs; ++k)
            {
                beamforming::TransmitDesign d;
                for (double p : test::random_power_split(rng, N, b.total, b.per_subband))
                    d.S.push_back(test::random_covariance(rng, M_t, p));
                if (!beamforming::is_feasible(d, b, 1e-9))
                    feasible[inst] = 0;
                worst_ratio[inst] = std::max(worst_ratio[inst], beamforming::received_rf_power(ch, d) / best);
            }
        });
        const double worst = *std::max_element(worst_ratio.begin(), worst_ratio.end());
        const bool all_feasible = std::all_of(feasible.begin(), feasible.end(), [](char c) { return c != 0; });

        // single active subband: P_s * max_n lambda_max(H_n^H H_n)
        double closed = 0.0;
        for (int t = 0; t < 50; ++t)
        {
            RngStream rng(4100, std::uint64_t(t));
            const int N = 1 + t % 8;
            const auto ch = channel::gen_rayleigh(1 + t % 4, 1 + t % 3, {N, 915e6, 1e6, 1e6}, 1.0, rng);
            double lam = 0.0;
            for (int n = 0; n < N; ++n)
                lam = std::max(lam, test::lambda_max(ch.gram(n)));
            closed = std::max(closed, test::rel_err(beamforming::optimal_design(ch, {0.8, 0.8}).received_power, 0.8 * lam));
        }
        return {worst <= 1.0 + 1e-12 && all_feasible && closed <= 1e-10,
                fmt("best random/optimal = %.6f over %d x %d designs; single-subband closed form rel err %.1e", worst,
                    instances, designs, closed)};
    }

    // ---- 5 ---------------------------------------------------------------

    powerregion::NetworkTopology random_topology(RngStream &rng, int J, int M_t, int K, int M_r = 1)
    {
        powerregion::NetworkTopology t;
        t.J = J;
        t.M_t = M_t;
        for (int j = 0; j < J; ++j)
            t.P.push_back(rng.uniform(0.5, 2.0));
        for (int k = 0; k < K; ++k)
            t.H.push_back(rng.complex_normal_matrix(M_r, J * M_t, 1.0));
        return t;
    }

    Outcome sdp_gate()
    {
        const int instances = 100;
        std::vector<double> err(instances);
        numerics::parallel_for(std::size_t(instances), workers(), [&](std::size_t inst) {
            RngStream rng(5000, inst);
            const int M_t = 1 + int(inst % 4), K = 1 + int(inst % 3);
            const auto t = random_topology(rng, 1, M_t, K, 1 + int(inst % 2));
            std::vector<double> mu(static_cast<std::size_t>(K));
            double total = 0.0;
            for (auto &m : mu)
                total += m = rng.uniform(0.1, 1.0);
            auto sum = numerics::HermitianMatrix::zero(M_t);
            for (int k = 0; k < K; ++k)
            {
                mu[std::size_t(k)] /= total;
                sum += t.gram(k) * mu[std::size_t(k)];
            }
            err[inst] = test::rel_err(powerregion::wspmax(t, mu).objective, t.P[0] * test::lambda_max(sum));
        });
        const double worst = *std::max_element(err.begin(), err.end());

        const int profiles = 10, designs = 100000;
        std::vector<int> dominated(profiles, 0);
        numerics::parallel_for(std::size_t(profiles), workers(), [&](std::size_t inst) {
            RngStream rng(5100, inst);
            const int J = 1 + int(inst % 3), K = 2 + int(inst % 2);
            const auto t = random_topology(rng, J, 2, K);
            std::vector<double> alpha(static_cast<std::size_t>(K));
            double s = 0.0;
            for (auto &a : alpha)
                s += a = rng.uniform(0.1, 1.0);
            for (auto &a : alpha)
                a /= s;
            const auto pt = powerregion::power_profile(t, alpha);
            for (int k = 0; k < designs; ++k)
            {
                auto S = test::random_covariance(rng, t.dim(), 1.0);
                double scale = std::numeric_limits<double>::infinity();
                for (int j = 0; j < J; ++j)
                    scale = std::min(scale, t.P[std::size_t(j)] / t.selector(j).inner(S));
                const auto q = powerregion::received_powers(t, S * scale);
                bool all_ge = true;
                for (int r = 0; r < K; ++r)
                    all_ge = all_ge && q[std::size_t(r)] >= pt.Q[std::size_t(r)] * (1.0 + 1e-7);
                dominated[inst] += all_ge;
            }
        });
        const int total_dominated = std::accumulate(dominated.begin(), dominated.end(), 0);
        return {worst <= 1e-7 && total_dominated == 0,
                fmt("J=1 WSPMax vs P lambda_max: max rel err %.2e over %d instances; %d of %d random designs dominate a power-profile point",
                    worst, instances, total_dominated, profiles * designs)};
    }

    // ---- 6 ---------------------------------------------------------------

    Outcome time_sharing()
    {
        double worst = 0.0;
        for (int inst = 0; inst < 50; ++inst)
        {
            RngStream rng(6000, std::uint64_t(inst));
            const int K = 1 + inst % 4;
            const auto t = random_topology(rng, 1, 1 + inst % 4, K);
            const auto pt = powerregion::power_profile(t, std::vector<double>(std::size_t(K), 1.0 / K));
            const auto S = pt.S * (t.P[0] / pt.S.trace());
            const auto beams = powerregion::time_share_decompose(S, t.P[0]);
            for (int k = 0; k < K; ++k)
                worst = std::max(worst, test::rel_err(powerregion::time_shared_power(beams, t.gram(k)), t.gram(k).inner(S)));
        }
        return {worst <= 1e-8, fmt("max rel err of time-shared ER power %.2e over 50 instances (K <= 4)", worst)};
    }

    // ---- 7 ---------------------------------------------------------------

    Outcome colocated_vs_distributed()
    {
        const harness::RunContext ctx{1, workers()};
        const auto region = harness::find_scenario("region-2user")->run(defaults("region-2user"), ctx);
        const auto maxmin = table(region, "summary").column("maxmin_W");
        const auto heat = harness::find_scenario("heatmap")->run(defaults("heatmap"), ctx);
        const auto frac = table(heat, "hotspots").column("bin_fraction");
        return {maxmin.at(1) >= maxmin.at(0) && frac.at(0) <= 0.05 && frac.at(1) > 0.05,
                fmt("max-min co-located %.3e W, distributed %.3e W; top-1%% cells occupy %.1f%% (co-located) vs %.1f%% (distributed) of angular bins",
                    maxmin.at(0), maxmin.at(1), 100.0 * frac.at(0), 100.0 * frac.at(1))};
    }

    // ---- 8 ---------------------------------------------------------------

    Outcome training_tradeoff()
    {
        RngStream rng(8000, 0);
        bool exact = true;
        for (int m = 1; m <= 16; ++m)
            exact = exact && acquisition::lambda_stat(m, 1, 10000, rng).mean == double(m) &&
                    acquisition::lambda_stat(1, m, 10000, rng).mean == double(m);

        acquisition::TrainingConfig base;
        base.sigma2 = 1e-3;
        const int M_t = 8, M_r = 2;
        acquisition::LambdaTable lt(8001, 100000);
        const auto res = acquisition::optimize_training(M_t, M_r, base, acquisition::default_training_grid(1.0, 1e-2, M_r), lt);
        std::size_t arg = 0;
        for (std::size_t i = 0; i < res.tau_curve.size(); ++i)
            if (res.tau_curve[i].net_energy > res.tau_curve[arg].net_energy)
                arg = i;
        const bool interior = arg > 0 && arg + 1 < res.tau_curve.size();

        acquisition::TrainingConfig c = base;
        c.tau = 0.1875;
        c.p_r = 0.01;
        c.M_r_prime = 1;
        RngStream prng(8002, 0);
        const auto sim = acquisition::simulate_training_pipeline(c, M_t, M_r, 20000, prng);
        const double formula = acquisition::avg_harvested_energy(c, M_r, double(M_t));
        const double dev = test::rel_err(sim.mean, formula);
        return {exact && interior && dev <= 0.03,
                fmt("Lambda(M,1)=Lambda(1,M)=M %s; best tau %.4f s is interior; closed form %.4f vs MMSE pipeline %.4f +- %.4f (%.2f%%)",
                    exact ? "exact" : "NOT exact", res.tau_curve[arg].tau, formula, sim.mean, sim.stderr_, 100.0 * dev)};
    }

    // ---- 9 ---------------------------------------------------------------

    Outcome accpm_convergence()
    {
        const int channels = 20;
        std::vector<double> final_err(channels);
        std::vector<char> windows(channels, 1), consistent(channels, 1);
        std::vector<int> cuts(channels);
        numerics::parallel_for(std::size_t(channels), workers(), [&](std::size_t ch) {
            RngStream crng(9000, ch);
            const auto G = test::random_psd(crng, 2, 1);
            RngStream rng(9001, ch);
            const auto res = acquisition::accpm_learn(G, acquisition::AccpmOptions{}, rng);
            final_err[ch] = res.errors.back();
            cuts[ch] = res.cuts_used;
            for (const auto &cut : res.cuts)
                if (double(cut.feedback) * G.inner(cut.step) > 1e-12 * G.frobenius_norm() * cut.step.frobenius_norm())
                    consistent[ch] = 0;
            double prev = std::numeric_limits<double>::infinity();
            for (std::size_t b = 0; b < res.errors.size(); b += 10)
            {
                double mx = 0.0;
                for (std::size_t i = b; i < std::min(b + 10, res.errors.size()); ++i)
                    mx = std::max(mx, res.errors[i]);
                if (mx > prev)
                    windows[ch] = 0;
                prev = mx;
            }
        });
        const double worst = *std::max_element(final_err.begin(), final_err.end());
        const int max_cuts = *std::max_element(cuts.begin(), cuts.end());
        const bool win = std::all_of(windows.begin(), windows.end(), [](char c) { return c != 0; });
        const bool con = std::all_of(consistent.begin(), consistent.end(), [](char c) { return c != 0; });
        return {worst < 0.05 && max_cuts <= 200 && win && con,
                fmt("worst final error %.2e after <= %d cuts over %d channels; 10-cut window max %s; cuts %s", worst, max_cuts,
                    channels, win ? "nonincreasing" : "INCREASES", con ? "all consistent with G" : "INCONSISTENT")};
    }

    // ---- 10 --------------------------------------------------------------

    double two_tone(double h1, double h2, double p1, double p2)
    {
        const double R = kDiode.R_ant;
        const double a = p1 * h1 * h1, b = p2 * h2 * h2;
        return kDiode.k(2) * R * (a + b) + 1.5 * kDiode.k(4) * R * R * ((a + b) * (a + b) + 2.0 * a * b);
    }

    Outcome waveform_opt_vs_ss()
    {
        const harness::RunContext ctx{10000, workers()};
        const auto gain = table(harness::find_scenario("waveform-opt-vs-ss")->run(defaults("waveform-opt-vs-ss"), ctx), "gain");
        const auto Ns = gain.column("N"), mean = gain.column("mean_gain"), mn = gain.column("min_gain");
        bool increasing = mean.at(0) > 1.0;
        for (std::size_t i = 1; i < mean.size(); ++i)
            increasing = increasing && mean[i] > mean[i - 1];
        const bool never_worse = *std::min_element(mn.begin(), mn.end()) >= 1.0;

        const double P = 1e-5;
        double worst = 0.0;
        for (int k = 0; k < 100; ++k)
        {
            RngStream rng(10001, std::uint64_t(k));
            const double h1 = std::abs(rng.complex_normal(1.0)), h2 = std::abs(rng.complex_normal(1.0));
            double best = 0.0;
            for (int i = 0; i < 200; ++i)
                for (int j = 0; j < 200; ++j)
                {
                    const double p1 = P * i / 199.0, p2 = P * j / 199.0;
                    if (p1 + p2 <= P * (1.0 + 1e-12))
                        best = std::max(best, two_tone(h1, h2, p1, p2));
                }
            worst = std::max(worst, test::rel_err(waveform::optimize_sca(kDiode, {h1, h2}, P).z, best));
        }
        std::string gains;
        for (std::size_t i = 0; i < Ns.size(); ++i)
            gains += fmt("%sN=%d %.3f", i ? ", " : "", int(Ns[i]), mean[i]);
        return {increasing && never_worse && worst <= 0.01,
                fmt("mean OPT/SS gain %s (min per-channel gain %.4f); N=2 SCA vs grid max rel gap %.2e over 100 pairs",
                    gains.c_str(), *std::min_element(mn.begin(), mn.end()), worst)};
    }

    // ---- 11 --------------------------------------------------------------

    Outcome mt_scaling()
    {
        double worst = 0.0;
        for (int m : {1, 2, 4, 8, 16})
        {
            waveform::WaveformProblem a, b;
            a.P = b.P = 1e-5;
            a.h.assign(8, numerics::CVector::Ones(m));
            b.h.assign(8, numerics::CVector::Ones(2 * m));
            const auto za = rectenna::z_dc(kDiode, waveform::received_scalars(a.h, waveform::uniform_mrt(a).s));
            const auto zb = rectenna::z_dc(kDiode, waveform::received_scalars(b.h, waveform::uniform_mrt(b).s));
            worst = std::max(worst, std::abs(zb.fourth / za.fourth / 4.0 - 1.0));
        }
        return {worst <= 1e-6, fmt("fourth-order ratio on doubling M_t (1..16 -> 2..32): max |ratio/4 - 1| = %.2e", worst)};
    }
}

int main()
{
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
        {"regime-boundary-constant", regime_constant},
        {"term-count-identity", term_count},
        {"flat-channel-scaling", flat_scaling},
        {"beamforming-optimality", beamforming_optimality},
        {"sdp-gate", sdp_gate},
        {"time-sharing-identity", time_sharing},
        {"colocated-vs-distributed", colocated_vs_distributed},
        {"training-tradeoff", training_tradeoff},
        {"accpm-convergence", accpm_convergence},
        {"waveform-opt-vs-ss", waveform_opt_vs_ss},
        {"mt-scaling", mt_scaling},
    };
    int failed = 0;
    for (const auto &[name, fn] : criteria)
    {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try
        {
            o = fn();
        }
        catch (const std::exception &e)
        {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
        std::fflush(stdout);
        failed += !o.pass;
    }
    std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
