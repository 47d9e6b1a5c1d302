// SPDX-License-Identifier: Apache-2.0

#include "wpt/harness/scenarios.hpp"
#include "wpt/acquisition/accpm.hpp"
#include "wpt/acquisition/training.hpp"
#include "wpt/beamforming/beamforming.hpp"
#include "wpt/errors.hpp"
#include "wpt/numerics/eig.hpp"
#include "wpt/numerics/parallel.hpp"
#include "wpt/powerregion/heatmap.hpp"
#include "wpt/powerregion/powerregion.hpp"
#include "wpt/rectenna/rectenna.hpp"
#include "wpt/waveform/waveform.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <optional>

namespace wpt::harness
{
    using numerics::cplx;
    using numerics::RngStream;

    namespace
    {
        ParamSpec number(std::string name, double def, std::optional<double> min, bool exclusive,
                         std::optional<double> max, std::string help)
        {
            return {std::move(name), ParamKind::Number, def, min, exclusive, max, std::move(help)};
        }

        ParamSpec integer(std::string name, std::int64_t def, std::optional<double> min, std::optional<double> max,
                          std::string help)
        {
            return {std::move(name), ParamKind::Integer, def, min, false, max, std::move(help)};
        }

        ParamSpec numbers(std::string name, std::vector<double> def, std::optional<double> min, bool exclusive,
                          std::string help)
        {
            return {std::move(name), ParamKind::NumberList, def, min, exclusive, std::nullopt, std::move(help)};
        }

        ParamSpec integers(std::string name, std::vector<int> def, std::optional<double> min,
                           std::optional<double> max, std::string help)
        {
            return {std::move(name), ParamKind::IntegerList, def, min, false, max, std::move(help)};
        }

        void append_rectenna(std::vector<ParamSpec> &specs)
        {
            specs.push_back(number("i_s_A", 5e-6, 0.0, true, std::nullopt, "diode saturation current"));
            specs.push_back(number("n_f", 1.05, 0.0, true, std::nullopt, "diode ideality factor"));
            specs.push_back(number("v_t_V", 25.86e-3, 0.0, true, std::nullopt, "thermal voltage"));
            specs.push_back(number("R_ant_ohm", 50.0, 0.0, true, std::nullopt, "antenna resistance"));
        }

        rectenna::RectennaModel rectenna_from(const Params &p)
        {
            rectenna::RectennaModel m;
            m.i_s = p.number("i_s_A");
            m.n_f = p.number("n_f");
            m.v_t = p.number("v_t_V");
            m.R_ant = p.number("R_ant_ohm");
            m.validate();
            return m;
        }

        std::vector<double> logspace(double lo, double hi, int points)
        {
            std::vector<double> out(static_cast<std::size_t>(points));
            const double a = std::log10(lo), b = std::log10(hi);
            for (int i = 0; i < points; ++i)
                out[std::size_t(i)] = std::pow(10.0, a + (b - a) * double(i) / double(points - 1));
            return out;
        }

        // Distinct stream families so scenarios never share draws.
        constexpr std::uint64_t kChannelStream = 1ull << 40;
        constexpr std::uint64_t kLearnerStream = 2ull << 40;
        constexpr std::uint64_t kModulatedStream = 3ull << 40;
        constexpr std::uint64_t kPipelineStream = 4ull << 40;
    }

    channel::Placement colocated_layout()
    {
        channel::Placement p;
        p.transmitters = {{15.0, 15.0}};
        p.receivers = {{15.0, 5.0}, {18.88, 29.49}};
        return p;
    }

    channel::Placement distributed_layout()
    {
        channel::Placement p;
        for (double y : {0.0, 15.0, 30.0})
            for (double x : {0.0, 15.0, 30.0})
                p.transmitters.push_back({x, y});
        p.receivers = colocated_layout().receivers;
        return p;
    }

    std::vector<cplx> selective_channel(int N, double bandwidth, double carrier, int taps, double tap_spacing,
                                        double decay, RngStream &rng)
    {
        require(N >= 1 && taps >= 1, "selective_channel: N and taps must be positive");
        require(bandwidth > 0.0 && tap_spacing > 0.0 && decay > 0.0, "selective_channel: bad profile");
        std::vector<double> pdp(static_cast<std::size_t>(taps));
        double total = 0.0;
        for (int l = 0; l < taps; ++l)
            total += pdp[std::size_t(l)] = std::exp(-double(l) * tap_spacing / decay);
        std::vector<cplx> a(static_cast<std::size_t>(taps));
        for (int l = 0; l < taps; ++l)
            a[std::size_t(l)] = rng.complex_normal(pdp[std::size_t(l)] / total);

        std::vector<cplx> h(static_cast<std::size_t>(N));
        for (int n = 0; n < N; ++n)
        {
            const double f = carrier + (double(n) - double(N - 1) / 2.0) * bandwidth / double(N);
            cplx acc = 0.0;
            for (int l = 0; l < taps; ++l)
                acc += a[std::size_t(l)] * std::polar(1.0, -2.0 * std::numbers::pi * f * double(l) * tap_spacing);
            h[std::size_t(n)] = acc;
        }
        return h;
    }

    // ---- regime-map -------------------------------------------------------

    std::vector<ParamSpec> regime_map_params()
    {
        std::vector<ParamSpec> s{
            integers("N_values", {1, 2, 4, 8, 16, 32, 64}, 1.0, 64.0, "subband counts"),
            number("P_min_W", 1e-7, 0.0, true, std::nullopt, "lowest received RF power"),
            number("P_max_W", 1e-2, 0.0, true, std::nullopt, "highest received RF power"),
            integer("points", 61, 2.0, 10000.0, "log-spaced power points"),
            numbers("G_values", {1.0, 10.0}, 0.0, true, "second-to-fourth ratios for the boundary"),
        };
        append_rectenna(s);
        return s;
    }

    std::vector<ResultTable> run_regime_map(const Params &p, const RunContext &)
    {
        const auto model = rectenna_from(p);
        const auto Ns = p.integers("N_values");
        const double lo = p.number("P_min_W"), hi = p.number("P_max_W");
        require(lo < hi, "params.P_min_W: must be below P_max_W");

        ResultTable grid("grid", {{"N", "1"}, {"P_W", "W"}, {"second_A", "A"}, {"fourth_A", "A"}, {"ratio", "1"}});
        for (double P : logspace(lo, hi, int(p.integer("points"))))
            for (const auto &pt : rectenna::scaling_curve(model, Ns, P))
                grid.add_row({double(pt.N), P, pt.z.second, pt.z.fourth, pt.z.fourth / pt.z.second});

        ResultTable boundary("boundary", {{"N", "1"}, {"G", "1"}, {"P_boundary_W", "W"}});
        for (double G : p.numbers("G_values"))
            for (int N : Ns)
                boundary.add_row({double(N), G, rectenna::regime_boundary(model, N, G)});
        return {grid, boundary};
    }

    // ---- scaling-n --------------------------------------------------------

    std::vector<ParamSpec> scaling_n_params()
    {
        std::vector<ParamSpec> s{
            integers("N_values", {1, 2, 4, 8, 16, 32}, 1.0, 64.0, "subband counts"),
            number("P_W", 1e-5, 0.0, true, std::nullopt, "received RF power"),
            integer("trials", 100000, 10000.0, std::nullopt, "Monte-Carlo draws of the modulated signal"),
        };
        append_rectenna(s);
        return s;
    }

    std::vector<ResultTable> run_scaling_n(const Params &p, const RunContext &ctx)
    {
        const auto model = rectenna_from(p);
        const auto Ns = p.integers("N_values");
        const double P = p.number("P_W");
        const auto trials = p.integer("trials");
        const auto det = rectenna::scaling_curve(model, Ns, P);

        std::vector<rectenna::ModulatedEstimate> mod(Ns.size());
        numerics::parallel_for(Ns.size(), ctx.workers, [&](std::size_t i) {
            RngStream rng(ctx.seed, kModulatedStream + std::uint64_t(Ns[i]));
            mod[i] = rectenna::z_dc_modulated_expectation(model, Ns[i], P, trials, rng);
        });

        const double R = model.R_ant;
        ResultTable t("scaling", {{"N", "1"},
                                  {"second_A", "A"},
                                  {"fourth_A", "A"},
                                  {"fourth_closed_form_A", "A"},
                                  {"modulated_second_A", "A"},
                                  {"modulated_fourth_A", "A"},
                                  {"modulated_fourth_stderr_A", "A"}});
        for (std::size_t i = 0; i < Ns.size(); ++i)
        {
            const double N = double(Ns[i]);
            const double closed = model.k(4) * R * R * (2.0 * N * N + 1.0) / (2.0 * N) * P * P;
            t.add_row({N, det[i].z.second, det[i].z.fourth, closed, mod[i].mean.second, mod[i].mean.fourth,
                       mod[i].fourth_stderr});
        }
        return {t};
    }

    // ---- scaling-mt -------------------------------------------------------

    std::vector<ParamSpec> scaling_mt_params()
    {
        std::vector<ParamSpec> s{
            integers("M_t_values", {1, 2, 4, 8}, 1.0, 64.0, "transmit antenna counts"),
            integers("N_values", {1, 2, 4, 8, 16}, 1.0, 64.0, "subband counts"),
            number("P_W", 1e-5, 0.0, true, std::nullopt, "transmit power (unit-gain flat channel per antenna)"),
        };
        append_rectenna(s);
        return s;
    }

    std::vector<ResultTable> run_scaling_mt(const Params &p, const RunContext &ctx)
    {
        const auto model = rectenna_from(p);
        const auto Mts = p.integers("M_t_values");
        const auto Ns = p.integers("N_values");
        const double P = p.number("P_W");

        struct Cell
        {
            rectenna::ZdcTerms uniform;
            double optimized = 0.0;
        };
        std::vector<Cell> cells(Mts.size() * Ns.size());
        numerics::parallel_for(cells.size(), ctx.workers, [&](std::size_t idx) {
            const int M_t = Mts[idx / Ns.size()];
            const int N = Ns[idx % Ns.size()];
            waveform::WaveformProblem prob;
            prob.h.assign(std::size_t(N), numerics::CVector::Ones(M_t));
            prob.P = P;
            prob.model = model;
            const auto uni = waveform::uniform_mrt(prob);
            const auto y = waveform::received_scalars(prob.h, uni.s);
            cells[idx].uniform = rectenna::z_dc(model, y);
            waveform::ScaOptions opt;
            opt.seed = ctx.seed;
            cells[idx].optimized = waveform::mrt_decouple(prob, opt).z;
        });

        ResultTable t("scaling", {{"M_t", "1"},
                                  {"N", "1"},
                                  {"second_A", "A"},
                                  {"fourth_A", "A"},
                                  {"total_A", "A"},
                                  {"optimized_total_A", "A"}});
        for (std::size_t idx = 0; idx < cells.size(); ++idx)
        {
            const auto &c = cells[idx];
            t.add_row({double(Mts[idx / Ns.size()]), double(Ns[idx % Ns.size()]), c.uniform.second, c.uniform.fourth,
                       c.uniform.total(), c.optimized});
        }
        return {t};
    }

    // ---- beamforming-demo -------------------------------------------------

    std::vector<ParamSpec> beamforming_demo_params()
    {
        return {
            integer("M_t", 4, 1.0, 64.0, "transmit antennas"),
            integer("M_r", 1, 1.0, 64.0, "receive antennas"),
            integer("N", 8, 1.0, 1024.0, "subbands"),
            number("f1_Hz", 915e6, 0.0, true, std::nullopt, "first subband frequency"),
            number("delta_f_Hz", 1e6, 0.0, true, std::nullopt, "subband spacing"),
            number("beta", 1.0, 0.0, true, std::nullopt, "Rayleigh channel variance"),
            number("P_total_W", 1.0, 0.0, true, std::nullopt, "total transmit power P_rf^t"),
            number("P_s_W", 0.5, 0.0, true, std::nullopt, "per-subband power limit P_s"),
        };
    }

    std::vector<std::string> check_beamforming_demo(const Params &p)
    {
        std::vector<std::string> diag;
        const double P = p.number("P_total_W"), Ps = p.number("P_s_W");
        const auto N = p.integer("N");
        char buf[256];
        if (P < Ps)
        {
            std::snprintf(buf, sizeof buf,
                          "params.P_total_W: %.6g W is below P_s_W = %.6g W; the budget must satisfy "
                          "P_s <= P_rf^t <= N*P_s",
                          P, Ps);
            diag.emplace_back(buf);
        }
        else if (P > double(N) * Ps * (1.0 + 1e-12))
        {
            std::snprintf(buf, sizeof buf,
                          "params.P_total_W: budget implies N' = P_rf^t/P_s = %.6g active subbands but N = %lld; "
                          "the budget must satisfy P_s <= P_rf^t <= N*P_s",
                          P / Ps, static_cast<long long>(N));
            diag.emplace_back(buf);
        }
        return diag;
    }

    std::vector<ResultTable> run_beamforming_demo(const Params &p, const RunContext &ctx)
    {
        channel::FrequencyGrid grid;
        grid.N = int(p.integer("N"));
        grid.f1 = p.number("f1_Hz");
        grid.delta_f = p.number("delta_f_Hz");
        grid.B_s = grid.delta_f;
        const int M_t = int(p.integer("M_t")), M_r = int(p.integer("M_r"));
        beamforming::PowerBudget budget{p.number("P_total_W"), p.number("P_s_W")};
        budget.validate(grid.N);

        RngStream rng(ctx.seed, kChannelStream);
        const auto ch = channel::gen_rayleigh(M_t, M_r, grid, p.number("beta"), rng);
        const auto opt = beamforming::optimal_design(ch, budget);

        std::vector<int> rank(static_cast<std::size_t>(grid.N));
        for (std::size_t r = 0; r < opt.permutation.size(); ++r)
            rank[std::size_t(opt.permutation[r])] = int(r);

        ResultTable sub("subbands", {{"subband", "1"},
                                     {"frequency_Hz", "Hz"},
                                     {"rank", "1"},
                                     {"lambda_max", "1"},
                                     {"power_W", "W"},
                                     {"received_W", "W"}});
        for (int n = 0; n < grid.N; ++n)
        {
            const auto &S = opt.design.S[std::size_t(n)];
            const double rx = (ch.gram(n).matrix() * S.matrix()).trace().real();
            sub.add_row({double(n), grid.frequency(n), double(rank[std::size_t(n)]), opt.lambda_max[std::size_t(n)],
                         S.trace(), rx});
        }

        // Isotropic reference: P_rf^t / N per subband, spread evenly over the antennas.
        beamforming::TransmitDesign iso;
        for (int n = 0; n < grid.N; ++n)
            iso.S.push_back(numerics::HermitianMatrix::identity(M_t) * (budget.total / double(grid.N * M_t)));
        const double best_lambda = *std::max_element(opt.lambda_max.begin(), opt.lambda_max.end());

        ResultTable sum("summary", {{"optimal_W", "W"},
                                    {"isotropic_W", "W"},
                                    {"single_band_W", "W"},
                                    {"active_subbands", "1"}});
        sum.add_row({opt.received_power, beamforming::received_rf_power(ch, iso),
                     std::min(budget.total, budget.per_subband) * best_lambda, budget.active_subbands()});
        return {sub, sum};
    }

    // ---- training-tradeoff ------------------------------------------------

    std::vector<ParamSpec> training_tradeoff_params()
    {
        return {
            integer("M_t", 8, 1.0, 64.0, "ET antennas"),
            integer("M_r", 2, 1.0, 64.0, "ER antennas"),
            number("T_s", 1.0, 0.0, true, std::nullopt, "coherence block length"),
            number("sigma2_W", 1e-3, 0.0, true, std::nullopt, "ET receiver noise power"),
            number("beta", 1.0, 0.0, true, std::nullopt, "channel variance"),
            number("P_t_W", 1.0, 0.0, true, std::nullopt, "ET transmit power"),
            number("p_max_W", 1e-2, 0.0, true, std::nullopt, "largest pilot power on the grid"),
            integer("lambda_trials", 100000, 10000.0, std::nullopt, "Monte-Carlo draws per Lambda entry"),
            integer("pipeline_trials", 20000, 1000.0, std::nullopt, "end-to-end simulation draws"),
        };
    }

    std::vector<ResultTable> run_training_tradeoff(const Params &p, const RunContext &ctx)
    {
        const int M_t = int(p.integer("M_t")), M_r = int(p.integer("M_r"));
        acquisition::TrainingConfig base;
        base.T = p.number("T_s");
        base.sigma2 = p.number("sigma2_W");
        base.beta = p.number("beta");
        base.P_t = p.number("P_t_W");

        acquisition::LambdaTable lt(ctx.seed, p.integer("lambda_trials"));
        const auto grid = acquisition::default_training_grid(base.T, p.number("p_max_W"), M_r);
        const auto res = acquisition::optimize_training(M_t, M_r, base, grid, lt);

        ResultTable curve("tau_curve", {{"tau_s", "s"},
                                        {"p_r_W", "W"},
                                        {"M_r_prime", "1"},
                                        {"energy_J", "J"},
                                        {"net_energy_J", "J"}});
        for (const auto &r : res.tau_curve)
            curve.add_row({r.tau, r.p_r, double(r.M_r_prime), r.energy, r.net_energy});

        ResultTable lam("lambda", {{"M_t", "1"}, {"M_r_prime", "1"}, {"lambda", "1"}, {"stderr", "1"}});
        for (int m = 1; m <= M_r; ++m)
        {
            const auto e = lt.get(M_t, m);
            lam.add_row({double(M_t), double(m), e.mean, e.stderr_});
        }

        RngStream rng(ctx.seed, kPipelineStream);
        const auto pipe =
            acquisition::simulate_training_pipeline(res.best, M_t, M_r, p.integer("pipeline_trials"), rng);
        const double perfect =
            acquisition::perfect_csi_energy(res.best, M_r, lt.get(M_t, res.best.M_r_prime).mean);

        ResultTable sum("summary", {{"tau_s", "s"},
                                    {"p_r_W", "W"},
                                    {"M_r_prime", "1"},
                                    {"energy_J", "J"},
                                    {"net_energy_J", "J"},
                                    {"pipeline_energy_J", "J"},
                                    {"pipeline_stderr_J", "J"},
                                    {"perfect_csi_energy_J", "J"}});
        sum.add_row({res.best.tau, res.best.p_r, double(res.best.M_r_prime), res.energy, res.net_energy, pipe.mean,
                     pipe.stderr_, perfect});
        return {curve, lam, sum};
    }

    // ---- accpm ------------------------------------------------------------

    std::vector<ParamSpec> accpm_params()
    {
        return {
            integer("M_t", 2, 1.0, 16.0, "ET antennas"),
            integer("M_r", 1, 1.0, 16.0, "ER antennas"),
            integer("channels", 20, 1.0, std::nullopt, "random channels"),
            integer("max_cuts", 200, 1.0, 100000.0, "feedback intervals"),
            number("probe_power_W", 1.0, 0.0, true, std::nullopt, "training transmit power"),
            number("slot_length_s", 1.0, 0.0, true, std::nullopt, "feedback slot length"),
        };
    }

    std::vector<ResultTable> run_accpm(const Params &p, const RunContext &ctx)
    {
        const int M_t = int(p.integer("M_t")), M_r = int(p.integer("M_r"));
        const auto channels = std::size_t(p.integer("channels"));
        acquisition::AccpmOptions opt;
        opt.max_cuts = int(p.integer("max_cuts"));
        opt.probe_power = p.number("probe_power_W");
        opt.slot_length = p.number("slot_length_s");

        struct Run
        {
            acquisition::AccpmResult res;
            bool consistent = true;
        };
        std::vector<Run> runs(channels);
        numerics::parallel_for(channels, ctx.workers, [&](std::size_t c) {
            RngStream chan_rng(ctx.seed, kChannelStream + c);
            channel::FrequencyGrid g;
            const auto ch = channel::gen_rayleigh(M_t, M_r, g, 1.0, chan_rng);
            const auto G = ch.gram(0);
            RngStream rng(ctx.seed, kLearnerStream + c);
            runs[c].res = acquisition::accpm_learn(G, opt, rng);
            for (const auto &cut : runs[c].res.cuts)
            {
                const double v = double(cut.feedback) * (G.matrix() * cut.step.matrix()).trace().real();
                runs[c].consistent = runs[c].consistent && v <= 1e-12 * G.matrix().norm() * cut.step.matrix().norm();
            }
        });

        ResultTable traj("trajectory", {{"channel", "1"}, {"cut", "1"}, {"error", "1"}, {"potential", "1"}});
        ResultTable sum("summary", {{"channel", "1"},
                                    {"cuts_used", "1"},
                                    {"final_error", "1"},
                                    {"saturated", "1"},
                                    {"consistent", "1"}});
        for (std::size_t c = 0; c < channels; ++c)
        {
            const auto &r = runs[c].res;
            for (std::size_t i = 0; i < r.errors.size(); ++i)
                traj.add_row({double(c), double(i), r.errors[i], i < r.potentials.size() ? r.potentials[i] : 0.0});
            sum.add_row({double(c), double(r.cuts_used), r.errors.back(), r.saturated ? 1.0 : 0.0,
                         runs[c].consistent ? 1.0 : 0.0});
        }
        return {traj, sum};
    }

    // ---- region-2user / heatmap -------------------------------------------

    namespace
    {
        void append_layout(std::vector<ParamSpec> &s)
        {
            s.push_back(number("frequency_Hz", 915e6, 0.0, true, std::nullopt, "carrier"));
            s.push_back(number("P_total_W", 2.0, 0.0, true, std::nullopt, "total ET power, split evenly when distributed"));
            s.push_back(number("gain_tx", 1.0, 0.0, true, std::nullopt, "linear transmit antenna gain"));
            s.push_back(number("gain_rx", 1.0, 0.0, true, std::nullopt, "linear receive antenna gain"));
        }

        struct Layouts
        {
            channel::Placement co, di;
            powerregion::NetworkTopology tco, tdi;
            int co_elements = 9;
        };

        Layouts layouts_from(const Params &p)
        {
            Layouts l;
            l.co = colocated_layout();
            l.di = distributed_layout();
            for (auto *pl : {&l.co, &l.di})
            {
                pl->gain_tx = p.number("gain_tx");
                pl->gain_rx = p.number("gain_rx");
            }
            const double f = p.number("frequency_Hz"), P = p.number("P_total_W");
            const int J = int(l.di.transmitters.size());
            l.tco = powerregion::topology_from_placement(l.co, f, l.co_elements, {P});
            l.tdi = powerregion::topology_from_placement(l.di, f, 1, std::vector<double>(std::size_t(J), P / J));
            return l;
        }
    }

    std::vector<ParamSpec> region_2user_params()
    {
        std::vector<ParamSpec> s{integer("resolution", 41, 2.0, 10000.0, "alpha_1 / mu_1 sweep points")};
        append_layout(s);
        return s;
    }

    std::vector<ResultTable> run_region_2user(const Params &p, const RunContext &ctx)
    {
        const auto l = layouts_from(p);
        const int res = int(p.integer("resolution"));
        std::vector<ResultTable> out;
        ResultTable sum("summary", {{"layout", "1"}, {"maxmin_W", "W"}, {"max_Q_1_W", "W"}, {"max_Q_2_W", "W"}});
        const std::pair<const char *, const powerregion::NetworkTopology *> cases[] = {{"colocated", &l.tco},
                                                                                       {"distributed", &l.tdi}};
        for (std::size_t i = 0; i < 2; ++i)
        {
            const auto &topo = *cases[i].second;
            const std::string tag = cases[i].first;
            ResultTable b("boundary_" + tag, {{"alpha_1", "1"}, {"Q_1_W", "W"}, {"Q_2_W", "W"}});
            for (const auto &pt : powerregion::trace_boundary(topo, res, {}, ctx.workers))
                b.add_row({pt.weights[0], pt.Q[0], pt.Q[1]});
            ResultTable w("wspmax_" + tag, {{"mu_1", "1"}, {"Q_1_W", "W"}, {"Q_2_W", "W"}});
            for (const auto &pt : powerregion::wspmax_sweep(topo, res, {}, ctx.workers))
                w.add_row({pt.weights[0], pt.Q[0], pt.Q[1]});

            const auto mm = powerregion::power_profile(topo, {0.5, 0.5});
            const auto q1 = powerregion::wspmax(topo, {1.0, 0.0});
            const auto q2 = powerregion::wspmax(topo, {0.0, 1.0});
            sum.add_row({double(i), std::min(mm.Q[0], mm.Q[1]), q1.Q[0], q2.Q[1]});
            out.push_back(std::move(b));
            out.push_back(std::move(w));
        }
        out.push_back(std::move(sum));
        return out;
    }

    std::vector<ParamSpec> heatmap_params()
    {
        std::vector<ParamSpec> s{
            number("alpha_1", 0.5, 0.0, false, 1.0, "power-profile share of ER 1"),
            integer("points", 61, 2.0, 1001.0, "grid points per axis over the 30 m square"),
            number("exclusion_radius_m", 2.0, 0.0, false, std::nullopt, "hot-spot metric: ignored disc around each ET"),
            integer("angular_bins", 180, 1.0, 36000.0, "hot-spot metric: direction bins"),
            number("top_fraction", 0.01, 0.0, true, 1.0, "hot-spot metric: share of strongest cells"),
        };
        append_layout(s);
        return s;
    }

    std::vector<ResultTable> run_heatmap(const Params &p, const RunContext &)
    {
        const auto l = layouts_from(p);
        const double f = p.number("frequency_Hz");
        const double a1 = p.number("alpha_1");
        powerregion::HeatmapSpec spec;
        spec.points = int(p.integer("points"));
        powerregion::HotspotOptions hopt;
        hopt.exclusion_radius = p.number("exclusion_radius_m");
        hopt.angular_bins = int(p.integer("angular_bins"));
        hopt.top_fraction = p.number("top_fraction");

        std::vector<ResultTable> out;
        ResultTable hs("hotspots", {{"layout", "1"}, {"top_cells", "1"}, {"occupied_bins", "1"}, {"bin_fraction", "1"}});
        ResultTable mk("markers", {{"layout", "1"}, {"kind", "1"}, {"x_m", "m"}, {"y_m", "m"}});
        struct Case
        {
            const char *tag;
            const channel::Placement *pl;
            const powerregion::NetworkTopology *topo;
            int M_t;
        };
        const Case cases[] = {{"colocated", &l.co, &l.tco, l.co_elements}, {"distributed", &l.di, &l.tdi, 1}};
        const double lambda = channel::kSpeedOfLight / f;
        for (std::size_t i = 0; i < 2; ++i)
        {
            const auto &c = cases[i];
            const auto pt = powerregion::power_profile(*c.topo, {a1, 1.0 - a1});
            const auto map = powerregion::power_heatmap(*c.pl, f, c.M_t, pt.S, spec);
            ResultTable t(std::string("heatmap_") + c.tag, {{"x_m", "m"}, {"y_m", "m"}, {"power_W", "W"}});
            for (const auto &cell : map)
                t.add_row({cell.x, cell.y, cell.power});
            const auto st = powerregion::hotspot_concentration(map, *c.pl, c.M_t, f, hopt);
            hs.add_row({double(i), double(st.top_cells), double(st.occupied_bins), st.bin_fraction});
            // kind 0 = ET element, 1 = ER
            for (const auto &tx : c.pl->transmitters)
                for (int m = 0; m < c.M_t; ++m)
                {
                    const auto e = channel::ula_element(*c.pl, tx, m, c.M_t, lambda);
                    mk.add_row({double(i), 0.0, e.x, e.y});
                }
            for (const auto &rx : c.pl->receivers)
                mk.add_row({double(i), 1.0, rx.x, rx.y});
            out.push_back(std::move(t));
        }
        out.push_back(std::move(hs));
        out.push_back(std::move(mk));
        return out;
    }

    // ---- waveform-opt-vs-ss -----------------------------------------------

    std::vector<ParamSpec> waveform_opt_vs_ss_params()
    {
        std::vector<ParamSpec> s{
            integers("N_values", {2, 4, 8, 16}, 1.0, 64.0, "subband counts"),
            integer("channels", 100, 1.0, std::nullopt, "random channel draws"),
            number("P_W", 1e-5, 0.0, true, std::nullopt, "transmit power (unit average channel gain)"),
            number("bandwidth_Hz", 1e6, 0.0, true, std::nullopt, "total bandwidth, delta_f = B/N"),
            number("carrier_Hz", 5.18e9, 0.0, true, std::nullopt, "centre frequency"),
            integer("taps", 30, 1.0, 10000.0, "power-delay profile taps"),
            number("tap_spacing_s", 10e-9, 0.0, true, std::nullopt, "tap spacing"),
            number("decay_s", 100e-9, 0.0, true, std::nullopt, "exponential decay constant of the profile"),
            integer("restarts", 8, 0.0, 1000.0, "random SCA restarts"),
            integer("bar_N", 16, 1.0, 64.0, "subbands of the example waveform"),
            number("bar_bandwidth_Hz", 10e6, 0.0, true, std::nullopt, "bandwidth of the example waveform"),
        };
        append_rectenna(s);
        return s;
    }

    std::vector<ResultTable> run_waveform_opt_vs_ss(const Params &p, const RunContext &ctx)
    {
        const auto model = rectenna_from(p);
        const auto Ns = p.integers("N_values");
        const auto channels = std::size_t(p.integer("channels"));
        const double P = p.number("P_W"), carrier = p.number("carrier_Hz");
        const int taps = int(p.integer("taps"));
        const double spacing = p.number("tap_spacing_s"), decay = p.number("decay_s");

        auto draw = [&](int N, double B, std::size_t c) {
            RngStream rng(ctx.seed, kChannelStream + c);
            return selective_channel(N, B, carrier, taps, spacing, decay, rng);
        };
        auto gains_of = [](const std::vector<cplx> &h) {
            std::vector<double> g(h.size());
            for (std::size_t n = 0; n < h.size(); ++n)
                g[n] = std::abs(h[n]);
            return g;
        };
        auto sca_options = [&](std::size_t c, int N) {
            waveform::ScaOptions o;
            o.restarts = int(p.integer("restarts"));
            o.seed = numerics::RngStream(ctx.seed, (std::uint64_t(N) << 32) | c).next_u64();
            return o;
        };

        ResultTable gain("gain", {{"N", "1"},
                                  {"mean_z_opt_A", "A"},
                                  {"mean_z_ss_A", "A"},
                                  {"mean_gain", "1"},
                                  {"min_gain", "1"}});
        for (int N : Ns)
        {
            std::vector<double> zo(channels), zs(channels);
            numerics::parallel_for(channels, ctx.workers, [&](std::size_t c) {
                const auto g = gains_of(draw(N, p.number("bandwidth_Hz"), c));
                zo[c] = waveform::optimize_sca(model, g, P, sca_options(c, N)).z;
                std::vector<double> ss(g.size(), 0.0);
                ss[std::size_t(std::max_element(g.begin(), g.end()) - g.begin())] = std::sqrt(P);
                zs[c] = waveform::zdc_inphase(model, g, ss);
            });
            double so = 0.0, sss = 0.0, sg = 0.0, mg = std::numeric_limits<double>::infinity();
            for (std::size_t c = 0; c < channels; ++c)
            {
                so += zo[c];
                sss += zs[c];
                sg += zo[c] / zs[c];
                mg = std::min(mg, zo[c] / zs[c]);
            }
            const double n = double(channels);
            gain.add_row({double(N), so / n, sss / n, sg / n, mg});
        }

        const int bar_N = int(p.integer("bar_N"));
        const double bar_B = p.number("bar_bandwidth_Hz");
        const auto h = draw(bar_N, bar_B, 0);
        const auto g = gains_of(h);
        const auto sol = waveform::optimize_sca(model, g, P, sca_options(0, bar_N));
        const auto ph = waveform::matched_phases(h);
        ResultTable bars("bars", {{"subband", "1"},
                                  {"frequency_Hz", "Hz"},
                                  {"channel_gain", "1"},
                                  {"amplitude_sqrtW", "sqrt(W)"},
                                  {"phase_rad", "rad"}});
        for (int n = 0; n < bar_N; ++n)
        {
            const double f = carrier + (double(n) - double(bar_N - 1) / 2.0) * bar_B / double(bar_N);
            bars.add_row({double(n), f, g[std::size_t(n)], sol.amplitudes[std::size_t(n)], ph.phase[std::size_t(n)]});
        }
        return {gain, bars};
    }
}
