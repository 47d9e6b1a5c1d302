// SPDX-License-Identifier: Apache-2.0

#ifndef WPT_HARNESS_SCENARIOS_HPP
#define WPT_HARNESS_SCENARIOS_HPP

#include "wpt/channel/channel.hpp"
#include "wpt/harness/config.hpp"
#include "wpt/harness/result_table.hpp"

#include <cstdint>
#include <vector>

namespace wpt::harness
{
    struct RunContext
    {
        std::uint64_t seed = 1;
        unsigned workers = 1;
    };

    using ScenarioFn = std::vector<ResultTable> (*)(const Params &, const RunContext &);
    // Cross-field checks after per-field validation; returns diagnostics.
    using ScenarioCheck = std::vector<std::string> (*)(const Params &);

    std::vector<ParamSpec> regime_map_params();
    std::vector<ResultTable> run_regime_map(const Params &, const RunContext &);

    std::vector<ParamSpec> scaling_n_params();
    std::vector<ResultTable> run_scaling_n(const Params &, const RunContext &);

    std::vector<ParamSpec> scaling_mt_params();
    std::vector<ResultTable> run_scaling_mt(const Params &, const RunContext &);

    std::vector<ParamSpec> beamforming_demo_params();
    std::vector<ResultTable> run_beamforming_demo(const Params &, const RunContext &);
    std::vector<std::string> check_beamforming_demo(const Params &);

    std::vector<ParamSpec> training_tradeoff_params();
    std::vector<ResultTable> run_training_tradeoff(const Params &, const RunContext &);

    std::vector<ParamSpec> accpm_params();
    std::vector<ResultTable> run_accpm(const Params &, const RunContext &);

    std::vector<ParamSpec> region_2user_params();
    std::vector<ResultTable> run_region_2user(const Params &, const RunContext &);

    std::vector<ParamSpec> heatmap_params();
    std::vector<ResultTable> run_heatmap(const Params &, const RunContext &);

    std::vector<ParamSpec> waveform_opt_vs_ss_params();
    std::vector<ResultTable> run_waveform_opt_vs_ss(const Params &, const RunContext &);

    // Co-located / distributed layouts of the 30 m x 30 m two-ER example.
    channel::Placement colocated_layout();
    channel::Placement distributed_layout();

    // Frequency-selective SISO channel h_n from i.i.d. CSCG taps with an
    // exponential power-delay profile (unit average gain), subbands centred on
    // `carrier` with spacing bandwidth / N.
    std::vector<numerics::cplx> selective_channel(int N, double bandwidth, double carrier, int taps,
                                                  double tap_spacing, double decay, numerics::RngStream &rng);
}

#endif
