// SPDX-License-Identifier: Apache-2.0

#ifndef WPT_HARNESS_REGISTRY_HPP
#define WPT_HARNESS_REGISTRY_HPP

#include "wpt/harness/config.hpp"
#include "wpt/harness/scenarios.hpp"

#include <string>
#include <vector>

namespace wpt::harness
{
    struct ScenarioInfo
    {
        std::string name;
        std::string description;
        std::string reproduces; // which result of the source study it recreates
        std::vector<ParamSpec> params;
        ScenarioFn run;
        ScenarioCheck check = nullptr;
    };

    // Stable order.
    const std::vector<ScenarioInfo> &scenarios();
    const ScenarioInfo *find_scenario(const std::string &name);
    json scenarios_json();

    struct LoadedConfig
    {
        ExperimentConfig config;
        std::vector<std::string> diagnostics; // empty iff valid
    };

    // Validates a config document. `scenario_hint` fills in a missing
    // "scenario" key (the CLI passes its positional argument).
    LoadedConfig parse_config(const json &doc, const std::string &scenario_hint = "");
    // Reads and validates a file; throws std::runtime_error if it cannot be read.
    LoadedConfig load_config_file(const std::string &path, const std::string &scenario_hint = "");
    // Diagnostics only; no side effects.
    std::vector<std::string> validate_config_file(const std::string &path);

    struct RunOutput
    {
        std::vector<std::string> files;
        std::vector<ResultTable> tables;
    };

    // Runs the scenario and writes <out_dir>/<scenario>/<table>.csv.
    RunOutput run_scenario(const ExperimentConfig &config, const std::string &out_dir, unsigned workers);
}

#endif
