// SPDX-License-Identifier: Apache-2.0

#include "wpt/harness/registry.hpp"
#include "wpt/errors.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wpt::harness
{
    const std::vector<ScenarioInfo> &scenarios()
    {
        static const std::vector<ScenarioInfo> list{
            {"regime-map", "fourth-to-second-order z_DC ratio over (N, P_rf^r) and the regime boundary",
             "diode nonlinearity regime map; boundary k2/(k4 R_ant N G)", regime_map_params(), run_regime_map},
            {"scaling-n", "flat-channel z_DC terms versus N, deterministic and modulated multisines",
             "flat-channel scaling law; modulated versus deterministic waveforms", scaling_n_params(),
             run_scaling_n},
            {"scaling-mt", "flat-channel z_DC versus (N, M_t) with MRT and uniform allocation",
             "DC power versus subbands and transmit antennas (N M_t^2 scaling)", scaling_mt_params(), run_scaling_mt},
            {"beamforming-demo", "optimal multiband energy beamforming on one Rayleigh draw",
             "single-user energy beamforming: strongest-subband eigenbeam allocation", beamforming_demo_params(),
             run_beamforming_demo, check_beamforming_demo},
            {"training-tradeoff", "net harvested energy versus training time for reverse-link estimation",
             "reverse-link training energy tradeoff", training_tradeoff_params(), run_training_tradeoff},
            {"accpm", "one-bit energy-feedback learning error trajectories",
             "analytic-center cutting-plane channel learning", accpm_params(), run_accpm},
            {"region-2user", "two-ER power region, co-located ULA versus distributed ETs",
             "multi-user power region boundary (30 m x 30 m two-ER example)", region_2user_params(),
             run_region_2user},
            {"heatmap", "received-power maps of the max-min designs and their hot-spot statistics",
             "spatial power maps, co-located versus distributed (30 m x 30 m two-ER example)", heatmap_params(),
             run_heatmap},
            {"waveform-opt-vs-ss", "optimized multisine versus single sinewave on selective SISO channels",
             "adaptive waveform gain over single sinewave; example channel/waveform bars",
             waveform_opt_vs_ss_params(), run_waveform_opt_vs_ss},
        };
        return list;
    }

    const ScenarioInfo *find_scenario(const std::string &name)
    {
        for (const auto &s : scenarios())
            if (s.name == name)
                return &s;
        return nullptr;
    }

    namespace
    {
        const char *kind_name(ParamKind k)
        {
            switch (k)
            {
            case ParamKind::Number:
                return "number";
            case ParamKind::Integer:
                return "integer";
            case ParamKind::NumberList:
                return "number[]";
            case ParamKind::IntegerList:
                return "integer[]";
            case ParamKind::String:
                return "string";
            }
            return "?";
        }

        std::string known_names()
        {
            std::string t;
            for (const auto &s : scenarios())
                t += (t.empty() ? "" : ", ") + s.name;
            return t;
        }
    }

    json scenarios_json()
    {
        json out = json::array();
        for (const auto &s : scenarios())
        {
            json params = json::array();
            for (const auto &p : s.params)
            {
                json e{{"name", p.name}, {"kind", kind_name(p.kind)}, {"default", p.default_value}, {"help", p.help}};
                if (p.min)
                    e[p.min_exclusive ? "exclusive_min" : "min"] = *p.min;
                if (p.max)
                    e["max"] = *p.max;
                params.push_back(std::move(e));
            }
            out.push_back({{"name", s.name},
                           {"description", s.description},
                           {"reproduces", s.reproduces},
                           {"params", std::move(params)}});
        }
        return out;
    }

    LoadedConfig parse_config(const json &doc, const std::string &scenario_hint)
    {
        LoadedConfig out;
        auto &diag = out.diagnostics;
        if (!doc.is_object())
        {
            diag.push_back("config: expected a JSON object");
            return out;
        }
        for (auto it = doc.begin(); it != doc.end(); ++it)
            if (it.key() != "scenario" && it.key() != "seed" && it.key() != "params" && it.key() != "out")
                diag.push_back(it.key() + ": unknown key (allowed: scenario, seed, params, out)");

        std::string name = scenario_hint;
        if (doc.contains("scenario"))
        {
            if (!doc["scenario"].is_string())
                diag.push_back("scenario: expected a string");
            else
            {
                const std::string given = doc["scenario"].get<std::string>();
                if (!scenario_hint.empty() && given != scenario_hint)
                    diag.push_back("scenario: config names '" + given + "' but '" + scenario_hint + "' was requested");
                name = given;
            }
        }
        if (name.empty())
        {
            diag.push_back("scenario: missing");
            return out;
        }
        const ScenarioInfo *info = find_scenario(name);
        if (!info)
        {
            diag.push_back("scenario: unknown scenario '" + name + "' (known: " + known_names() + ")");
            return out;
        }
        out.config.scenario = name;

        if (doc.contains("seed"))
        {
            const json &s = doc["seed"];
            if (s.is_number_unsigned())
                out.config.seed = s.get<std::uint64_t>();
            else if (s.is_number_integer() && s.get<std::int64_t>() >= 0)
                out.config.seed = std::uint64_t(s.get<std::int64_t>());
            else if (s.is_number_integer())
                diag.push_back("seed: must be non-negative");
            else
                diag.push_back("seed: expected an unsigned integer");
        }
        if (doc.contains("out"))
        {
            if (doc["out"].is_string() && !doc["out"].get<std::string>().empty())
                out.config.out_dir = doc["out"].get<std::string>();
            else
                diag.push_back("out: expected a nonempty string");
        }

        const std::size_t before = diag.size();
        out.config.params = Params(resolve_params(info->params, doc.contains("params") ? doc["params"] : json(), diag));
        // Cross-field rules only make sense once every field is individually valid.
        if (diag.size() == before && info->check)
            for (auto &d : info->check(out.config.params))
                diag.push_back(std::move(d));
        return out;
    }

    LoadedConfig load_config_file(const std::string &path, const std::string &scenario_hint)
    {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("cannot read config file '" + path + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        json doc;
        try
        {
            doc = json::parse(ss.str());
        }
        catch (const json::parse_error &e)
        {
            LoadedConfig bad;
            bad.diagnostics.push_back(std::string("config: JSON parse error: ") + e.what());
            return bad;
        }
        return parse_config(doc, scenario_hint);
    }

    std::vector<std::string> validate_config_file(const std::string &path)
    {
        return load_config_file(path).diagnostics;
    }

    RunOutput run_scenario(const ExperimentConfig &config, const std::string &out_dir, unsigned workers)
    {
        const ScenarioInfo *info = find_scenario(config.scenario);
        if (!info)
            throw ValidationError("unknown scenario '" + config.scenario + "'");
        RunContext ctx{config.seed, std::max(1u, workers)};
        RunOutput out;
        out.tables = info->run(config.params, ctx);

        Metadata meta{{"version", kVersion},
                      {"scenario", config.scenario},
                      {"seed", std::to_string(config.seed)},
                      {"config_hash", config.hash()}};
        for (const auto &t : out.tables)
        {
            meta["table"] = t.name();
            const std::string path = out_dir + "/" + config.scenario + "/" + t.name() + ".csv";
            write_text_file(path, to_csv(t, meta));
            out.files.push_back(path);
        }
        return out;
    }
}
