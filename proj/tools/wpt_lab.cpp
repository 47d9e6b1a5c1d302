// SPDX-License-Identifier: Apache-2.0

#include "wpt/harness/registry.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

namespace
{
    using wpt::harness::json;

    std::optional<std::string> env(const char *name)
    {
        const char *v = std::getenv(name);
        if (!v || !*v)
            return std::nullopt;
        return std::string(v);
    }

    void print_diagnostics(const std::string &source, const std::vector<std::string> &diag)
    {
        for (const auto &d : diag)
            std::cerr << source << ": " << d << "\n";
    }

    std::string scenario_names()
    {
        std::string t;
        for (const auto &s : wpt::harness::scenarios())
            t += (t.empty() ? "" : ", ") + s.name;
        return t;
    }

    struct RunArgs
    {
        std::string config;
        std::string out;
        std::uint64_t seed = 0;
        unsigned workers = 0;
        CLI::Option *seed_opt = nullptr;
        CLI::Option *out_opt = nullptr;
        CLI::Option *workers_opt = nullptr;
    };

    int run(const std::string &scenario, const RunArgs &a)
    {
        wpt::harness::LoadedConfig loaded;
        std::string source = "config";
        if (!a.config.empty())
        {
            loaded = wpt::harness::load_config_file(a.config, scenario);
            source = a.config;
        }
        else
            loaded = wpt::harness::parse_config(json::object(), scenario);
        if (!loaded.diagnostics.empty())
        {
            print_diagnostics(source, loaded.diagnostics);
            return 1;
        }
        auto cfg = loaded.config;
        if (*a.seed_opt)
            cfg.seed = a.seed;

        std::string out = "results";
        if (*a.out_opt)
            out = a.out;
        else if (auto e = env("WPT_LAB_OUT"))
            out = *e;
        else if (cfg.out_dir)
            out = *cfg.out_dir;

        unsigned workers = std::max(1u, std::thread::hardware_concurrency());
        if (*a.workers_opt)
            workers = a.workers;
        else if (auto e = env("WPT_LAB_WORKERS"))
        {
            char *end = nullptr;
            const unsigned long w = std::strtoul(e->c_str(), &end, 10);
            if (*end != '\0' || w == 0 || w > 1024)
            {
                std::cerr << "WPT_LAB_WORKERS: expected an integer in [1, 1024], got '" << *e << "'\n";
                return 1;
            }
            workers = unsigned(w);
        }

        const auto result = wpt::harness::run_scenario(cfg, out, workers);
        for (const auto &f : result.files)
            std::cout << f << "\n";
        return 0;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Multiband wireless power transfer experiments"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(wpt::harness::kVersion));

    auto *list = app.add_subcommand("list", "List scenarios");
    bool as_json = false;
    list->add_flag("--json", as_json, "Machine-readable listing");

    auto *validate = app.add_subcommand("validate", "Check a config file and print diagnostics");
    std::string validate_path;
    validate->add_option("path", validate_path, "Config file")->required();

    const auto &all = wpt::harness::scenarios();
    // Options bind by reference, so the storage must not move.
    std::vector<RunArgs> per(all.size());
    std::vector<CLI::App *> runners;
    for (std::size_t i = 0; i < all.size(); ++i)
    {
        auto *sub = app.add_subcommand(all[i].name, all[i].description);
        sub->add_option("--config", per[i].config, "JSON config file")->check(CLI::ExistingFile);
        per[i].out_opt = sub->add_option("--out", per[i].out, "Output directory (overrides WPT_LAB_OUT)");
        per[i].seed_opt = sub->add_option("--seed", per[i].seed, "Random seed");
        per[i].workers_opt = sub->add_option("--workers", per[i].workers, "Worker threads (overrides WPT_LAB_WORKERS)")
                                 ->check(CLI::Range(1u, 1024u));
        runners.push_back(sub);
    }

    if (argc >= 2 && argv[1][0] != '-')
    {
        const std::string first = argv[1];
        if (first != "list" && first != "validate" && !wpt::harness::find_scenario(first))
        {
            std::cerr << "unknown scenario '" << first << "'\nscenarios: " << scenario_names() << "\n";
            return 2;
        }
    }

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        if (e.get_name() == "ExtrasError" || e.get_name() == "RequiredError")
            std::cerr << "scenarios: " << scenario_names() << "\n";
        return app.exit(e);
    }

    try
    {
        if (*list)
        {
            if (as_json)
                std::cout << wpt::harness::scenarios_json().dump(2) << "\n";
            else
                for (const auto &s : wpt::harness::scenarios())
                    std::cout << s.name << "\t" << s.description << " [" << s.reproduces << "]\n";
            return 0;
        }
        if (*validate)
        {
            const auto diag = wpt::harness::validate_config_file(validate_path);
            if (diag.empty())
            {
                std::cout << validate_path << ": ok\n";
                return 0;
            }
            print_diagnostics(validate_path, diag);
            return 1;
        }
        for (std::size_t i = 0; i < runners.size(); ++i)
            if (*runners[i])
                return run(all[i].name, per[i]);
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
