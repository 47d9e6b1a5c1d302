// SPDX-License-Identifier: Apache-2.0

#ifndef WPT_HARNESS_CONFIG_HPP
#define WPT_HARNESS_CONFIG_HPP

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wpt::harness
{
    using nlohmann::json;

    enum class ParamKind
    {
        Number,
        Integer,
        NumberList,
        IntegerList,
        String
    };

    // One scenario parameter. Parameters whose name ends in "_W" may also be
    // given as "<stem>_dBm" and are converted on load.
    struct ParamSpec
    {
        std::string name;
        ParamKind kind = ParamKind::Number;
        json default_value;
        std::optional<double> min;          // applies to every element of lists
        bool min_exclusive = false;
        std::optional<double> max;
        std::string help;
    };

    // Resolved parameter set: defaults overlaid with the config file.
    class Params
    {
    public:
        Params() = default;
        explicit Params(json values) : values_(std::move(values)) {}

        double number(const std::string &name) const;
        std::int64_t integer(const std::string &name) const;
        std::vector<double> numbers(const std::string &name) const;
        std::vector<int> integers(const std::string &name) const;
        std::string string(const std::string &name) const;
        const json &raw() const { return values_; }

    private:
        const json &at(const std::string &name) const;
        json values_ = json::object();
    };

    struct ExperimentConfig
    {
        std::string scenario;
        std::uint64_t seed = 1;
        Params params;
        std::optional<std::string> out_dir;

        // Canonical JSON of (scenario, seed, resolved params); hashed into CSV metadata.
        json canonical() const;
        std::string hash() const; // FNV-1a 64, 16 hex digits
    };

    double dbm_to_watts(double dbm);

    // Overlays `given` on the spec defaults. Appends one diagnostic per bad field
    // (unknown key, wrong type, out of range) and returns the resolved object.
    json resolve_params(const std::vector<ParamSpec> &specs, const json &given, std::vector<std::string> &diagnostics);

    std::uint64_t fnv1a64(const std::string &bytes);
}

#endif
