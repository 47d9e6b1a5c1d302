// SPDX-License-Identifier: Apache-2.0

#include "wpt/harness/config.hpp"
#include "wpt/errors.hpp"

#include <cmath>
#include <cstdio>

namespace wpt::harness
{
    const json &Params::at(const std::string &name) const
    {
        auto it = values_.find(name);
        if (it == values_.end())
            throw ValidationError("parameter '" + name + "' is not defined for this scenario");
        return *it;
    }

    double Params::number(const std::string &name) const { return at(name).get<double>(); }
    std::int64_t Params::integer(const std::string &name) const { return at(name).get<std::int64_t>(); }
    std::vector<double> Params::numbers(const std::string &name) const { return at(name).get<std::vector<double>>(); }
    std::vector<int> Params::integers(const std::string &name) const { return at(name).get<std::vector<int>>(); }
    std::string Params::string(const std::string &name) const { return at(name).get<std::string>(); }

    json ExperimentConfig::canonical() const
    {
        // nlohmann::json objects keep keys sorted, so dump() is canonical
        return json{{"scenario", scenario}, {"seed", seed}, {"params", params.raw()}};
    }

    std::uint64_t fnv1a64(const std::string &bytes)
    {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char c : bytes)
        {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        return h;
    }

    std::string ExperimentConfig::hash() const
    {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(canonical().dump())));
        return buf;
    }

    double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

    namespace
    {
        bool is_integer(const json &v)
        {
            if (v.is_number_integer())
                return true;
            if (v.is_number_float())
            {
                const double d = v.get<double>();
                return std::isfinite(d) && d == std::floor(d) && std::abs(d) < 9.0e15;
            }
            return false;
        }

        std::string range_text(const ParamSpec &s)
        {
            std::string t;
            if (s.min)
                t += (s.min_exclusive ? "> " : ">= ") + json(*s.min).dump();
            if (s.max)
                t += (t.empty() ? "" : " and ") + std::string("<= ") + json(*s.max).dump();
            return t;
        }

        bool in_range(const ParamSpec &s, double v)
        {
            if (!std::isfinite(v))
                return false;
            if (s.min && (s.min_exclusive ? !(v > *s.min) : !(v >= *s.min)))
                return false;
            if (s.max && !(v <= *s.max))
                return false;
            return true;
        }

        // Returns the normalized value or nullopt with a diagnostic.
        std::optional<json> check(const ParamSpec &s, const json &v, std::vector<std::string> &diag)
        {
            const std::string field = "params." + s.name;
            auto bad = [&](const std::string &why)
            {
                diag.push_back(field + ": " + why);
                return std::optional<json>{};
            };
            switch (s.kind)
            {
            case ParamKind::String:
                if (!v.is_string())
                    return bad("expected a string");
                return std::optional<json>(std::in_place, v);
            case ParamKind::Number:
            case ParamKind::Integer:
            {
                if (!v.is_number())
                    return bad("expected a number");
                if (s.kind == ParamKind::Integer && !is_integer(v))
                    return bad("expected an integer");
                const double d = v.get<double>();
                if (!in_range(s, d))
                    return bad("value " + v.dump() + " out of range (must be " + range_text(s) + ")");
                return std::optional<json>(std::in_place, s.kind == ParamKind::Integer ? json(v.get<std::int64_t>()) : json(d));
            }
            case ParamKind::NumberList:
            case ParamKind::IntegerList:
            {
                if (!v.is_array() || v.empty())
                    return bad("expected a nonempty array");
                json out = json::array();
                for (std::size_t i = 0; i < v.size(); ++i)
                {
                    const json &e = v[i];
                    if (!e.is_number() || (s.kind == ParamKind::IntegerList && !is_integer(e)))
                        return bad("element " + std::to_string(i) +
                                   (s.kind == ParamKind::IntegerList ? " is not an integer" : " is not a number"));
                    if (!in_range(s, e.get<double>()))
                        return bad("element " + std::to_string(i) + " = " + e.dump() + " out of range (must be " +
                                   range_text(s) + ")");
                    out.push_back(s.kind == ParamKind::IntegerList ? json(e.get<std::int64_t>()) : json(e.get<double>()));
                }
                return std::optional<json>(std::in_place, std::move(out));
            }
            }
            return bad("unsupported parameter kind");
        }
    }

    json resolve_params(const std::vector<ParamSpec> &specs, const json &given, std::vector<std::string> &diag)
    {
        json out = json::object();
        for (const auto &s : specs)
            out[s.name] = s.default_value;
        if (given.is_null())
            return out;
        if (!given.is_object())
        {
            diag.push_back("params: expected an object");
            return out;
        }

        for (auto it = given.begin(); it != given.end(); ++it)
        {
            std::string key = it.key();
            json value = it.value();

            const ParamSpec *spec = nullptr;
            for (const auto &s : specs)
                if (s.name == key)
                    spec = &s;

            const std::string dbm = "_dBm";
            if (!spec && key.size() > dbm.size() && key.compare(key.size() - dbm.size(), dbm.size(), dbm) == 0)
            {
                const std::string watts = key.substr(0, key.size() - dbm.size()) + "_W";
                for (const auto &s : specs)
                    if (s.name == watts && s.kind == ParamKind::Number)
                        spec = &s;
                if (spec)
                {
                    if (!value.is_number())
                    {
                        diag.push_back("params." + key + ": expected a number");
                        continue;
                    }
                    if (given.contains(watts))
                    {
                        diag.push_back("params." + key + ": conflicts with params." + watts);
                        continue;
                    }
                    value = dbm_to_watts(value.get<double>());
                    key = watts;
                }
            }
            if (!spec)
            {
                diag.push_back("params." + key + ": unknown parameter");
                continue;
            }
            if (auto v = check(*spec, value, diag))
                out[key] = *v;
        }
        return out;
    }
}
