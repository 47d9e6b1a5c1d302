// SPDX-License-Identifier: Apache-2.0

#include "wpt/channel/serialize.hpp"
#include "wpt/errors.hpp"

namespace wpt::channel
{
    nlohmann::json to_json(const ChannelRealization &ch)
    {
        nlohmann::json j;
        j["grid"] = {{"N", ch.grid.N}, {"f1", ch.grid.f1}, {"delta_f", ch.grid.delta_f}, {"B_s", ch.grid.B_s}};
        j["M_t"] = ch.M_t;
        j["M_r"] = ch.M_r;
        j["beta"] = ch.beta;
        j["narrowband_violation"] = ch.narrowband_violation;
        auto &hs = j["H"] = nlohmann::json::array();
        for (const auto &h : ch.H)
        {
            nlohmann::json rows = nlohmann::json::array();
            for (Eigen::Index i = 0; i < h.rows(); ++i)
            {
                nlohmann::json row = nlohmann::json::array();
                for (Eigen::Index m = 0; m < h.cols(); ++m)
                    row.push_back({h(i, m).real(), h(i, m).imag()});
                rows.push_back(std::move(row));
            }
            hs.push_back(std::move(rows));
        }
        return j;
    }

    ChannelRealization channel_from_json(const nlohmann::json &j)
    {
        ChannelRealization ch;
        try
        {
            const auto &g = j.at("grid");
            ch.grid.N = g.at("N").get<int>();
            ch.grid.f1 = g.at("f1").get<double>();
            ch.grid.delta_f = g.at("delta_f").get<double>();
            ch.grid.B_s = g.at("B_s").get<double>();
            ch.M_t = j.at("M_t").get<int>();
            ch.M_r = j.at("M_r").get<int>();
            ch.beta = j.value("beta", 0.0);
            ch.narrowband_violation = j.value("narrowband_violation", false);
            for (const auto &rows : j.at("H"))
            {
                require(rows.size() == std::size_t(ch.M_r), "channel JSON: wrong row count");
                CMatrix h(ch.M_r, ch.M_t);
                for (int i = 0; i < ch.M_r; ++i)
                {
                    const auto &row = rows.at(i);
                    require(row.size() == std::size_t(ch.M_t), "channel JSON: wrong column count");
                    for (int m = 0; m < ch.M_t; ++m)
                    {
                        const auto &z = row.at(m);
                        require(z.size() == 2, "channel JSON: entries must be [re, im] pairs");
                        h(i, m) = cplx(z.at(0).get<double>(), z.at(1).get<double>());
                    }
                }
                ch.H.push_back(std::move(h));
            }
        }
        catch (const nlohmann::json::exception &e)
        {
            throw ValidationError(std::string("channel JSON: ") + e.what());
        }
        ch.validate();
        return ch;
    }
}
