// SPDX-License-Identifier: Apache-2.0

#ifndef WPT_CHANNEL_SERIALIZE_HPP
#define WPT_CHANNEL_SERIALIZE_HPP

#include "wpt/channel/channel.hpp"

#include <json.hpp>

namespace wpt::channel
{
    // {"grid": {"N", "f1", "delta_f", "B_s"}, "M_t", "M_r", "beta",
    //  "narrowband_violation", "H": [subband][row][col] -> [re, im]}
    nlohmann::json to_json(const ChannelRealization &ch);
    ChannelRealization channel_from_json(const nlohmann::json &j);
}

#endif
