// SPDX-License-Identifier: Apache-2.0

#ifndef WPT_POWERREGION_HEATMAP_HPP
#define WPT_POWERREGION_HEATMAP_HPP

#include "wpt/channel/channel.hpp"
#include "wpt/numerics/hermitian.hpp"

#include <vector>

namespace wpt::powerregion
{
    struct HeatmapSpec
    {
        double width = 30.0;  // m, x in [0, width]
        double height = 30.0; // m, y in [0, height]
        int points = 61;      // per axis
        double min_distance = 0.0; // element-to-cell clamp; 0 == lambda / (4 pi)
    };

    struct HeatmapCell
    {
        double x;
        double y;
        double power; // W
    };

    // tr(h(x,y)^H h(x,y) S) on a points x points grid, row-major in y then x.
    std::vector<HeatmapCell> power_heatmap(const channel::Placement &placement, double frequency, int M_t,
                                           const numerics::HermitianMatrix &S, const HeatmapSpec &spec = {});

    struct HotspotOptions
    {
        channel::Point origin{15.0, 15.0}; // angular reference
        double exclusion_radius = 2.0;      // ignore cells this close to any ET element
        int angular_bins = 180;
        double top_fraction = 0.01;
        // Rank cells by power * r^2 about `origin` (radiation intensity) rather than
        // raw power, so the 1/r^2 falloff near the array does not mask direction.
        bool range_compensated = true;
    };

    struct HotspotStats
    {
        int top_cells = 0;
        int occupied_bins = 0;
        double bin_fraction = 0.0; // occupied_bins / angular_bins
    };

    // Angular spread of the strongest cells around `origin`, ignoring the
    // immediate surroundings of each transmitter. The top cells are
    // ceil(top_fraction * map size) of the remaining ones.
    HotspotStats hotspot_concentration(const std::vector<HeatmapCell> &map, const channel::Placement &placement,
                                       int M_t, double frequency, const HotspotOptions &opt = {});
}

#endif
