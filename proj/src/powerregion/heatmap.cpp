// SPDX-License-Identifier: Apache-2.0

#include "wpt/powerregion/heatmap.hpp"
#include "wpt/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace wpt::powerregion
{
    std::vector<HeatmapCell> power_heatmap(const channel::Placement &placement, double frequency, int M_t,
                                           const numerics::HermitianMatrix &S, const HeatmapSpec &spec)
    {
        placement.validate();
        require(frequency > 0.0, "power_heatmap: frequency must be positive");
        require(spec.points >= 2, "power_heatmap: need at least 2 points per axis");
        require(spec.width > 0.0 && spec.height > 0.0, "power_heatmap: area must be positive");
        require(S.dim() == Eigen::Index(placement.transmitters.size()) * M_t,
                "power_heatmap: covariance dimension must be J * M_t");

        const double lambda = channel::kSpeedOfLight / frequency;
        const double clamp = spec.min_distance > 0.0 ? spec.min_distance : lambda / (4.0 * std::numbers::pi);
        std::vector<HeatmapCell> out;
        out.reserve(std::size_t(spec.points) * std::size_t(spec.points));
        for (int iy = 0; iy < spec.points; ++iy)
            for (int ix = 0; ix < spec.points; ++ix)
            {
                const double x = spec.width * ix / (spec.points - 1);
                const double y = spec.height * iy / (spec.points - 1);
                const numerics::CVector r = channel::los_row(placement, {x, y}, frequency, M_t, clamp);
                // received scalar is r^T s, so the power is r^T S conj(r)
                const double p = (r.transpose() * S.matrix() * r.conjugate())(0).real();
                out.push_back({x, y, p});
            }
        return out;
    }

    HotspotStats hotspot_concentration(const std::vector<HeatmapCell> &map, const channel::Placement &placement,
                                       int M_t, double frequency, const HotspotOptions &opt)
    {
        require(opt.angular_bins >= 1, "hotspot_concentration: need at least one bin");
        require(opt.top_fraction > 0.0 && opt.top_fraction <= 1.0, "hotspot_concentration: top_fraction in (0, 1]");
        const double lambda = channel::kSpeedOfLight / frequency;

        std::vector<channel::Point> elements;
        for (const auto &c : placement.transmitters)
            for (int m = 0; m < M_t; ++m)
                elements.push_back(channel::ula_element(placement, c, m, M_t, lambda));

        std::vector<HeatmapCell> kept;
        for (const auto &cell : map)
        {
            bool near = false;
            for (const auto &e : elements)
                near = near || std::hypot(cell.x - e.x, cell.y - e.y) < opt.exclusion_radius;
            if (near)
                continue;
            HeatmapCell c = cell;
            if (opt.range_compensated)
            {
                const double r = std::hypot(c.x - opt.origin.x, c.y - opt.origin.y);
                c.power *= r * r;
            }
            kept.push_back(c);
        }
        require(!kept.empty(), "hotspot_concentration: every cell excluded");

        const std::size_t top = std::max<std::size_t>(1, std::size_t(std::ceil(opt.top_fraction * double(map.size()))));
        const std::size_t n = std::min(top, kept.size());
        std::partial_sort(kept.begin(), kept.begin() + std::ptrdiff_t(n), kept.end(),
                          [](const HeatmapCell &a, const HeatmapCell &b) { return a.power > b.power; });

        std::set<int> bins;
        for (std::size_t i = 0; i < n; ++i)
        {
            const double ang = std::atan2(kept[i].y - opt.origin.y, kept[i].x - opt.origin.x); // (-pi, pi]
            int b = int(std::floor((ang + std::numbers::pi) / (2.0 * std::numbers::pi) * opt.angular_bins));
            bins.insert(std::clamp(b, 0, opt.angular_bins - 1));
        }
        HotspotStats s;
        s.top_cells = int(n);
        s.occupied_bins = int(bins.size());
        s.bin_fraction = double(bins.size()) / double(opt.angular_bins);
        return s;
    }
}
