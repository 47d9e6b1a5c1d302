// SPDX-License-Identifier: Apache-2.0

#include "wpt/numerics/time_average.hpp"
#include "wpt/errors.hpp"

#include <cmath>
#include <numbers>

namespace wpt::numerics
{
    double time_average(const std::function<double(double)> &signal, double period, int power, int samples)
    {
        require(power >= 0, "time_average: power must be non-negative");
        require(period > 0.0, "time_average: period must be positive");
        require(samples >= 1, "time_average: need at least one sample");
        if (power % 2 == 1)
            return 0.0;
        double acc = 0.0;
        for (int k = 0; k < samples; ++k)
            acc += std::pow(signal(period * double(k) / double(samples)), power);
        return acc / double(samples);
    }

    MultisineSignal::MultisineSignal(std::vector<cplx> coefficients, double delta_f, int grid_offset)
        : c_(std::move(coefficients)), delta_f_(delta_f), offset_(grid_offset)
    {
        require(delta_f > 0.0, "MultisineSignal: delta_f must be positive");
        require(grid_offset >= 0, "MultisineSignal: grid offset must be non-negative");
    }

    double MultisineSignal::operator()(double t) const
    {
        double y = 0.0;
        const double w = 2.0 * std::numbers::pi * delta_f_ * t;
        for (std::size_t n = 0; n < c_.size(); ++n)
        {
            const double phase = w * double(offset_ + int(n));
            y += c_[n].real() * std::cos(phase) - c_[n].imag() * std::sin(phase);
        }
        return std::numbers::sqrt2 * y;
    }
}
