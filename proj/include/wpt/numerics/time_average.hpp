// SPDX-License-Identifier: Apache-2.0

#ifndef WPT_NUMERICS_TIME_AVERAGE_HPP
#define WPT_NUMERICS_TIME_AVERAGE_HPP

#include "wpt/numerics/hermitian.hpp"

#include <functional>
#include <vector>

namespace wpt::numerics
{
    // E[y(t)^power] over one period [0, period) by the uniform-sample rule.
    //
    // The rule integrates trigonometric polynomials of degree < samples exactly,
    // so for a multisine whose highest grid index is K, samples > power * K is
    // exact; use at least 8 K. Odd powers return 0 exactly: the multisines fed
    // to the rectenna model have no DC component in odd powers.
    double time_average(const std::function<double(double)> &signal, double period, int power, int samples);

    // y(t) = sqrt(2) Re{ sum_n c_n exp(j 2 pi (offset + n) df t) }, n = 0..N-1.
    // Periodic in 1/df.
    class MultisineSignal
    {
    public:
        MultisineSignal(std::vector<cplx> coefficients, double delta_f, int grid_offset);

        double operator()(double t) const;
        double period() const { return 1.0 / delta_f_; }
        int highest_index() const { return offset_ + int(c_.size()) - 1; }

    private:
        std::vector<cplx> c_;
        double delta_f_;
        int offset_;
    };
}

#endif
