// SPDX-License-Identifier: Apache-2.0

#ifndef WPT_NUMERICS_RNG_HPP
#define WPT_NUMERICS_RNG_HPP

#include "wpt/numerics/hermitian.hpp"

#include <cstdint>
#include <random>

namespace wpt::numerics
{
    // Deterministic random stream keyed by (seed, stream id). Use one stream per
    // Monte-Carlo trial; instances are not meant to be shared between threads.
    class RngStream
    {
    public:
        RngStream(std::uint64_t seed, std::uint64_t stream);

        std::uint64_t seed() const { return seed_; }
        std::uint64_t stream() const { return stream_; }

        double uniform();                    // [0, 1)
        double uniform(double lo, double hi); // [lo, hi)
        double normal();                     // N(0, 1)
        cplx complex_normal(double variance); // CN(0, variance)
        std::uint64_t next_u64() { return engine_(); }

        CMatrix complex_normal_matrix(Eigen::Index rows, Eigen::Index cols, double variance);
        // GUE-style draw: (X + X^H)/2 with X i.i.d. CN(0,1).
        HermitianMatrix random_hermitian(Eigen::Index dim);

        std::mt19937_64 &engine() { return engine_; }

    private:
        std::uint64_t seed_;
        std::uint64_t stream_;
        std::mt19937_64 engine_;
        std::normal_distribution<double> normal_{0.0, 1.0};
        std::uniform_real_distribution<double> uniform_{0.0, 1.0};
    };
}

#endif
