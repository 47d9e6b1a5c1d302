// SPDX-License-Identifier: Apache-2.0

#include "wpt/numerics/rng.hpp"

#include <cmath>

namespace wpt::numerics
{
    namespace
    {
        std::uint64_t splitmix64(std::uint64_t x)
        {
            x += 0x9e3779b97f4a7c15ULL;
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
            return x ^ (x >> 31);
        }
    }

    RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
        : seed_(seed), stream_(stream), engine_(splitmix64(splitmix64(seed) ^ (stream * 0xd1b54a32d192ed03ULL + 1)))
    {
    }

    double RngStream::uniform() { return uniform_(engine_); }

    double RngStream::uniform(double lo, double hi) { return lo + (hi - lo) * uniform_(engine_); }

    double RngStream::normal() { return normal_(engine_); }

    cplx RngStream::complex_normal(double variance)
    {
        const double sd = std::sqrt(variance / 2.0);
        const double re = normal_(engine_);
        const double im = normal_(engine_);
        return {sd * re, sd * im};
    }

    CMatrix RngStream::complex_normal_matrix(Eigen::Index rows, Eigen::Index cols, double variance)
    {
        CMatrix m(rows, cols);
        for (Eigen::Index j = 0; j < cols; ++j)
            for (Eigen::Index i = 0; i < rows; ++i)
                m(i, j) = complex_normal(variance);
        return m;
    }

    HermitianMatrix RngStream::random_hermitian(Eigen::Index dim)
    {
        CMatrix x = complex_normal_matrix(dim, dim, 1.0);
        return HermitianMatrix(CMatrix((x + x.adjoint()) * 0.5));
    }
}
