// SPDX-License-Identifier: Apache-2.0

#include "support.hpp"
#include "wpt/errors.hpp"
#include "wpt/numerics/time_average.hpp"
#include "wpt/rectenna/rectenna.hpp"

#include <doctest.h>

using namespace wpt;
using namespace wpt::rectenna;
using numerics::RngStream;

namespace
{
    // Every (n0, n1, n2, n3) in [0, N)^4 with n0 + n1 == n2 + n3.
    template <class Fn>
    void for_each_quadruple(int N, Fn &&fn)
    {
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b)
                for (int c = 0; c < N; ++c)
                {
                    const int d = a + b - c;
                    if (d >= 0 && d < N)
                        fn(a, b, c, d);
                }
    }

    std::vector<cplx> random_coeffs(RngStream &rng, int N)
    {
        std::vector<cplx> c(static_cast<std::size_t>(N));
        for (auto &x : c)
            x = rng.complex_normal(1.0);
        return c;
    }
}

TEST_CASE("diode coefficients")
{
    RectennaModel m;
    const double nv = m.n_f * m.v_t;
    CHECK(m.k(2) == doctest::Approx(m.i_s / (2.0 * nv * nv)).epsilon(1e-14));
    CHECK(m.k(4) == doctest::Approx(m.i_s / (24.0 * std::pow(nv, 4))).epsilon(1e-14));
    CHECK_NOTHROW(m.validate());
    m.n_o = 6;
    CHECK_THROWS_AS(m.validate(), UnsupportedOrderError);
    m.n_o = 4;
    m.i_s = -1.0;
    CHECK_THROWS_AS(m.validate(), ValidationError);
}

TEST_CASE("regime boundary constant of the default diode")
{
    RectennaModel m;
    const double constant = m.k(2) / (m.k(4) * m.R_ant);
    CHECK(test::rel_err(constant, 1.776e-4) <= 0.005);
    CHECK(regime_boundary(m, 1, 1.0) == doctest::Approx(constant).epsilon(1e-14));
    CHECK(regime_boundary(m, 8, 10.0) == doctest::Approx(constant / 80.0).epsilon(1e-14));
}

TEST_CASE("quadruple count matches brute-force enumeration")
{
    for (int N = 1; N <= 12; ++N)
    {
        std::int64_t count = 0;
        for_each_quadruple(N, [&](int, int, int, int) { ++count; });
        CHECK(count == f_sum_term_count(N));
        CHECK(count == std::int64_t(N) * (2 * N * N + 1) / 3);
    }
}

TEST_CASE("F-sum equals brute-force enumeration for random amplitudes")
{
    RngStream rng(21, 0);
    for (int N = 1; N <= 10; ++N)
    {
        std::vector<double> s(static_cast<std::size_t>(N));
        for (auto &x : s)
            x = rng.uniform(0.0, 2.0);
        double want = 0.0;
        for_each_quadruple(N, [&](int a, int b, int c, int d) {
            want += s[std::size_t(a)] * s[std::size_t(b)] * s[std::size_t(c)] * s[std::size_t(d)];
        });
        CHECK(test::rel_err(f_sum(s), want) <= 1e-13);
    }
}

TEST_CASE("moments agree with a time-domain sampler")
{
    RngStream rng(22, 0);
    for (int N = 1; N <= 9; ++N)
    {
        const auto c = random_coeffs(rng, N);
        // carrier offset large enough that no sum-frequency term lands on DC
        const numerics::MultisineSignal y(c, 1e6, 3 * N);
        const int K = y.highest_index();
        const double m2 = numerics::time_average(y, y.period(), 2, 8 * K);
        const double m4 = numerics::time_average(y, y.period(), 4, 8 * K);
        CHECK(test::rel_err(second_moment(c), m2) <= 1e-11);
        CHECK(test::rel_err(fourth_moment(c), m4) <= 1e-11);

        // and with the quadruple sum
        cplx q = 0.0;
        for_each_quadruple(N, [&](int a, int b, int cc, int d) {
            q += c[std::size_t(a)] * c[std::size_t(b)] * std::conj(c[std::size_t(cc)]) * std::conj(c[std::size_t(d)]);
        });
        CHECK(test::rel_err(fourth_moment(c), 1.5 * q.real()) <= 1e-12);
    }
}

TEST_CASE("z_DC terms and truncation order")
{
    RectennaModel m;
    const std::vector<cplx> c{cplx(1e-3, 2e-3), cplx(-5e-4, 1e-3)};
    const auto z = z_dc(m, c);
    CHECK(z.second == doctest::Approx(m.k(2) * m.R_ant * second_moment(c)).epsilon(1e-14));
    CHECK(z.fourth == doctest::Approx(m.k(4) * m.R_ant * m.R_ant * fourth_moment(c)).epsilon(1e-14));
    CHECK(z.total() == z.second + z.fourth);
    m.n_o = 2;
    CHECK(z_dc(m, c).fourth == 0.0);
    m.n_o = 6;
    CHECK_THROWS_AS(z_dc(m, c), UnsupportedOrderError);
}

TEST_CASE("uniform flat multisine follows the closed-form scaling")
{
    RectennaModel m;
    const double P = 1e-5, R = m.R_ant;
    std::vector<int> Ns;
    for (int N = 1; N <= 32; ++N)
        Ns.push_back(N);
    const auto curve = scaling_curve(m, Ns, P);
    REQUIRE(curve.size() == Ns.size());
    for (const auto &pt : curve)
    {
        const double N = pt.N;
        CHECK(test::rel_err(pt.z.fourth, m.k(4) * R * R * (2.0 * N * N + 1.0) / (2.0 * N) * P * P) <= 1e-9);
        CHECK(test::rel_err(pt.z.second, m.k(2) * R * P) <= 1e-12);
    }
}

TEST_CASE("modulated multisine: fourth-order term is flat in N")
{
    RectennaModel m;
    const double P = 1e-5, R = m.R_ant;
    const double expected = 3.0 * m.k(4) * R * R * P * P;
    double previous_gap = -1.0;
    for (int N : {1, 2, 4, 8, 16})
    {
        RngStream rng(23, std::uint64_t(N));
        const auto est = z_dc_modulated_expectation(m, N, P, 100000, rng);
        CHECK(est.trials == 100000);
        CHECK(std::abs(est.mean.fourth - expected) <= 4.0 * est.fourth_stderr);
        CHECK(std::abs(est.mean.second - m.k(2) * R * P) <= 4.0 * est.second_stderr);
        const int Ni = N;
        const double det = scaling_curve(m, std::vector<int>{Ni}, P)[0].z.fourth;
        if (N >= 4)
        {
            CHECK(det - est.mean.fourth > previous_gap);
            previous_gap = det - est.mean.fourth;
        }
    }
    RngStream rng(1, 1);
    CHECK_THROWS_AS(z_dc_modulated_expectation(m, 4, P, 100, rng), ValidationError);
}
