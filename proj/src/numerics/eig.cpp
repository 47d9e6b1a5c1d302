// SPDX-License-Identifier: Apache-2.0

#include "wpt/numerics/eig.hpp"
#include "wpt/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace wpt::numerics
{
    namespace
    {
        constexpr int kMaxSweeps = 100;

        double off_diagonal_norm2(const CMatrix &a)
        {
            double s = 0.0;
            for (Eigen::Index j = 0; j < a.cols(); ++j)
                for (Eigen::Index i = 0; i < a.rows(); ++i)
                    if (i != j)
                        s += std::norm(a(i, j));
            return s;
        }

        // Zero a(p,q) with the unitary G = diag(1, e^{-i phi}) * R(c, s), where
        // a(p,q) = |a_pq| e^{i phi} and R is the real Jacobi rotation of the
        // phase-corrected 2x2 block. Applies A <- G^H A G and V <- V G.
        void rotate(CMatrix &a, CMatrix &v, Eigen::Index p, Eigen::Index q)
        {
            const cplx apq = a(p, q);
            const double mag = std::abs(apq);
            if (mag == 0.0)
                return;
            const cplx phase = apq / mag; // e^{i phi}
            const double app = a(p, p).real();
            const double aqq = a(q, q).real();
            const double theta = (aqq - app) / (2.0 * mag);
            const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
            const double c = 1.0 / std::sqrt(t * t + 1.0);
            const double s = t * c;

            const cplx gpp = c;
            const cplx gpq = s;
            const cplx gqp = -s * std::conj(phase);
            const cplx gqq = c * std::conj(phase);

            const Eigen::Index n = a.rows();
            for (Eigen::Index k = 0; k < n; ++k) // columns: A G
            {
                const cplx akp = a(k, p), akq = a(k, q);
                a(k, p) = akp * gpp + akq * gqp;
                a(k, q) = akp * gpq + akq * gqq;
            }
            for (Eigen::Index k = 0; k < n; ++k) // rows: G^H (A G)
            {
                const cplx apk = a(p, k), aqk = a(q, k);
                a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
                a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
            }
            a(p, q) = 0.0;
            a(q, p) = 0.0;
            a(p, p) = a(p, p).real();
            a(q, q) = a(q, q).real();

            for (Eigen::Index k = 0; k < n; ++k)
            {
                const cplx vkp = v(k, p), vkq = v(k, q);
                v(k, p) = vkp * gpp + vkq * gqp;
                v(k, q) = vkp * gpq + vkq * gqq;
            }
        }

        void normalize_phase(CVector &x)
        {
            x.normalize();
            for (Eigen::Index i = 0; i < x.size(); ++i)
            {
                const double mag = std::abs(x(i));
                if (mag > 1e-12)
                {
                    x *= std::conj(x(i)) / mag;
                    x(i) = mag;
                    return;
                }
            }
        }

        // true when a should precede b among tied eigenvalues
        bool lexicographically_larger(const CVector &a, const CVector &b)
        {
            for (Eigen::Index i = 0; i < a.size(); ++i)
            {
                if (a(i).real() != b(i).real())
                    return a(i).real() > b(i).real();
                if (a(i).imag() != b(i).imag())
                    return a(i).imag() > b(i).imag();
            }
            return false;
        }
    }

    EigenDecomposition eig_hermitian(const HermitianMatrix &m)
    {
        const Eigen::Index n = m.dim();
        require(n > 0, "eig_hermitian: empty matrix");
        CMatrix a = m.matrix();
        CMatrix v = CMatrix::Identity(n, n);

        const double total = std::max(a.squaredNorm(), 1e-300);
        for (int sweep = 0; sweep < kMaxSweeps; ++sweep)
        {
            const double off = off_diagonal_norm2(a);
            if (off <= 1e-30 * total)
                break;
            for (Eigen::Index p = 0; p < n - 1; ++p)
                for (Eigen::Index q = p + 1; q < n; ++q)
                    rotate(a, v, p, q);
        }
        if (off_diagonal_norm2(a) > 1e-24 * total)
            throw ConvergenceError("eig_hermitian: Jacobi sweeps did not converge");

        std::vector<double> lambda(n);
        std::vector<CVector> vecs(n);
        double scale = 0.0;
        for (Eigen::Index k = 0; k < n; ++k)
        {
            lambda[k] = a(k, k).real();
            vecs[k] = v.col(k);
            normalize_phase(vecs[k]);
            scale = std::max(scale, std::abs(lambda[k]));
        }
        const double tie = 1e-12 * scale;

        std::vector<Eigen::Index> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
            if (std::abs(lambda[i] - lambda[j]) > tie)
                return lambda[i] > lambda[j];
            return lexicographically_larger(vecs[i], vecs[j]);
        });

        EigenDecomposition out{RVector(n), CMatrix(n, n)};
        for (Eigen::Index k = 0; k < n; ++k)
        {
            out.values(k) = lambda[order[k]];
            out.vectors.col(k) = vecs[order[k]];
        }
        return out;
    }

    DominantEigenpair dominant_eigenpair(const HermitianMatrix &m)
    {
        auto e = eig_hermitian(m);
        return {e.values(0), e.vectors.col(0)};
    }
}
