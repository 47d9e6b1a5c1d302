// SPDX-License-Identifier: Apache-2.0

#include "wpt/numerics/hermitian.hpp"
#include "wpt/errors.hpp"

#include <string>

namespace wpt::numerics
{
    namespace
    {
        CMatrix checked_symmetrize(const CMatrix &m)
        {
            require(m.rows() == m.cols(), "HermitianMatrix: matrix must be square");
            require(m.allFinite(), "HermitianMatrix: non-finite entry");
            const double asym = (m - m.adjoint()).norm();
            const double scale = m.norm();
            if (asym > 1e-12 * scale)
                throw ValidationError("HermitianMatrix: input is not Hermitian (|M - M^H| = " +
                                      std::to_string(asym) + ", |M| = " + std::to_string(scale) + ")");
            return (m + m.adjoint()) * 0.5;
        }
    }

    HermitianMatrix::HermitianMatrix(const CMatrix &m) : m_(checked_symmetrize(m)) {}

    HermitianMatrix::HermitianMatrix(const RMatrix &m) : m_(checked_symmetrize(m.cast<cplx>())) {}

    HermitianMatrix HermitianMatrix::zero(Eigen::Index dim)
    {
        return {CMatrix::Zero(dim, dim), trusted_tag{}};
    }

    HermitianMatrix HermitianMatrix::identity(Eigen::Index dim)
    {
        return {CMatrix::Identity(dim, dim), trusted_tag{}};
    }

    HermitianMatrix HermitianMatrix::outer(const CVector &v)
    {
        CMatrix m = v * v.adjoint();
        return {(m + m.adjoint()) * 0.5, trusted_tag{}};
    }

    HermitianMatrix HermitianMatrix::gram(const CMatrix &h)
    {
        CMatrix m = h.adjoint() * h;
        return {(m + m.adjoint()) * 0.5, trusted_tag{}};
    }

    double HermitianMatrix::trace() const { return m_.trace().real(); }

    double HermitianMatrix::inner(const HermitianMatrix &other) const
    {
        require(dim() == other.dim(), "HermitianMatrix::inner: dimension mismatch");
        // tr(A B) = sum_ij A_ij B_ji = sum_ij A_ij conj(B_ij)
        return (m_.array() * other.m_.array().conjugate()).sum().real();
    }

    double HermitianMatrix::quadratic_form(const CVector &v) const
    {
        require(v.size() == dim(), "HermitianMatrix::quadratic_form: dimension mismatch");
        return v.dot(m_ * v).real();
    }

    HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix &o) const
    {
        require(dim() == o.dim(), "HermitianMatrix: dimension mismatch");
        return {m_ + o.m_, trusted_tag{}};
    }

    HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix &o) const
    {
        require(dim() == o.dim(), "HermitianMatrix: dimension mismatch");
        return {m_ - o.m_, trusted_tag{}};
    }

    HermitianMatrix HermitianMatrix::operator*(double s) const { return {m_ * s, trusted_tag{}}; }

    HermitianMatrix &HermitianMatrix::operator+=(const HermitianMatrix &o)
    {
        require(dim() == o.dim(), "HermitianMatrix: dimension mismatch");
        m_ += o.m_;
        return *this;
    }

    Eigen::Index hermitian_coord_count(Eigen::Index dim) { return dim * dim; }

    RVector to_coords(const HermitianMatrix &s)
    {
        const Eigen::Index d = s.dim();
        RVector x(d * d);
        Eigen::Index k = 0;
        for (Eigen::Index i = 0; i < d; ++i)
            x(k++) = s(i, i).real();
        for (Eigen::Index i = 0; i < d; ++i)
            for (Eigen::Index j = i + 1; j < d; ++j)
            {
                x(k++) = s(i, j).real();
                x(k++) = s(i, j).imag();
            }
        return x;
    }

    HermitianMatrix from_coords(const Eigen::Ref<const RVector> &x, Eigen::Index dim)
    {
        require(x.size() >= dim * dim, "from_coords: coordinate vector too short");
        CMatrix m(dim, dim);
        Eigen::Index k = 0;
        for (Eigen::Index i = 0; i < dim; ++i)
            m(i, i) = x(k++);
        for (Eigen::Index i = 0; i < dim; ++i)
            for (Eigen::Index j = i + 1; j < dim; ++j)
            {
                m(i, j) = cplx(x(k), x(k + 1));
                m(j, i) = cplx(x(k), -x(k + 1));
                k += 2;
            }
        return HermitianMatrix(m);
    }

    RVector trace_coords(const HermitianMatrix &a)
    {
        const Eigen::Index d = a.dim();
        RVector v(d * d);
        Eigen::Index k = 0;
        for (Eigen::Index i = 0; i < d; ++i)
            v(k++) = a(i, i).real();
        for (Eigen::Index i = 0; i < d; ++i)
            for (Eigen::Index j = i + 1; j < d; ++j)
            {
                v(k++) = 2.0 * a(i, j).real();
                v(k++) = 2.0 * a(i, j).imag();
            }
        return v;
    }
}
