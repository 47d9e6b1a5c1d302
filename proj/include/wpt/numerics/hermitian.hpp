// SPDX-License-Identifier: Apache-2.0

#ifndef WPT_NUMERICS_HERMITIAN_HPP
#define WPT_NUMERICS_HERMITIAN_HPP

#include <Eigen/Dense>
#include <complex>

namespace wpt::numerics
{
    using cplx = std::complex<double>;
    using CMatrix = Eigen::MatrixXcd;
    using CVector = Eigen::VectorXcd;
    using RVector = Eigen::VectorXd;
    using RMatrix = Eigen::MatrixXd;

    // Square complex matrix with exact Hermitian symmetry.
    //
    // Construction validates |M - M^H| <= 1e-12 |M| (Frobenius) and then stores
    // the symmetrized (M + M^H)/2, so entry(i,j) == conj(entry(j,i)) holds
    // bit-exactly and the diagonal is real.
    class HermitianMatrix
    {
    public:
        HermitianMatrix() = default;
        explicit HermitianMatrix(const CMatrix &m);
        explicit HermitianMatrix(const RMatrix &m);

        static HermitianMatrix zero(Eigen::Index dim);
        static HermitianMatrix identity(Eigen::Index dim);
        static HermitianMatrix outer(const CVector &v); // v v^H
        static HermitianMatrix gram(const CMatrix &h);  // h^H h

        Eigen::Index dim() const { return m_.rows(); }
        const CMatrix &matrix() const { return m_; }
        cplx operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

        double trace() const;
        double frobenius_norm() const { return m_.norm(); }

        // tr(this * other), real for Hermitian pairs.
        double inner(const HermitianMatrix &other) const;
        double quadratic_form(const CVector &v) const; // v^H M v

        HermitianMatrix operator+(const HermitianMatrix &o) const;
        HermitianMatrix operator-(const HermitianMatrix &o) const;
        HermitianMatrix operator*(double s) const;
        HermitianMatrix &operator+=(const HermitianMatrix &o);

    private:
        struct trusted_tag {};
        HermitianMatrix(CMatrix m, trusted_tag) : m_(std::move(m)) {}
        CMatrix m_;
    };

    inline HermitianMatrix operator*(double s, const HermitianMatrix &m) { return m * s; }

    // Real coordinates of a Hermitian d x d matrix: d diagonal entries followed by
    // (Re, Im) of each strictly-upper entry in row-major order, d^2 values total.
    // With this basis tr(A S(x)) == trace_coords(A).dot(x).
    Eigen::Index hermitian_coord_count(Eigen::Index dim);
    RVector to_coords(const HermitianMatrix &s);
    HermitianMatrix from_coords(const Eigen::Ref<const RVector> &x, Eigen::Index dim);
    RVector trace_coords(const HermitianMatrix &a);
}

#endif
