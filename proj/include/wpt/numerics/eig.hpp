// SPDX-License-Identifier: Apache-2.0

#ifndef WPT_NUMERICS_EIG_HPP
#define WPT_NUMERICS_EIG_HPP

#include "wpt/numerics/hermitian.hpp"

namespace wpt::numerics
{
    struct EigenDecomposition
    {
        RVector values;  // descending
        CMatrix vectors; // orthonormal columns, vectors.col(k) pairs with values(k)
    };

    // Cyclic Jacobi eigensolver for Hermitian matrices.
    //
    // Eigenvalues are sorted descending. Each eigenvector is phase-normalized so
    // its first component with magnitude > 1e-12 is real and positive; eigenvalues
    // equal to within 1e-12 * max|lambda| are ordered by the lexicographically
    // larger normalized eigenvector first (real parts, then imaginary parts).
    EigenDecomposition eig_hermitian(const HermitianMatrix &m);

    // Convenience: largest eigenvalue and a matching unit eigenvector.
    struct DominantEigenpair
    {
        double value;
        CVector vector;
    };
    DominantEigenpair dominant_eigenpair(const HermitianMatrix &m);
}

#endif
