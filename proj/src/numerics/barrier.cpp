// SPDX-License-Identifier: Apache-2.0

#include "wpt/numerics/barrier.hpp"
#include "wpt/errors.hpp"

#include <cmath>
#include <limits>

namespace wpt::numerics
{
    LogBarrier::LogBarrier(Eigen::Index dim, Eigen::Index scalar_count)
        : dim_(dim), scalars_(scalar_count), objective_(RVector::Zero(dim * dim + scalar_count))
    {
        require(dim >= 1, "LogBarrier: dimension must be positive");
        require(scalar_count >= 0, "LogBarrier: negative scalar count");
        basis_.reserve(dim * dim);
        const cplx one(1.0, 0.0), i_unit(0.0, 1.0);
        for (Eigen::Index i = 0; i < dim; ++i)
            basis_.push_back({{i, i, one}});
        for (Eigen::Index i = 0; i < dim; ++i)
            for (Eigen::Index j = i + 1; j < dim; ++j)
            {
                basis_.push_back({{i, j, one}, {j, i, one}});
                basis_.push_back({{i, j, i_unit}, {j, i, -i_unit}});
            }
    }

    void LogBarrier::add_inequality(const RVector &a, double b)
    {
        require(a.size() == size(), "LogBarrier::add_inequality: normal has wrong length");
        require(a.allFinite() && std::isfinite(b), "LogBarrier::add_inequality: non-finite data");
        normals_.push_back(a);
        bounds_.push_back(b);
    }

    void LogBarrier::pop_inequality()
    {
        require(!bounds_.empty(), "LogBarrier::pop_inequality: no inequalities");
        normals_.pop_back();
        bounds_.pop_back();
    }

    void LogBarrier::set_objective(const RVector &c)
    {
        require(c.size() == size(), "LogBarrier::set_objective: wrong length");
        objective_ = c;
    }

    HermitianMatrix LogBarrier::matrix_part(const RVector &x) const
    {
        return from_coords(x.head(dim_ * dim_), dim_);
    }

    bool LogBarrier::strictly_feasible(const RVector &x) const
    {
        for (std::size_t m = 0; m < bounds_.size(); ++m)
            if (!(slack(m, x) > 0.0))
                return false;
        Eigen::LLT<CMatrix> llt(matrix_part(x).matrix());
        return llt.info() == Eigen::Success;
    }

    double LogBarrier::value(double t, const RVector &x) const
    {
        constexpr double inf = std::numeric_limits<double>::infinity();
        double v = -t * objective_.dot(x);
        for (std::size_t m = 0; m < bounds_.size(); ++m)
        {
            const double g = slack(m, x);
            if (!(g > 0.0))
                return inf;
            v -= std::log(g);
        }
        Eigen::LLT<CMatrix> llt(matrix_part(x).matrix());
        if (llt.info() != Eigen::Success)
            return inf;
        const CMatrix &l = llt.matrixLLT();
        for (Eigen::Index i = 0; i < dim_; ++i)
        {
            const double lii = l(i, i).real();
            if (!(lii > 0.0))
                return inf;
            v -= 2.0 * std::log(lii);
        }
        return std::isfinite(v) ? v : inf;
    }

    LogBarrier::CenterResult LogBarrier::center(double t, RVector x, double newton_tol, int max_steps) const
    {
        require(x.size() == size(), "LogBarrier::center: start point has wrong length");
        if (!strictly_feasible(x))
            throw ValidationError("LogBarrier::center: start point is not strictly feasible");

        const Eigen::Index n = size();
        const Eigen::Index ns = dim_ * dim_;
        CenterResult out;
        double fx = value(t, x);
        double prev_decrement = std::numeric_limits<double>::infinity();

        for (int step = 0; step < max_steps; ++step)
        {
            const CMatrix s = matrix_part(x).matrix();
            Eigen::LLT<CMatrix> llt(s);
            const CMatrix w = llt.solve(CMatrix::Identity(dim_, dim_));

            RVector grad = -t * objective_;
            RMatrix hess = RMatrix::Zero(n, n);

            for (Eigen::Index k = 0; k < ns; ++k)
            {
                cplx g = 0.0;
                for (const Term &tk : basis_[k])
                    g += tk.c * w(tk.b, tk.a); // tr(W e_a e_b^T) = W_ba
                grad(k) -= g.real();
                for (Eigen::Index l = k; l < ns; ++l)
                {
                    cplx h = 0.0;
                    for (const Term &tk : basis_[k])
                        for (const Term &tl : basis_[l])
                            h += tk.c * tl.c * w(tk.b, tl.a) * w(tl.b, tk.a);
                    hess(k, l) = h.real();
                    hess(l, k) = h.real();
                }
            }
            for (std::size_t m = 0; m < bounds_.size(); ++m)
            {
                const double g = slack(m, x);
                grad += normals_[m] / g;
                hess.noalias() += normals_[m] * normals_[m].transpose() / (g * g);
            }

            Eigen::LDLT<RMatrix> ldlt(hess);
            RVector dx = -ldlt.solve(grad);
            if (ldlt.info() != Eigen::Success || !dx.allFinite())
            {
                // singular directions (scalars touching no inequality): regularize
                const double ridge = 1e-12 * std::max(1.0, hess.diagonal().cwiseAbs().maxCoeff());
                hess.diagonal().array() += ridge;
                dx = -hess.ldlt().solve(grad);
            }
            const double decrement = -grad.dot(dx) / 2.0;
            out.decrement = decrement;
            // below the tolerance, or stalled at the floating-point floor
            if (!(decrement > newton_tol) || (decrement < 1e-6 && decrement >= 0.5 * prev_decrement))
            {
                out.converged = true;
                out.x = std::move(x);
                out.newton_steps = step;
                return out;
            }
            prev_decrement = decrement;

            // Inside the quadratic region (lambda < 0.15) the full step stays in
            // the Dikin ellipsoid; function values at large t are too coarse
            // for a reliable Armijo test there.
            double a = 1.0;
            double fnew;
            if (decrement < 0.01 && strictly_feasible(x + dx))
                fnew = value(t, x + dx);
            else
            {
                // backtracking line search (alpha = 0.25, beta = 0.5)
                fnew = value(t, x + a * dx);
                while (fnew > fx + 0.25 * a * grad.dot(dx))
                {
                    a *= 0.5;
                    if (a < 1e-20)
                        break;
                    fnew = value(t, x + a * dx);
                }
                if (a < 1e-20 || !std::isfinite(fnew))
                {
                    // no progress possible in floating point; report where we are
                    out.x = std::move(x);
                    out.newton_steps = step;
                    out.converged = decrement < 1e-6;
                    return out;
                }
            }
            x += a * dx;
            fx = fnew;
        }
        out.x = std::move(x);
        out.newton_steps = max_steps;
        out.converged = false;
        return out;
    }
}
