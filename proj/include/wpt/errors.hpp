// SPDX-License-Identifier: Apache-2.0

#ifndef WPT_ERRORS_HPP
#define WPT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wpt
{
    // Bad input: dimension mismatch, out-of-range parameter, non-Hermitian matrix, ...
    class ValidationError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // A convex program has no strictly feasible point.
    class InfeasibleError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // An iterative method hit its iteration cap. Callers that want the last
    // iterate catch the derived, payload-carrying types.
    class ConvergenceError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Requested a Taylor truncation order the evaluator does not implement.
    class UnsupportedOrderError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // Internal invariant broken (e.g. a cutting-plane set became empty).
    class ConsistencyError : public std::logic_error
    {
    public:
        using std::logic_error::logic_error;
    };

    inline void require(bool condition, const std::string &message)
    {
        if (!condition)
            throw ValidationError(message);
    }
}

#endif
