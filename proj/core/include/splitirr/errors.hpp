#pragma once

#include <stdexcept>
#include <string>

namespace splitirr
{
    /// Malformed input: bad vertex ids, bad colors, partial colorings, parse failures.
    class InputError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// A documented precondition of an operation was violated by the caller.
    class ContractError : public std::logic_error
    {
    public:
        using std::logic_error::logic_error;
    };

    /// The graph admits no clique/stable-set partition.
    class NotSplit : public std::runtime_error
    {
    public:
        NotSplit() : std::runtime_error("not a split graph") {}
    };

    /// A construction produced a coloring that failed verification. Indicates a bug.
    class ConstructionFailed : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// An exhaustive search was asked to run beyond its configured budget.
    class BudgetExceeded : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
}
