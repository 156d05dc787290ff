#pragma once

#include <string>

namespace splitirr
{
    /// Either "not decomposable" or a definite irregular chromatic index.
    struct ChiStatus
    {
        bool decomposable = true;
        int k = 0;

        static ChiStatus chi(int k) { return {true, k}; }
        static ChiStatus not_decomposable() { return {false, 0}; }

        std::string to_string() const
        {
            return decomposable ? "chi=" + std::to_string(k) : std::string("not-decomposable");
        }

        friend bool operator==(const ChiStatus &, const ChiStatus &) = default;
    };
}
