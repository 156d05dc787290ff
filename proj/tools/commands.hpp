#pragma once

#include <iosfwd>

namespace splitirr::cli
{
    enum Exit : int
    {
        ok = 0,
        input_error = 1,
        not_split = 2,
        not_decomposable = 3,
        conflicts = 4,
        oracle_disagrees = 5
    };

    /// Entry point shared by the executable and the tests.
    int run(int argc, const char * const * argv, std::ostream & out, std::ostream & err);
}
