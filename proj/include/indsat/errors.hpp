#pragma once

#include <stdexcept>

namespace indsat {

// thrown when a configured budget (vertex count, path enumeration, ...) runs
// out; callers distinguish this from a negative answer
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace indsat
