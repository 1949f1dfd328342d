#pragma once

#include <stdexcept>
#include <string>

namespace rpnm {

// Newton (or other iterative) solver failed to converge.
struct solver_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A matrix that must be invertible is numerically singular.
struct singularity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computation would exceed its configured memory budget.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A declared object violates its own stated bounds (e.g. a symbol whose
// derivative sums exceed the declared constant).
struct spec_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace rpnm
