// errors.hpp — exception types shared across the library

#pragma once

#include <stdexcept>
#include <string>

namespace cqed {

// Operator built or combined with an unusable dimension.
struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Tensor-product dimension would exceed the configured maximum.
struct capacity_error : std::length_error {
    using std::length_error::length_error;
};

// Input violated a Hermiticity tolerance; message carries the max asymmetry.
struct hermiticity_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Parameters outside the regime in which a formula or reduction is valid.
struct regime_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Numerical solve failed or produced an unusable result (integration blow-up,
// degenerate steady-state manifold, eigeniteration stall).
struct solver_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cqed
