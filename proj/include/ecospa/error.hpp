#pragma once

#include <stdexcept>
#include <string>

namespace ecospa {

// Thrown when operand dimensions do not conform. The message always names
// both operand shapes.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Bad run-config file or flag combination.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Checkpoint cannot be read back: truncated, wrong magic, checksum mismatch.
struct CheckpointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Target parameter budget cannot be reached under the min-inner-dim floors.
struct BudgetInfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A coupled pair whose score products are all zero has no defined ranking.
struct DegeneratePairError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Iterative numeric routine (SVD) failed to converge within its cap.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ecospa
