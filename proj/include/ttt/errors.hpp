#pragma once

#include <stdexcept>
#include <string>

namespace ttt {

// Mixing exact-rational and complex-float scalars in one expression.
struct ScalarModeError : std::runtime_error {
    explicit ScalarModeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Tile placement that violates the black/white coverage rules.
struct PlacementError : std::runtime_error {
    explicit PlacementError(const std::string& msg) : std::runtime_error(msg) {}
};

// A requested computation exceeds a hard size budget (2^E subsets, strip width, ...).
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical routine could not reach the requested accuracy.
struct AccuracyError : std::runtime_error {
    explicit AccuracyError(const std::string& msg) : std::runtime_error(msg) {}
};

// Operation received a tiling that fails validation.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace ttt
