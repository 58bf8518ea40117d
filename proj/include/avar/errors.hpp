// Error hierarchy shared by the whole library.
//
// InputError   -> malformed or out-of-contract input (CLI exit 1)
// BudgetError  -> a configured resource cap was hit     (CLI exit 2)
// InternalError-> invariant violation, always a bug     (CLI exit 3)
#pragma once

#include <stdexcept>
#include <string>

namespace avar {

class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace avar
