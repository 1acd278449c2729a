#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace minsurf {

enum class ErrorKind {
    ZeroArgument,
    OutsideDisk,
    NearPole,
    IllConditioned,
    BadParameter,
    ToleranceNotMet,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for every evaluator failure; `kind()` tells callers
/// which precondition was violated.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace minsurf
