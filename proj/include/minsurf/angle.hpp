#pragma once

#include "minsurf/complex_kernel.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace minsurf {

/// An angle that remembers whether it was given as an exact rational multiple
/// of pi. Branch selection (special half-plane angles, the alpha = pi/2 strip)
/// keys off the exact form only; a float that merely rounds to pi/4 is not
/// special.
class Angle {
public:
    struct PiFraction {
        long num;
        long den;
        friend bool operator==(const PiFraction&, const PiFraction&) = default;
    };

    Angle() = default;

    static Angle radians(double value);
    static Angle pi_fraction(long num, long den);

    double value() const noexcept { return value_; }
    const std::optional<PiFraction>& exact() const noexcept { return exact_; }
    bool is_pi_fraction(long num, long den) const noexcept;

    /// sin/cos, exact at multiples of pi/4 when the angle is symbolic.
    double sin() const noexcept { return sin_; }
    double cos() const noexcept { return cos_; }
    Complex unit() const noexcept { return {cos_, sin_}; }

    /// Angle scaled by an integer, preserving exactness.
    Angle times(long k) const;

    std::string to_string() const;

private:
    double value_ = 0.0;
    double sin_ = 0.0;
    double cos_ = 1.0;
    std::optional<PiFraction> exact_;
};

/// Parses `0.5`, `pi`, `-pi/4`, `3pi/4`, `3*pi/4`, `2pi`. Throws
/// Error(BadParameter) on anything else.
Angle parse_angle(std::string_view text);

} // namespace minsurf
