#include "minsurf/angle.hpp"

#include "minsurf/errors.hpp"
#include "minsurf/format.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>

namespace minsurf {

namespace {

// cos and sin of k*pi/4, k in [0, 8).
constexpr double kHalfSqrt2 = 0.70710678118654752440;
constexpr double kOctantCos[8] = {1.0, kHalfSqrt2, 0.0, -kHalfSqrt2, -1.0, -kHalfSqrt2, 0.0, kHalfSqrt2};
constexpr double kOctantSin[8] = {0.0, kHalfSqrt2, 1.0, kHalfSqrt2, 0.0, -kHalfSqrt2, -1.0, -kHalfSqrt2};

long floor_mod(long a, long m)
{
    long r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

Angle Angle::radians(double value)
{
    if (!std::isfinite(value))
        throw Error(ErrorKind::BadParameter, "non-finite angle");
    Angle a;
    a.value_ = value;
    a.sin_ = std::sin(value);
    a.cos_ = std::cos(value);
    return a;
}

Angle Angle::pi_fraction(long num, long den)
{
    if (den == 0)
        throw Error(ErrorKind::BadParameter, "zero denominator in angle");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    Angle a;
    a.exact_ = PiFraction{num, den};
    a.value_ = std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
    if ((4 * num) % den == 0) {
        const long k = floor_mod(4 * num / den, 8);
        a.sin_ = kOctantSin[k];
        a.cos_ = kOctantCos[k];
    } else {
        a.sin_ = std::sin(a.value_);
        a.cos_ = std::cos(a.value_);
    }
    return a;
}

bool Angle::is_pi_fraction(long num, long den) const noexcept
{
    if (!exact_)
        return false;
    // Compare as reduced fractions: num/den == exact num/den.
    return exact_->num * den == num * exact_->den;
}

Angle Angle::times(long k) const
{
    if (exact_)
        return pi_fraction(exact_->num * k, exact_->den);
    return radians(value_ * static_cast<double>(k));
}

std::string Angle::to_string() const
{
    if (!exact_)
        return format_real(value_);
    const auto [num, den] = *exact_;
    if (num == 0)
        return "0";
    std::string s;
    if (num == -1)
        s = "-pi";
    else if (num == 1)
        s = "pi";
    else
        s = std::to_string(num) + "pi";
    if (den != 1)
        s += "/" + std::to_string(den);
    return s;
}

Angle parse_angle(std::string_view text)
{
    const auto fail = [&]() -> Angle {
        throw Error(ErrorKind::BadParameter, "cannot parse angle '" + std::string(text) + "'");
    };
    while (!text.empty() && text.front() == ' ')
        text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ')
        text.remove_suffix(1);
    if (text.empty())
        return fail();

    const auto pi_pos = text.find("pi");
    if (pi_pos == std::string_view::npos) {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc{} || ptr != text.data() + text.size())
            return fail();
        return Angle::radians(v);
    }

    // [sign][integer][*]pi[/integer]
    std::string_view head = text.substr(0, pi_pos);
    std::string_view tail = text.substr(pi_pos + 2);
    long num = 1;
    if (!head.empty() && head.back() == '*')
        head.remove_suffix(1);
    if (head == "-") {
        num = -1;
    } else if (head == "+" || head.empty()) {
        num = 1;
    } else {
        if (head.front() == '+')
            head.remove_prefix(1);
        const auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), num);
        if (ec != std::errc{} || ptr != head.data() + head.size())
            return fail();
    }
    long den = 1;
    if (!tail.empty()) {
        if (tail.front() != '/')
            return fail();
        tail.remove_prefix(1);
        const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), den);
        if (ec != std::errc{} || ptr != tail.data() + tail.size() || den <= 0)
            return fail();
    }
    return Angle::pi_fraction(num, den);
}

} // namespace minsurf
