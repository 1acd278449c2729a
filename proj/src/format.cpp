#include "minsurf/format.hpp"

#include "minsurf/errors.hpp"

#include <array>
#include <charconv>

namespace minsurf {

std::string format_real(double x)
{
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 17);
    if (ec != std::errc{})
        throw Error(ErrorKind::BadParameter, "cannot format real");
    return std::string(buf.data(), ptr);
}

double parse_real(std::string_view text)
{
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw Error(ErrorKind::BadParameter, "cannot parse real '" + std::string(text) + "'");
    return v;
}

} // namespace minsurf
