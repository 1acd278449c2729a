#include "minsurf/complex_kernel.hpp"

#include "minsurf/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace minsurf {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::OutsideDisk: return "OutsideDisk";
    case ErrorKind::NearPole: return "NearPole";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::ToleranceNotMet: return "ToleranceNotMet";
    }
    return "Unknown";
}

namespace {

std::string describe(Complex z)
{
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (std::signbit(z.imag()) ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

} // namespace

Complex principal_log(Complex z)
{
    if (z == Complex{0.0, 0.0})
        throw Error(ErrorKind::ZeroArgument, "logarithm of zero");
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw Error(ErrorKind::BadParameter, "logarithm of non-finite value " + describe(z));
    Complex w = std::log(z);
    // std::log maps -x - 0i to -i*pi; the principal branch here is (-pi, pi].
    if (w.imag() == -std::numbers::pi)
        w.imag(std::numbers::pi);
    return w;
}

void require_in_disk(Complex z)
{
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || std::abs(z) >= 1.0)
        throw Error(ErrorKind::OutsideDisk, "|z| >= 1 at z = " + describe(z));
}

Complex nlog(Complex a, Complex z)
{
    require_in_disk(z);
    if (!(std::abs(a) <= 1.0 + 1e-15))
        throw Error(ErrorKind::BadParameter, "nlog anchor outside closed unit disk: " + describe(a));
    if (z == Complex{0.0, 0.0})
        return {0.0, 0.0};
    // log1p keeps full relative accuracy for small |z*a|.
    const Complex w = -z * a;
    const double re = 0.5 * std::log1p(2.0 * w.real() + std::norm(w));
    const double im = std::atan2(w.imag(), 1.0 + w.real());
    return {re, im};
}

Complex log_ratio(Complex p, Complex q, Complex z)
{
    if (std::abs(p) < 1.0 - 1e-15 || std::abs(q) < 1.0 - 1e-15)
        throw Error(ErrorKind::BadParameter, "log_ratio branch points must lie outside the open disk");
    return principal_log(p / q) + nlog(1.0 / p, z) - nlog(1.0 / q, z);
}

Complex pole_term(Complex z, Complex pole, int order)
{
    if (order < 1)
        throw Error(ErrorKind::BadParameter, "pole order must be positive");
    const Complex d = z - pole;
    if (!(std::abs(d) >= kNearPoleGuard))
        throw Error(ErrorKind::NearPole, "|z - pole| below guard at z = " + describe(z));
    Complex r = 1.0 / d;
    Complex out = r;
    for (int k = 1; k < order; ++k)
        out *= r;
    return out;
}

} // namespace minsurf
