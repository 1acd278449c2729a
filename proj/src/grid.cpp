#include "minsurf/grid.hpp"

#include "minsurf/errors.hpp"
#include "minsurf/format.hpp"

#include <cmath>
#include <numbers>

namespace minsurf {

void GridSpec::validate() const
{
    if (nr < 1 || ntheta < 1)
        throw Error(ErrorKind::BadParameter, "grid needs nr >= 1 and ntheta >= 1");
    if (!(r_max > 0.0 && r_max < 1.0))
        throw Error(ErrorKind::BadParameter, "grid r_max must lie in (0, 1)");
}

std::string GridSpec::describe() const
{
    return std::to_string(nr) + "x" + std::to_string(ntheta) + " r_max=" + format_real(r_max);
}

std::vector<Complex> polar_grid(const GridSpec& grid)
{
    grid.validate();
    std::vector<Complex> pts;
    pts.reserve(static_cast<std::size_t>(grid.nr) * grid.ntheta + 1);
    pts.emplace_back(0.0, 0.0);
    for (int i = 1; i <= grid.nr; ++i) {
        const double r = grid.r_max * i / grid.nr;
        for (int j = 0; j < grid.ntheta; ++j)
            pts.push_back(std::polar(r, 2.0 * std::numbers::pi * j / grid.ntheta));
    }
    return pts;
}

double radical_inverse(unsigned long index, unsigned base)
{
    double result = 0.0;
    double f = 1.0 / base;
    while (index > 0) {
        result += f * static_cast<double>(index % base);
        index /= base;
        f /= base;
    }
    return result;
}

std::vector<Complex> halton_disk(std::size_t n, double r_max, unsigned long seed)
{
    std::vector<Complex> pts;
    pts.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const unsigned long idx = seed + k + 1;
        const double r = r_max * std::sqrt(radical_inverse(idx, 2));
        const double theta = 2.0 * std::numbers::pi * radical_inverse(idx, 3);
        pts.push_back(std::polar(r, theta));
    }
    return pts;
}

} // namespace minsurf
