#pragma once

#include "minsurf/complex_kernel.hpp"

#include <string>
#include <vector>

namespace minsurf {

struct GridSpec {
    int nr = 40;
    int ntheta = 64;
    double r_max = 0.95;

    /// Throws BadParameter unless nr >= 1, ntheta >= 1 and 0 < r_max < 1.
    void validate() const;
    std::string describe() const;
};

/// Center first, then ring i = 1..nr (radius r_max*i/nr), angle
/// j = 0..ntheta-1 (2*pi*j/ntheta). Vertex (i, j) sits at 1 + (i-1)*ntheta + j.
std::vector<Complex> polar_grid(const GridSpec& grid);

/// Van der Corput radical inverse of `index` in `base`.
double radical_inverse(unsigned long index, unsigned base);

/// n Halton(2,3) points mapped area-uniformly into |z| <= r_max, starting at
/// sequence index seed + 1.
std::vector<Complex> halton_disk(std::size_t n, double r_max, unsigned long seed);

} // namespace minsurf
