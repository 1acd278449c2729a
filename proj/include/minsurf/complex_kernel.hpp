#pragma once

#include <complex>

namespace minsurf {

using Complex = std::complex<double>;

inline constexpr double kNearPoleGuard = 1e-9;

/// Log z with imaginary part in (-pi, pi]. The negative real axis maps to +i*pi
/// regardless of the sign of a zero imaginary part.
Complex principal_log(Complex z);

/// Log(1 - z*a) for |z| < 1, |a| <= 1. The argument stays in the right
/// half-plane, so this is analytic on the disk and vanishes at z = 0.
Complex nlog(Complex a, Complex z);

/// Branch of log((z - p)/(z - q)) that is analytic on the unit disk and
/// equals the principal value at z = 0. Both p and q must lie on |w| >= 1.
Complex log_ratio(Complex p, Complex q, Complex z);

/// 1/(z - pole)^order, rejecting |z - pole| < kNearPoleGuard.
Complex pole_term(Complex z, Complex pole, int order);

/// e^{i*theta} for a plain radian angle.
inline Complex unit(double theta) { return std::polar(1.0, theta); }

/// Throws OutsideDisk unless |z| < 1 and both components are finite.
void require_in_disk(Complex z);

} // namespace minsurf
