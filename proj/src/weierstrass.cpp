#include "minsurf/weierstrass.hpp"

#include <numbers>

namespace minsurf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};
const Complex kEighth = std::polar(1.0, kPi / 4);
const Complex kMinusEighth = std::conj(kEighth);

// Bracket whose real part, up to sign, is the half-plane height. At the four
// special angles these are the step-by-step brackets; integrating
// phi3 = 2 i z h' reproduces them with an overall minus sign.
Complex half_plane_bracket(HalfPlaneBranch b, const Angle& gamma, Complex z)
{
    const Complex d = kEighth;
    const Complex c = kMinusEighth;
    switch (b) {
    case HalfPlaneBranch::Case1:
        return 0.25 * log_ratio(-c, c, z) + 0.5 * std::polar(1.0, 3 * kPi / 4) * pole_term(z, c, 1)
            + 0.5 * kI * pole_term(z, c, 2);
    case HalfPlaneBranch::Case2:
        return -0.25 * log_ratio(d, -d, z) - 0.5 * d * pole_term(z, -d, 1) + 0.5 * kI * pole_term(z, -d, 2);
    case HalfPlaneBranch::Case3:
        return 0.25 * log_ratio(c, -c, z) + 0.5 * c * pole_term(z, -c, 1) + 0.5 * kI * pole_term(z, -c, 2);
    case HalfPlaneBranch::Case4:
        return -0.25 * log_ratio(-d, d, z) + 0.5 * d * pole_term(z, d, 1) + 0.5 * kI * pole_term(z, d, 2);
    case HalfPlaneBranch::General: break;
    }
    const Angle two_gamma = gamma.times(2);
    const double s2 = two_gamma.sin();
    const double c2 = two_gamma.cos();
    const Complex ec = std::conj(gamma.unit());
    const double k = 1.0 / (2 * c2 * c2);
    return (1 + s2) * k * nlog(kI * ec, z) - (1 - s2) * k * nlog(-kI * ec, z) - 2 * s2 * k * nlog(1.0 / ec, z)
        - kI * ec * pole_term(z, ec, 1) / c2;
}

// The unified special-angle F bracket in closed form.
Complex half_plane_unified_special_bracket(const Angle& gamma, Complex z)
{
    const Complex ec = std::conj(gamma.unit());
    const double s2 = gamma.times(2).sin();
    const Complex rot = gamma.unit() * kI; // e^{i(gamma + pi/2)}
    return s2 / 4 * log_ratio(-ec, ec, z) + 0.5 * rot * pole_term(z, ec, 1) + 0.5 * kI * pole_term(z, ec, 2);
}

Complex strip_general_bracket(const Angle& alpha, Complex z)
{
    // (1/(2cos a)) log((z+i)/(z-i)) - (1/sin 2a) log((z+e^{ia})/(z+e^{-ia})), zero at z = 0.
    const Complex e = alpha.unit();
    const Complex ec = std::conj(e);
    return (nlog(kI, z) - nlog(-kI, z)) / (2 * alpha.cos())
        - (nlog(-ec, z) - nlog(-e, z)) / alpha.times(2).sin();
}

Complex jun_bracket(Complex z)
{
    // z/(1-z)^2 - (1/2) log((1+z)/(1-z))
    const Complex r = -pole_term(z, 1.0, 1);
    return z * r * r - 0.5 * (nlog(-1.0, z) - nlog(1.0, z));
}

} // namespace

double PhiTriple::conformality_residual() const
{
    const double scale = std::norm(phi1) + std::norm(phi2) + std::norm(phi3);
    const double num = std::abs(phi1 * phi1 + phi2 * phi2 + phi3 * phi3);
    return scale > 0.0 ? num / scale : num;
}

PhiTriple phi_triple(const DomainCase& c, Complex z)
{
    const MapEval m = evaluate(c, z);
    return {m.dh + m.dg, -kI * (m.dh - m.dg), sign_factor(c.sign) * 2.0 * kI * z * m.dh};
}

Complex height_potential(const DomainCase& c, Complex z)
{
    c.validate();
    require_in_disk(z);
    switch (c.family) {
    case Family::SlantedHalfPlane: {
        const HalfPlaneBranch b = classify_half_plane(c.gamma);
        const double s = b == HalfPlaneBranch::General ? 1.0 : -1.0;
        return s * (half_plane_bracket(b, c.gamma, z) - half_plane_bracket(b, c.gamma, Complex{}));
    }
    case Family::VerticalStrip:
        if (strip_is_right_angle(c.alpha))
            return kI - kI * pole_term(z, kI, 1) * pole_term(z, -kI, 1);
        return -strip_general_bracket(c.alpha, z);
    case Family::SingleSlit: {
        const Complex r = -pole_term(z, 1.0, 1);
        return 2.0 * kI * (r * r * r / 3.0 - r * r / 2.0 + 1.0 / 6.0);
    }
    case Family::JunUpperHalfPlane: return -c.p.imag() * jun_bracket(z);
    }
    return {};
}

double height_F(const DomainCase& c, Complex z)
{
    // + 0.0 turns a signed zero into +0 for printing.
    return sign_factor(c.sign) * height_potential(c, z).real() + 0.0;
}

double height_F_display(const DomainCase& c, Complex z)
{
    c.validate();
    require_in_disk(z);
    switch (c.family) {
    case Family::SlantedHalfPlane: {
        if (classify_half_plane(c.gamma) == HalfPlaneBranch::General)
            return std::real(half_plane_bracket(HalfPlaneBranch::General, c.gamma, z)
                - half_plane_bracket(HalfPlaneBranch::General, c.gamma, Complex{}));
        return std::real(half_plane_unified_special_bracket(c.gamma, z)
            - half_plane_unified_special_bracket(c.gamma, Complex{}));
    }
    case Family::VerticalStrip:
        if (strip_is_right_angle(c.alpha))
            return std::imag(pole_term(z, kI, 1) * pole_term(z, -kI, 1)); // Im 1/(z^2+1); zero at 0
        return std::real(strip_general_bracket(c.alpha, z));
    case Family::SingleSlit: {
        const auto expr = [](Complex w) { return pole_term(w, 1.0, 2) + 2.0 / 3.0 * pole_term(w, 1.0, 3); };
        return std::imag(expr(z) - expr(Complex{}));
    }
    case Family::JunUpperHalfPlane: return c.p.imag() * std::real(jun_bracket(z));
    }
    return 0.0;
}

Complex integrate_phi(const DomainCase& c, Complex z, PhiComponent which, double tol, QuadratureStats* stats)
{
    c.validate();
    require_in_disk(z);
    const double s = sign_factor(c.sign);
    switch (which) {
    case PhiComponent::phi1:
        return integrate_segment(
            [&](Complex t) {
                const Complex dh = evaluate_dh(c, t);
                return dh + t * t * dh;
            },
            Complex{}, z, tol, stats);
    case PhiComponent::phi2:
        return integrate_segment(
            [&](Complex t) {
                const Complex dh = evaluate_dh(c, t);
                return -kI * (dh - t * t * dh);
            },
            Complex{}, z, tol, stats);
    case PhiComponent::phi3:
        return integrate_segment([&](Complex t) { return s * 2.0 * kI * t * evaluate_dh(c, t); }, Complex{}, z,
            tol, stats);
    }
    throw Error(ErrorKind::BadParameter, "phi component must be 1, 2 or 3");
}

Complex integrate_phi(const DomainCase& c, Complex z, int which, double tol, QuadratureStats* stats)
{
    if (which < 1 || which > 3)
        throw Error(ErrorKind::BadParameter, "phi component must be 1, 2 or 3");
    return integrate_phi(c, z, static_cast<PhiComponent>(which), tol, stats);
}

SurfacePoint surface_point(const DomainCase& c, Complex z)
{
    const PlanePoint pt = theorem_uv(c, z);
    return {pt.u, pt.v, height_F(c, z)};
}

SurfacePoint surface_point_by_quadrature(const DomainCase& c, Complex z, double tol)
{
    const Complex f0 = evaluate(c, Complex{}).f;
    return {f0.real() + integrate_phi(c, z, PhiComponent::phi1, tol).real(),
        f0.imag() + integrate_phi(c, z, PhiComponent::phi2, tol).real(),
        integrate_phi(c, z, PhiComponent::phi3, tol).real()};
}

} // namespace minsurf
