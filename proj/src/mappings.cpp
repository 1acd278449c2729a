#include "minsurf/mappings.hpp"

#include "minsurf/errors.hpp"
#include "minsurf/format.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace minsurf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr Complex kI{0.0, 1.0};
const Complex kEighth = std::polar(1.0, kPi / 4); // e^{i pi/4}
const Complex kMinusEighth = std::conj(kEighth);  // e^{-i pi/4}

// Special-angle antiderivatives of h' before normalization. The log factors use
// the disk-analytic branch that is principal at z = 0.
Complex special_h_expr(HalfPlaneBranch b, Complex z)
{
    const Complex d = kEighth;
    const Complex c = kMinusEighth;
    switch (b) {
    case HalfPlaneBranch::Case1:
        return 0.125 * std::polar(1.0, 3 * kPi / 4) * log_ratio(c, -c, z) + 0.25 * kI * pole_term(z, c, 1)
            - 0.25 * d * pole_term(z, c, 2);
    case HalfPlaneBranch::Case2:
        return 0.125 * d * log_ratio(-d, d, z) - 0.25 * kI * pole_term(z, -d, 1) + 0.25 * c * pole_term(z, -d, 2);
    case HalfPlaneBranch::Case3:
        return 0.125 * c * log_ratio(-c, c, z) + 0.25 * kI * pole_term(z, -c, 1) + 0.25 * d * pole_term(z, -c, 2);
    case HalfPlaneBranch::Case4:
        return -0.125 * d * log_ratio(d, -d, z) - 0.25 * kI * pole_term(z, d, 1) - 0.25 * c * pole_term(z, d, 2);
    case HalfPlaneBranch::General:
        break;
    }
    throw Error(ErrorKind::BadParameter, "special_h_expr called for the general branch");
}

Complex general_h(const Angle& gamma, Complex z)
{
    const ResidueCoeffs rc = residue_coeffs(gamma);
    const Complex e = gamma.unit();
    const Complex ec = std::conj(e);
    return rc.A * nlog(kI * ec, z) + rc.B * nlog(-kI * ec, z) + rc.C * nlog(e, z) - rc.D * pole_term(z, ec, 1)
        - rc.D * e;
}

Complex half_plane_h(HalfPlaneBranch b, const Angle& gamma, Complex z)
{
    if (b == HalfPlaneBranch::General)
        return general_h(gamma, z);
    return special_h_expr(b, z) - special_h_expr(b, Complex{});
}

bool in_range(const Angle& a, long lo_num, long lo_den, long hi_num, long hi_den, double lo, double hi)
{
    if (const auto& ex = a.exact()) {
        // lo <= num/den < hi with den > 0.
        return ex->num * lo_den >= lo_num * ex->den && ex->num * hi_den < hi_num * ex->den;
    }
    return a.value() >= lo && a.value() < hi;
}

} // namespace

Complex half_plane_displayed_constant(HalfPlaneBranch b)
{
    const Complex d = kEighth;
    const Complex c = kMinusEighth;
    switch (b) {
    case HalfPlaneBranch::Case1: return -0.5 * c + kPi / 8 * d;
    case HalfPlaneBranch::Case2: return 0.5 * d - kI * (kPi / 8) * d;
    case HalfPlaneBranch::Case3: return -kPi / 8 * d + 0.5 * c;
    case HalfPlaneBranch::Case4: return -kPi / 8 * c - 0.5 * d;
    case HalfPlaneBranch::General: break;
    }
    throw Error(ErrorKind::BadParameter, "no displayed constant for the general branch");
}

Complex half_plane_special_h_unnormalized(HalfPlaneBranch b, Complex z)
{
    require_in_disk(z);
    return special_h_expr(b, z);
}

std::string_view to_string(Family f) noexcept
{
    switch (f) {
    case Family::SlantedHalfPlane: return "halfplane";
    case Family::VerticalStrip: return "strip";
    case Family::SingleSlit: return "slit";
    case Family::JunUpperHalfPlane: return "jun";
    }
    return "unknown";
}

Family parse_family(std::string_view text)
{
    if (text == "halfplane")
        return Family::SlantedHalfPlane;
    if (text == "strip")
        return Family::VerticalStrip;
    if (text == "slit")
        return Family::SingleSlit;
    if (text == "jun")
        return Family::JunUpperHalfPlane;
    throw Error(ErrorKind::BadParameter, "unknown family '" + std::string(text) + "'");
}

DomainCase DomainCase::half_plane(Angle gamma, Sign s)
{
    DomainCase c;
    c.family = Family::SlantedHalfPlane;
    c.gamma = gamma;
    c.sign = s;
    return c;
}

DomainCase DomainCase::strip(Angle alpha, Sign s)
{
    DomainCase c;
    c.family = Family::VerticalStrip;
    c.alpha = alpha;
    c.sign = s;
    return c;
}

DomainCase DomainCase::slit(Sign s)
{
    DomainCase c;
    c.family = Family::SingleSlit;
    c.sign = s;
    return c;
}

DomainCase DomainCase::jun(Complex p, Sign s)
{
    DomainCase c;
    c.family = Family::JunUpperHalfPlane;
    c.p = p;
    c.sign = s;
    return c;
}

void DomainCase::validate() const
{
    switch (family) {
    case Family::SlantedHalfPlane: classify_half_plane(gamma); break;
    case Family::VerticalStrip: strip_is_right_angle(alpha); break;
    case Family::SingleSlit: break;
    case Family::JunUpperHalfPlane:
        if (!std::isfinite(p.real()) || !std::isfinite(p.imag()) || !(p.imag() > 0.0))
            throw Error(ErrorKind::BadParameter, "Jun base point needs Im p > 0");
        break;
    }
}

std::string DomainCase::describe() const
{
    std::string s(to_string(family));
    switch (family) {
    case Family::SlantedHalfPlane: s += " gamma=" + gamma.to_string(); break;
    case Family::VerticalStrip: s += " alpha=" + alpha.to_string(); break;
    case Family::SingleSlit: break;
    case Family::JunUpperHalfPlane: s += " p=" + format_real(p.real()) + "," + format_real(p.imag()); break;
    }
    s += sign == Sign::plus ? " sign=+" : " sign=-";
    return s;
}

HalfPlaneBranch classify_half_plane(const Angle& gamma)
{
    if (!in_range(gamma, 0, 1, 2, 1, 0.0, 2 * kPi))
        throw Error(ErrorKind::BadParameter, "gamma must lie in [0, 2pi), got " + gamma.to_string());
    if (gamma.is_pi_fraction(1, 4))
        return HalfPlaneBranch::Case1;
    if (gamma.is_pi_fraction(3, 4))
        return HalfPlaneBranch::Case2;
    if (gamma.is_pi_fraction(5, 4))
        return HalfPlaneBranch::Case3;
    if (gamma.is_pi_fraction(7, 4))
        return HalfPlaneBranch::Case4;
    const double c2 = gamma.times(2).cos();
    if (std::abs(c2) < kHalfPlaneTau)
        throw Error(ErrorKind::IllConditioned,
            "|cos 2gamma| = " + format_real(std::abs(c2)) + " below threshold for gamma=" + gamma.to_string());
    return HalfPlaneBranch::General;
}

bool strip_is_right_angle(const Angle& alpha)
{
    if (!in_range(alpha, 1, 2, 1, 1, kPi / 2, kPi))
        throw Error(ErrorKind::BadParameter, "alpha must lie in [pi/2, pi), got " + alpha.to_string());
    if (alpha.is_pi_fraction(1, 2))
        return true;
    if (std::abs(alpha.cos()) < kStripTau)
        throw Error(ErrorKind::IllConditioned, "alpha too close to pi/2 without the symbolic form: " + alpha.to_string());
    return false;
}

ResidueCoeffs residue_coeffs(const Angle& gamma)
{
    const Angle two_gamma = gamma.times(2);
    const double s2 = two_gamma.sin();
    const double c2 = two_gamma.cos();
    if (!(std::abs(c2) >= kHalfPlaneTau))
        throw Error(ErrorKind::IllConditioned, "|cos 2gamma| below threshold for gamma=" + gamma.to_string());
    const Complex ec = std::conj(gamma.unit());
    ResidueCoeffs rc;
    // 1/(1 -+ sin 2gamma) = (1 +- sin 2gamma)/cos^2 2gamma keeps A, B, C on a
    // common scale near the special angles.
    const Complex k = ec / (4.0 * c2 * c2);
    rc.A = k * (1.0 + s2);
    rc.B = k * (1.0 - s2);
    rc.C = -2.0 * k;
    rc.D = Complex{1.0 / (2.0 * c2), 0.0};
    return rc;
}

// ---------------------------------------------------------------- half-plane

Complex half_plane_dh(const Angle& gamma, Complex z)
{
    require_in_disk(z);
    const Complex e = gamma.unit();
    return pole_term(z, kI * e, 1) * pole_term(z, -kI * e, 1) * pole_term(z, std::conj(e), 2);
}

MapEval eval_half_plane(const Angle& gamma, Complex z)
{
    const HalfPlaneBranch b = classify_half_plane(gamma);
    require_in_disk(z);
    const Complex e = gamma.unit();
    const Complex ec = std::conj(e);
    const Complex e2 = gamma.times(2).unit();

    MapEval m;
    m.z = z;
    m.h = half_plane_h(b, gamma, z);
    // h + e^{-2i gamma} g = z/(1 - e^{i gamma} z), solved for g.
    m.g = -pole_term(z, ec, 1) - e2 * m.h - e;
    m.f = m.h + std::conj(m.g);
    m.dh = half_plane_dh(gamma, z);
    m.dg = pole_term(z, ec, 2) - e2 * m.dh;
    return m;
}

PlanePoint half_plane_uv(const Angle& gamma, Complex z)
{
    const HalfPlaneBranch b = classify_half_plane(gamma);
    require_in_disk(z);
    const double sg = gamma.sin();
    const double cg = gamma.cos();
    const Angle two_gamma = gamma.times(2);
    const double s2 = two_gamma.sin();
    const Complex ec = std::conj(gamma.unit());
    const Complex r1 = pole_term(z, ec, 1);
    const Complex r2 = pole_term(z, ec, 2);

    if (b != HalfPlaneBranch::General) {
        const Complex L = log_ratio(ec, -ec, z);
        PlanePoint pt;
        pt.u = kPi * sg / 4 - cg - std::imag(sg / 4 * L + s2 / 4 * r1) - std::real(cg / 2 * r2 + 0.75 * r1);
        pt.v = kPi * cg / 4 + sg - std::imag(cg / 4 * L - 0.75 * r1) + std::real(s2 / 4 * r1 - sg / 2 * r2);
        return pt;
    }

    const double c2 = two_gamma.cos();
    const Complex L1 = nlog(kI * ec, z);
    const Complex L2 = nlog(-kI * ec, z);
    const Complex L3 = nlog(1.0 / ec, z);
    // 1/(2(1 -+ s2)) written as (1 +- s2)/(2 c2^2): no cancellation in 1 - s2.
    const double k = 1.0 / (2 * c2 * c2);
    const auto logs = [&](double t) {
        return std::imag(t * (1 + s2) * k * L1 + t * (1 - s2) * k * L2 - 2 * t * k * L3);
    };
    const double tail = std::real(ec * r1);
    return {logs(sg) - cg / c2 - cg / c2 * tail, logs(cg) - sg / c2 - sg / c2 * tail};
}

PlanePoint half_plane_uv_stepwise(const Angle& gamma, Complex z)
{
    const HalfPlaneBranch b = classify_half_plane(gamma);
    require_in_disk(z);
    const Complex d = kEighth;
    const Complex c = kMinusEighth;
    const double k = kSqrt2 * kPi / 8;
    const double s = kSqrt2 / 2;
    const double q = kSqrt2 / 8;
    const double t = kSqrt2 / 4;

    switch (b) {
    case HalfPlaneBranch::Case1: {
        const Complex L = log_ratio(c, -c, z);
        const Complex r1 = pole_term(z, c, 1);
        const Complex r2 = pole_term(z, c, 2);
        return {k - s - std::imag(q * L + 0.25 * r1) - std::real(t * r2 + 0.75 * r1),
            k + s - std::imag(q * L - 0.75 * r1) + std::real(0.25 * r1 - t * r2)};
    }
    case HalfPlaneBranch::Case2: {
        const Complex L = log_ratio(-d, d, z);
        const Complex r1 = pole_term(z, -d, 1);
        const Complex r2 = pole_term(z, -d, 2);
        return {k + s - std::imag(q * L - 0.25 * r1) + std::real(t * r2 - 0.75 * r1),
            -k + s + std::imag(q * L + 0.75 * r1) - std::real(t * r2 + 0.25 * r1)};
    }
    case HalfPlaneBranch::Case3: {
        const Complex L = log_ratio(-c, c, z);
        const Complex r1 = pole_term(z, -c, 1);
        const Complex r2 = pole_term(z, -c, 2);
        return {std::imag(q * L - 0.25 * r1) + std::real(t * r2 - 0.75 * r1) - k + s,
            std::imag(q * L + 0.75 * r1) + std::real(t * r2 + 0.25 * r1) - k - s};
    }
    case HalfPlaneBranch::Case4: {
        const Complex L = log_ratio(d, -d, z);
        const Complex r1 = pole_term(z, d, 1);
        const Complex r2 = pole_term(z, d, 2);
        return {-k - s + std::imag(q * L + 0.25 * r1) - std::real(t * r2 + 0.75 * r1),
            k - s - std::imag(q * L - 0.75 * r1) + std::real(t * r2 - 0.25 * r1)};
    }
    case HalfPlaneBranch::General: break;
    }

    const double sg = gamma.sin();
    const double cg = gamma.cos();
    const Angle two_gamma = gamma.times(2);
    const double s2 = two_gamma.sin();
    const double c2 = two_gamma.cos();
    const Complex ec = std::conj(gamma.unit());
    const Complex L1 = nlog(kI * ec, z);
    const Complex L2 = nlog(-kI * ec, z);
    const Complex L3 = nlog(1.0 / ec, z);
    const double kc = 1.0 / (2 * c2 * c2);
    const auto logs = [&](double w) {
        return std::imag(w * (1 + s2) * kc * L1 + w * (1 - s2) * kc * L2 - 2 * w * kc * L3);
    };
    const double ratio = std::real(z * pole_term(z, ec, 1));
    return {logs(sg) - cg / c2 * ratio, logs(cg) - sg / c2 * ratio};
}

// --------------------------------------------------------------------- strip

Complex strip_psi(const Angle& alpha, Complex z)
{
    strip_is_right_angle(alpha);
    const Complex e = alpha.unit();
    return (nlog(-e, z) - nlog(-std::conj(e), z)) / (2.0 * kI * alpha.sin());
}

Complex strip_dh(const Angle& alpha, Complex z)
{
    require_in_disk(z);
    if (strip_is_right_angle(alpha))
        return pole_term(z, -kI, 2) * pole_term(z, kI, 2);
    const Complex e = alpha.unit();
    return pole_term(z, -kI, 1) * pole_term(z, kI, 1) * pole_term(z, -e, 1) * pole_term(z, -std::conj(e), 1);
}

namespace {

Complex strip_h_right_angle_expr(Complex z)
{
    // (1/4)[i log(z+i) - i log(z-i) + 1/(z+i) + 1/(z-i) + pi]
    const Complex log_plus = principal_log(kI) + nlog(kI, z);
    const Complex log_minus = principal_log(-kI) + nlog(-kI, z);
    return 0.25 * (kI * log_plus - kI * log_minus + pole_term(z, -kI, 1) + pole_term(z, kI, 1) + kPi);
}

} // namespace

MapEval eval_strip(const Angle& alpha, Complex z)
{
    const bool right = strip_is_right_angle(alpha);
    require_in_disk(z);
    const Complex e = alpha.unit();
    const Complex ec = std::conj(e);

    MapEval m;
    m.z = z;
    if (right) {
        m.h = strip_h_right_angle_expr(z) - strip_h_right_angle_expr(Complex{});
    } else {
        const double s2a = alpha.times(2).sin();
        m.h = -(nlog(kI, z) + nlog(-kI, z)) / (4 * alpha.cos()) + kI * ec / (2 * s2a) * nlog(-ec, z)
            - kI * e / (2 * s2a) * nlog(-e, z);
    }
    const Complex psi = strip_psi(alpha, z);
    m.g = psi - m.h;
    m.f = m.h + std::conj(m.g);
    m.dh = strip_dh(alpha, z);
    const Complex dpsi = pole_term(z, -ec, 1) * pole_term(z, -e, 1); // = 1/((1 + z e^{-ia})(1 + z e^{ia}))
    m.dg = dpsi - m.dh;
    return m;
}

PlanePoint strip_uv(const Angle& alpha, Complex z)
{
    const bool right = strip_is_right_angle(alpha);
    require_in_disk(z);
    const Complex e = alpha.unit();
    const Complex ec = std::conj(e);
    const Complex la = nlog(-e, z);
    const Complex lb = nlog(-ec, z);
    PlanePoint pt;
    pt.u = std::imag(la - lb) / (2 * alpha.sin());
    if (right)
        pt.v = std::imag(z * pole_term(z, kI, 1) * pole_term(z, -kI, 1));
    else
        pt.v = std::imag(la + lb - nlog(kI, z) - nlog(-kI, z)) / (2 * alpha.cos());
    return pt;
}

// ---------------------------------------------------------------------- slit

Complex slit_dh(Complex z)
{
    require_in_disk(z);
    return pole_term(z, 1.0, 4);
}

MapEval eval_slit(Complex z)
{
    require_in_disk(z);
    const Complex r = -pole_term(z, 1.0, 1); // 1/(1 - z)
    const Complex r2 = r * r;
    const Complex r3 = r2 * r;
    MapEval m;
    m.z = z;
    m.h = -1.0 / 3.0 + r3 / 3.0;
    m.g = m.h - z * r2;
    m.f = m.h + std::conj(m.g);
    m.dh = r2 * r2;
    m.dg = m.dh - (1.0 + z) * r3;
    return m;
}

PlanePoint slit_uv(Complex z)
{
    require_in_disk(z);
    const Complex r = -pole_term(z, 1.0, 1);
    const Complex z2 = z * z;
    return {std::real((2.0 * z2 * z - 3.0 * z2 + 3.0 * z) / 3.0 * r * r * r), std::imag(z * r * r)};
}

// ----------------------------------------------------------------------- Jun

namespace {

void require_jun(Complex p)
{
    if (!std::isfinite(p.real()) || !std::isfinite(p.imag()) || !(p.imag() > 0.0))
        throw Error(ErrorKind::BadParameter, "Jun base point needs Im p > 0");
}

// (1/2) log((1+z)/(1-z)) + z/(1-z)^2
Complex jun_k(Complex z, Complex r)
{
    return 0.5 * (nlog(-1.0, z) - nlog(1.0, z)) + z * r * r;
}

} // namespace

Complex jun_dh(Complex p, Complex z)
{
    require_jun(p);
    require_in_disk(z);
    const Complex r = -pole_term(z, 1.0, 1);
    return 2.0 * kI * p.imag() * r * r * r * pole_term(z, -1.0, 1);
}

MapEval eval_jun(Complex p, Complex z)
{
    require_jun(p);
    require_in_disk(z);
    const double p2 = p.imag();
    const Complex r = -pole_term(z, 1.0, 1);
    const Complex K = jun_k(z, r);
    MapEval m;
    m.z = z;
    m.h = p + 0.5 * kI * p2 * (K + 2.0 * z * r);
    m.g = 0.5 * kI * p2 * (K - 2.0 * z * r);
    m.f = m.h + std::conj(m.g);
    m.dh = jun_dh(p, z);
    m.dg = m.dh - 2.0 * kI * p2 * r * r;
    return m;
}

PlanePoint eval_jun_upper_half_plane(Complex p, Complex z)
{
    require_jun(p);
    require_in_disk(z);
    const Complex r = -pole_term(z, 1.0, 1);
    const Complex K = jun_k(z, r);
    const Complex q = (1.0 + z) * r;
    return {p.real() + std::real(0.5 * kI * p.imag() * (K - std::conj(K))), 0.5 * p.imag() * std::real(q + std::conj(q))};
}

// ------------------------------------------------------------------ dispatch

MapEval evaluate(const DomainCase& c, Complex z)
{
    switch (c.family) {
    case Family::SlantedHalfPlane: return eval_half_plane(c.gamma, z);
    case Family::VerticalStrip: return eval_strip(c.alpha, z);
    case Family::SingleSlit: return eval_slit(z);
    case Family::JunUpperHalfPlane: return eval_jun(c.p, z);
    }
    throw Error(ErrorKind::BadParameter, "unknown family");
}

Complex evaluate_dh(const DomainCase& c, Complex z)
{
    switch (c.family) {
    case Family::SlantedHalfPlane: classify_half_plane(c.gamma); return half_plane_dh(c.gamma, z);
    case Family::VerticalStrip: return strip_dh(c.alpha, z);
    case Family::SingleSlit: return slit_dh(z);
    case Family::JunUpperHalfPlane: return jun_dh(c.p, z);
    }
    throw Error(ErrorKind::BadParameter, "unknown family");
}

PlanePoint theorem_uv(const DomainCase& c, Complex z)
{
    switch (c.family) {
    case Family::SlantedHalfPlane: return half_plane_uv(c.gamma, z);
    case Family::VerticalStrip: return strip_uv(c.alpha, z);
    case Family::SingleSlit: return slit_uv(z);
    case Family::JunUpperHalfPlane: return eval_jun_upper_half_plane(c.p, z);
    }
    throw Error(ErrorKind::BadParameter, "unknown family");
}

PlanePoint theorem_uv_offset(const DomainCase& c)
{
    const PlanePoint at0 = theorem_uv(c, Complex{});
    const Complex f0 = evaluate(c, Complex{}).f;
    return {at0.u - f0.real(), at0.v - f0.imag()};
}

double image_margin(const DomainCase& c, Complex f)
{
    switch (c.family) {
    case Family::SlantedHalfPlane: return std::real(c.gamma.unit() * f) + 0.5;
    case Family::VerticalStrip: {
        const double sa = c.alpha.sin();
        const double lo = (c.alpha.value() - kPi) / (2 * sa);
        const double hi = c.alpha.value() / (2 * sa);
        return std::min(f.real() - lo, hi - f.real());
    }
    case Family::SingleSlit: {
        constexpr double gap = 1e-6;
        const double end = kSlitTip - gap;
        const double dist = f.real() <= end ? std::abs(f.imag()) : std::abs(f - Complex{end, 0.0});
        return dist - gap;
    }
    case Family::JunUpperHalfPlane: return f.imag();
    }
    return 0.0;
}

} // namespace minsurf
