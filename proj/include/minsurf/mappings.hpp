#pragma once

#include "minsurf/angle.hpp"
#include "minsurf/complex_kernel.hpp"

#include <string>
#include <string_view>

namespace minsurf {

enum class Family { SlantedHalfPlane, VerticalStrip, SingleSlit, JunUpperHalfPlane };

/// The b(z) = +z or b(z) = -z branch of the dilatation omega = b^2.
enum class Sign { plus, minus };

inline double sign_factor(Sign s) noexcept { return s == Sign::plus ? 1.0 : -1.0; }

std::string_view to_string(Family f) noexcept;
Family parse_family(std::string_view text);

/// Conditioning threshold on |cos 2*gamma| for the general half-plane branch.
inline constexpr double kHalfPlaneTau = 1e-6;
/// Same role for |cos alpha| on the general strip branch.
inline constexpr double kStripTau = 1e-6;

struct DomainCase {
    Family family = Family::SingleSlit;
    Angle gamma;                ///< half-plane only, [0, 2*pi)
    Angle alpha = Angle::pi_fraction(1, 2); ///< strip only, [pi/2, pi)
    Complex p{0.0, 1.0};        ///< Jun only, Im p > 0
    Sign sign = Sign::plus;

    static DomainCase half_plane(Angle gamma, Sign s = Sign::plus);
    static DomainCase strip(Angle alpha, Sign s = Sign::plus);
    static DomainCase slit(Sign s = Sign::plus);
    static DomainCase jun(Complex p, Sign s = Sign::plus);

    /// Throws BadParameter / IllConditioned for inadmissible parameters.
    void validate() const;

    /// e.g. "halfplane gamma=pi/4 sign=+"
    std::string describe() const;
};

/// h, g, f = h + conj(g) and the derivatives at one disk point.
struct MapEval {
    Complex z;
    Complex h;
    Complex g;
    Complex f;
    Complex dh;
    Complex dg;
};

struct ResidueCoeffs {
    Complex A;
    Complex B;
    Complex C;
    Complex D;
};

struct PlanePoint {
    double u = 0.0;
    double v = 0.0;
};

enum class HalfPlaneBranch { Case1, Case2, Case3, Case4, General };

/// Exact classification: Case1..Case4 for symbolic pi/4, 3pi/4, 5pi/4, 7pi/4.
/// Throws BadParameter outside [0, 2*pi) and IllConditioned when a
/// non-special angle has |cos 2*gamma| < kHalfPlaneTau.
HalfPlaneBranch classify_half_plane(const Angle& gamma);

/// Throws unless pi/2 <= alpha < pi; returns true for the symbolic pi/2 branch.
bool strip_is_right_angle(const Angle& alpha);

ResidueCoeffs residue_coeffs(const Angle& gamma);

/// The additive constant that comes with the closed-form h at the special angles.
/// The evaluators do not use it: h(0) = 0 is enforced by subtraction.
Complex half_plane_displayed_constant(HalfPlaneBranch b);
/// Closed-form h at the special angles without any additive constant.
Complex half_plane_special_h_unnormalized(HalfPlaneBranch b, Complex z);

// Half-plane H_gamma = {Re(e^{i gamma} w) > -1/2}.
Complex half_plane_dh(const Angle& gamma, Complex z);
MapEval eval_half_plane(const Angle& gamma, Complex z);
/// u, v in closed form (special or general form).
PlanePoint half_plane_uv(const Angle& gamma, Complex z);
/// u, v in step-by-step form, one per special angle plus the general angle.
PlanePoint half_plane_uv_stepwise(const Angle& gamma, Complex z);

// Asymmetric vertical strip (alpha - pi)/(2 sin alpha) < Re w < alpha/(2 sin alpha).
Complex strip_psi(const Angle& alpha, Complex z);
Complex strip_dh(const Angle& alpha, Complex z);
MapEval eval_strip(const Angle& alpha, Complex z);
PlanePoint strip_uv(const Angle& alpha, Complex z);

// Plane slit along (-inf, -1/3].
Complex slit_dh(Complex z);
MapEval eval_slit(Complex z);
PlanePoint slit_uv(Complex z);

/// Tip of the slit: radial limit of f(r) as r -> -1.
inline constexpr double kSlitTip = -1.0 / 3.0;

// Upper half-plane with f(0) = p.
Complex jun_dh(Complex p, Complex z);
MapEval eval_jun(Complex p, Complex z);
PlanePoint eval_jun_upper_half_plane(Complex p, Complex z);

// Family dispatch.
MapEval evaluate(const DomainCase& c, Complex z);
Complex evaluate_dh(const DomainCase& c, Complex z);
/// Closed-form u, v for the case's family.
PlanePoint theorem_uv(const DomainCase& c, Complex z);
/// theorem_uv(c, 0) - f(0): the additive constant separating the display from
/// the normalized construction. Zero for every family under the principal
/// branch convention of log_ratio.
PlanePoint theorem_uv_offset(const DomainCase& c);

/// Signed margin by which f lies inside the image domain (> 0 means inside).
double image_margin(const DomainCase& c, Complex f);

} // namespace minsurf
