#pragma once

#include "minsurf/mappings.hpp"
#include "minsurf/quadrature.hpp"

namespace minsurf {

/// Weierstrass-Enneper integrands at one point:
/// phi1 = h' + g', phi2 = -i(h' - g'), phi3 = 2 i b h' with b(z) = +-z.
struct PhiTriple {
    Complex phi1;
    Complex phi2;
    Complex phi3;

    /// |phi1^2 + phi2^2 + phi3^2| / (|phi1|^2 + |phi2|^2 + |phi3|^2)
    double conformality_residual() const;
};

struct SurfacePoint {
    double u = 0.0;
    double v = 0.0;
    double F = 0.0;
};

PhiTriple phi_triple(const DomainCase& c, Complex z);

/// Analytic antiderivative of phi3 for b(z) = +z, normalized to vanish at 0.
/// height_F is sign * Re of this.
Complex height_potential(const DomainCase& c, Complex z);

/// Height of the surface above (u, v), with the integration constant chosen
/// so that F(0) = 0.
double height_F(const DomainCase& c, Complex z);

/// Re of the bracket in the closed-form F (no +- and no constant),
/// evaluated minus its value at 0. Kept to document how the displayed sign
/// relates to the sign obtained from integrating phi3.
double height_F_display(const DomainCase& c, Complex z);

enum class PhiComponent { phi1 = 1, phi2 = 2, phi3 = 3 };

/// Integral of phi_which from 0 to z along the straight segment, absolute
/// accuracy tol. This is the quadrature oracle for every closed form above.
Complex integrate_phi(const DomainCase& c, Complex z, PhiComponent which, double tol,
    QuadratureStats* stats = nullptr);

/// Same, with the component given as 1, 2 or 3.
Complex integrate_phi(const DomainCase& c, Complex z, int which, double tol, QuadratureStats* stats = nullptr);

/// (u, v) from the family's closed form, F from height_F.
SurfacePoint surface_point(const DomainCase& c, Complex z);

/// (Re int phi1, Re int phi2, Re int phi3) by quadrature, offset by f(0) so it
/// is directly comparable to surface_point.
SurfacePoint surface_point_by_quadrature(const DomainCase& c, Complex z, double tol);

} // namespace minsurf
