#include "doctest.h"

#include "minsurf/errors.hpp"
#include "minsurf/grid.hpp"
#include "minsurf/quadrature.hpp"
#include "minsurf/weierstrass.hpp"

#include <cmath>
#include <numbers>

using namespace minsurf;

namespace {

Angle q(long num, long den) { return Angle::pi_fraction(num, den); }

struct FrozenHeight {
    DomainCase c;
    Complex z;
    double F;
};

// Re of the integral of 2 i z h' along [0, z], mpmath at 40 digits.
const FrozenHeight heights[] = {
    {DomainCase::half_plane(Angle::radians(0.0)), {0.0, 0.3}, 0.034290246404946574163},
    {DomainCase::half_plane(q(1, 4)), {0.3, 0.2}, -0.12359401898103584532},
    {DomainCase::half_plane(q(3, 4)), {0.3, 0.2}, -0.085896343116180706031},
    {DomainCase::half_plane(q(5, 4)), {0.3, 0.2}, -0.073681883974659853038},
    {DomainCase::half_plane(q(7, 4)), {0.3, 0.2}, -0.2064557363592622461},
    {DomainCase::half_plane(q(5, 4)), {0.0, 0.3}, -0.044935817120224102959},
    {DomainCase::half_plane(Angle::radians(1.0)), {-0.6, 0.5}, 0.38774674916076047661},
    {DomainCase::strip(q(9, 10)), {-0.2, 0.7}, 0.42682140689866732246},
    {DomainCase::slit(), {0.0, 0.5}, 0.17066666666666666667},
    {DomainCase::slit(), {-0.7, 0.3}, 0.050015885976476663113},
    {DomainCase::jun({0.0, 1.0}), {0.5, 0.0}, -1.4506938556659451543},
    {DomainCase::jun({1.0, 2.0}), {0.3, 0.4}, 1.1147002539227048667},
};

std::vector<DomainCase> cases()
{
    return {DomainCase::half_plane(Angle::radians(0.5)), DomainCase::half_plane(q(3, 4)),
        DomainCase::half_plane(q(7, 4)), DomainCase::strip(q(1, 2)), DomainCase::strip(q(4, 5)),
        DomainCase::slit(), DomainCase::jun({0.5, 4.0})};
}

} // namespace

TEST_CASE("height matches frozen values")
{
    for (const auto& fh : heights) {
        CAPTURE(fh.c.describe());
        CHECK(std::abs(height_F(fh.c, fh.z) - fh.F) < 1e-13);
        DomainCase minus = fh.c;
        minus.sign = Sign::minus;
        CHECK(std::abs(height_F(minus, fh.z) + fh.F) < 1e-13);
    }
}

TEST_CASE("height display relates to the integrated height by a fixed sign")
{
    for (const auto& c : cases()) {
        CAPTURE(c.describe());
        const Complex z0{0.4, -0.3};
        const double ratio = height_F(c, z0) / height_F_display(c, z0);
        CHECK(std::abs(std::abs(ratio) - 1.0) < 1e-12);
        for (const Complex z : halton_disk(50, 0.9, 4))
            CHECK(std::abs(height_F(c, z) - ratio * height_F_display(c, z)) < 1e-10);
    }
}

TEST_CASE("conformality of the Weierstrass data, both signs")
{
    for (auto c : cases()) {
        for (const Sign s : {Sign::plus, Sign::minus}) {
            c.sign = s;
            CAPTURE(c.describe());
            for (const Complex z : halton_disk(400, 0.97, 8))
                CHECK(phi_triple(c, z).conformality_residual() < 1e-10);
        }
    }
}

TEST_CASE("closed-form surface point agrees with quadrature")
{
    for (const auto& c : cases()) {
        CAPTURE(c.describe());
        for (const Complex z : halton_disk(30, 0.95, 6)) {
            const SurfacePoint a = surface_point(c, z);
            const SurfacePoint b = surface_point_by_quadrature(c, z, 1e-11);
            CHECK(std::abs(a.u - b.u) < 1e-9);
            CHECK(std::abs(a.v - b.v) < 1e-9);
            CHECK(std::abs(a.F - b.F) < 1e-9);
        }
    }
}

TEST_CASE("path independence: straight segment equals a two-leg path")
{
    for (const auto& c : cases()) {
        CAPTURE(c.describe());
        for (const Complex z : halton_disk(10, 0.9, 21)) {
            const Complex corner{0.0, z.imag()};
            for (int which = 1; which <= 3; ++which) {
                const Complex direct = integrate_phi(c, z, which, 1e-12);
                const double s = sign_factor(c.sign);
                const auto integrand = [&](Complex t) {
                    const Complex dh = evaluate_dh(c, t);
                    switch (which) {
                    case 1: return dh + t * t * dh;
                    case 2: return Complex{0.0, -1.0} * (dh - t * t * dh);
                    default: return s * Complex{0.0, 2.0} * t * dh;
                    }
                };
                const Complex legs = integrate_polyline(integrand, {Complex{}, corner, z}, 1e-12);
                CHECK(std::abs(direct - legs) < 1e-10);
            }
        }
    }
}

TEST_CASE("gauss-legendre rule")
{
    const GaussRule& r = gauss_legendre_16();
    double wsum = 0.0;
    for (const double w : r.weights)
        wsum += w;
    CHECK(std::abs(wsum - 2.0) < 1e-14);
    // Exact for polynomials of degree <= 31.
    double m30 = 0.0;
    for (std::size_t k = 0; k < kGaussOrder; ++k)
        m30 += r.weights[k] * std::pow(r.nodes[k], 30);
    CHECK(std::abs(m30 - 2.0 / 31.0) < 1e-14);
}

TEST_CASE("adaptive quadrature")
{
    QuadratureStats st;
    const Complex v = integrate_segment([](Complex t) { return std::exp(t); }, Complex{}, Complex{0.0, std::numbers::pi},
        1e-13, &st);
    CHECK(std::abs(v - Complex{-2.0, 0.0}) < 1e-13);
    CHECK(st.evaluations > 0);
    // A near-singular integrand runs out of budget.
    CHECK_THROWS_AS(integrate_segment([](Complex t) { return 1.0 / std::sqrt(std::abs(t - 0.5)); }, Complex{},
                        Complex{1.0, 0.0}, 1e-15, nullptr, 2000),
        Error);
    CHECK_THROWS_AS(integrate_segment([](Complex t) { return t; }, Complex{}, Complex{1.0, 0.0}, 0.0), Error);
}

TEST_CASE("integrate_phi rejects bad component")
{
    CHECK_THROWS_AS(integrate_phi(DomainCase::slit(), Complex{0.1, 0.0}, 4, 1e-10), Error);
}
