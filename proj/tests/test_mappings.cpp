#include "doctest.h"

#include "minsurf/errors.hpp"
#include "minsurf/grid.hpp"
#include "minsurf/mappings.hpp"
#include "minsurf/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace minsurf;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double tol = 1e-13;

Angle q(long num, long den) { return Angle::pi_fraction(num, den); }

ErrorKind kind_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected minsurf::Error");
    return ErrorKind::BadParameter;
}

// Values from tests/oracle/frozen_values.py (mpmath quadrature of h' along
// [0, z] at 40 digits).
struct Frozen {
    DomainCase c;
    Complex z;
    Complex h;
    Complex g;
    Complex f;
};

const Frozen frozen[] = {
    {DomainCase::half_plane(Angle::radians(0.0)), {0.5, 0.0}, {0.90235947810852509365, 0.0},
        {0.09764052189147490635, 0.0}, {1.0, 0.0}},
    {DomainCase::half_plane(Angle::radians(0.0)), {0.0, 0.3}, {-0.086406497597798179286, 0.28334307613801610546},
        {0.0038376902583486436079, -0.0081137183398509763495},
        {-0.082568807339449535678, 0.29145679447786708181}},
    {DomainCase::half_plane(q(1, 2)), {0.0, 0.5}, {0.0, 0.31361333289219641871}, {0.0, -0.019720000441136914619},
        {0.0, 1.0 / 3.0}},
    {DomainCase::half_plane(q(1, 4)), {0.3, 0.2}, {0.19974515443319453322, 0.2850665645929548065},
        {-0.010230004269934630588, 0.010734932061267237963}, {0.18951515016325990263, 0.27433163253168756854}},
    {DomainCase::half_plane(q(3, 4)), {0.3, 0.2}, {0.22359256827822865584, 0.16144487003032538971},
        {-0.0025407254570285295777, 0.010255006429419840216}, {0.22105184282120012626, 0.15118986360090554949}},
    {DomainCase::half_plane(q(5, 4)), {0.3, 0.2}, {0.29637947208668724469, 0.08817135403572703391},
        {0.0031671829829509315612, 0.011877015529758755465}, {0.29954665506963817625, 0.076294338505968278445}},
    {DomainCase::half_plane(q(7, 4)), {0.3, 0.2}, {0.52388755394877120225, 0.25554993714423598206},
        {0.00001367475048109590565, 0.031857629634624709158}, {0.52390122869925229815, 0.2236923075096112729}},
    {DomainCase::half_plane(q(5, 4)), {0.0, 0.3}, {0.10660355797378246134, 0.34982445514644674037},
        {-0.0052117965936368105758, -0.011010685010385671636}, {0.10139176138014565077, 0.36083514015683241201}},
    {DomainCase::half_plane(Angle::radians(1.0)), {-0.6, 0.5}, {-0.32429785849255708186, 0.42529003465129316749},
        {0.079316481602454185529, 0.06315110973978419996}, {-0.24498137689010289633, 0.36213892491150896753}},
    {DomainCase::strip(q(1, 2)), {0.0, 0.5}, {0.0, 0.60798640550036075618}, {0.0, -0.058680261166305910485},
        {0.0, 2.0 / 3.0}},
    {DomainCase::strip(q(2, 3)), {0.4, 0.0}, {0.44735560105168308076, 0.0}, {0.024498750231649492433, 0.0},
        {0.4718543512833325732, 0.0}},
    {DomainCase::strip(q(3, 4)), {0.5, 0.0}, {0.64874722690679353986, 0.0}, {0.059029943516568367303, 0.0},
        {0.70777717042336190716, 0.0}},
    {DomainCase::strip(q(9, 10)), {-0.2, 0.7}, {-0.48105236832181726518, 0.33792341147650967922},
        {0.099150811824231468879, 0.034951121087130119321}, {-0.3819015564975857963, 0.3029722903893795599}},
    {DomainCase::slit(), {0.5, 0.0}, {7.0 / 3.0, 0.0}, {1.0 / 3.0, 0.0}, {8.0 / 3.0, 0.0}},
    {DomainCase::slit(), {0.0, 0.5}, {-0.29066666666666666667, 0.23466666666666666667},
        {0.029333333333333333333, -0.0053333333333333333333}, {-0.26133333333333333333, 0.24}},
    {DomainCase::slit(), {-0.7, 0.3}, {-0.27723109798045052025, 0.032421902514216515271},
        {-0.022062411885229586086, 0.018233352448904138653}, {-0.29929350986568010634, 0.014188550065312376618}},
};

std::vector<DomainCase> representative_cases()
{
    return {DomainCase::half_plane(Angle::radians(0.0)), DomainCase::half_plane(q(1, 4)),
        DomainCase::half_plane(q(3, 4)), DomainCase::half_plane(q(5, 4)), DomainCase::half_plane(q(7, 4)),
        DomainCase::half_plane(Angle::radians(2.0)), DomainCase::strip(q(1, 2)), DomainCase::strip(q(3, 5)),
        DomainCase::strip(Angle::radians(2.5)), DomainCase::slit(), DomainCase::jun({1.0, 2.0}),
        DomainCase::jun({-0.7, 0.2})};
}

} // namespace

TEST_CASE("closed forms match the frozen quadrature oracle")
{
    for (const auto& fr : frozen) {
        CAPTURE(fr.c.describe());
        CAPTURE(fr.z);
        const MapEval m = evaluate(fr.c, fr.z);
        CHECK(std::abs(m.h - fr.h) < tol);
        CHECK(std::abs(m.g - fr.g) < tol);
        CHECK(std::abs(m.f - fr.f) < tol);
    }
}

TEST_CASE("jun frozen values")
{
    const PlanePoint a = eval_jun_upper_half_plane({0.0, 1.0}, {0.5, 0.0});
    CHECK(std::abs(a.u) < tol);
    CHECK(std::abs(a.v - 3.0) < tol);
    const PlanePoint b = eval_jun_upper_half_plane({1.0, 2.0}, {0.3, 0.4});
    CHECK(std::abs(b.u + 1.2377633890279684493) < tol);
    CHECK(std::abs(b.v - 2.3076923076923075399) < tol);
    const MapEval m = eval_jun({1.0, 2.0}, {0.3, 0.4});
    CHECK(std::abs(m.f - Complex{b.u, b.v}) < tol);
}

TEST_CASE("normalization at the origin")
{
    for (const auto& c : representative_cases()) {
        CAPTURE(c.describe());
        const MapEval m = evaluate(c, Complex{});
        if (c.family == Family::JunUpperHalfPlane) {
            CHECK(std::abs(m.f - c.p) < tol);
        } else {
            CHECK(std::abs(m.h) < 1e-15);
            CHECK(std::abs(m.g) < 1e-15);
        }
        CHECK(std::abs(m.dg) < tol);
    }
}

TEST_CASE("dilatation identity over a Halton sample")
{
    for (const auto& c : representative_cases()) {
        CAPTURE(c.describe());
        for (const Complex z : halton_disk(300, 0.97, 5)) {
            const MapEval m = evaluate(c, z);
            CHECK(std::abs(m.dg - z * z * m.dh) <= 1e-12 * std::abs(m.dh));
        }
    }
}

TEST_CASE("dh agrees with a central difference of h")
{
    for (const auto& c : representative_cases()) {
        CAPTURE(c.describe());
        for (const Complex z : halton_disk(20, 0.8, 9)) {
            const double s = 1e-5;
            const Complex fd = (evaluate(c, z + s).h - evaluate(c, z - s).h) / (2 * s);
            const Complex fdi = (evaluate(c, z + Complex{0, s}).h - evaluate(c, z - Complex{0, s}).h) /
                (Complex{0, 2 * s});
            const Complex dh = evaluate(c, z).dh;
            CHECK(std::abs(fd - dh) < 1e-7 * std::max(1.0, std::abs(dh)));
            CHECK(std::abs(fdi - dh) < 1e-7 * std::max(1.0, std::abs(dh)));
        }
    }
}

TEST_CASE("closed-form displays agree with the construction")
{
    for (const auto& c : representative_cases()) {
        CAPTURE(c.describe());
        const PlanePoint off = theorem_uv_offset(c);
        CHECK(std::abs(off.u) < 1e-15);
        CHECK(std::abs(off.v) < 1e-15);
        for (const Complex z : halton_disk(200, 0.95, 11)) {
            const PlanePoint t = theorem_uv(c, z);
            const Complex f = evaluate(c, z).f;
            CHECK(std::hypot(t.u - f.real(), t.v - f.imag()) < 1e-10);
        }
    }
}

TEST_CASE("half-plane step-by-step forms agree with the unified forms")
{
    for (const Angle g : {q(1, 4), q(3, 4), q(5, 4), q(7, 4), Angle::radians(0.3), Angle::radians(4.0)}) {
        CAPTURE(g.to_string());
        for (const Complex z : halton_disk(100, 0.95, 2)) {
            const PlanePoint a = half_plane_uv(g, z);
            const PlanePoint b = half_plane_uv_stepwise(g, z);
            CHECK(std::hypot(a.u - b.u, a.v - b.v) < 1e-10);
        }
    }
}

TEST_CASE("displayed constants cancel the closed form at the origin")
{
    for (const auto b : {HalfPlaneBranch::Case1, HalfPlaneBranch::Case2, HalfPlaneBranch::Case3,
             HalfPlaneBranch::Case4}) {
        const Complex total = half_plane_special_h_unnormalized(b, Complex{}) + half_plane_displayed_constant(b);
        CHECK(std::abs(total) < 1e-15);
    }
}

TEST_CASE("half-plane classification is exact")
{
    CHECK(classify_half_plane(q(1, 4)) == HalfPlaneBranch::Case1);
    CHECK(classify_half_plane(q(3, 4)) == HalfPlaneBranch::Case2);
    CHECK(classify_half_plane(q(5, 4)) == HalfPlaneBranch::Case3);
    CHECK(classify_half_plane(q(7, 4)) == HalfPlaneBranch::Case4);
    CHECK(classify_half_plane(Angle::radians(0.0)) == HalfPlaneBranch::General);
    CHECK(classify_half_plane(q(1, 2)) == HalfPlaneBranch::General);
    CHECK(kind_of([] { classify_half_plane(Angle::radians(0.7853981633974483)); }) == ErrorKind::IllConditioned);
    CHECK(kind_of([] { classify_half_plane(Angle::radians(pi / 4 - 1e-8)); }) == ErrorKind::IllConditioned);
    CHECK(kind_of([] { classify_half_plane(Angle::radians(-0.1)); }) == ErrorKind::BadParameter);
    CHECK(kind_of([] { classify_half_plane(q(2, 1)); }) == ErrorKind::BadParameter);
    CHECK_NOTHROW(classify_half_plane(Angle::radians(pi / 4 + 1e-4)));
}

TEST_CASE("strip parameter rules")
{
    CHECK(strip_is_right_angle(q(1, 2)));
    CHECK_FALSE(strip_is_right_angle(q(2, 3)));
    CHECK(kind_of([] { strip_is_right_angle(Angle::radians(pi / 2)); }) == ErrorKind::IllConditioned);
    CHECK(kind_of([] { strip_is_right_angle(q(1, 1)); }) == ErrorKind::BadParameter);
    CHECK(kind_of([] { strip_is_right_angle(q(1, 3)); }) == ErrorKind::BadParameter);
}

TEST_CASE("jun requires Im p > 0")
{
    CHECK(kind_of([] { DomainCase::jun({1.0, 0.0}).validate(); }) == ErrorKind::BadParameter);
    CHECK(kind_of([] { DomainCase::jun({1.0, -1.0}).validate(); }) == ErrorKind::BadParameter);
}

TEST_CASE("evaluation rejects points outside the disk")
{
    for (const auto& c : representative_cases())
        CHECK(kind_of([&] { evaluate(c, Complex{1.0, 0.0}); }) == ErrorKind::OutsideDisk);
}

TEST_CASE("special-gamma limit: general branch converges to the special formula")
{
    const Complex z{0.3, 0.2};
    struct Pair {
        Angle special;
        double base;
    };
    for (const Pair p : {Pair{q(1, 4), pi / 4}, Pair{q(3, 4), 3 * pi / 4}, Pair{q(5, 4), 5 * pi / 4},
             Pair{q(7, 4), 7 * pi / 4}}) {
        CAPTURE(p.special.to_string());
        const Complex target = eval_half_plane(p.special, z).f;
        double prev = INFINITY;
        for (const double eps : {1e-2, 1e-3, 1e-4}) {
            const double err = std::abs(eval_half_plane(Angle::radians(p.base + eps), z).f - target);
            CHECK(err < prev);
            CHECK(err < 10 * eps);
            prev = err;
        }
    }
}

TEST_CASE("residue coefficients")
{
    std::mt19937_64 rng(20261016);
    std::uniform_real_distribution<double> u(0.0, 2 * pi);
    int tested = 0;
    while (tested < 1000) {
        const Angle g = Angle::radians(u(rng));
        if (std::abs(g.times(2).cos()) < kHalfPlaneTau)
            continue;
        CHECK(residue_sum_residual(g) < 1e-14);
        ++tested;
    }
    // Partial fractions of h': d/dz Log(1 - a z) = -a/(1 - a z).
    const Angle g = Angle::radians(0.9);
    const ResidueCoeffs rc = residue_coeffs(g);
    const Complex e = g.unit();
    const Complex ec = std::conj(e);
    const Complex i{0.0, 1.0};
    for (const Complex z : halton_disk(50, 0.9, 1)) {
        const Complex pf = -rc.A * i * ec / (1.0 - i * ec * z) + rc.B * i * ec / (1.0 + i * ec * z) -
            rc.C * e / (1.0 - e * z) + rc.D / ((z - ec) * (z - ec));
        CHECK(std::abs(pf - half_plane_dh(g, z)) < 1e-12 * std::abs(half_plane_dh(g, z)));
    }
}

TEST_CASE("image membership on a dense sample")
{
    for (const auto& c : representative_cases()) {
        CAPTURE(c.describe());
        for (const Complex z : halton_disk(3000, 0.99, 0))
            CHECK(image_margin(c, evaluate(c, z).f) > 0.0);
    }
}

TEST_CASE("radial limits reach the boundary")
{
    // Half-plane gamma = 0 approaches -1/2 along the negative axis.
    CHECK(std::abs(evaluate(DomainCase::half_plane(Angle::radians(0.0)), Complex{-0.999, 0.0}).f.real() + 0.5) <
        5e-3);
    // Slit tip.
    CHECK(std::abs(evaluate(DomainCase::slit(), Complex{-0.9999, 0.0}).f.real() - kSlitTip) < 1e-3);
    // Strip alpha = pi/2 bounds are -pi/4, pi/4.
    const DomainCase s = DomainCase::strip(q(1, 2));
    CHECK(std::abs(evaluate(s, Complex{0.99999, 0.0}).f.real() - pi / 4) < 1e-3);
    CHECK(std::abs(evaluate(s, Complex{-0.99999, 0.0}).f.real() + pi / 4) < 1e-3);
}

TEST_CASE("family text round-trips")
{
    for (const Family f : {Family::SlantedHalfPlane, Family::VerticalStrip, Family::SingleSlit,
             Family::JunUpperHalfPlane})
        CHECK(parse_family(to_string(f)) == f);
    CHECK_THROWS_AS(parse_family("disk"), Error);
}
