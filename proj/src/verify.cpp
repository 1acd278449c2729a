#include "minsurf/verify.hpp"

#include "minsurf/errors.hpp"
#include "minsurf/format.hpp"
#include "minsurf/quadrature.hpp"
#include "minsurf/weierstrass.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

namespace minsurf {

namespace {

constexpr double kStrictlyPositive = -std::numeric_limits<double>::min();

CheckResult make_check(std::string name, double residual, double threshold, std::string detail = {})
{
    CheckResult r;
    r.name = std::move(name);
    r.max_residual = residual;
    r.threshold = threshold;
    r.pass = residual <= threshold;
    r.detail = std::move(detail);
    return r;
}

std::string at_point(Complex z)
{
    return "worst at z=" + format_real(z.real()) + "," + format_real(z.imag());
}

// A failing identity must not abort the campaign: any evaluation error is
// recorded as an infinite residual.
template <class Fn>
CheckResult guarded(const std::string& name, double threshold, Fn&& fn)
{
    try {
        return fn();
    } catch (const Error& e) {
        return make_check(name, std::numeric_limits<double>::infinity(), threshold,
            std::string(to_string(e.kind())) + ": " + e.what());
    }
}

struct Worst {
    double value = -std::numeric_limits<double>::infinity();
    Complex z{};

    void update(double v, Complex at)
    {
        if (!(v <= value)) {
            value = v;
            z = at;
        }
    }
};

std::array<double, 3> coords(const SurfacePoint& p) { return {p.u, p.v, p.F}; }

} // namespace

bool VerificationReport::all_pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* VerificationReport::find(const std::string& name) const
{
    for (const auto& c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

std::string VerificationReport::to_text() const
{
    std::ostringstream os;
    os << "case: " << domain.describe() << '\n';
    os << "grid: " << grid.describe() << '\n';
    os << "seed: " << seed << '\n';
    for (const auto& c : checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name << "  residual=" << format_real(c.max_residual)
           << "  threshold=" << format_real(c.threshold);
        if (!c.detail.empty())
            os << "  (" << c.detail << ")";
        os << '\n';
    }
    os << "elapsed: " << format_real(elapsed_seconds) << " s\n";
    os << (all_pass() ? "all checks passed" : "some checks FAILED") << '\n';
    return os.str();
}

CheckResult check_dilatation(const DomainCase& c, const std::vector<Complex>& pts)
{
    return guarded("dilatation", kDilatationThreshold, [&] {
        Worst w;
        for (const Complex z : pts) {
            const MapEval m = evaluate(c, z);
            w.update(std::abs(m.dg - z * z * m.dh) / std::abs(m.dh), z);
        }
        return make_check("dilatation", w.value, kDilatationThreshold, at_point(w.z));
    });
}

CheckResult check_oracle(const DomainCase& c, const std::vector<Complex>& pts, char component, ErrorScale scale)
{
    const std::string name = std::string("oracle_") + component;
    return guarded(name, kOracleThreshold, [&] {
        const MapEval m0 = evaluate(c, Complex{});
        QuadratureStats stats;
        Worst w;
        for (const Complex z : pts) {
            const MapEval m = evaluate(c, z);
            Complex closed;
            std::function<Complex(Complex)> integrand;
            switch (component) {
            case 'h':
                closed = m.h - m0.h;
                integrand = [&](Complex t) { return evaluate_dh(c, t); };
                break;
            case 'g':
                closed = m.g - m0.g;
                integrand = [&](Complex t) { return t * t * evaluate_dh(c, t); };
                break;
            case 'F': {
                // Scale by the complex potential: Re can cancel to ~0 while
                // the integrand is large.
                closed = sign_factor(c.sign) * height_potential(c, z);
                const double s = sign_factor(c.sign);
                integrand = [&, s](Complex t) { return s * Complex{0.0, 2.0} * t * evaluate_dh(c, t); };
                break;
            }
            default: throw Error(ErrorKind::BadParameter, "oracle component must be h, g or F");
            }
            const double size = scale == ErrorScale::Mixed ? std::max(1.0, std::abs(closed)) : 1.0;
            const Complex q = integrate_segment(integrand, Complex{}, z, kOracleQuadratureTol * size, &stats);
            const double err = component == 'F' ? std::abs(height_F(c, z) - q.real()) : std::abs(closed - q);
            w.update(err / size, z);
        }
        return make_check(name, w.value, kOracleThreshold,
            std::string(scale == ErrorScale::Mixed ? "error / max(1, |value|)" : "absolute error") + "; " +
                at_point(w.z) + "; " + std::to_string(pts.size()) + " points, " + std::to_string(stats.evaluations) +
                " integrand evaluations");
    });
}

CheckResult check_conformality(const DomainCase& c, const std::vector<Complex>& pts)
{
    return guarded("conformality", kConformalityThreshold, [&] {
        Worst w;
        for (const Sign s : {Sign::plus, Sign::minus}) {
            DomainCase cs = c;
            cs.sign = s;
            for (const Complex z : pts)
                w.update(phi_triple(cs, z).conformality_residual(), z);
        }
        return make_check("conformality", w.value, kConformalityThreshold, "both signs; " + at_point(w.z));
    });
}

CheckResult check_image_membership(const DomainCase& c, const std::vector<Complex>& pts)
{
    return guarded("image_membership", kStrictlyPositive, [&] {
        Worst w;
        for (const Complex z : pts)
            w.update(-image_margin(c, evaluate(c, z).f), z);
        return make_check("image_membership", w.value, kStrictlyPositive,
            "min margin " + format_real(-w.value) + "; " + at_point(w.z));
    });
}

CheckResult check_jacobian(const DomainCase& c, const std::vector<Complex>& pts)
{
    return guarded("jacobian", kStrictlyPositive, [&] {
        Worst w;
        for (const Complex z : pts) {
            const MapEval m = evaluate(c, z);
            w.update(-(std::norm(m.dh) - std::norm(m.dg)), z);
        }
        return make_check("jacobian", w.value, kStrictlyPositive,
            "min J " + format_real(-w.value) + "; " + at_point(w.z));
    });
}

double laplacian_convergence_slope(const DomainCase& c, double radius)
{
    constexpr std::array<double, 3> steps{1e-2, 5e-3, 2.5e-3};
    constexpr int samples = 8;
    std::array<std::array<double, 3>, 3> rms{}; // [step][coordinate]
    for (std::size_t k = 0; k < steps.size(); ++k) {
        const double s = steps[k];
        std::array<double, 3> acc{};
        for (int j = 0; j < samples; ++j) {
            const Complex z = std::polar(radius, 2.0 * std::numbers::pi * (j + 0.5) / samples);
            const auto c0 = coords(surface_point(c, z));
            const auto e = coords(surface_point(c, z + s));
            const auto w = coords(surface_point(c, z - s));
            const auto n = coords(surface_point(c, z + Complex{0.0, s}));
            const auto so = coords(surface_point(c, z - Complex{0.0, s}));
            for (int q = 0; q < 3; ++q) {
                const double lap = (e[q] + w[q] + n[q] + so[q] - 4.0 * c0[q]) / (s * s);
                acc[q] += lap * lap;
            }
        }
        for (int q = 0; q < 3; ++q)
            rms[k][q] = std::sqrt(acc[q] / samples);
    }
    double worst = std::numeric_limits<double>::infinity();
    for (int q = 0; q < 3; ++q) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t k = 0; k < steps.size(); ++k) {
            const double x = std::log(steps[k]);
            const double y = std::log(rms[k][q]);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double m = static_cast<double>(steps.size());
        const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
        worst = std::min(worst, std::isfinite(slope) ? slope : -std::numeric_limits<double>::infinity());
    }
    return worst;
}

CheckResult check_harmonicity(const DomainCase& c, double r_max)
{
    constexpr double threshold = 2.0 - kHarmonicSlopeMin;
    return guarded("harmonicity", threshold, [&] {
        const double slope = laplacian_convergence_slope(c, 0.5 * r_max);
        return make_check("harmonicity", 2.0 - slope, threshold,
            "min log-log slope " + format_real(slope) + " over u, v, F");
    });
}

CheckResult check_isothermal(const DomainCase& c, const std::vector<Complex>& pts)
{
    return guarded("isothermal", kIsothermalThreshold, [&] {
        Worst w;
        for (const Complex z : pts) {
            // Derivatives grow like (1 - |z|)^-k near the rim, so the step
            // shrinks with the distance to it.
            const double s = kIsothermalStep * (1.0 - std::abs(z));
            const auto e = coords(surface_point(c, z + s));
            const auto wst = coords(surface_point(c, z - s));
            const auto n = coords(surface_point(c, z + Complex{0.0, s}));
            const auto so = coords(surface_point(c, z - Complex{0.0, s}));
            double xx = 0, yy = 0, xy = 0;
            for (int q = 0; q < 3; ++q) {
                const double dx = (e[q] - wst[q]) / (2 * s);
                const double dy = (n[q] - so[q]) / (2 * s);
                xx += dx * dx;
                yy += dy * dy;
                xy += dx * dy;
            }
            const double scale = xx + yy;
            w.update(std::max(std::abs(xx - yy), std::abs(xy)) / scale, z);
        }
        return make_check("isothermal", w.value, kIsothermalThreshold,
            "relative to |X_x|^2+|X_y|^2, step 1e-4 (1-|z|); " + at_point(w.z));
    });
}

CheckResult check_reflection(const DomainCase& c, const std::vector<Complex>& pts)
{
    return guarded("reflection", kReflectionThreshold, [&] {
        Worst w;
        for (const Complex z : pts) {
            const Complex f = evaluate(c, z).f;
            const Complex fr = evaluate(c, std::conj(z)).f;
            w.update(std::abs(fr - std::conj(f)) / std::max(1.0, std::abs(f)), z);
        }
        return make_check("reflection", w.value, kReflectionThreshold, "f(conj z) vs conj f(z); " + at_point(w.z));
    });
}

double residue_sum_residual(const Angle& gamma)
{
    const ResidueCoeffs rc = residue_coeffs(gamma);
    const double scale = std::max(1.0, std::abs(rc.A) + std::abs(rc.B) + std::abs(rc.C));
    return std::abs(rc.A + rc.B + rc.C) / scale;
}

CheckResult check_residue_sum(const Angle& gamma)
{
    return guarded("residue_sum", kResidueThreshold, [&] {
        const ResidueCoeffs rc = residue_coeffs(gamma);
        return make_check("residue_sum", residue_sum_residual(gamma), kResidueThreshold,
            "|A+B+C| = " + format_real(std::abs(rc.A + rc.B + rc.C)));
    });
}

CheckResult check_theorem_uv(const DomainCase& c, const std::vector<Complex>& pts)
{
    return guarded("theorem_uv", kTheoremThreshold, [&] {
        const PlanePoint off = theorem_uv_offset(c);
        Worst w;
        double worst_abs = 0.0;
        for (const Complex z : pts) {
            const PlanePoint t = theorem_uv(c, z);
            const Complex f = evaluate(c, z).f;
            const double err = std::hypot(t.u - off.u - f.real(), t.v - off.v - f.imag());
            worst_abs = std::max(worst_abs, err);
            w.update(err / std::max(1.0, std::abs(f)), z);
        }
        return make_check("theorem_uv", w.value, kTheoremThreshold,
            "error / max(1, |f|), absolute max " + format_real(worst_abs) + "; offset " + format_real(off.u) + "," +
                format_real(off.v) + "; " + at_point(w.z));
    });
}

std::size_t injectivity_smoke(const DomainCase& c, std::size_t n, double r_max, unsigned long seed)
{
    if (n > kInjectivityMaxSamples)
        throw Error(ErrorKind::BadParameter, "injectivity sample count must be <= 100000");
    struct Sample {
        Complex z;
        Complex f;
    };
    std::vector<Sample> s;
    s.reserve(n);
    for (const Complex z : halton_disk(n, r_max, seed))
        s.push_back({z, evaluate(c, z).f});
    std::sort(s.begin(), s.end(), [](const Sample& a, const Sample& b) { return a.f.real() < b.f.real(); });
    constexpr double image_eps = 1e-9;
    constexpr double param_eps = 1e-6;
    std::size_t collisions = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size() && s[j].f.real() - s[i].f.real() < image_eps; ++j)
            if (std::abs(s[j].f - s[i].f) < image_eps && std::abs(s[j].z - s[i].z) > param_eps)
                ++collisions;
    return collisions;
}

VerificationReport run_campaign(const DomainCase& c, const GridSpec& grid, unsigned long seed)
{
    c.validate();
    grid.validate();
    if (grid.r_max > 0.99)
        throw Error(ErrorKind::BadParameter, "campaign grid r_max must be <= 0.99");

    const auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.domain = c;
    rep.grid = grid;
    rep.seed = seed;

    const std::vector<Complex> pts = polar_grid(grid);

    rep.checks.push_back(check_dilatation(c, pts));
    for (const char comp : {'h', 'g', 'F'})
        rep.checks.push_back(check_oracle(c, pts, comp, ErrorScale::Mixed));
    rep.checks.push_back(check_conformality(c, pts));
    rep.checks.push_back(check_image_membership(c, pts));
    rep.checks.push_back(check_jacobian(c, pts));
    rep.checks.push_back(check_harmonicity(c, grid.r_max));
    rep.checks.push_back(check_isothermal(c, pts));
    if (c.family == Family::VerticalStrip || c.family == Family::SingleSlit)
        rep.checks.push_back(check_reflection(c, pts));
    if (c.family == Family::SlantedHalfPlane && classify_half_plane(c.gamma) == HalfPlaneBranch::General)
        rep.checks.push_back(check_residue_sum(c.gamma));
    rep.checks.push_back(check_theorem_uv(c, pts));
    rep.checks.push_back(guarded("injectivity_smoke", 0.0, [&] {
        const std::size_t hits = injectivity_smoke(c, kInjectivitySamples, grid.r_max, seed);
        return make_check("injectivity_smoke", static_cast<double>(hits), 0.0,
            std::to_string(kInjectivitySamples) + " Halton samples, seed " + std::to_string(seed));
    }));

    rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

} // namespace minsurf
