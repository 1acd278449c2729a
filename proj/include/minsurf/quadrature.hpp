#pragma once

#include "minsurf/complex_kernel.hpp"
#include "minsurf/errors.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace minsurf {

inline constexpr std::size_t kGaussOrder = 16;
inline constexpr std::size_t kMaxQuadratureEvals = std::size_t{1} << 20;

/// Nodes on [-1, 1] and weights of the 16-point Gauss-Legendre rule,
/// computed once by Newton iteration on P_16.
struct GaussRule {
    std::array<double, kGaussOrder> nodes;
    std::array<double, kGaussOrder> weights;
};
const GaussRule& gauss_legendre_16();

struct QuadratureStats {
    std::size_t evaluations = 0;
    std::size_t panels = 0;
};

/// Integral of an analytic f along the straight segment from a to b.
///
/// Bisects the parameter interval until each panel's 16-point estimate and the
/// sum of its two halves differ by at most tol * (panel length fraction), so
/// the accumulated absolute error target is tol. Throws ToleranceNotMet once
/// the evaluation budget is spent.
template <class F>
Complex integrate_segment(F&& f, Complex a, Complex b, double tol, QuadratureStats* stats = nullptr,
    std::size_t max_evals = kMaxQuadratureEvals)
{
    if (!(tol > 0.0))
        throw Error(ErrorKind::BadParameter, "quadrature tolerance must be positive");
    const Complex span = b - a;
    if (span == Complex{})
        return {};

    const GaussRule& rule = gauss_legendre_16();
    std::size_t evals = 0;
    const auto panel = [&](double t0, double t1) {
        const double half = 0.5 * (t1 - t0);
        const double mid = 0.5 * (t1 + t0);
        Complex sum{};
        for (std::size_t k = 0; k < kGaussOrder; ++k)
            sum += rule.weights[k] * f(a + (mid + half * rule.nodes[k]) * span);
        evals += kGaussOrder;
        return sum * (half * span);
    };

    struct Pending {
        double t0;
        double t1;
        Complex estimate;
    };
    std::vector<Pending> stack;
    stack.push_back({0.0, 1.0, panel(0.0, 1.0)});
    Complex total{};
    std::size_t accepted = 0;
    while (!stack.empty()) {
        const Pending p = stack.back();
        stack.pop_back();
        const double tm = 0.5 * (p.t0 + p.t1);
        const Complex left = panel(p.t0, tm);
        const Complex right = panel(tm, p.t1);
        const Complex refined = left + right;
        if (std::abs(refined - p.estimate) <= tol * (p.t1 - p.t0)) {
            total += refined;
            ++accepted;
            continue;
        }
        if (evals >= max_evals)
            throw Error(ErrorKind::ToleranceNotMet, "quadrature evaluation budget exhausted");
        stack.push_back({tm, p.t1, right});
        stack.push_back({p.t0, tm, left});
    }
    if (stats) {
        stats->evaluations += evals;
        stats->panels += accepted;
    }
    return total;
}

/// Integral along the polyline through `vertices`, one segment at a time.
template <class F>
Complex integrate_polyline(F&& f, const std::vector<Complex>& vertices, double tol, QuadratureStats* stats = nullptr)
{
    Complex total{};
    if (vertices.size() < 2)
        return total;
    const double per_leg = tol / static_cast<double>(vertices.size() - 1);
    for (std::size_t k = 1; k < vertices.size(); ++k)
        total += integrate_segment(f, vertices[k - 1], vertices[k], per_leg, stats);
    return total;
}

} // namespace minsurf
