#pragma once

#include "minsurf/grid.hpp"
#include "minsurf/mappings.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace minsurf {

struct CheckResult {
    std::string name;
    double max_residual = 0.0;
    double threshold = 0.0;
    bool pass = false; ///< max_residual <= threshold
    std::string detail;
};

struct VerificationReport {
    DomainCase domain;
    GridSpec grid;
    std::vector<CheckResult> checks;
    double elapsed_seconds = 0.0;
    unsigned long seed = 0;

    bool all_pass() const;
    const CheckResult* find(const std::string& name) const;
    std::string to_text() const;
};

inline constexpr double kDilatationThreshold = 1e-12;
inline constexpr double kOracleThreshold = 1e-9;
inline constexpr double kOracleQuadratureTol = 1e-10;
inline constexpr double kConformalityThreshold = 1e-10;
inline constexpr double kIsothermalThreshold = 1e-6;
/// Central-difference step is kIsothermalStep * (1 - |z|).
inline constexpr double kIsothermalStep = 1e-4;
inline constexpr double kReflectionThreshold = 1e-12;
inline constexpr double kResidueThreshold = 1e-14;
inline constexpr double kTheoremThreshold = 1e-10;
inline constexpr double kHarmonicSlopeMin = 1.9;
inline constexpr std::size_t kInjectivitySamples = 2000;
inline constexpr std::size_t kInjectivityMaxSamples = 100000;

// Individual checks, each over the polar grid.
CheckResult check_dilatation(const DomainCase& c, const std::vector<Complex>& pts);
/// Absolute: |closed - quadrature|. Mixed: the same divided by
/// max(1, |closed|), with the quadrature tolerance scaled alike.
enum class ErrorScale { Absolute, Mixed };
/// component 'h', 'g' or 'F'
CheckResult check_oracle(const DomainCase& c, const std::vector<Complex>& pts, char component,
    ErrorScale scale = ErrorScale::Mixed);
CheckResult check_conformality(const DomainCase& c, const std::vector<Complex>& pts);
CheckResult check_image_membership(const DomainCase& c, const std::vector<Complex>& pts);
CheckResult check_jacobian(const DomainCase& c, const std::vector<Complex>& pts);
CheckResult check_harmonicity(const DomainCase& c, double r_max);
CheckResult check_isothermal(const DomainCase& c, const std::vector<Complex>& pts);
CheckResult check_reflection(const DomainCase& c, const std::vector<Complex>& pts);
CheckResult check_residue_sum(const Angle& gamma);
CheckResult check_theorem_uv(const DomainCase& c, const std::vector<Complex>& pts);

/// Scale-free residual of the identity A + B + C = 0.
double residue_sum_residual(const Angle& gamma);

/// Least-squares slope of log RMS(5-point Laplacian) against log step for
/// u, v and F; the smallest of the three is returned.
double laplacian_convergence_slope(const DomainCase& c, double radius);

/// Pairs of Halton samples in |z| <= r_max whose images are closer than 1e-9
/// while the samples are more than 1e-6 apart. n <= 1e5.
std::size_t injectivity_smoke(const DomainCase& c, std::size_t n, double r_max = 0.95, unsigned long seed = 0);

/// Never throws for a failing identity: every check runs and is recorded.
/// Parameter errors propagate. Requires grid.r_max <= 0.99.
VerificationReport run_campaign(const DomainCase& c, const GridSpec& grid = {}, unsigned long seed = 0);

} // namespace minsurf
