#pragma once

#include <string>
#include <vector>

#include "nspline/dataset.hpp"

namespace nspline {

/// Canonical spline form: f(x) = sum_k coeffs[k] * rho_plus(x - knots[k]) +
/// poly(x), with rho_plus(u) = u_+^(gamma-1) / Gamma(gamma).  The coeffs are
/// then literally the Dirac weights of D^gamma{f}, so the seminorm is their
/// absolute sum.
struct CanonicalSpline {
    double gamma = 2.0;
    std::vector<double> knots;   // strictly increasing
    std::vector<double> coeffs;  // same length as knots
    std::vector<double> poly;    // ceil(gamma) coefficients, degree-major last

    CanonicalSpline() = default;
    CanonicalSpline(double gamma, std::vector<double> knots,
                    std::vector<double> coeffs, std::vector<double> poly);
};

double eval_spline(const CanonicalSpline& s, double x);

// Sum of |coeffs|, i.e. the total variation of D^(gamma-1){f} in measure norm.
double spline_seminorm(const CanonicalSpline& s);

/// Piecewise-linear interpolant (gamma = 2): knots at interior data sites
/// with nonzero slope change, linear continuation beyond the end points.
CanonicalSpline connect_the_dots(const Dataset& data);

/// Natural cubic interpolant (gamma = 4): zero second derivative at both end
/// knots, cubic continuation of the end segments, knots at interior data
/// sites carrying the third-derivative jumps.
CanonicalSpline natural_cubic(const Dataset& data);

// Text format: header "gamma nknots", nknots lines "knot coeff", poly line.
void save_spline(const CanonicalSpline& s, const std::string& path);
CanonicalSpline load_spline(const std::string& path);

}  // namespace nspline
