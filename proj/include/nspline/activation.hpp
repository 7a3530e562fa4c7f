#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nspline {

/// Piecewise power function: alpha*x^(gamma-1) for x < 0, beta*x^(gamma-1)
/// for x >= 0.  ReLU is (0,1,2), leaky ReLU is (a,1,2), the truncated cubic
/// power is (0,1,4).  The order gamma controls which derivative operator the
/// function is a Green's function of.
class PowerActivation {
public:
    // Throws input_error on alpha == beta, gamma < 1, or a fractional order
    // with a nonzero left branch (not real-valued there).
    PowerActivation(double alpha, double beta, double gamma);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double gamma() const { return gamma_; }
    bool integer_order() const { return integer_order_; }

    double eval(double x) const;
    double eval_derivative(double x) const;

    // |w|^(gamma-1): the factor with rho(w*x) = factor * rho(sgn(w)*x).
    double homogeneity_factor(double w) const;

    // g(w) = w^gamma, the dilation factor of the operator D^gamma.
    double operator_dilation_factor(double w) const;

    // c_rho = (beta - alpha) * Gamma(gamma): D^gamma{rho} = c_rho * delta,
    // after removing the polynomial part.  Converts path-norm units into
    // measure-norm units.
    double green_constant() const;

    // Mirror image: returns (act', s) with rho(-x) = rho_act'(x) and the
    // Dirac sign flip s = (-1)^gamma used when canonicalizing w < 0 neurons.
    // Integer order only.
    std::pair<PowerActivation, int> reflect() const;

private:
    double alpha_;
    double beta_;
    double gamma_;
    bool integer_order_;
    long long gamma_int_;  // valid when integer_order_
};

// Parses "relu", "leaky_relu:A", "tpow:G", or a literal "alpha,beta,gamma".
PowerActivation parse_activation(const std::string& text);

struct AdmissibilityReport {
    bool admissible = false;
    std::optional<PowerActivation> fitted;
    double gamma_estimate = 0.0;
    double max_residual = 0.0;
    std::string rejection_reason;
};

/// Classifies sampled function values (x_i, rho(x_i)) as power-activation or
/// not: log-log line fit on each branch, order estimate from the slope, and
/// a dilation-equation cross check.  Samples must cover both signs of x and
/// at least a decade of magnitudes on the positive side.
AdmissibilityReport check_admissibility(const std::vector<double>& xs,
                                        const std::vector<double>& ys,
                                        double tolerance = 1e-6);

}  // namespace nspline
