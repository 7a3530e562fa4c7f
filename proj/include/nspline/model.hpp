#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nspline/activation.hpp"
#include "nspline/dataset.hpp"
#include "nspline/spline.hpp"

namespace nspline {

enum class RegKind : int;  // defined in regularizers.hpp

/// Single-hidden-layer network f(x) = sum_k v[k] * rho(w[k]*x - b[k]) +
/// poly(x), where poly has ceil(gamma) coefficients (the generalized bias;
/// a skip connection u*x + s when gamma = 2).
struct NetworkParams {
    PowerActivation activation;
    std::vector<double> v;     // output weights
    std::vector<double> w;     // input weights, all nonzero
    std::vector<double> b;     // input biases
    std::vector<double> poly;  // null-space polynomial, ceil(gamma) coeffs

    // Validates shapes, w != 0, w > 0 for fractional orders.
    NetworkParams(PowerActivation act, std::vector<double> v,
                  std::vector<double> w, std::vector<double> b,
                  std::vector<double> poly);

    std::size_t width() const { return v.size(); }
    std::size_t null_space_dim() const { return poly.size(); }
};

struct Gradient {
    std::vector<double> dv, dw, db, dpoly;
};

// Null-space dimension of D^gamma: ceil(gamma).
std::size_t null_space_dim(double gamma);

double forward(const NetworkParams& params, double x);

/// Exact gradient of  sum_n (y_n - f(x_n))^2 + lambda * R(theta),
/// R per reg kind (a subgradient for the path-norm term).
Gradient gradient(const NetworkParams& params, const Dataset& data,
                  double lambda, RegKind reg);

// Neuron k -> (v/t^(gamma-1), t*w, t*b); the function is unchanged for t > 0.
NetworkParams rescale_neuron(const NetworkParams& params, std::size_t k, double t);

/// Rescales every neuron so |v_k| = |w_k|^(gamma-1); afterwards the
/// weight-decay and path-norm values coincide.  Neurons with v = 0 are left
/// alone.
NetworkParams balance(const NetworkParams& params);

/// Merges neurons with coinciding (w, b) pairs by summing their v and drops
/// neurons whose v vanished.
NetworkParams reduce(const NetworkParams& params, double pair_tol = 1e-12);

/// Rewrites the network as a canonical spline: one signed Dirac atom of
/// weight v_k * g(w_k)/|w_k| * green_constant at each knot b_k/w_k, with all
/// polynomial remainders (left branches, reflected w < 0 neurons, the
/// generalized bias) folded into the null-space polynomial.  Atoms on
/// coinciding knots merge by signed summation.
/// knot_merge_tol < 0 selects the default 1e-9 * (knot spread).
CanonicalSpline to_canonical_spline(const NetworkParams& params,
                                    double knot_merge_tol = -1.0);

// Text format: header "gamma alpha beta K", K lines "v w b", one poly line.
// 17 significant digits, exact decimal round trip.
void save_network(const NetworkParams& params, const std::string& path);
NetworkParams load_network(const std::string& path);

}  // namespace nspline
