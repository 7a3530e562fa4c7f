#pragma once

#include "nspline/model.hpp"

namespace nspline {

enum class RegKind : int {
    weight_decay = 0,
    path_norm = 1,
    none = 2,
};

// sum_k |v_k| * |w_k|^(gamma-1), the path norm matched to the activation.
double path_norm(const NetworkParams& params);

// 1/2 * sum_k (v_k^2 + |w_k|^(2*gamma-2)); >= path_norm, equal after balance.
double weight_decay(const NetworkParams& params);

// sum_k |v_k| * |g(w_k)| / |w_k|; identical to path_norm for power
// activations, kept as the independent algebraic route.
double theorem_objective(const NetworkParams& params);

/// The true seminorm ||D^gamma f||_M: absolute coefficient sum of the
/// canonical spline of the reduced network.  At most
/// |green_constant| * path_norm, with equality when no knots collide.
double seminorm_of_network(const NetworkParams& params);

}  // namespace nspline
