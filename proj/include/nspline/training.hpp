#pragma once

#include <cstdint>
#include <vector>

#include "nspline/dataset.hpp"
#include "nspline/model.hpp"
#include "nspline/regularizers.hpp"

namespace nspline {

struct TrainConfig {
    std::size_t width = 200;
    double lambda = 1e-5;
    RegKind reg = RegKind::weight_decay;
    double learning_rate = 0.01;
    std::size_t epochs = 100000;
    bool full_batch = true;  // mini-batching is out of scope; kept explicit
    std::uint64_t seed = 1;
    PowerActivation activation{0.0, 1.0, 2.0};
    double init_scale = 2.0;
    std::size_t log_every = 0;  // 0 = silent; else CSV lines on stderr

    void validate() const;  // throws input_error on bad values
};

struct EpochRecord {
    double data_loss;
    double reg_value;
    double objective;
};

using TrainHistory = std::vector<EpochRecord>;

struct TrainResult {
    NetworkParams params;
    TrainHistory history;
};

/// Deterministic initialization: w uniform on [-init_scale, init_scale]
/// (positive only for fractional orders), biases placed so the knots b/w
/// cover the data range uniformly at random, v uniform on
/// [-init_scale/sqrt(K), init_scale/sqrt(K)], polynomial zero.
NetworkParams init_network(const TrainConfig& config, const Dataset& data);

struct AdagradState {
    std::vector<double> gv, gw, gb, gpoly;  // accumulated squared gradients
    explicit AdagradState(const NetworkParams& params);
};

// G += g^2; p -= lr * g / (sqrt(G) + eps), per coordinate.
void adagrad_step(NetworkParams& params, AdagradState& state,
                  const Gradient& grad, double learning_rate,
                  double epsilon = 1e-10);

double loss(const NetworkParams& params, const Dataset& data, double lambda,
            RegKind reg);

/// Full-batch AdaGrad on the regularized squared-error objective.  Throws
/// numerical_error naming the epoch if the objective leaves the finite range.
TrainResult train(const TrainConfig& config, const Dataset& data);

}  // namespace nspline
