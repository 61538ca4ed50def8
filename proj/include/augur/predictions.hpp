#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "augur/random.hpp"

namespace augur {

// Ground truth paired with what the predictor said. The currency passed
// between prediction sources and the algorithms that consume them.
struct PredictedValue {
    double actual = 0.0;
    double predicted = 0.0;

    double abs_error() const { return predicted >= actual ? predicted - actual : actual - predicted; }
};

enum class NoiseKind {
    kExact,                 // predicted = actual
    kUniformMultiplicative, // uniform on [(1-alpha)*actual, (1+alpha)*actual]
    kExponentialMeanX,      // exponential with mean = actual
    kAdditiveUniform,       // actual + uniform on [-width, width], clamped at 0
    kAdversarialConstant,   // predicted = value, regardless of actual
};

// Synthetic prediction source. Deterministic given (seed, call order):
// two models constructed with the same seed emit bit-identical streams.
class NoiseModel {
  public:
    static NoiseModel exact();
    static NoiseModel uniform_multiplicative(double alpha, std::uint64_t seed);
    static NoiseModel exponential_mean_x(std::uint64_t seed);
    static NoiseModel additive_uniform(double width, std::uint64_t seed);
    static NoiseModel adversarial_constant(double value);

    PredictedValue predict(double actual);

    NoiseKind kind() const { return kind_; }
    double param() const { return param_; }

  private:
    NoiseModel(NoiseKind kind, double param, std::uint64_t seed)
        : kind_(kind), param_(param), rng_(seed) {}

    NoiseKind kind_;
    double param_;  // alpha, width, or the adversarial constant
    Rng rng_;
};

// Cost of an algorithm run against the offline optimum, with the prediction
// error both raw and normalized by OPT.
struct RatioReport {
    double algorithm_cost = 0.0;
    double opt_cost = 0.0;
    double ratio = 0.0;
    double error_eta = 0.0;
    double error_over_opt = 0.0;
};

RatioReport make_ratio_report(double algorithm_cost, double opt_cost, double error_eta);

// Aggregate l1 prediction error: sum of |predicted - actual|.
double eta_l1(std::span<const PredictedValue> pairs);

// Number of pairs ordered differently by the two permutations, counted in
// O(n log n) by merge counting. Both inputs must be permutations of the
// same index set; throws std::invalid_argument otherwise.
std::uint64_t count_inversions(std::span<const int> predicted_order,
                               std::span<const int> true_order);

// Sum over elements of |position in predicted_order - position in true_order|.
// The Diaconis-Graham companion of count_inversions.
std::uint64_t l1_displacement(std::span<const int> predicted_order,
                              std::span<const int> true_order);

}  // namespace augur
