#include "augur/predictions.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace augur {

NoiseModel NoiseModel::exact() { return NoiseModel(NoiseKind::kExact, 0.0, 0); }

NoiseModel NoiseModel::uniform_multiplicative(double alpha, std::uint64_t seed) {
    if (alpha < 0.0 || alpha >= 1.0) throw std::invalid_argument("alpha must be in [0, 1)");
    return NoiseModel(NoiseKind::kUniformMultiplicative, alpha, seed);
}

NoiseModel NoiseModel::exponential_mean_x(std::uint64_t seed) {
    return NoiseModel(NoiseKind::kExponentialMeanX, 0.0, seed);
}

NoiseModel NoiseModel::additive_uniform(double width, std::uint64_t seed) {
    if (width < 0.0) throw std::invalid_argument("width must be non-negative");
    return NoiseModel(NoiseKind::kAdditiveUniform, width, seed);
}

NoiseModel NoiseModel::adversarial_constant(double value) {
    if (value < 0.0) throw std::invalid_argument("adversarial constant must be non-negative");
    return NoiseModel(NoiseKind::kAdversarialConstant, value, 0);
}

PredictedValue NoiseModel::predict(double actual) {
    if (actual < 0.0) throw std::invalid_argument("actual must be non-negative");
    double predicted = actual;
    switch (kind_) {
        case NoiseKind::kExact:
            break;
        case NoiseKind::kUniformMultiplicative:
            // actual = 0 collapses the interval to {0}; still consumes one draw
            // so the stream stays aligned across inputs.
            predicted = rng_.uniform((1.0 - param_) * actual, (1.0 + param_) * actual);
            break;
        case NoiseKind::kExponentialMeanX:
            predicted = rng_.exponential(actual);
            break;
        case NoiseKind::kAdditiveUniform:
            predicted = std::max(0.0, actual + rng_.uniform(-param_, param_));
            break;
        case NoiseKind::kAdversarialConstant:
            predicted = param_;
            break;
    }
    return PredictedValue{actual, predicted};
}

RatioReport make_ratio_report(double algorithm_cost, double opt_cost, double error_eta) {
    if (opt_cost <= 0.0) throw std::invalid_argument("opt_cost must be positive");
    RatioReport r;
    r.algorithm_cost = algorithm_cost;
    r.opt_cost = opt_cost;
    r.ratio = algorithm_cost / opt_cost;
    r.error_eta = error_eta;
    r.error_over_opt = error_eta / opt_cost;
    return r;
}

double eta_l1(std::span<const PredictedValue> pairs) {
    double sum = 0.0;
    for (const auto& p : pairs) sum += p.abs_error();
    return sum;
}

namespace {

// Positions of each value in `order`; throws if values repeat.
std::unordered_map<int, std::size_t> position_index(std::span<const int> order) {
    std::unordered_map<int, std::size_t> pos;
    pos.reserve(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (!pos.emplace(order[i], i).second)
            throw std::invalid_argument("order contains a repeated element");
    }
    return pos;
}

// Translate predicted_order through true_order's positions, giving a
// permutation of 0..n-1 whose inversions are exactly the discordant pairs.
std::vector<std::size_t> relative_ranks(std::span<const int> predicted_order,
                                        std::span<const int> true_order) {
    if (predicted_order.size() != true_order.size())
        throw std::invalid_argument("orders differ in length");
    auto pos = position_index(true_order);
    std::vector<std::size_t> ranks;
    ranks.reserve(predicted_order.size());
    std::unordered_map<int, bool> seen;
    for (int v : predicted_order) {
        auto it = pos.find(v);
        if (it == pos.end())
            throw std::invalid_argument("orders are not permutations of the same set");
        if (seen[v]) throw std::invalid_argument("order contains a repeated element");
        seen[v] = true;
        ranks.push_back(it->second);
    }
    return ranks;
}

std::uint64_t merge_count(std::vector<std::size_t>& a, std::vector<std::size_t>& scratch,
                          std::size_t lo, std::size_t hi) {
    if (hi - lo <= 1) return 0;
    std::size_t mid = lo + (hi - lo) / 2;
    std::uint64_t inv = merge_count(a, scratch, lo, mid) + merge_count(a, scratch, mid, hi);
    std::size_t i = lo, j = mid, k = lo;
    while (i < mid && j < hi) {
        if (a[i] <= a[j]) {
            scratch[k++] = a[i++];
        } else {
            inv += mid - i;
            scratch[k++] = a[j++];
        }
    }
    while (i < mid) scratch[k++] = a[i++];
    while (j < hi) scratch[k++] = a[j++];
    std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo),
              scratch.begin() + static_cast<std::ptrdiff_t>(hi),
              a.begin() + static_cast<std::ptrdiff_t>(lo));
    return inv;
}

}  // namespace

std::uint64_t count_inversions(std::span<const int> predicted_order,
                               std::span<const int> true_order) {
    auto ranks = relative_ranks(predicted_order, true_order);
    std::vector<std::size_t> scratch(ranks.size());
    return merge_count(ranks, scratch, 0, ranks.size());
}

std::uint64_t l1_displacement(std::span<const int> predicted_order,
                              std::span<const int> true_order) {
    auto ranks = relative_ranks(predicted_order, true_order);
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < ranks.size(); ++i)
        sum += ranks[i] >= i ? ranks[i] - i : i - ranks[i];
    return sum;
}

}  // namespace augur
