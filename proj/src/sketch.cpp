#include "augur/sketch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace augur {

CounterArray::CounterArray(std::size_t rows, std::size_t cols, std::uint64_t hash_seed)
    : rows_(rows), cols_(cols), counters_(rows * cols, 0) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("sketch dimensions must be >= 1");
    row_seeds_.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i) row_seeds_.push_back(derive_seed(hash_seed, i));
}

void CounterArray::update(std::uint64_t item, std::uint64_t delta) {
    if (delta == 0) throw std::invalid_argument("delta must be >= 1");
    for (std::size_t row = 0; row < rows_; ++row) counters_[cell(row, item)] += delta;
    ++total_updates_;
}

std::uint64_t CounterArray::query(std::uint64_t item) const {
    std::uint64_t est = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t row = 0; row < rows_; ++row) est = std::min(est, counters_[cell(row, item)]);
    return est;
}

LearnedSketch::LearnedSketch(std::size_t rows, std::size_t cols, std::uint64_t hash_seed,
                             const std::vector<std::uint64_t>& predicted_heavy)
    : base_(rows, cols, hash_seed) {
    heavy_.reserve(predicted_heavy.size());
    for (std::uint64_t item : predicted_heavy) heavy_.emplace(item, 0);
}

void LearnedSketch::update(std::uint64_t item, std::uint64_t delta) {
    if (delta == 0) throw std::invalid_argument("delta must be >= 1");
    auto it = heavy_.find(item);
    if (it != heavy_.end())
        it->second += delta;
    else
        base_.update(item, delta);
}

std::uint64_t LearnedSketch::query(std::uint64_t item) const {
    auto it = heavy_.find(item);
    return it != heavy_.end() ? it->second : base_.query(item);
}

ZipfStream::ZipfStream(std::size_t universe, double exponent, std::uint64_t seed)
    : rng_(seed) {
    if (universe == 0) throw std::invalid_argument("universe must be >= 1");
    if (exponent <= 0.0) throw std::invalid_argument("exponent must be positive");
    cdf_.resize(universe);
    double total = 0.0;
    for (std::size_t i = 0; i < universe; ++i) {
        total += std::pow(static_cast<double>(i + 1), -exponent);
        cdf_[i] = total;
    }
    for (double& v : cdf_) v /= total;
    cdf_.back() = 1.0;
}

std::uint64_t ZipfStream::next() {
    double u = rng_.uniform();
    auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
    return static_cast<std::uint64_t>(it - cdf_.begin()) + 1;
}

}  // namespace augur
