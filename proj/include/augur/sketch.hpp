#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "augur/random.hpp"

namespace augur {

// Count-Min sketch: r x c grid of counters, one seeded hash per row. Every
// update increments exactly one counter per row; a query takes the row-wise
// minimum, which can only overestimate the true count.
class CounterArray {
  public:
    CounterArray(std::size_t rows, std::size_t cols, std::uint64_t hash_seed);

    void update(std::uint64_t item, std::uint64_t delta = 1);
    std::uint64_t query(std::uint64_t item) const;

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint64_t total_updates() const { return total_updates_; }
    const std::vector<std::uint64_t>& counters() const { return counters_; }

  private:
    std::size_t cell(std::size_t row, std::uint64_t item) const {
        return row * cols_ + static_cast<std::size_t>(hash_item(item, row_seeds_[row]) % cols_);
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint64_t> counters_;   // row-major r*c
    std::vector<std::uint64_t> row_seeds_;  // one independent seed per row
    std::uint64_t total_updates_ = 0;       // number of update() calls
};

// Count-Min with predicted heavy hitters split out into exact dedicated
// counters. The predicted-heavy set is fixed at construction; everything
// else flows through the base sketch. Total space is rows*cols + heavy slots
// so space-matched comparisons against a plain sketch stay honest.
class LearnedSketch {
  public:
    LearnedSketch(std::size_t rows, std::size_t cols, std::uint64_t hash_seed,
                  const std::vector<std::uint64_t>& predicted_heavy);

    void update(std::uint64_t item, std::uint64_t delta = 1);
    std::uint64_t query(std::uint64_t item) const;

    std::size_t total_counters() const { return base_.rows() * base_.cols() + heavy_.size(); }
    const CounterArray& base() const { return base_; }
    std::size_t heavy_size() const { return heavy_.size(); }

  private:
    CounterArray base_;
    std::unordered_map<std::uint64_t, std::uint64_t> heavy_;
};

// Stream generator over items 1..N with P(i) proportional to i^-z.
class ZipfStream {
  public:
    ZipfStream(std::size_t universe, double exponent, std::uint64_t seed);

    std::uint64_t next();
    std::size_t universe() const { return cdf_.size(); }

  private:
    std::vector<double> cdf_;  // cumulative probabilities, cdf_.back() == 1
    Rng rng_;
};

}  // namespace augur
