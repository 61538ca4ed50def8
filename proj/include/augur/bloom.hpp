#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "augur/random.hpp"

namespace augur {

// Plain Bloom filter: m bits, k seeded hash functions. Inserted elements
// always query true; non-members pass with probability near
// (1 - e^{-kn/m})^k.
class BloomFilter {
  public:
    BloomFilter(std::size_t bits, std::size_t hash_count, std::uint64_t hash_seed);

    void insert(std::uint64_t element);
    bool query(std::uint64_t element) const;

    std::size_t bit_count() const { return bits_.size(); }
    std::size_t hash_count() const { return hash_count_; }
    std::uint64_t inserted() const { return inserted_; }
    // Fraction of set bits.
    double fill_fraction() const;

  private:
    std::size_t slot(std::uint64_t element, std::size_t i) const {
        return static_cast<std::size_t>(hash_item(element, hash_seeds_[i]) % bits_.size());
    }

    std::vector<bool> bits_;
    std::size_t hash_count_;
    std::vector<std::uint64_t> hash_seeds_;
    std::uint64_t inserted_ = 0;
};

// Predicted false-positive rate (1 - e^{-kn/m})^k of an m-bit, k-hash filter
// holding n elements.
double fpr_theoretical(double bits, double stored, double hash_count);

// Hash count minimizing the predicted FPR at a given bits-per-key budget:
// (m/n) ln 2 rounded to the nearest integer >= 1.
std::size_t optimal_hash_count(double bits_per_key);

// Membership scorer f: element -> [0, 1]. `representation_size_bits` is
// self-reported, letting space comparisons include the model's footprint.
struct ScoreFunction {
    std::function<double(std::uint64_t)> scorer;
    std::size_t representation_size_bits = 0;

    double operator()(std::uint64_t element) const { return scorer(element); }
};

// Synthetic scorer with closed-form Beta score distributions: members draw
// scores from Beta(a, 1) (quantile u^{1/a}, skewed high) and everything else
// from Beta(1, b) (quantile 1 - (1-u)^{1/b}, skewed low). Deterministic per
// element via a seeded hash.
ScoreFunction synthetic_scorer(const std::vector<std::uint64_t>& members, double member_shape,
                               double nonmember_shape, std::uint64_t seed,
                               std::size_t representation_size_bits = 0);

// Score threshold that makes f(x) >= tau cover at least `coverage` of the
// construction set (the rest lands in the backup filter).
double threshold_for_coverage(const std::vector<std::uint64_t>& set, const ScoreFunction& score,
                              double coverage);

// Learned Bloom filter: score >= tau answers yes directly; scorer rejects
// are caught by a backup filter over {x in S : f(x) < tau}, so construction
// elements never query false.
class LearnedBloom {
  public:
    LearnedBloom(const std::vector<std::uint64_t>& set, ScoreFunction score, double threshold,
                 double backup_bits_per_key, std::uint64_t hash_seed);

    bool query(std::uint64_t element) const;

    double threshold() const { return threshold_; }
    std::size_t backup_set_size() const { return backup_set_size_; }
    const BloomFilter& backup() const { return backup_; }
    // Filter bits plus the scorer's self-reported size.
    std::size_t total_bits() const { return backup_.bit_count() + score_.representation_size_bits; }

  private:
    ScoreFunction score_;
    double threshold_;
    std::size_t backup_set_size_;
    BloomFilter backup_;
};

// Sandwiched variant: an initial filter over all of S screens out most true
// negatives before they reach the scorer; the backup again repairs the
// scorer's false negatives.
class SandwichedBloom {
  public:
    SandwichedBloom(const std::vector<std::uint64_t>& set, double initial_bits_per_key,
                    ScoreFunction score, double threshold, double backup_bits_per_key,
                    std::uint64_t hash_seed);

    bool query(std::uint64_t element) const;

    std::size_t backup_set_size() const { return backup_set_size_; }
    const BloomFilter& initial() const { return initial_; }
    const BloomFilter& backup() const { return backup_; }
    std::size_t total_bits() const {
        return initial_.bit_count() + backup_.bit_count() + score_.representation_size_bits;
    }

  private:
    BloomFilter initial_;
    ScoreFunction score_;
    double threshold_;
    std::size_t backup_set_size_;
    BloomFilter backup_;
};

}  // namespace augur
