#include "augur/bloom.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <unordered_set>

namespace augur {

BloomFilter::BloomFilter(std::size_t bits, std::size_t hash_count, std::uint64_t hash_seed)
    : bits_(std::max<std::size_t>(bits, 1), false), hash_count_(hash_count) {
    if (hash_count == 0) throw std::invalid_argument("hash count must be >= 1");
    hash_seeds_.reserve(hash_count);
    for (std::size_t i = 0; i < hash_count; ++i) hash_seeds_.push_back(derive_seed(hash_seed, i));
}

void BloomFilter::insert(std::uint64_t element) {
    for (std::size_t i = 0; i < hash_count_; ++i) bits_[slot(element, i)] = true;
    ++inserted_;
}

bool BloomFilter::query(std::uint64_t element) const {
    for (std::size_t i = 0; i < hash_count_; ++i)
        if (!bits_[slot(element, i)]) return false;
    return true;
}

double BloomFilter::fill_fraction() const {
    std::size_t set = 0;
    for (bool b : bits_) set += b;
    return static_cast<double>(set) / static_cast<double>(bits_.size());
}

double fpr_theoretical(double bits, double stored, double hash_count) {
    if (bits < 1 || hash_count < 1 || stored < 0)
        throw std::invalid_argument("need m >= 1, k >= 1, n >= 0");
    return std::pow(1.0 - std::exp(-hash_count * stored / bits), hash_count);
}

std::size_t optimal_hash_count(double bits_per_key) {
    auto k = static_cast<std::size_t>(std::llround(bits_per_key * std::numbers::ln2_v<double>));
    return std::max<std::size_t>(k, 1);
}

ScoreFunction synthetic_scorer(const std::vector<std::uint64_t>& members, double member_shape,
                               double nonmember_shape, std::uint64_t seed,
                               std::size_t representation_size_bits) {
    if (member_shape <= 0.0 || nonmember_shape <= 0.0)
        throw std::invalid_argument("shape parameters must be positive");
    auto member_set = std::make_shared<std::unordered_set<std::uint64_t>>(members.begin(),
                                                                          members.end());
    auto scorer = [member_set, member_shape, nonmember_shape, seed](std::uint64_t x) {
        // 53-bit uniform in (0, 1) derived from the element itself.
        double u = (static_cast<double>(hash_item(x, seed) >> 11) + 0.5) * 0x1.0p-53;
        if (member_set->count(x)) return std::pow(u, 1.0 / member_shape);
        return 1.0 - std::pow(1.0 - u, 1.0 / nonmember_shape);
    };
    return ScoreFunction{std::move(scorer), representation_size_bits};
}

double threshold_for_coverage(const std::vector<std::uint64_t>& set, const ScoreFunction& score,
                              double coverage) {
    if (coverage < 0.0 || coverage > 1.0) throw std::invalid_argument("coverage must be in [0, 1]");
    if (set.empty()) return 0.0;
    std::vector<double> scores;
    scores.reserve(set.size());
    for (auto x : set) scores.push_back(score(x));
    std::sort(scores.begin(), scores.end(), std::greater<>());
    auto covered = static_cast<std::size_t>(std::ceil(coverage * static_cast<double>(set.size())));
    if (covered == 0) return std::min(1.0, std::nextafter(scores.front(), 2.0));
    return scores[covered - 1];
}

namespace {

std::size_t backup_bit_budget(std::size_t backup_elements, double bits_per_key) {
    if (bits_per_key <= 0.0) throw std::invalid_argument("bits per key must be positive");
    auto bits = static_cast<std::size_t>(
        std::ceil(bits_per_key * static_cast<double>(std::max<std::size_t>(backup_elements, 1))));
    return std::max<std::size_t>(bits, 1);
}

}  // namespace

LearnedBloom::LearnedBloom(const std::vector<std::uint64_t>& set, ScoreFunction score,
                           double threshold, double backup_bits_per_key, std::uint64_t hash_seed)
    : score_(std::move(score)),
      threshold_(threshold),
      backup_set_size_(0),
      backup_(1, 1, hash_seed) {
    if (threshold < 0.0 || threshold > 1.0) throw std::invalid_argument("threshold must be in [0, 1]");
    std::vector<std::uint64_t> rejected;
    for (auto x : set)
        if (score_(x) < threshold_) rejected.push_back(x);
    backup_set_size_ = rejected.size();
    backup_ = BloomFilter(backup_bit_budget(rejected.size(), backup_bits_per_key),
                          optimal_hash_count(backup_bits_per_key), hash_seed);
    for (auto x : rejected) backup_.insert(x);
}

bool LearnedBloom::query(std::uint64_t element) const {
    return score_(element) >= threshold_ || backup_.query(element);
}

SandwichedBloom::SandwichedBloom(const std::vector<std::uint64_t>& set,
                                 double initial_bits_per_key, ScoreFunction score,
                                 double threshold, double backup_bits_per_key,
                                 std::uint64_t hash_seed)
    : initial_(backup_bit_budget(set.size(), initial_bits_per_key),
               optimal_hash_count(initial_bits_per_key), derive_seed(hash_seed, 0x5157)),
      score_(std::move(score)),
      threshold_(threshold),
      backup_set_size_(0),
      backup_(1, 1, hash_seed) {
    if (threshold < 0.0 || threshold > 1.0) throw std::invalid_argument("threshold must be in [0, 1]");
    for (auto x : set) initial_.insert(x);
    std::vector<std::uint64_t> rejected;
    for (auto x : set)
        if (score_(x) < threshold_) rejected.push_back(x);
    backup_set_size_ = rejected.size();
    backup_ = BloomFilter(backup_bit_budget(rejected.size(), backup_bits_per_key),
                          optimal_hash_count(backup_bits_per_key), hash_seed);
    for (auto x : rejected) backup_.insert(x);
}

bool SandwichedBloom::query(std::uint64_t element) const {
    if (!initial_.query(element)) return false;
    return score_(element) >= threshold_ || backup_.query(element);
}

}  // namespace augur
