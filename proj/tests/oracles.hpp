// Test-only reference implementations, kept independent of the library code
// paths they check.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <vector>

#include "augur/caching.hpp"
#include "augur/random.hpp"
#include "augur/sched_static.hpp"

namespace oracles {

// Linear-scan search: lowest matching index, or insertion rank.
template <class T>
std::pair<bool, std::size_t> linear_search(std::span<const T> a, const T& q) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i] < q)) return {!(q < a[i]), i};
    }
    return {false, a.size()};
}

// O(n^2) pair count of discordant orderings.
inline std::uint64_t brute_inversions(std::span<const int> predicted, std::span<const int> truth) {
    std::map<int, std::size_t> pos;
    for (std::size_t i = 0; i < truth.size(); ++i) pos[truth[i]] = i;
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < predicted.size(); ++i)
        for (std::size_t j = i + 1; j < predicted.size(); ++j)
            count += pos.at(predicted[i]) > pos.at(predicted[j]);
    return count;
}

// Exhaustive offline caching optimum: memoized minimization over every
// eviction choice. Exponential in general; usable for tiny traces only.
class CacheDp {
  public:
    CacheDp(const augur::RequestTrace& trace, std::size_t k)
        : trace_(trace.requests), k_(k) {}

    std::uint64_t min_misses() { return solve(0, {}); }

  private:
    std::uint64_t solve(std::size_t pos, std::vector<int> cache) {
        if (pos == trace_.size()) return 0;
        std::sort(cache.begin(), cache.end());
        auto key = std::make_pair(pos, cache);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        int page = trace_[pos];
        std::uint64_t best;
        if (std::find(cache.begin(), cache.end(), page) != cache.end()) {
            best = solve(pos + 1, cache);
        } else if (cache.size() < k_) {
            auto next = cache;
            next.push_back(page);
            best = 1 + solve(pos + 1, std::move(next));
        } else {
            best = std::numeric_limits<std::uint64_t>::max();
            for (std::size_t v = 0; v < cache.size(); ++v) {
                auto next = cache;
                next[v] = page;
                best = std::min(best, 1 + solve(pos + 1, std::move(next)));
            }
        }
        memo_.emplace(std::move(key), best);
        return best;
    }

    const std::vector<int>& trace_;
    std::size_t k_;
    std::map<std::pair<std::size_t, std::vector<int>>, std::uint64_t> memo_;
};

// LRU as an explicit recency list: front = most recent.
inline std::uint64_t list_lru_misses(const augur::RequestTrace& trace, std::size_t k) {
    std::vector<int> recency;
    std::uint64_t misses = 0;
    for (int page : trace.requests) {
        auto it = std::find(recency.begin(), recency.end(), page);
        if (it != recency.end()) {
            recency.erase(it);
        } else {
            ++misses;
            if (recency.size() == k) recency.pop_back();
        }
        recency.insert(recency.begin(), page);
    }
    return misses;
}

// Monte-Carlo mean per-job waiting time for the two-type batch: classify
// each job through the (p, q) channel, order predicted-shorts (shuffled)
// before predicted-longs (shuffled), and average exact waits.
struct TwoTypeMc {
    double mean = 0.0;
    double stderr_mean = 0.0;
};

inline TwoTypeMc two_type_monte_carlo(const augur::TwoTypeInstance& inst, augur::InfoMode mode,
                                      std::size_t samples, std::uint64_t seed) {
    augur::Rng rng(seed);
    const auto n = static_cast<std::size_t>(inst.n_short + inst.n_long);
    std::vector<double> service(n);
    for (std::size_t j = 0; j < n; ++j)
        service[j] = j < static_cast<std::size_t>(inst.n_short) ? inst.short_time
                                                                : inst.long_time;
    auto shuffle = [&](std::vector<std::size_t>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[static_cast<std::size_t>(rng.below(i))]);
    };
    std::vector<std::size_t> predicted_short, predicted_long, order;
    double sum = 0.0, sum_sq = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
        predicted_short.clear();
        predicted_long.clear();
        for (std::size_t j = 0; j < n; ++j) {
            bool is_short = j < static_cast<std::size_t>(inst.n_short);
            bool says_short = true;
            switch (mode) {
                case augur::InfoMode::kFull: says_short = is_short; break;
                case augur::InfoMode::kNone: says_short = true; break;  // one shuffled class
                case augur::InfoMode::kPredicted: {
                    double flip = rng.uniform();
                    says_short = is_short ? flip >= inst.p : flip < inst.q;
                    break;
                }
            }
            (says_short ? predicted_short : predicted_long).push_back(j);
        }
        shuffle(predicted_short);
        shuffle(predicted_long);
        order = predicted_short;
        order.insert(order.end(), predicted_long.begin(), predicted_long.end());
        double elapsed = 0.0, waits = 0.0;
        for (std::size_t j : order) {
            waits += elapsed;
            elapsed += service[j];
        }
        double mean_wait = waits / static_cast<double>(n);
        sum += mean_wait;
        sum_sq += mean_wait * mean_wait;
    }
    TwoTypeMc result;
    result.mean = sum / static_cast<double>(samples);
    double var = (sum_sq - sum * sum / static_cast<double>(samples)) /
                 static_cast<double>(samples - 1);
    result.stderr_mean = std::sqrt(std::max(var, 0.0) / static_cast<double>(samples));
    return result;
}

}  // namespace oracles
