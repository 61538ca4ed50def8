#include "augur/caching.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "augur/sketch.hpp"

namespace augur {

namespace {

void validate_trace(const RequestTrace& trace) {
    for (int p : trace.requests)
        if (p < 0 || p >= trace.universe)
            throw std::invalid_argument("page id outside [0, universe)");
}

}  // namespace

std::vector<double> true_next_arrivals(const RequestTrace& trace) {
    validate_trace(trace);
    std::vector<double> next(trace.requests.size(), kNeverArrives);
    std::unordered_map<int, std::size_t> last_seen;
    for (std::size_t t = trace.requests.size(); t-- > 0;) {
        auto it = last_seen.find(trace.requests[t]);
        if (it != last_seen.end()) next[t] = static_cast<double>(it->second);
        last_seen[trace.requests[t]] = t;
    }
    return next;
}

std::vector<double> predicted_next_arrivals(const RequestTrace& trace,
                                            const std::vector<double>& next, NoiseModel& model) {
    if (next.size() != trace.requests.size())
        throw std::invalid_argument("annotation length mismatch");
    std::vector<double> predicted(next.size(), kNeverArrives);
    for (std::size_t t = 0; t < next.size(); ++t) {
        if (next[t] == kNeverArrives) continue;
        double gap = next[t] - static_cast<double>(t);
        predicted[t] = static_cast<double>(t) + model.predict(gap).predicted;
    }
    return predicted;
}

std::size_t PhaseLedger::total_clean() const {
    std::size_t sum = 0;
    for (std::size_t c : clean_counts) sum += c;
    return sum;
}

double clean_lower_bound(const PhaseLedger& ledger) {
    return 0.5 * static_cast<double>(ledger.total_clean());
}

namespace {

// Shared resident-set bookkeeping.
class BasePolicy : public CachePolicy {
  public:
    BasePolicy(const RequestTrace& trace, std::size_t k) : trace_(trace), k_(k) {
        if (k == 0) throw std::invalid_argument("cache size must be >= 1");
        validate_trace(trace);
    }

    const std::unordered_set<int>& residents() const override { return resident_; }

  protected:
    const RequestTrace& trace_;
    std::size_t k_;
    std::unordered_set<int> resident_;
};

// Furthest-in-future over an arbitrary per-position key stream (true next
// arrivals for Belady, predictions for PFIF). A page's key is refreshed at
// each of its requests; eviction takes the largest key, ties to the
// smallest page id, with the never-arrives sentinel ranking first.
class FurthestPolicy : public BasePolicy {
  public:
    FurthestPolicy(const RequestTrace& trace, std::size_t k, std::vector<double> keys,
                   bool drop_past)
        : BasePolicy(trace, k), keys_(std::move(keys)), drop_past_(drop_past) {
        if (keys_.size() != trace.requests.size())
            throw std::invalid_argument("key stream length mismatch");
    }

    bool access(std::size_t pos) override {
        const int page = trace_.requests[pos];
        page_key_[page] = keys_[pos];
        if (resident_.count(page)) return false;
        if (resident_.size() == k_) evict(pos);
        resident_.insert(page);
        return true;
    }

  private:
    void evict(std::size_t pos) {
        int victim = -1;
        double victim_key = -kNeverArrives;
        for (int p : resident_) {
            double key = page_key_.at(p);
            if (drop_past_ && key < static_cast<double>(pos)) key = kNeverArrives;
            if (victim < 0 || key > victim_key || (key == victim_key && p < victim)) {
                victim = p;
                victim_key = key;
            }
        }
        resident_.erase(victim);
    }

    std::vector<double> keys_;
    bool drop_past_;
    std::unordered_map<int, double> page_key_;
};

class LruPolicy : public BasePolicy {
  public:
    LruPolicy(const RequestTrace& trace, std::size_t k) : BasePolicy(trace, k) {}

    bool access(std::size_t pos) override {
        const int page = trace_.requests[pos];
        if (resident_.count(page)) {
            last_used_[page] = pos;
            return false;
        }
        if (resident_.size() == k_) {
            int victim = -1;
            std::size_t oldest = 0;
            for (int p : resident_) {
                std::size_t used = last_used_.at(p);
                if (victim < 0 || used < oldest || (used == oldest && p < victim)) {
                    victim = p;
                    oldest = used;
                }
            }
            resident_.erase(victim);
        }
        resident_.insert(page);
        last_used_[page] = pos;
        return true;
    }

  private:
    std::unordered_map<int, std::size_t> last_used_;
};

// Marking algorithm with sequence-based phases: a phase closes once it has
// seen k distinct pages; the next request opens a new one and clears marks.
class MarkerPolicy : public BasePolicy {
  public:
    MarkerPolicy(const RequestTrace& trace, std::size_t k, MarkerRule rule, std::uint64_t seed,
                 const std::vector<double>* predictions, PhaseLedger* ledger)
        : BasePolicy(trace, k), rule_(rule), rng_(seed), ledger_(ledger) {
        if (rule == MarkerRule::kPredictive) {
            if (predictions == nullptr || predictions->size() != trace.requests.size())
                throw std::invalid_argument("predictive rule needs per-position predictions");
            predictions_ = predictions;
        }
    }

    bool access(std::size_t pos) override {
        const int page = trace_.requests[pos];
        if (!started_ || phase_distinct_.size() == k_) open_phase(pos);

        const bool new_in_phase = phase_distinct_.insert(page).second;
        const bool clean = new_in_phase && !prev_distinct_.count(page);
        if (new_in_phase && ledger_) {
            if (clean) {
                ++ledger_->clean_counts.back();
            } else {
                auto& stale = ledger_->stale_sets.back();
                stale.insert(std::upper_bound(stale.begin(), stale.end(), page), page);
            }
        }
        if (predictions_) page_key_[page] = (*predictions_)[pos];

        if (resident_.count(page)) {
            marked_.insert(page);
            return false;
        }

        // Misses happen only on pages new to the phase, so an unmarked
        // resident exists whenever the cache is full.
        std::size_t chain = open_chain(page, clean);
        if (resident_.size() == k_) {
            int victim = pick_victim(clean);
            resident_.erase(victim);
            if (ledger_) chain_of_evicted_[victim] = chain;
        }
        resident_.insert(page);
        marked_.insert(page);
        return true;
    }

  private:
    void open_phase(std::size_t pos) {
        prev_distinct_ = std::move(phase_distinct_);
        phase_distinct_.clear();
        marked_.clear();
        chain_of_evicted_.clear();
        started_ = true;
        if (ledger_) {
            ledger_->phase_starts.push_back(pos);
            ledger_->clean_counts.push_back(0);
            ledger_->stale_sets.emplace_back();
        }
    }

    std::size_t open_chain(int page, bool clean) {
        if (!ledger_) return 0;
        if (!clean) {
            auto it = chain_of_evicted_.find(page);
            if (it != chain_of_evicted_.end()) {
                ++ledger_->chain_lengths[it->second];
                return it->second;
            }
        }
        ledger_->chain_lengths.push_back(1);
        return ledger_->chain_lengths.size() - 1;
    }

    std::vector<int> unmarked_sorted() const {
        std::vector<int> out;
        out.reserve(resident_.size());
        for (int p : resident_)
            if (!marked_.count(p)) out.push_back(p);
        std::sort(out.begin(), out.end());
        return out;
    }

    int pick_victim(bool clean_arrival) {
        auto unmarked = unmarked_sorted();
        if (unmarked.empty()) throw std::logic_error("no unmarked resident at eviction");
        if (rule_ == MarkerRule::kPredictive && clean_arrival) {
            // Clean arrival: evict the unmarked page predicted to return
            // furthest in the future.
            int victim = unmarked.front();
            double victim_key = page_key_.at(victim);
            for (int p : unmarked) {
                double key = page_key_.at(p);
                if (key > victim_key) {
                    victim = p;
                    victim_key = key;
                }
            }
            return victim;
        }
        return unmarked[static_cast<std::size_t>(rng_.below(unmarked.size()))];
    }

    MarkerRule rule_;
    Rng rng_;
    PhaseLedger* ledger_;
    const std::vector<double>* predictions_ = nullptr;

    std::unordered_set<int> marked_;
    std::unordered_set<int> phase_distinct_;
    std::unordered_set<int> prev_distinct_;
    std::unordered_map<int, double> page_key_;
    std::unordered_map<int, std::size_t> chain_of_evicted_;
    bool started_ = false;
};

}  // namespace

std::unique_ptr<CachePolicy> make_belady(const RequestTrace& trace, std::size_t k) {
    return std::make_unique<FurthestPolicy>(trace, k, true_next_arrivals(trace), false);
}

std::unique_ptr<CachePolicy> make_pfif(const RequestTrace& trace, std::size_t k,
                                       const std::vector<double>& predictions, bool drop_past) {
    return std::make_unique<FurthestPolicy>(trace, k, predictions, drop_past);
}

std::unique_ptr<CachePolicy> make_lru(const RequestTrace& trace, std::size_t k) {
    return std::make_unique<LruPolicy>(trace, k);
}

std::unique_ptr<CachePolicy> make_marker(const RequestTrace& trace, std::size_t k, MarkerRule rule,
                                         std::uint64_t seed,
                                         const std::vector<double>* predictions,
                                         PhaseLedger* ledger) {
    return std::make_unique<MarkerPolicy>(trace, k, rule, seed, predictions, ledger);
}

CacheRunResult run_policy(const RequestTrace& trace, CachePolicy& policy) {
    CacheRunResult result;
    for (std::size_t pos = 0; pos < trace.requests.size(); ++pos) {
        auto before = policy.residents();
        if (policy.access(pos)) {
            ++result.misses;
            for (int p : before)
                if (!policy.residents().count(p))
                    result.evictions.push_back({pos, p, trace.requests[pos]});
        }
    }
    return result;
}

CacheRunResult run_belady(const RequestTrace& trace, std::size_t k) {
    auto policy = make_belady(trace, k);
    return run_policy(trace, *policy);
}

CacheRunResult run_pfif(const RequestTrace& trace, std::size_t k,
                        const std::vector<double>& predictions, bool drop_past) {
    auto policy = make_pfif(trace, k, predictions, drop_past);
    return run_policy(trace, *policy);
}

CacheRunResult run_lru(const RequestTrace& trace, std::size_t k) {
    auto policy = make_lru(trace, k);
    return run_policy(trace, *policy);
}

MarkerResult run_marker(const RequestTrace& trace, std::size_t k, MarkerRule rule,
                        std::uint64_t seed, const std::vector<double>* predictions) {
    MarkerResult result;
    auto policy = make_marker(trace, k, rule, seed, predictions, &result.ledger);
    result.run = run_policy(trace, *policy);
    return result;
}

CombinedResult run_combined(const RequestTrace& trace, std::size_t k, CachePolicy& a,
                            CachePolicy& b) {
    if (k == 0) throw std::invalid_argument("cache size must be >= 1");
    CombinedResult result;
    std::unordered_set<int> cache;
    bool following_a = true;
    for (std::size_t pos = 0; pos < trace.requests.size(); ++pos) {
        result.misses_a += a.access(pos);
        result.misses_b += b.access(pos);
        const int page = trace.requests[pos];
        if (!cache.count(page)) {
            ++result.misses;
            if (cache.size() == k) {
                // Lazy resync: evict a page the followed policy no longer
                // holds. One always exists while the caches differ.
                const auto& target = following_a ? a.residents() : b.residents();
                int victim = -1;
                for (int p : cache)
                    if (!target.count(p) && (victim < 0 || p < victim)) victim = p;
                if (victim < 0) throw std::logic_error("combined cache has no eviction candidate");
                cache.erase(victim);
            }
            cache.insert(page);
        }
        if (following_a && 2 * result.misses_b < result.misses_a) {
            following_a = false;
            ++result.switches;
        } else if (!following_a && 2 * result.misses_a < result.misses_b) {
            following_a = true;
            ++result.switches;
        }
    }
    return result;
}

double eta_l1_arrivals(const RequestTrace& trace, const std::vector<double>& predictions) {
    auto next = true_next_arrivals(trace);
    if (predictions.size() != next.size())
        throw std::invalid_argument("prediction length mismatch");
    const double horizon = static_cast<double>(trace.requests.size());
    double eta = 0.0;
    for (std::size_t t = 0; t < next.size(); ++t) {
        double actual = std::min(next[t], horizon);
        double predicted = std::min(predictions[t], horizon);
        eta += std::abs(predicted - actual);
    }
    return eta;
}

double eta_over_opt(const RequestTrace& trace, const std::vector<double>& predictions,
                    std::size_t k) {
    double eta = eta_l1_arrivals(trace, predictions);
    std::uint64_t opt = trace.requests.empty() ? 0 : run_belady(trace, k).misses;
    if (opt == 0) return eta == 0.0 ? 0.0 : kNeverArrives;
    return eta / static_cast<double>(opt);
}

RequestTrace random_trace(int universe, std::size_t length, std::uint64_t seed) {
    if (universe < 1) throw std::invalid_argument("universe must be >= 1");
    Rng rng(seed);
    RequestTrace trace;
    trace.universe = universe;
    trace.requests.reserve(length);
    for (std::size_t i = 0; i < length; ++i)
        trace.requests.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(universe))));
    return trace;
}

RequestTrace zipf_request_trace(int universe, std::size_t length, double exponent,
                                std::uint64_t seed) {
    if (universe < 1) throw std::invalid_argument("universe must be >= 1");
    ZipfStream stream(static_cast<std::size_t>(universe), exponent, seed);
    RequestTrace trace;
    trace.universe = universe;
    trace.requests.reserve(length);
    for (std::size_t i = 0; i < length; ++i)
        trace.requests.push_back(static_cast<int>(stream.next()) - 1);
    return trace;
}

RequestTrace cycle_trace(std::size_t k, std::size_t phases) {
    RequestTrace trace;
    trace.universe = static_cast<int>(k + 1);
    trace.requests.reserve(k * phases);
    for (std::size_t i = 0; i < k * phases; ++i)
        trace.requests.push_back(static_cast<int>(i % (k + 1)));
    return trace;
}

PfifAdversarialInstance adversarial_pfif_instance(std::size_t pairs) {
    // Pages: c = 2, a = 0, b = 1. Sequence c, a, b, a, b, ..., a, b, c.
    PfifAdversarialInstance inst;
    inst.trace.universe = 3;
    inst.trace.requests.push_back(2);
    for (std::size_t i = 0; i < pairs; ++i) {
        inst.trace.requests.push_back(0);
        inst.trace.requests.push_back(1);
    }
    inst.trace.requests.push_back(2);
    inst.predictions = true_next_arrivals(inst.trace);
    for (std::size_t t = 0; t < inst.trace.requests.size(); ++t)
        if (inst.trace.requests[t] == 2) inst.predictions[t] = 0.0;
    return inst;
}

TraceFile load_trace_file(std::istream& in) {
    TraceFile file;
    std::vector<double> predictions;
    bool any_prediction = false;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        long page;
        if (!(fields >> page)) continue;  // blank or comment line
        if (page < 0) throw std::invalid_argument("negative page id at line " + std::to_string(lineno));
        file.trace.requests.push_back(static_cast<int>(page));
        double predicted;
        if (fields >> predicted) {
            any_prediction = true;
            predictions.push_back(predicted);
        } else {
            predictions.push_back(kNeverArrives);
        }
    }
    for (int p : file.trace.requests) file.trace.universe = std::max(file.trace.universe, p + 1);
    // A missing second column means "never returns" when any line carries one.
    if (any_prediction) file.predictions = std::move(predictions);
    return file;
}

}  // namespace augur
