#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "augur/predictions.hpp"
#include "augur/random.hpp"

namespace augur {

// Next-arrival sentinel for pages that never reappear.
constexpr double kNeverArrives = std::numeric_limits<double>::infinity();

struct RequestTrace {
    std::vector<int> requests;  // page ids in [0, universe)
    int universe = 0;
};

// next[t] = position of the next request of the page requested at t,
// kNeverArrives if there is none. Computed by one backward scan.
std::vector<double> true_next_arrivals(const RequestTrace& trace);

// Noisy per-occurrence predictions of next_arrivals: the model perturbs the
// gap next - t (so predictions stay anchored to the current time) and
// never-returning positions keep the sentinel.
std::vector<double> predicted_next_arrivals(const RequestTrace& trace,
                                            const std::vector<double>& next, NoiseModel& model);

struct EvictionEvent {
    std::size_t position;
    int victim;
    int newcomer;
};

struct CacheRunResult {
    std::uint64_t misses = 0;
    std::vector<EvictionEvent> evictions;
};

// Phase accounting for marking runs: where each phase starts, how many
// clean elements it saw, which stale pages it touched, and the length of
// every eviction chain (a clean miss plus the stale misses it transitively
// caused).
struct PhaseLedger {
    std::vector<std::size_t> phase_starts;
    std::vector<std::size_t> clean_counts;
    std::vector<std::vector<int>> stale_sets;  // sorted distinct stale pages per phase
    std::vector<std::size_t> chain_lengths;

    std::size_t total_clean() const;
};

// Lower bound on the offline optimum from clean elements: half their total.
double clean_lower_bound(const PhaseLedger& ledger);

// Incremental cache simulator; one instance per run.
class CachePolicy {
  public:
    virtual ~CachePolicy() = default;
    // Serve the request at trace position `pos`; true means a miss.
    virtual bool access(std::size_t pos) = 0;
    virtual const std::unordered_set<int>& residents() const = 0;
};

enum class MarkerRule { kRandomUnmarked, kPredictive };

// Furthest-in-future on the true next arrivals (offline optimal).
std::unique_ptr<CachePolicy> make_belady(const RequestTrace& trace, std::size_t k);
// Furthest-in-future on predicted next arrivals. With drop_past set, pages
// whose predicted arrival already passed rank as evict-first.
std::unique_ptr<CachePolicy> make_pfif(const RequestTrace& trace, std::size_t k,
                                       const std::vector<double>& predictions,
                                       bool drop_past = false);
std::unique_ptr<CachePolicy> make_lru(const RequestTrace& trace, std::size_t k);
// Marking algorithm. The predictive rule needs predictions; the ledger
// (optional) is filled as the run progresses.
std::unique_ptr<CachePolicy> make_marker(const RequestTrace& trace, std::size_t k, MarkerRule rule,
                                         std::uint64_t seed,
                                         const std::vector<double>* predictions = nullptr,
                                         PhaseLedger* ledger = nullptr);

CacheRunResult run_policy(const RequestTrace& trace, CachePolicy& policy);

CacheRunResult run_belady(const RequestTrace& trace, std::size_t k);
CacheRunResult run_pfif(const RequestTrace& trace, std::size_t k,
                        const std::vector<double>& predictions, bool drop_past = false);
CacheRunResult run_lru(const RequestTrace& trace, std::size_t k);

struct MarkerResult {
    CacheRunResult run;
    PhaseLedger ledger;
};

MarkerResult run_marker(const RequestTrace& trace, std::size_t k, MarkerRule rule,
                        std::uint64_t seed,
                        const std::vector<double>* predictions = nullptr);

// Robust combiner: simulates both policies in the background, serves from
// its own cache, and follows whichever policy currently misses less
// (switching when the other's cumulative count drops below half the
// followed one's). Resync is lazy: evictions prefer pages absent from the
// followed policy's cache, so each switch costs at most k extra misses.
struct CombinedResult {
    std::uint64_t misses = 0;
    std::uint64_t switches = 0;
    std::uint64_t misses_a = 0;
    std::uint64_t misses_b = 0;
};

CombinedResult run_combined(const RequestTrace& trace, std::size_t k, CachePolicy& a,
                            CachePolicy& b);

// l1 prediction error normalized by the Belady miss count at cache size k.
// A zero optimum (empty trace) yields 0 when eta is 0 and infinity otherwise.
double eta_over_opt(const RequestTrace& trace, const std::vector<double>& predictions,
                    std::size_t k);

// Raw eta with the never-arrives sentinel clamped to the trace length on
// both sides, matching eta_over_opt's accounting.
double eta_l1_arrivals(const RequestTrace& trace, const std::vector<double>& predictions);

// Trace generators.
RequestTrace random_trace(int universe, std::size_t length, std::uint64_t seed);
RequestTrace zipf_request_trace(int universe, std::size_t length, double exponent,
                                std::uint64_t seed);
// Cyclic scan over k+1 pages; adversarial for LRU and marking at cache
// size k (one clean element per phase in steady state).
RequestTrace cycle_trace(std::size_t k, std::size_t phases);

// The linear-blowup instance for predicted furthest-in-future: page c, then
// `pairs` repetitions of (a, b), then c again. Predictions are exact except
// c's, which are pinned to time 0, so FIF-on-predictions never evicts c.
struct PfifAdversarialInstance {
    RequestTrace trace;
    std::vector<double> predictions;
};

PfifAdversarialInstance adversarial_pfif_instance(std::size_t pairs);

// Trace file format: one page id per line, optional second column with the
// predicted next-arrival time for that position. '#' lines are comments.
struct TraceFile {
    RequestTrace trace;
    std::optional<std::vector<double>> predictions;
};

TraceFile load_trace_file(std::istream& in);

}  // namespace augur
