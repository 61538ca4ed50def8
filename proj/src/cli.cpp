#include "augur/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "augur/bloom.hpp"
#include "augur/caching.hpp"
#include "augur/hinted_search.hpp"
#include "augur/predictions.hpp"
#include "augur/queue_sim.hpp"
#include "augur/sched_static.hpp"
#include "augur/sketch.hpp"
#include "augur/ski_rental.hpp"
#include "augur/table.hpp"

namespace augur {

namespace {

struct OutputOptions {
    std::string path;  // empty = stdout
    std::string format = "csv";
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("-o,--output", out.path, "Output file (default: stdout)");
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

void emit(const ResultTable& table, const OutputOptions& out) {
    if (out.path.empty()) {
        if (out.format == "json")
            table.write_json(std::cout);
        else
            table.write_csv(std::cout);
        return;
    }
    std::ofstream file(out.path, std::ios::binary);
    if (!file) throw CLI::ValidationError("--output", "cannot open " + out.path);
    if (out.format == "json")
        table.write_json(file);
    else
        table.write_csv(file);
}

struct NoiseSpec {
    std::string kind = "exact";
    double alpha = 0.5;
    double width = 1.0;
    double value = 0.0;
};

void add_noise_options(CLI::App* cmd, NoiseSpec& spec) {
    cmd->add_option("--noise", spec.kind, "Prediction noise model")
        ->check(CLI::IsMember({"exact", "uniform", "exponential", "additive", "adversarial"}))
        ->capture_default_str();
    cmd->add_option("--alpha", spec.alpha, "Relative half-width for uniform noise")
        ->capture_default_str();
    cmd->add_option("--width", spec.width, "Absolute half-width for additive noise")
        ->capture_default_str();
    cmd->add_option("--value", spec.value, "Constant for adversarial noise")
        ->capture_default_str();
}

NoiseModel build_noise(const NoiseSpec& spec, std::uint64_t seed) {
    if (spec.kind == "exact") return NoiseModel::exact();
    if (spec.kind == "uniform") {
        if (spec.alpha < 0.0 || spec.alpha >= 1.0)
            throw CLI::ValidationError("--alpha", "must be in [0, 1)");
        return NoiseModel::uniform_multiplicative(spec.alpha, seed);
    }
    if (spec.kind == "exponential") return NoiseModel::exponential_mean_x(seed);
    if (spec.kind == "additive") return NoiseModel::additive_uniform(spec.width, seed);
    return NoiseModel::adversarial_constant(spec.value);
}

void echo_noise(ResultTable& table, const NoiseSpec& spec) {
    table.set_config("noise", spec.kind);
    if (spec.kind == "uniform") table.set_config("alpha", spec.alpha);
    if (spec.kind == "additive") table.set_config("width", spec.width);
    if (spec.kind == "adversarial") table.set_config("value", spec.value);
}

// ---------------------------------------------------------------------------
// search-bench

int run_search_bench(std::size_t n, std::size_t queries, const NoiseSpec& noise_spec,
                     std::uint64_t seed, const OutputOptions& out) {
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = static_cast<double>(i);
    std::span<const double> array(values);

    Rng rng(derive_seed(seed, 0));
    NoiseModel noise = build_noise(noise_spec, derive_seed(seed, 1));

    ResultTable table({"eta", "probes_hinted", "probes_binary"});
    table.set_config("experiment", "search-bench");
    table.set_config("n", static_cast<std::int64_t>(n));
    table.set_config("queries", static_cast<std::int64_t>(queries));
    table.set_config("seed", static_cast<std::int64_t>(seed));
    echo_noise(table, noise_spec);

    for (std::size_t i = 0; i < queries; ++i) {
        auto target = static_cast<std::size_t>(rng.below(n));
        double query = values[target];
        double predicted = noise.predict(static_cast<double>(target)).predicted;
        auto hint = static_cast<std::ptrdiff_t>(std::llround(predicted));
        hint = std::clamp<std::ptrdiff_t>(hint, 0, static_cast<std::ptrdiff_t>(n) - 1);

        auto hinted = hinted_find(array, query, hint);
        auto binary = binary_find(array, query);
        auto eta = static_cast<std::int64_t>(
            std::abs(hint - static_cast<std::ptrdiff_t>(hinted.index)));
        table.add_row({eta, static_cast<std::int64_t>(hinted.probes),
                       static_cast<std::int64_t>(binary.probes)});
    }
    emit(table, out);
    return 0;
}

// ---------------------------------------------------------------------------
// ski-grid

int run_ski_grid(std::int64_t b_max, std::int64_t d_max, std::vector<double> lambdas,
                 const OutputOptions& out) {
    if (b_max < 1) throw CLI::ValidationError("--b-max", "must be >= 1");
    if (d_max < 1) throw CLI::ValidationError("--d-max", "must be >= 1");
    for (double l : lambdas)
        if (!(l > 0.0) || l > 1.0) throw CLI::ValidationError("--lambda", "must be in (0, 1]");

    ResultTable table({"b", "d_star", "h", "lambda", "cost", "opt", "ratio", "bound"});
    table.set_config("experiment", "ski-grid");
    table.set_config("b_max", b_max);
    table.set_config("d_max", d_max);

    double max_violation = -1e30;
    std::int64_t violations = 0;
    for (double lambda : lambdas) {
        for (std::int64_t b = 1; b <= b_max; ++b) {
            for (std::int64_t d = 1; d <= d_max; ++d) {
                for (std::int64_t h = 1; h <= d_max; ++h) {
                    SkiInstance inst{b, d, h};
                    auto cost = ski_cost(inst, SkiPolicy::lambda_robust(lambda));
                    auto opt = ski_opt(inst);
                    double ratio = static_cast<double>(cost) / static_cast<double>(opt);
                    double bound = competitive_ratio_bound(b, d, h, lambda);
                    max_violation = std::max(max_violation, ratio - bound);
                    if (ratio > bound + 1e-9) ++violations;
                    table.add_row({b, d, h, lambda, cost, opt, ratio, bound});
                }
            }
        }
    }
    table.set_config("max_violation", max_violation);
    table.set_config("violations", violations);
    emit(table, out);
    std::cerr << "ski-grid: max ratio-bound gap " << format_double(max_violation) << ", "
              << violations << " violation(s)\n";
    return violations == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// sketch-bench

int run_sketch_bench(std::size_t universe, double zipf, std::size_t stream_len, std::size_t rows,
                     std::size_t cols, std::size_t heavy, double fn_rate, std::uint64_t seed,
                     const OutputOptions& out) {
    if (universe == 0) throw CLI::ValidationError("--universe", "must be >= 1");
    if (rows == 0 || cols == 0) throw CLI::ValidationError("--rows/--cols", "must be >= 1");
    if (fn_rate < 0.0 || fn_rate > 1.0) throw CLI::ValidationError("--fn-rate", "must be in [0, 1]");
    if (heavy >= rows * cols) throw CLI::ValidationError("--heavy", "must be < rows*cols");

    std::vector<std::uint64_t> stream;
    stream.reserve(stream_len);
    ZipfStream gen(universe, zipf, derive_seed(seed, 0));
    for (std::size_t i = 0; i < stream_len; ++i) stream.push_back(gen.next());

    std::vector<std::uint64_t> counts(universe + 1, 0);
    for (auto item : stream) ++counts[item];
    std::vector<std::uint64_t> ranked(universe);
    std::iota(ranked.begin(), ranked.end(), 1);
    std::sort(ranked.begin(), ranked.end(), [&](std::uint64_t a, std::uint64_t b) {
        if (counts[a] != counts[b]) return counts[a] > counts[b];
        return a < b;
    });

    // Oracle top-`heavy` predictor, with independent false-negative drops.
    Rng fn_rng(derive_seed(seed, 1));
    std::vector<std::uint64_t> predicted_heavy;
    for (std::size_t i = 0; i < std::min(heavy, ranked.size()); ++i)
        if (fn_rng.uniform() >= fn_rate) predicted_heavy.push_back(ranked[i]);

    // Space-matched: learned base gets cols - ceil(heavy/rows) columns.
    std::size_t reserved_cols = (heavy + rows - 1) / rows;
    if (reserved_cols >= cols) throw CLI::ValidationError("--heavy", "leaves no base columns");
    CounterArray plain(rows, cols, derive_seed(seed, 2));
    LearnedSketch learned(rows, cols - reserved_cols, derive_seed(seed, 2), predicted_heavy);
    for (auto item : stream) {
        plain.update(item);
        learned.update(item);
    }

    ResultTable table({"item_rank", "true_count", "est_plain", "est_learned"});
    table.set_config("experiment", "sketch-bench");
    table.set_config("universe", static_cast<std::int64_t>(universe));
    table.set_config("zipf", zipf);
    table.set_config("stream_len", static_cast<std::int64_t>(stream_len));
    table.set_config("rows", static_cast<std::int64_t>(rows));
    table.set_config("cols", static_cast<std::int64_t>(cols));
    table.set_config("heavy", static_cast<std::int64_t>(heavy));
    table.set_config("fn_rate", fn_rate);
    table.set_config("seed", static_cast<std::int64_t>(seed));
    table.set_config("plain_counters", static_cast<std::int64_t>(plain.rows() * plain.cols()));
    table.set_config("learned_counters", static_cast<std::int64_t>(learned.total_counters()));

    double mae_plain = 0.0, mae_learned = 0.0;
    for (std::size_t r = 0; r < ranked.size(); ++r) {
        std::uint64_t item = ranked[r];
        auto true_count = static_cast<std::int64_t>(counts[item]);
        auto est_plain = static_cast<std::int64_t>(plain.query(item));
        auto est_learned = static_cast<std::int64_t>(learned.query(item));
        mae_plain += std::abs(static_cast<double>(est_plain - true_count));
        mae_learned += std::abs(static_cast<double>(est_learned - true_count));
        table.add_row({static_cast<std::int64_t>(r + 1), true_count, est_plain, est_learned});
    }
    table.set_config("mae_plain", mae_plain / static_cast<double>(universe));
    table.set_config("mae_learned", mae_learned / static_cast<double>(universe));
    emit(table, out);
    return 0;
}

// ---------------------------------------------------------------------------
// bloom-bench

int run_bloom_bench(std::size_t set_size, std::size_t queries, double member_shape,
                    double nonmember_shape, double tau, double coverage, bool use_coverage,
                    double bits_per_key, double backup_bits_per_key, double initial_bits_per_key,
                    std::size_t scorer_bits, std::uint64_t seed, const OutputOptions& out) {
    if (set_size == 0) throw CLI::ValidationError("--set-size", "must be >= 1");
    if (tau < 0.0 || tau > 1.0) throw CLI::ValidationError("--tau", "must be in [0, 1]");

    Rng rng(derive_seed(seed, 0));
    std::vector<std::uint64_t> members;
    members.reserve(set_size);
    for (std::size_t i = 0; i < set_size; ++i) members.push_back(rng.next_u64() | 1ULL);

    auto score = synthetic_scorer(members, member_shape, nonmember_shape, derive_seed(seed, 1),
                                  scorer_bits);
    if (use_coverage) tau = threshold_for_coverage(members, score, coverage);

    auto plain_bits = static_cast<std::size_t>(
        std::ceil(bits_per_key * static_cast<double>(set_size)));
    BloomFilter plain(plain_bits, optimal_hash_count(bits_per_key), derive_seed(seed, 2));
    for (auto x : members) plain.insert(x);
    LearnedBloom learned(members, score, tau, backup_bits_per_key, derive_seed(seed, 3));
    SandwichedBloom sandwiched(members, initial_bits_per_key, score, tau, backup_bits_per_key,
                               derive_seed(seed, 4));

    // Non-member queries: fresh 64-bit draws (even ids; members are odd).
    std::size_t fp_plain = 0, fp_learned = 0, fp_sandwiched = 0;
    for (std::size_t i = 0; i < queries; ++i) {
        std::uint64_t y = rng.next_u64() & ~1ULL;
        fp_plain += plain.query(y);
        fp_learned += learned.query(y);
        fp_sandwiched += sandwiched.query(y);
    }
    std::size_t false_negatives = 0;
    for (auto x : members)
        false_negatives += !plain.query(x) + !learned.query(x) + !sandwiched.query(x);

    const double q = static_cast<double>(queries);
    // Composition estimates: scorer pass rate for non-members is (1-tau)^b.
    double pass_rate = std::pow(1.0 - tau, nonmember_shape);
    double backup_fpr = fpr_theoretical(static_cast<double>(learned.backup().bit_count()),
                                        static_cast<double>(learned.backup_set_size()),
                                        static_cast<double>(learned.backup().hash_count()));
    double initial_fpr = fpr_theoretical(static_cast<double>(sandwiched.initial().bit_count()),
                                         static_cast<double>(set_size),
                                         static_cast<double>(sandwiched.initial().hash_count()));

    ResultTable table({"variant", "bits_total", "fpr_measured", "fpr_theoretical"});
    table.set_config("experiment", "bloom-bench");
    table.set_config("set_size", static_cast<std::int64_t>(set_size));
    table.set_config("queries", static_cast<std::int64_t>(queries));
    table.set_config("member_shape", member_shape);
    table.set_config("nonmember_shape", nonmember_shape);
    table.set_config("tau", tau);
    table.set_config("bits_per_key", bits_per_key);
    table.set_config("backup_bits_per_key", backup_bits_per_key);
    table.set_config("initial_bits_per_key", initial_bits_per_key);
    table.set_config("seed", static_cast<std::int64_t>(seed));
    table.set_config("false_negatives", static_cast<std::int64_t>(false_negatives));

    table.add_row({std::string("plain"), static_cast<std::int64_t>(plain.bit_count()),
                   static_cast<double>(fp_plain) / q,
                   fpr_theoretical(static_cast<double>(plain.bit_count()),
                                   static_cast<double>(set_size),
                                   static_cast<double>(plain.hash_count()))});
    table.add_row({std::string("learned"), static_cast<std::int64_t>(learned.total_bits()),
                   static_cast<double>(fp_learned) / q,
                   pass_rate + (1.0 - pass_rate) * backup_fpr});
    table.add_row({std::string("sandwiched"), static_cast<std::int64_t>(sandwiched.total_bits()),
                   static_cast<double>(fp_sandwiched) / q,
                   initial_fpr * (pass_rate + (1.0 - pass_rate) * backup_fpr)});
    emit(table, out);
    return 0;
}

// ---------------------------------------------------------------------------
// cache-bench

int run_cache_bench(const std::string& trace_path, const std::string& generator, int universe,
                    std::size_t length, double zipf_exponent, std::size_t pairs, std::size_t k,
                    std::vector<std::string> policies, const NoiseSpec& noise_spec,
                    std::uint64_t seed, const OutputOptions& out) {
    if (k == 0) throw CLI::ValidationError("--k", "must be >= 1");

    RequestTrace trace;
    std::vector<double> predictions;
    if (!trace_path.empty()) {
        std::ifstream file(trace_path);
        if (!file) throw CLI::ValidationError("--trace", "cannot open " + trace_path);
        TraceFile parsed = load_trace_file(file);
        trace = std::move(parsed.trace);
        if (parsed.predictions) predictions = std::move(*parsed.predictions);
    } else if (generator == "random") {
        trace = random_trace(universe, length, derive_seed(seed, 0));
    } else if (generator == "zipf") {
        trace = zipf_request_trace(universe, length, zipf_exponent, derive_seed(seed, 0));
    } else if (generator == "adversarial-pfif") {
        auto inst = adversarial_pfif_instance(pairs);
        trace = std::move(inst.trace);
        predictions = std::move(inst.predictions);
    } else {
        throw CLI::ValidationError("--gen", "unknown generator " + generator);
    }
    if (trace.requests.empty()) throw CLI::ValidationError("--trace", "trace is empty");

    if (predictions.empty()) {
        auto next = true_next_arrivals(trace);
        NoiseModel noise = build_noise(noise_spec, derive_seed(seed, 1));
        predictions = predicted_next_arrivals(trace, next, noise);
    }

    const auto opt = run_belady(trace, k).misses;
    const double eta = eta_l1_arrivals(trace, predictions);
    const double eta_norm = eta_over_opt(trace, predictions, k);

    ResultTable table({"policy", "misses", "opt_misses", "eta", "eta_over_opt", "ratio"});
    table.set_config("experiment", "cache-bench");
    table.set_config("k", static_cast<std::int64_t>(k));
    table.set_config("length", static_cast<std::int64_t>(trace.requests.size()));
    table.set_config("universe", static_cast<std::int64_t>(trace.universe));
    table.set_config("seed", static_cast<std::int64_t>(seed));
    if (!trace_path.empty())
        table.set_config("trace", trace_path);
    else
        table.set_config("generator", generator);
    echo_noise(table, noise_spec);

    auto add_result = [&](const std::string& name, std::uint64_t misses) {
        double ratio = opt > 0 ? static_cast<double>(misses) / static_cast<double>(opt)
                               : (misses == 0 ? 1.0 : kNeverArrives);
        table.add_row({name, static_cast<std::int64_t>(misses), static_cast<std::int64_t>(opt),
                       eta, eta_norm, ratio});
    };

    for (const auto& name : policies) {
        if (name == "belady") {
            add_result(name, opt);
        } else if (name == "pfif") {
            add_result(name, run_pfif(trace, k, predictions).misses);
        } else if (name == "pfif-drop") {
            add_result(name, run_pfif(trace, k, predictions, true).misses);
        } else if (name == "lru") {
            add_result(name, run_lru(trace, k).misses);
        } else if (name == "marker") {
            add_result(name,
                       run_marker(trace, k, MarkerRule::kRandomUnmarked, derive_seed(seed, 2))
                           .run.misses);
        } else if (name == "predictive-marker") {
            add_result(name, run_marker(trace, k, MarkerRule::kPredictive, derive_seed(seed, 2),
                                        &predictions)
                                 .run.misses);
        } else if (name == "combined-pfif-marker") {
            auto a = make_pfif(trace, k, predictions);
            auto b = make_marker(trace, k, MarkerRule::kRandomUnmarked, derive_seed(seed, 2));
            add_result(name, run_combined(trace, k, *a, *b).misses);
        } else if (name == "combined-pm-lru") {
            auto a = make_marker(trace, k, MarkerRule::kPredictive, derive_seed(seed, 2),
                                 &predictions);
            auto b = make_lru(trace, k);
            add_result(name, run_combined(trace, k, *a, *b).misses);
        } else {
            throw CLI::ValidationError("--policy", "unknown policy " + name);
        }
    }
    emit(table, out);
    return 0;
}

// ---------------------------------------------------------------------------
// pom-static

int run_pom_static(const std::string& preset, double alpha, std::int64_t n, double tol,
                   const OutputOptions& out) {
    if (n < 2) throw CLI::ValidationError("--n", "must be >= 2");
    if (!(tol > 0.0)) throw CLI::ValidationError("--tol", "must be positive");
    JointDensity density = preset == "exp-exp"
                               ? JointDensity::exp_exp()
                               : JointDensity::uniform_multiplicative(
                                     ServiceDistribution::exponential(), alpha);
    double full = continuous_wait(density, InfoMode::kFull, n, tol);
    double predicted = continuous_wait(density, InfoMode::kPredicted, n, tol);

    ResultTable table({"preset", "alpha", "n", "full_info_wait", "predicted_wait", "ratio"});
    table.set_config("experiment", "pom-static");
    table.set_config("preset", preset);
    table.set_config("tol", tol);
    table.add_row({preset, preset == "exp-exp" ? 0.0 : alpha, n, full, predicted,
                   predicted / full});
    emit(table, out);
    return 0;
}

// ---------------------------------------------------------------------------
// queue-bench

QueuePolicy parse_policy(const std::string& name) {
    static const std::map<std::string, QueuePolicy> kPolicies = {
        {"fcfs", QueuePolicy::kFcfs},   {"sjf", QueuePolicy::kSjf},
        {"spjf", QueuePolicy::kSpjf},   {"psjf", QueuePolicy::kPsjf},
        {"pspjf", QueuePolicy::kPspjf}, {"srpt", QueuePolicy::kSrpt},
        {"sprpt", QueuePolicy::kSprpt}};
    auto it = kPolicies.find(name);
    if (it == kPolicies.end()) throw CLI::ValidationError("--policy", "unknown policy " + name);
    return it->second;
}

int run_queue_bench(double lambda, const std::string& dist, std::vector<std::string> policies,
                    std::vector<double> alphas, std::size_t trials, double horizon, double warmup,
                    std::uint64_t seed, const OutputOptions& out) {
    if (!(lambda > 0.0) || lambda >= 1.0) throw CLI::ValidationError("--lambda", "must be in (0, 1)");
    if (!(horizon > warmup)) throw CLI::ValidationError("--horizon", "must exceed --warmup");
    if (trials == 0) throw CLI::ValidationError("--trials", "must be >= 1");
    for (double a : alphas)
        if (a < 0.0 || a >= 1.0) throw CLI::ValidationError("--alpha", "must be in [0, 1)");

    ServiceDistribution service = ServiceDistribution::exponential();
    if (dist == "weibull")
        service = ServiceDistribution::weibull();
    else if (dist != "mm1" && dist != "exp" && dist != "exponential")
        throw CLI::ValidationError("--dist", "unknown distribution " + dist);

    ResultTable table({"policy", "alpha", "mean_T", "stderr", "mean_W", "stderr_W"});
    table.set_config("experiment", "queue-bench");
    table.set_config("lambda", lambda);
    table.set_config("dist", dist);
    table.set_config("trials", static_cast<std::int64_t>(trials));
    table.set_config("horizon", horizon);
    table.set_config("warmup", warmup);
    table.set_config("seed", static_cast<std::int64_t>(seed));

    for (const auto& name : policies) {
        QueuePolicy policy = parse_policy(name);
        for (double alpha : alphas) {
            QueueConfig config;
            config.lambda = lambda;
            config.policy = policy;
            config.horizon = horizon;
            config.warmup = warmup;
            config.trials = trials;
            config.seed = seed;
            auto report = simulate(config, service,
                                   alpha == 0.0 ? NoiseKind::kExact
                                                : NoiseKind::kUniformMultiplicative,
                                   alpha);
            table.add_row({name, alpha, report.mean_time_in_system,
                           report.stderr_time_in_system, report.mean_wait, report.stderr_wait});
        }
    }
    emit(table, out);
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"augur: prediction-augmented algorithms workbench"};
    app.require_subcommand(1);

    OutputOptions out;
    std::uint64_t seed = 1;
    NoiseSpec noise;

    // search-bench
    auto* search = app.add_subcommand("search-bench", "Hinted vs. plain binary search");
    std::size_t search_n = 1000, search_queries = 1000;
    search->add_option("--n", search_n, "Array size")->capture_default_str();
    search->add_option("--queries", search_queries, "Number of queries")->capture_default_str();
    search->add_option("--seed", seed, "Master seed")->capture_default_str();
    add_noise_options(search, noise);
    add_output_options(search, out);

    // ski-grid
    auto* ski = app.add_subcommand("ski-grid", "Ski-rental bound verification grid");
    std::int64_t b_max = 50, d_max = 200;
    std::vector<double> lambdas{0.5};
    ski->add_option("--b-max", b_max, "Max buy price")->capture_default_str();
    ski->add_option("--d-max", d_max, "Max true/predicted days")->capture_default_str();
    ski->add_option("--lambda", lambdas, "Robustness parameter(s) in (0, 1]")
        ->capture_default_str();
    add_output_options(ski, out);

    // sketch-bench
    auto* sketch = app.add_subcommand("sketch-bench", "Count-Min vs. learned Count-Min");
    std::size_t universe = 1000, stream_len = 100000, rows = 5, cols = 200, heavy = 50;
    double zipf = 1.1, fn_rate = 0.0;
    sketch->add_option("--universe", universe, "Item universe size")->capture_default_str();
    sketch->add_option("--zipf", zipf, "Zipf exponent")->capture_default_str();
    sketch->add_option("--stream", stream_len, "Stream length")->capture_default_str();
    sketch->add_option("--rows", rows, "Sketch rows")->capture_default_str();
    sketch->add_option("--cols", cols, "Sketch columns")->capture_default_str();
    sketch->add_option("--heavy", heavy, "Predicted heavy-hitter slots")->capture_default_str();
    sketch->add_option("--fn-rate", fn_rate, "Predictor false-negative rate")
        ->capture_default_str();
    sketch->add_option("--seed", seed, "Master seed")->capture_default_str();
    add_output_options(sketch, out);

    // bloom-bench
    auto* bloom = app.add_subcommand("bloom-bench", "Plain/learned/sandwiched Bloom filters");
    std::size_t set_size = 1000, queries = 100000, scorer_bits = 0;
    double member_shape = 5.0, nonmember_shape = 5.0, tau = 0.5, coverage = 0.8;
    double bits_per_key = 8.0, backup_bits_per_key = 8.0, initial_bits_per_key = 4.0;
    bloom->add_option("--set-size", set_size, "Construction set size")->capture_default_str();
    bloom->add_option("--queries", queries, "Non-member queries")->capture_default_str();
    bloom->add_option("--member-shape", member_shape, "Member score Beta(a,1) shape")
        ->capture_default_str();
    bloom->add_option("--nonmember-shape", nonmember_shape, "Non-member score Beta(1,b) shape")
        ->capture_default_str();
    auto* tau_opt = bloom->add_option("--tau", tau, "Score threshold")->capture_default_str();
    auto* cov_opt = bloom->add_option("--coverage", coverage,
                                      "Pick tau to cover this member fraction");
    cov_opt->excludes(tau_opt);
    bloom->add_option("--bits-per-key", bits_per_key, "Plain filter budget")
        ->capture_default_str();
    bloom->add_option("--backup-bits-per-key", backup_bits_per_key, "Backup filter budget")
        ->capture_default_str();
    bloom->add_option("--initial-bits-per-key", initial_bits_per_key,
                      "Sandwich initial filter budget")
        ->capture_default_str();
    bloom->add_option("--scorer-bits", scorer_bits, "Self-reported scorer size in bits")
        ->capture_default_str();
    bloom->add_option("--seed", seed, "Master seed")->capture_default_str();
    add_output_options(bloom, out);

    // cache-bench
    auto* cache = app.add_subcommand("cache-bench", "Cache eviction with predictions");
    std::string trace_path, generator = "random";
    int cache_universe = 64;
    std::size_t cache_length = 10000, cache_pairs = 100, cache_k = 8;
    double zipf_exponent = 1.1;
    std::vector<std::string> cache_policies{"lru"};
    cache->add_option("--trace", trace_path, "Trace file (page id [predicted next] per line)");
    cache->add_option("--gen", generator, "Trace generator")
        ->check(CLI::IsMember({"random", "zipf", "adversarial-pfif"}))
        ->capture_default_str();
    cache->add_option("--universe", cache_universe, "Generated universe size")
        ->capture_default_str();
    cache->add_option("--length", cache_length, "Generated trace length")->capture_default_str();
    cache->add_option("--zipf-exponent", zipf_exponent, "Zipf generator exponent")
        ->capture_default_str();
    cache->add_option("--pairs", cache_pairs, "Adversarial (a,b) pair count")
        ->capture_default_str();
    cache->add_option("--k", cache_k, "Cache size")->capture_default_str();
    cache->add_option("--policy", cache_policies,
                      "Policies: belady pfif pfif-drop lru marker predictive-marker "
                      "combined-pfif-marker combined-pm-lru")
        ->capture_default_str();
    cache->add_option("--seed", seed, "Master seed")->capture_default_str();
    add_noise_options(cache, noise);
    add_output_options(cache, out);

    // pom-static
    auto* pom = app.add_subcommand("pom-static", "Static price of misprediction");
    std::string preset = "exp-exp";
    double pom_alpha = 0.5, pom_tol = 1e-4;
    std::int64_t pom_n = 2;
    pom->add_option("--preset", preset, "Joint density preset")
        ->check(CLI::IsMember({"exp-exp", "uniform-mult"}))
        ->capture_default_str();
    pom->add_option("--alpha", pom_alpha, "Uniform preset half-width")->capture_default_str();
    pom->add_option("--n", pom_n, "Number of jobs")->capture_default_str();
    pom->add_option("--tol", pom_tol, "Quadrature absolute tolerance")->capture_default_str();
    add_output_options(pom, out);

    // queue-bench
    auto* queue = app.add_subcommand("queue-bench", "M/G/1 queue policies with predictions");
    double q_lambda = 0.95, q_horizon = 2e5, q_warmup = 2e4;
    std::string q_dist = "mm1";
    std::vector<std::string> q_policies{"fcfs"};
    std::vector<double> q_alphas{0.0};
    std::size_t q_trials = 50;
    queue->add_option("--lambda", q_lambda, "Arrival rate, < 1")->capture_default_str();
    queue->add_option("--dist", q_dist, "Service distribution: mm1|exp|weibull")
        ->capture_default_str();
    queue->add_option("--policy", q_policies, "Policies: fcfs sjf spjf psjf pspjf srpt sprpt")
        ->capture_default_str();
    queue->add_option("--alpha", q_alphas, "Prediction noise sweep, each in [0, 1)")
        ->capture_default_str();
    queue->add_option("--trials", q_trials, "Independent trials")->capture_default_str();
    queue->add_option("--horizon", q_horizon, "Simulated time units per trial")
        ->capture_default_str();
    queue->add_option("--warmup", q_warmup, "Warmup time excluded from stats")
        ->capture_default_str();
    queue->add_option("--seed", seed, "Master seed")->capture_default_str();
    add_output_options(queue, out);

    try {
        app.parse(argc, argv);
        if (search->parsed())
            return run_search_bench(search_n, search_queries, noise, seed, out);
        if (ski->parsed()) return run_ski_grid(b_max, d_max, lambdas, out);
        if (sketch->parsed())
            return run_sketch_bench(universe, zipf, stream_len, rows, cols, heavy, fn_rate, seed,
                                    out);
        if (bloom->parsed())
            return run_bloom_bench(set_size, queries, member_shape, nonmember_shape, tau,
                                   coverage, static_cast<bool>(*cov_opt), bits_per_key,
                                   backup_bits_per_key, initial_bits_per_key, scorer_bits, seed,
                                   out);
        if (cache->parsed())
            return run_cache_bench(trace_path, generator, cache_universe, cache_length,
                                   zipf_exponent, cache_pairs, cache_k, cache_policies, noise,
                                   seed, out);
        if (pom->parsed()) return run_pom_static(preset, pom_alpha, pom_n, pom_tol, out);
        if (queue->parsed())
            return run_queue_bench(q_lambda, q_dist, q_policies, q_alphas, q_trials, q_horizon,
                                   q_warmup, seed, out);
        std::cerr << app.help();
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::RequiresError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const CLI::RequiredError&) {
        std::cerr << app.help();
        return 2;
    } catch (const CLI::ExtrasError& e) {
        std::cerr << e.what() << "\n" << app.help();
        return 2;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace augur
