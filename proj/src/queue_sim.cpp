#include "augur/queue_sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include "augur/parallel.hpp"
#include "augur/quadrature.hpp"

namespace augur {

bool is_preemptive(QueuePolicy policy) {
    switch (policy) {
        case QueuePolicy::kFcfs:
        case QueuePolicy::kSjf:
        case QueuePolicy::kSpjf:
            return false;
        case QueuePolicy::kPsjf:
        case QueuePolicy::kPspjf:
        case QueuePolicy::kSrpt:
        case QueuePolicy::kSprpt:
            return true;
    }
    throw std::logic_error("unreachable");
}

const char* policy_name(QueuePolicy policy) {
    switch (policy) {
        case QueuePolicy::kFcfs: return "fcfs";
        case QueuePolicy::kSjf: return "sjf";
        case QueuePolicy::kSpjf: return "spjf";
        case QueuePolicy::kPsjf: return "psjf";
        case QueuePolicy::kPspjf: return "pspjf";
        case QueuePolicy::kSrpt: return "srpt";
        case QueuePolicy::kSprpt: return "sprpt";
    }
    throw std::logic_error("unreachable");
}

namespace {

NoiseModel make_noise(NoiseKind kind, double param, std::uint64_t seed) {
    switch (kind) {
        case NoiseKind::kExact: return NoiseModel::exact();
        case NoiseKind::kUniformMultiplicative: return NoiseModel::uniform_multiplicative(param, seed);
        case NoiseKind::kExponentialMeanX: return NoiseModel::exponential_mean_x(seed);
        case NoiseKind::kAdditiveUniform: return NoiseModel::additive_uniform(param, seed);
        case NoiseKind::kAdversarialConstant: return NoiseModel::adversarial_constant(param);
    }
    throw std::logic_error("unreachable");
}

}  // namespace

std::vector<JobRecord> generate_jobs(double lambda, double horizon,
                                     const ServiceDistribution& service, NoiseKind noise_kind,
                                     double noise_param, std::uint64_t seed) {
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
    Rng rng(derive_seed(seed, 0));
    NoiseModel noise = make_noise(noise_kind, noise_param, derive_seed(seed, 1));
    std::vector<JobRecord> jobs;
    double t = 0.0;
    for (;;) {
        t += rng.exponential(1.0 / lambda);
        if (t >= horizon) break;
        JobRecord job;
        job.arrival = t;
        job.actual = service.sample(rng);
        job.predicted = noise.predict(job.actual).predicted;
        jobs.push_back(job);
    }
    return jobs;
}

namespace {

struct QueuedJob {
    double key;
    std::uint64_t seq;  // arrival order; breaks key ties deterministically
    std::size_t idx;

    bool operator>(const QueuedJob& other) const {
        if (key != other.key) return key > other.key;
        return seq > other.seq;
    }
};

// Queue key at enqueue time. SRPT/SPRPT keys are recomputed whenever the
// job re-enters the queue after being preempted.
double job_key(QueuePolicy policy, const JobRecord& job, double remaining, std::uint64_t seq) {
    switch (policy) {
        case QueuePolicy::kFcfs: return static_cast<double>(seq);
        case QueuePolicy::kSjf:
        case QueuePolicy::kPsjf: return job.actual;
        case QueuePolicy::kSpjf:
        case QueuePolicy::kPspjf: return job.predicted;
        case QueuePolicy::kSrpt: return remaining;
        case QueuePolicy::kSprpt:
            // Predicted remaining work: the prediction minus service already
            // received. May go negative, which ranks the job most urgent.
            return job.predicted - (job.actual - remaining);
    }
    throw std::logic_error("unreachable");
}

}  // namespace

PathStats run_queue_path(std::span<const JobRecord> jobs, QueuePolicy policy, double warmup,
                         double horizon, std::span<const double> probe_times) {
    if (!(horizon > warmup) || warmup < 0.0)
        throw std::invalid_argument("need 0 <= warmup < horizon");
    const bool preemptive = is_preemptive(policy);
    constexpr double kInf = std::numeric_limits<double>::infinity();

    PathStats stats;
    std::priority_queue<QueuedJob, std::vector<QueuedJob>, std::greater<>> ready;
    std::vector<double> remaining(jobs.size());

    // Running-job bookkeeping: progress is materialized lazily from the
    // dispatch timestamp, so no per-tick work is needed.
    std::ptrdiff_t running = -1;
    double dispatch_time = 0.0;
    double dispatch_remaining = 0.0;

    std::size_t next_arrival = 0;
    std::size_t next_probe = 0;
    std::size_t in_system = 0;
    double work_in_system = 0.0;  // exact at event boundaries
    double last_event = 0.0;

    auto record_span = [&](double from, double to) {
        // n(t) is constant on (from, to); accumulate the window overlap.
        double lo = std::max(from, warmup);
        double hi = std::min(to, horizon);
        if (hi > lo) stats.area_in_system += static_cast<double>(in_system) * (hi - lo);
    };

    auto advance_to = [&](double now) {
        while (next_probe < probe_times.size() && probe_times[next_probe] < now) {
            double at = probe_times[next_probe];
            double served = running >= 0 ? at - last_event : 0.0;
            stats.work_probes.push_back(work_in_system - served);
            ++next_probe;
        }
        record_span(last_event, now);
        if (running >= 0) work_in_system -= now - last_event;
        last_event = now;
    };

    auto dispatch = [&](double now) {
        if (running >= 0 || ready.empty()) return;
        running = static_cast<std::ptrdiff_t>(ready.top().idx);
        ready.pop();
        dispatch_time = now;
        dispatch_remaining = remaining[static_cast<std::size_t>(running)];
    };

    for (;;) {
        double completion = running >= 0 ? dispatch_time + dispatch_remaining : kInf;
        double arrival = next_arrival < jobs.size() ? jobs[next_arrival].arrival : kInf;
        double next_event = std::min(completion, arrival);
        if (next_event > horizon || next_event == kInf) {
            advance_to(horizon);
            break;
        }
        advance_to(next_event);

        if (completion <= arrival) {
            auto idx = static_cast<std::size_t>(running);
            remaining[idx] = 0.0;
            running = -1;
            --in_system;
            if (next_event > warmup) {
                ++stats.completed;
                double time_in_system = next_event - jobs[idx].arrival;
                stats.total_time_in_system += time_in_system;
                stats.total_wait += time_in_system - jobs[idx].actual;
            }
            dispatch(next_event);
        } else {
            std::size_t idx = next_arrival++;
            remaining[idx] = jobs[idx].actual;
            work_in_system += jobs[idx].actual;
            ++in_system;
            // seq = arrival index + 1; a preempted job re-enters under its
            // original seq, so all tie-breaks are by arrival order.
            if (preemptive && running >= 0) {
                auto run_idx = static_cast<std::size_t>(running);
                double run_remaining = dispatch_remaining - (next_event - dispatch_time);
                double run_key = job_key(policy, jobs[run_idx], run_remaining, run_idx + 1);
                double new_key = job_key(policy, jobs[idx], remaining[idx], idx + 1);
                if (new_key < run_key) {
                    remaining[run_idx] = run_remaining;
                    ready.push({run_key, run_idx + 1, run_idx});
                    running = -1;
                }
            }
            ready.push({job_key(policy, jobs[idx], remaining[idx], idx + 1), idx + 1, idx});
            if (running < 0) dispatch(next_event);
        }
    }
    return stats;
}

SteadyStateReport simulate(const QueueConfig& config, const ServiceDistribution& service,
                           NoiseKind noise_kind, double noise_param) {
    if (!(config.lambda > 0.0) || config.lambda >= 1.0)
        throw std::invalid_argument("lambda must be in (0, 1)");
    if (!(config.horizon > config.warmup))
        throw std::invalid_argument("horizon must exceed warmup");
    if (config.trials == 0) throw std::invalid_argument("need at least one trial");

    SteadyStateReport report;
    report.trials.resize(config.trials);
    parallel_for(config.trials, [&](std::size_t i) {
        auto jobs = generate_jobs(config.lambda, config.horizon, service, noise_kind, noise_param,
                                  derive_seed(config.seed, i));
        PathStats path = run_queue_path(jobs, config.policy, config.warmup, config.horizon);
        TrialStats trial;
        trial.completed = path.completed;
        if (path.completed > 0) {
            trial.mean_time_in_system =
                path.total_time_in_system / static_cast<double>(path.completed);
            trial.mean_wait = path.total_wait / static_cast<double>(path.completed);
        }
        trial.mean_in_system = path.area_in_system / (config.horizon - config.warmup);
        report.trials[i] = trial;
    });

    auto aggregate = [&](auto field, double& mean, double* stderr_out) {
        double sum = 0.0;
        for (const auto& t : report.trials) sum += field(t);
        mean = sum / static_cast<double>(config.trials);
        if (stderr_out) {
            double ss = 0.0;
            for (const auto& t : report.trials) {
                double d = field(t) - mean;
                ss += d * d;
            }
            std::size_t n = config.trials;
            *stderr_out = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1) /
                                            static_cast<double>(n))
                                : 0.0;
        }
    };
    aggregate([](const TrialStats& t) { return t.mean_time_in_system; },
              report.mean_time_in_system, &report.stderr_time_in_system);
    aggregate([](const TrialStats& t) { return t.mean_wait; }, report.mean_wait,
              &report.stderr_wait);
    aggregate([](const TrialStats& t) { return t.mean_in_system; }, report.mean_in_system,
              nullptr);
    return report;
}

double analytic_fcfs_wait(const ServiceDistribution& service, double lambda) {
    double rho = lambda * service.mean();
    if (!(lambda > 0.0) || rho >= 1.0) throw std::invalid_argument("need 0 < lambda E[S] < 1");
    return lambda * service.second_moment() / (2.0 * (1.0 - rho));
}

namespace {

double wait_prefactor(const ServiceDistribution& service, double lambda) {
    double rho = lambda * service.mean();
    if (!(lambda > 0.0) || rho >= 1.0) throw std::invalid_argument("need 0 < lambda E[S] < 1");
    return rho * service.second_moment() / (2.0 * service.mean());
}

}  // namespace

double analytic_sjf_wait(const ServiceDistribution& service, double lambda, double tol) {
    double prefactor = wait_prefactor(service, lambda);
    auto integrand = [&](double u) {
        double x = u * u;
        double rho_x = lambda * service.partial_work(x);
        return 2.0 * u * service.pdf(x) / ((1.0 - rho_x) * (1.0 - rho_x));
    };
    double upper = service.upper_quantile(1e-8);
    return prefactor * integrate(integrand, 0.0, std::sqrt(upper), tol);
}

double analytic_spjf_wait(const ServiceDistribution& service, double lambda,
                          const JointDensity& density, double tol) {
    double prefactor = wait_prefactor(service, lambda);
    auto integrand = [&](double u) {
        double y = u * u;
        double rho_y = lambda * density.work_below_predicted(y);
        return 2.0 * u * density.fp(y) / ((1.0 - rho_y) * (1.0 - rho_y));
    };
    return prefactor * integrate(integrand, 0.0, std::sqrt(density.y_upper()), tol);
}

double price_of_misprediction_queue(const ServiceDistribution& service, double lambda,
                                    const JointDensity& density, double tol) {
    double sjf = analytic_sjf_wait(service, lambda, tol);
    double spjf = analytic_spjf_wait(service, lambda, density, tol);
    return spjf / sjf;
}

}  // namespace augur
