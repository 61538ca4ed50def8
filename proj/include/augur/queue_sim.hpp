#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "augur/density.hpp"
#include "augur/predictions.hpp"
#include "augur/service.hpp"

namespace augur {

enum class QueuePolicy { kFcfs, kSjf, kSpjf, kPsjf, kPspjf, kSrpt, kSprpt };

bool is_preemptive(QueuePolicy policy);
const char* policy_name(QueuePolicy policy);

struct JobRecord {
    double arrival = 0.0;
    double actual = 0.0;     // service requirement x
    double predicted = 0.0;  // predicted requirement y
};

struct QueueConfig {
    double lambda = 0.5;  // Poisson arrival rate, must be < 1 for stability
    QueuePolicy policy = QueuePolicy::kFcfs;
    double horizon = 2e5;
    double warmup = 2e4;
    std::size_t trials = 50;
    std::uint64_t seed = 1;
};

struct TrialStats {
    std::uint64_t completed = 0;
    double mean_time_in_system = 0.0;
    double mean_wait = 0.0;
    double mean_in_system = 0.0;  // time average of n(t) over the window
};

struct SteadyStateReport {
    double mean_time_in_system = 0.0;
    double stderr_time_in_system = 0.0;
    double mean_wait = 0.0;
    double stderr_wait = 0.0;
    double mean_in_system = 0.0;
    std::vector<TrialStats> trials;
};

// Arrival stream over [0, horizon): Poisson gaps at rate lambda, service
// times from the distribution, predictions from the noise model (which
// draws from an independent derived stream, so the arrival/service path is
// identical across noise settings with the same seed).
std::vector<JobRecord> generate_jobs(double lambda, double horizon,
                                     const ServiceDistribution& service, NoiseKind noise_kind,
                                     double noise_param, std::uint64_t seed);

struct PathStats {
    std::uint64_t completed = 0;
    double total_time_in_system = 0.0;
    double total_wait = 0.0;
    double area_in_system = 0.0;        // integral of n(t) over (warmup, horizon]
    std::vector<double> work_probes;    // remaining work sampled at probe times
};

// Single-server run over one fixed sample path. Non-preemptive policies
// choose at completion epochs; preemptive ones also re-evaluate at arrivals.
// Simultaneous events process completions first, then arrivals in order.
// Jobs completing in (warmup, horizon] contribute to the statistics.
PathStats run_queue_path(std::span<const JobRecord> jobs, QueuePolicy policy, double warmup,
                         double horizon, std::span<const double> probe_times = {});

// Full experiment: `trials` independent sample paths (seeds derived from
// config.seed by trial index, fanned out across workers), aggregated with
// standard errors.
SteadyStateReport simulate(const QueueConfig& config, const ServiceDistribution& service,
                           NoiseKind noise_kind, double noise_param);

// M/G/1 FCFS mean waiting time (Pollaczek-Khinchine).
double analytic_fcfs_wait(const ServiceDistribution& service, double lambda);

// Steady-state SJF mean waiting time:
//   E[W] = integral f_s(x) * rho E[S^2] / (2 E[S] (1 - rho_x)^2) dx
// with rho_x the work rate from jobs no longer than x.
double analytic_sjf_wait(const ServiceDistribution& service, double lambda, double tol = 1e-4);

// SPJF analogue over the predicted marginal, with rho'_y the work rate from
// jobs predicted no longer than y. The density's service distribution must
// match `service`.
double analytic_spjf_wait(const ServiceDistribution& service, double lambda,
                          const JointDensity& density, double tol = 1e-4);

// Ratio of the SPJF to SJF waiting-time integrals (the common prefactor
// cancels): integral f_p(y)/(1-rho'_y)^2 dy / integral f_s(x)/(1-rho_x)^2 dx.
double price_of_misprediction_queue(const ServiceDistribution& service, double lambda,
                                    const JointDensity& density, double tol = 1e-4);

}  // namespace augur
