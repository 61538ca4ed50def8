#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <vector>

#include "augur/queue_sim.hpp"

using namespace augur;

namespace {

QueueConfig quick_config(QueuePolicy policy, double lambda, std::size_t trials = 10,
                         double horizon = 20000.0, double warmup = 2000.0) {
    QueueConfig config;
    config.lambda = lambda;
    config.policy = policy;
    config.horizon = horizon;
    config.warmup = warmup;
    config.trials = trials;
    config.seed = 7;
    return config;
}

}  // namespace

TEST_CASE("service distribution moments match their samplers") {
    Rng rng(1);
    for (auto service : {ServiceDistribution::exponential(), ServiceDistribution::weibull()}) {
        double sum = 0.0, sum_sq = 0.0;
        const int n = 10000000;
        for (int i = 0; i < n; ++i) {
            double x = service.sample(rng);
            sum += x;
            sum_sq += x * x;
        }
        CHECK(sum / n == doctest::Approx(service.mean()).epsilon(0.01));
        CHECK(sum_sq / n == doctest::Approx(service.second_moment()).epsilon(0.01));
    }
}

TEST_CASE("partial work and cdf closed forms agree with numerics") {
    for (auto service : {ServiceDistribution::exponential(), ServiceDistribution::weibull()}) {
        for (double x : {0.1, 0.5, 1.0, 2.5, 7.0}) {
            // Riemann check in t = u^2/2 space, which removes the Weibull
            // pdf's origin singularity.
            double cdf = 0.0, work = 0.0;
            const int steps = 200000;
            double u_max = std::sqrt(2.0 * x);
            double h = u_max / steps;
            for (int i = 0; i < steps; ++i) {
                double u = (i + 0.5) * h;
                double t = 0.5 * u * u;
                cdf += service.pdf(t) * u * h;
                work += t * service.pdf(t) * u * h;
            }
            CHECK(service.cdf(x) == doctest::Approx(cdf).epsilon(1e-3));
            CHECK(service.partial_work(x) == doctest::Approx(work).epsilon(1e-3));
        }
    }
}

TEST_CASE("mm1 fcfs at moderate load matches 1/(1-lambda)") {
    auto report = simulate(quick_config(QueuePolicy::kFcfs, 0.5, 10),
                           ServiceDistribution::exponential(), NoiseKind::kExact, 0.0);
    CHECK(report.mean_time_in_system ==
          doctest::Approx(2.0).epsilon(0.1));
    CHECK(report.mean_time_in_system - report.mean_wait == doctest::Approx(1.0).epsilon(0.1));
}

TEST_CASE("pollaczek-khinchine closed forms at lambda 0.95") {
    CHECK(analytic_fcfs_wait(ServiceDistribution::exponential(), 0.95) + 1.0 ==
          doctest::Approx(20.0).epsilon(1e-12));
    CHECK(analytic_fcfs_wait(ServiceDistribution::weibull(), 0.95) + 1.0 ==
          doctest::Approx(58.0).epsilon(1e-12));
    CHECK_THROWS(analytic_fcfs_wait(ServiceDistribution::exponential(), 1.0));
}

TEST_CASE("spjf with exact predictions reproduces sjf trial by trial") {
    auto sjf = simulate(quick_config(QueuePolicy::kSjf, 0.8, 5),
                        ServiceDistribution::exponential(), NoiseKind::kExact, 0.0);
    auto spjf = simulate(quick_config(QueuePolicy::kSpjf, 0.8, 5),
                         ServiceDistribution::exponential(), NoiseKind::kExact, 0.0);
    for (std::size_t i = 0; i < sjf.trials.size(); ++i) {
        CHECK(sjf.trials[i].mean_time_in_system == spjf.trials[i].mean_time_in_system);
        CHECK(sjf.trials[i].completed == spjf.trials[i].completed);
    }
}

TEST_CASE("noise setting leaves the arrival/service path unchanged") {
    auto a = generate_jobs(0.9, 1000.0, ServiceDistribution::weibull(), NoiseKind::kExact, 0.0, 3);
    auto b = generate_jobs(0.9, 1000.0, ServiceDistribution::weibull(),
                           NoiseKind::kUniformMultiplicative, 0.5, 3);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].arrival == b[i].arrival);
        CHECK(a[i].actual == b[i].actual);
        CHECK(b[i].predicted >= 0.5 * b[i].actual);
        CHECK(b[i].predicted <= 1.5 * b[i].actual);
    }
}

TEST_CASE("work conservation: remaining work is policy-independent on a fixed path") {
    auto jobs = generate_jobs(0.9, 5000.0, ServiceDistribution::exponential(),
                              NoiseKind::kUniformMultiplicative, 0.5, 11);
    std::vector<double> probes;
    for (double t = 100.0; t < 5000.0; t += 100.0) probes.push_back(t);
    std::vector<std::vector<double>> all;
    for (auto policy : {QueuePolicy::kFcfs, QueuePolicy::kSjf, QueuePolicy::kSpjf,
                        QueuePolicy::kPsjf, QueuePolicy::kPspjf, QueuePolicy::kSrpt,
                        QueuePolicy::kSprpt}) {
        auto stats = run_queue_path(jobs, policy, 0.0, 5000.0, probes);
        all.push_back(stats.work_probes);
    }
    for (std::size_t p = 1; p < all.size(); ++p) {
        REQUIRE(all[p].size() == all[0].size());
        for (std::size_t i = 0; i < all[0].size(); ++i)
            CHECK(all[p][i] == doctest::Approx(all[0][i]).epsilon(1e-9));
    }
}

TEST_CASE("little's law holds within sampling error") {
    auto report = simulate(quick_config(QueuePolicy::kFcfs, 0.5, 20, 50000.0, 5000.0),
                           ServiceDistribution::exponential(), NoiseKind::kExact, 0.0);
    double expected_n = 0.5 * report.mean_time_in_system;
    CHECK(report.mean_in_system == doctest::Approx(expected_n).epsilon(0.05));
}

TEST_CASE("srpt with exact sizes beats the other policies on replayed paths") {
    double srpt_mean = 0.0;
    std::vector<QueuePolicy> rivals{QueuePolicy::kFcfs, QueuePolicy::kSjf, QueuePolicy::kPsjf,
                                    QueuePolicy::kSpjf, QueuePolicy::kPspjf, QueuePolicy::kSprpt};
    std::vector<double> rival_means(rivals.size(), 0.0);
    const int paths = 5;
    for (int s = 0; s < paths; ++s) {
        auto jobs = generate_jobs(0.9, 20000.0, ServiceDistribution::exponential(),
                                  NoiseKind::kUniformMultiplicative, 0.5, 100 + s);
        auto srpt = run_queue_path(jobs, QueuePolicy::kSrpt, 2000.0, 20000.0);
        srpt_mean += srpt.total_time_in_system / static_cast<double>(srpt.completed);
        for (std::size_t r = 0; r < rivals.size(); ++r) {
            auto stats = run_queue_path(jobs, rivals[r], 2000.0, 20000.0);
            rival_means[r] += stats.total_time_in_system / static_cast<double>(stats.completed);
        }
    }
    for (double rival : rival_means) CHECK(srpt_mean <= rival + 1e-9);
}

TEST_CASE("analytic sjf wait matches simulation at moderate load") {
    double analytic = analytic_sjf_wait(ServiceDistribution::exponential(), 0.5);
    auto report = simulate(quick_config(QueuePolicy::kSjf, 0.5, 20, 50000.0, 5000.0),
                           ServiceDistribution::exponential(), NoiseKind::kExact, 0.0);
    CHECK(report.mean_wait == doctest::Approx(analytic).epsilon(0.05));
}

TEST_CASE("analytic waits vanish as lambda tends to zero") {
    CHECK(analytic_sjf_wait(ServiceDistribution::exponential(), 1e-4) < 1e-3);
    auto density = JointDensity::uniform_multiplicative(ServiceDistribution::exponential(), 0.5);
    CHECK(analytic_spjf_wait(ServiceDistribution::exponential(), 1e-4, density) < 1e-3);
}

TEST_CASE("alpha zero collapses spjf analytics onto sjf") {
    auto density = JointDensity::uniform_multiplicative(ServiceDistribution::exponential(), 0.0);
    double sjf = analytic_sjf_wait(ServiceDistribution::exponential(), 0.7);
    double spjf = analytic_spjf_wait(ServiceDistribution::exponential(), 0.7, density);
    CHECK(spjf == doctest::Approx(sjf).epsilon(1e-6));
    CHECK(price_of_misprediction_queue(ServiceDistribution::exponential(), 0.7, density) ==
          doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("queue price of misprediction exceeds one under noise") {
    auto density = JointDensity::uniform_multiplicative(ServiceDistribution::exponential(), 0.5);
    double ratio = price_of_misprediction_queue(ServiceDistribution::exponential(), 0.8, density);
    CHECK(ratio > 1.0);
    // Regression: frozen from the first quadrature evaluation (tol 1e-5).
    CHECK(std::abs(ratio - 1.042749) < 1e-3);
}

TEST_CASE("formula ratio tracks the simulated spjf/sjf wait ratio at lambda 0.8") {
    auto density = JointDensity::uniform_multiplicative(ServiceDistribution::exponential(), 0.5);
    double formula = price_of_misprediction_queue(ServiceDistribution::exponential(), 0.8, density);

    auto sjf = simulate(quick_config(QueuePolicy::kSjf, 0.8, 30, 100000.0, 10000.0),
                        ServiceDistribution::exponential(), NoiseKind::kExact, 0.0);
    auto spjf = simulate(quick_config(QueuePolicy::kSpjf, 0.8, 30, 100000.0, 10000.0),
                         ServiceDistribution::exponential(),
                         NoiseKind::kUniformMultiplicative, 0.5);
    double simulated = spjf.mean_wait / sjf.mean_wait;
    CHECK(simulated == doctest::Approx(formula).epsilon(0.1));
}

TEST_CASE("results are identical whatever the worker count") {
    auto config = quick_config(QueuePolicy::kSpjf, 0.8, 6, 5000.0, 500.0);
    setenv("AUGUR_THREADS", "1", 1);
    auto serial = simulate(config, ServiceDistribution::exponential(),
                           NoiseKind::kUniformMultiplicative, 0.5);
    setenv("AUGUR_THREADS", "2", 1);
    auto parallel = simulate(config, ServiceDistribution::exponential(),
                             NoiseKind::kUniformMultiplicative, 0.5);
    unsetenv("AUGUR_THREADS");
    CHECK(serial.mean_time_in_system == parallel.mean_time_in_system);
    CHECK(serial.mean_wait == parallel.mean_wait);
    for (std::size_t i = 0; i < serial.trials.size(); ++i)
        CHECK(serial.trials[i].completed == parallel.trials[i].completed);
}

TEST_CASE("invalid configurations are rejected") {
    CHECK_THROWS(simulate(quick_config(QueuePolicy::kFcfs, 1.0),
                          ServiceDistribution::exponential(), NoiseKind::kExact, 0.0));
    CHECK_THROWS(simulate(quick_config(QueuePolicy::kFcfs, 0.5, 10, 100.0, 200.0),
                          ServiceDistribution::exponential(), NoiseKind::kExact, 0.0));
}
