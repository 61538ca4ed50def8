#pragma once

#include <cstdint>

#include "augur/density.hpp"

namespace augur {

// All-jobs-at-time-0 batch with two job types: n_short jobs of length
// short_time and n_long of length long_time, plus the classifier's
// misclassification probabilities (short->long with probability p,
// long->short with probability q).
struct TwoTypeInstance {
    std::int64_t n_short = 0;
    std::int64_t n_long = 0;
    double short_time = 1.0;
    double long_time = 2.0;
    double p = 0.0;
    double q = 0.0;
};

enum class InfoMode { kFull, kNone, kPredicted };

// Expected waiting time per job under shortest-first with full information,
// a uniformly random order, or shortest-predicted-first with the instance's
// classifier. Closed forms; ties within a predicted class are ordered
// uniformly at random.
double two_type_wait(const TwoTypeInstance& instance, InfoMode info);

// Expected per-job waiting time for n jobs drawn from the joint density,
// ordered by shortest (predicted) service time. Adaptive quadrature at the
// given absolute tolerance, truncated at the density's 1e-8 tail quantiles.
double continuous_wait(const JointDensity& density, InfoMode info, std::int64_t n,
                       double tol = 1e-4);

// Ratio of predicted-information to full-information expected waiting time
// (the (n-1) factors cancel).
double price_of_misprediction_static(const JointDensity& density, double tol = 1e-4);

}  // namespace augur
