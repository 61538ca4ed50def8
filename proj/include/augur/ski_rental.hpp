#pragma once

#include <cstdint>

namespace augur {

// Rent for $1/day or buy for $b; the season truly lasts d_star days and the
// predictor said predicted_days.
struct SkiInstance {
    std::int64_t buy_price = 1;       // b >= 1
    std::int64_t true_days = 1;       // d* >= 1
    std::int64_t predicted_days = 1;  // h(d) >= 1
};

enum class SkiPolicyKind {
    kRentThenBuyAt,   // buy on a fixed day
    kTrustPrediction, // buy on day 1 iff prediction exceeds the price
    kLambdaRobust,    // buy on day ceil(lambda*b) or ceil(b/lambda)
};

struct SkiPolicy {
    SkiPolicyKind kind = SkiPolicyKind::kLambdaRobust;
    std::int64_t buy_day = 1;  // kRentThenBuyAt only
    double lambda = 1.0;       // kLambdaRobust only, in (0, 1]

    static SkiPolicy rent_then_buy_at(std::int64_t day);
    static SkiPolicy trust_prediction();
    static SkiPolicy lambda_robust(double lambda);
};

// Total dollars spent: $1 per day strictly before the buy day, plus $b if
// the season reaches the buy day. Rejects lambda outside (0, 1].
std::int64_t ski_cost(const SkiInstance& instance, const SkiPolicy& policy);

// Offline optimum min(d*, b).
std::int64_t ski_opt(const SkiInstance& instance);

// Right-hand side of the robust trade-off: 1 + min(1/lambda,
// lambda + eta / ((1 - lambda) * OPT)) with eta = |h - d*|. At lambda = 1
// the first branch applies and the degenerate second denominator is bypassed.
double competitive_ratio_bound(std::int64_t buy_price, std::int64_t true_days,
                               std::int64_t predicted_days, double lambda);

}  // namespace augur
