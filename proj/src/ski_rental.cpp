#include "augur/ski_rental.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace augur {

SkiPolicy SkiPolicy::rent_then_buy_at(std::int64_t day) {
    if (day < 1) throw std::invalid_argument("buy day must be >= 1");
    return SkiPolicy{SkiPolicyKind::kRentThenBuyAt, day, 1.0};
}

SkiPolicy SkiPolicy::trust_prediction() {
    return SkiPolicy{SkiPolicyKind::kTrustPrediction, 1, 1.0};
}

SkiPolicy SkiPolicy::lambda_robust(double lambda) {
    if (!(lambda > 0.0) || lambda > 1.0)
        throw std::invalid_argument("lambda must be in (0, 1]");
    return SkiPolicy{SkiPolicyKind::kLambdaRobust, 1, lambda};
}

namespace {

void validate(const SkiInstance& inst) {
    if (inst.buy_price < 1 || inst.true_days < 1 || inst.predicted_days < 1)
        throw std::invalid_argument("ski instance fields must be >= 1");
}

constexpr std::int64_t kNeverBuy = std::numeric_limits<std::int64_t>::max();

std::int64_t buy_day_of(const SkiInstance& inst, const SkiPolicy& policy) {
    const double b = static_cast<double>(inst.buy_price);
    switch (policy.kind) {
        case SkiPolicyKind::kRentThenBuyAt:
            return policy.buy_day;
        case SkiPolicyKind::kTrustPrediction:
            // Buy immediately iff the prediction says the season outlasts
            // the price; otherwise rent forever.
            return inst.predicted_days > inst.buy_price ? 1 : kNeverBuy;
        case SkiPolicyKind::kLambdaRobust: {
            if (!(policy.lambda > 0.0) || policy.lambda > 1.0)
                throw std::invalid_argument("lambda must be in (0, 1]");
            double day = inst.predicted_days > inst.buy_price
                             ? std::ceil(policy.lambda * b)
                             : std::ceil(b / policy.lambda);
            return std::max<std::int64_t>(1, static_cast<std::int64_t>(day));
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

std::int64_t ski_cost(const SkiInstance& instance, const SkiPolicy& policy) {
    validate(instance);
    const std::int64_t buy_day = buy_day_of(instance, policy);
    if (instance.true_days < buy_day) return instance.true_days;
    return (buy_day - 1) + instance.buy_price;
}

std::int64_t ski_opt(const SkiInstance& instance) {
    validate(instance);
    return std::min(instance.true_days, instance.buy_price);
}

double competitive_ratio_bound(std::int64_t buy_price, std::int64_t true_days,
                               std::int64_t predicted_days, double lambda) {
    if (!(lambda > 0.0) || lambda > 1.0)
        throw std::invalid_argument("lambda must be in (0, 1]");
    const SkiInstance inst{buy_price, true_days, predicted_days};
    validate(inst);
    const double opt = static_cast<double>(ski_opt(inst));
    const double eta = static_cast<double>(std::llabs(predicted_days - true_days));
    const double robust = 1.0 / lambda;
    if (lambda == 1.0) return 1.0 + robust;
    const double consistent = lambda + eta / ((1.0 - lambda) * opt);
    return 1.0 + std::min(robust, consistent);
}

}  // namespace augur
