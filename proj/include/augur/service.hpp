#pragma once

#include "augur/random.hpp"

namespace augur {

enum class ServiceKind { kExponential, kWeibull };

// Job service-time distribution with the closed forms the analytic queue
// formulas need. Both presets have mean 1; the Weibull (CDF 1 - e^{-sqrt(2x)})
// is the heavier-tailed of the two with E[S^2] = 6.
class ServiceDistribution {
  public:
    static ServiceDistribution exponential();
    static ServiceDistribution weibull();

    ServiceKind kind() const { return kind_; }
    double mean() const { return mean_; }
    double second_moment() const { return second_moment_; }

    double sample(Rng& rng) const;
    double pdf(double x) const;
    double cdf(double x) const;
    // E[S 1{S <= x}] = integral_0^x t f(t) dt.
    double partial_work(double x) const;
    // Smallest x with P(S > x) <= survival.
    double upper_quantile(double survival) const;

  private:
    ServiceDistribution(ServiceKind kind, double mean, double second_moment)
        : kind_(kind), mean_(mean), second_moment_(second_moment) {}

    ServiceKind kind_;
    double mean_;
    double second_moment_;
};

}  // namespace augur
