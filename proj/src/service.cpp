#include "augur/service.hpp"

#include <cmath>
#include <stdexcept>

namespace augur {

ServiceDistribution ServiceDistribution::exponential() {
    return ServiceDistribution(ServiceKind::kExponential, 1.0, 2.0);
}

ServiceDistribution ServiceDistribution::weibull() {
    // Shape 1/2, scale 1/2: E[S] = Gamma(3)/2 = 1, E[S^2] = Gamma(5)/4 = 6.
    return ServiceDistribution(ServiceKind::kWeibull, 1.0, 6.0);
}

double ServiceDistribution::sample(Rng& rng) const {
    double u = rng.uniform();
    switch (kind_) {
        case ServiceKind::kExponential:
            return -std::log1p(-u);
        case ServiceKind::kWeibull: {
            // Inverse of 1 - e^{-sqrt(2x)}.
            double v = -std::log1p(-u);
            return 0.5 * v * v;
        }
    }
    throw std::logic_error("unreachable");
}

double ServiceDistribution::pdf(double x) const {
    if (x < 0.0) return 0.0;
    switch (kind_) {
        case ServiceKind::kExponential:
            return std::exp(-x);
        case ServiceKind::kWeibull: {
            if (x == 0.0) return 0.0;  // integrable 1/sqrt(x) singularity
            double v = std::sqrt(2.0 * x);
            return std::exp(-v) / v;
        }
    }
    throw std::logic_error("unreachable");
}

double ServiceDistribution::cdf(double x) const {
    if (x <= 0.0) return 0.0;
    switch (kind_) {
        case ServiceKind::kExponential:
            return -std::expm1(-x);
        case ServiceKind::kWeibull:
            return -std::expm1(-std::sqrt(2.0 * x));
    }
    throw std::logic_error("unreachable");
}

double ServiceDistribution::partial_work(double x) const {
    if (x <= 0.0) return 0.0;
    switch (kind_) {
        case ServiceKind::kExponential:
            return 1.0 - (1.0 + x) * std::exp(-x);
        case ServiceKind::kWeibull: {
            // integral_0^x t f(t) dt with v = sqrt(2t): (1/2) integral v^2 e^{-v} dv.
            double v = std::sqrt(2.0 * x);
            return 1.0 - 0.5 * (v * v + 2.0 * v + 2.0) * std::exp(-v);
        }
    }
    throw std::logic_error("unreachable");
}

double ServiceDistribution::upper_quantile(double survival) const {
    if (!(survival > 0.0) || survival >= 1.0)
        throw std::invalid_argument("survival must be in (0, 1)");
    switch (kind_) {
        case ServiceKind::kExponential:
            return -std::log(survival);
        case ServiceKind::kWeibull: {
            double v = -std::log(survival);
            return 0.5 * v * v;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace augur
