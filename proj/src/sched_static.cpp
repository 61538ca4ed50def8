#include "augur/sched_static.hpp"

#include <cmath>
#include <stdexcept>

#include "augur/quadrature.hpp"

namespace augur {

namespace {

void validate(const TwoTypeInstance& inst) {
    if (inst.n_short < 0 || inst.n_long < 0 || inst.n_short + inst.n_long < 1)
        throw std::invalid_argument("need at least one job");
    if (!(inst.short_time > 0.0) || !(inst.long_time > inst.short_time))
        throw std::invalid_argument("need 0 < short_time < long_time");
    if (inst.p < 0.0 || inst.p > 1.0 || inst.q < 0.0 || inst.q > 1.0)
        throw std::invalid_argument("misclassification probabilities must be in [0, 1]");
}

}  // namespace

double two_type_wait(const TwoTypeInstance& inst, InfoMode info) {
    validate(inst);
    const double ns = static_cast<double>(inst.n_short);
    const double nl = static_cast<double>(inst.n_long);
    const double n = ns + nl;
    const double s = inst.short_time;
    const double l = inst.long_time;
    const double p = inst.p;
    const double q = inst.q;

    switch (info) {
        case InfoMode::kFull:
            return (ns * (ns - 1.0) / 2.0 * s + nl * (nl - 1.0) / 2.0 * l + nl * ns * s) / n;
        case InfoMode::kNone:
            return (ns * ((ns - 1.0) / 2.0 * s + nl / 2.0 * l) +
                    nl * (ns / 2.0 * s + (nl - 1.0) / 2.0 * l)) /
                   n;
        case InfoMode::kPredicted:
            return ((1.0 - p) * ns *
                        ((1.0 - p) * (ns - 1.0) / 2.0 * s + q * nl / 2.0 * l) +
                    p * ns *
                        ((1.0 - p) * (ns - 1.0) * s + p * (ns - 1.0) / 2.0 * s +
                         (1.0 - q) * nl / 2.0 * l + q * nl * l) +
                    (1.0 - q) * nl *
                        ((1.0 - q) * (nl - 1.0) / 2.0 * l + q * (nl - 1.0) * l +
                         p * ns / 2.0 * s + (1.0 - p) * ns * s) +
                    q * nl * (q * (nl - 1.0) / 2.0 * l + (1.0 - p) * ns / 2.0 * s)) /
                   n;
    }
    throw std::logic_error("unreachable");
}

double continuous_wait(const JointDensity& density, InfoMode info, std::int64_t n, double tol) {
    if (n < 1) throw std::invalid_argument("need at least one job");
    if (info == InfoMode::kNone)
        throw std::invalid_argument("random order has no continuous-density form here");
    // Guard against a mangled density before spending quadrature effort on it.
    double mass = density.total_mass(1e-6);
    if (std::abs(mass - 1.0) > 1e-4) throw std::invalid_argument("density is not normalized");

    // Integrate in u = sqrt of the outer variable; both marginals may carry
    // integrable singularities at the origin.
    double value;
    if (info == InfoMode::kFull) {
        auto integrand = [&density](double u) {
            double x = u * u;
            return 2.0 * u * density.fs(x) * density.work_below_service(x);
        };
        value = integrate(integrand, 0.0, std::sqrt(density.x_upper()), tol);
    } else {
        auto integrand = [&density](double u) {
            double y = u * u;
            return 2.0 * u * density.fp(y) * density.work_below_predicted(y);
        };
        value = integrate(integrand, 0.0, std::sqrt(density.y_upper()), tol);
    }
    return static_cast<double>(n - 1) * value;
}

double price_of_misprediction_static(const JointDensity& density, double tol) {
    double full = continuous_wait(density, InfoMode::kFull, 2, tol);
    if (full <= 0.0) throw std::invalid_argument("full-information waiting time is zero");
    double predicted = continuous_wait(density, InfoMode::kPredicted, 2, tol);
    return predicted / full;
}

}  // namespace augur
