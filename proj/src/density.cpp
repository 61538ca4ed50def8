#include "augur/density.hpp"

#include <cmath>
#include <stdexcept>

#include "augur/quadrature.hpp"

namespace augur {

namespace {

constexpr double kTailMass = 1e-8;
constexpr double kInnerTol = 1e-10;

}  // namespace

JointDensity::JointDensity(std::string name, ServiceDistribution service, double alpha,
                           bool exp_exp)
    : name_(std::move(name)),
      service_(service),
      alpha_(alpha),
      exp_exp_(exp_exp),
      exact_(!exp_exp && alpha == 0.0),
      x_upper_(service.upper_quantile(kTailMass)) {
    if (exp_exp_) {
        // Prediction tail ~ e^{-2 sqrt(y)}: solve for the kTailMass quantile.
        double v = -std::log(kTailMass);
        y_upper_ = 0.25 * (v + 2.0) * (v + 2.0);
    } else {
        y_upper_ = (1.0 + alpha_) * x_upper_;
    }
}

JointDensity JointDensity::exp_exp() {
    return JointDensity("exp-exp", ServiceDistribution::exponential(), 0.0, true);
}

JointDensity JointDensity::uniform_multiplicative(const ServiceDistribution& service,
                                                  double alpha) {
    if (alpha < 0.0 || alpha >= 1.0) throw std::invalid_argument("alpha must be in [0, 1)");
    return JointDensity("uniform-multiplicative", service, alpha, false);
}

double JointDensity::fs(double x) const { return service_.pdf(x); }

double JointDensity::g(double x, double y) const {
    if (x <= 0.0 || y < 0.0) return 0.0;
    if (exp_exp_) return service_.pdf(x) * std::exp(-y / x) / x;
    if (exact_) throw std::logic_error("degenerate joint density has no pointwise values");
    double lo = (1.0 - alpha_) * x;
    double hi = (1.0 + alpha_) * x;
    if (y < lo || y > hi) return 0.0;
    return service_.pdf(x) / (2.0 * alpha_ * x);
}

double JointDensity::fp(double y) const {
    if (exact_) return service_.pdf(y);
    if (y <= 0.0) return 0.0;
    if (exp_exp_) {
        // integral_0^inf (1/x) e^{-x - y/x} dx = 2 K_0(2 sqrt(y)).
        return 2.0 * std::cyl_bessel_k(0.0, 2.0 * std::sqrt(y));
    }
    double lo = y / (1.0 + alpha_);
    double hi = std::min(y / (1.0 - alpha_), x_upper_ * 2.0);
    if (lo >= hi) return 0.0;
    // Integrate in u = sqrt(x) to tame the Weibull pdf's origin singularity.
    auto integrand = [this](double u) {
        double x = u * u;
        return x > 0.0 ? 2.0 * u * service_.pdf(x) / (2.0 * alpha_ * x) : 0.0;
    };
    return integrate(integrand, std::sqrt(lo), std::sqrt(hi), kInnerTol);
}

double JointDensity::work_below_service(double x) const { return service_.partial_work(x); }

double JointDensity::work_below_predicted(double y) const {
    if (exact_) return service_.partial_work(y);
    if (y <= 0.0) return 0.0;
    if (exp_exp_) {
        // 1 - integral_0^inf x e^{-x - y/x} dx = 1 - 2 y K_2(2 sqrt(y)).
        return 1.0 - 2.0 * y * std::cyl_bessel_k(2.0, 2.0 * std::sqrt(y));
    }
    // P(pred <= y | x) is 1 below y/(1+a), linear in the band, 0 above.
    double full_to = y / (1.0 + alpha_);
    double band_to = y / (1.0 - alpha_);
    double work = service_.partial_work(full_to);
    auto band = [this, y](double u) {
        double x = u * u;
        double frac = (y - (1.0 - alpha_) * x) / (2.0 * alpha_ * x);
        return 2.0 * u * x * service_.pdf(x) * frac;
    };
    work += integrate(band, std::sqrt(full_to), std::sqrt(std::min(band_to, x_upper_ * 2.0)),
                      kInnerTol);
    return work;
}

double JointDensity::total_mass(double tol) const {
    if (exact_) return 1.0;
    auto outer = [this, tol](double u) {
        double x = u * u;
        if (x <= 0.0) return 0.0;
        double inner;
        if (exp_exp_) {
            // Exponential inner integral done in closed form; its 1/x spike
            // at small x is hostile to blind sampling.
            inner = service_.pdf(x) * -std::expm1(-y_upper_ / x);
        } else {
            inner = integrate([this, x](double y) { return g(x, y); }, (1.0 - alpha_) * x,
                              (1.0 + alpha_) * x, tol * 0.01);
        }
        return 2.0 * u * inner;
    };
    return integrate(outer, 0.0, std::sqrt(x_upper_), tol);
}

}  // namespace augur
