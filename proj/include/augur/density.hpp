#pragma once

#include <string>

#include "augur/service.hpp"

namespace augur {

// Joint density g(x, y) over actual service time x and predicted service
// time y, with the marginals and partial-work integrals the waiting-time
// formulas consume:
//   work_below_service(x)   = integral_0^x z f_s(z) dz
//   work_below_predicted(y) = integral over z <= y of x g(x, z) dz dx
// Presets: exp_exp (Exp(1) service, prediction Exp(mean x)) and
// uniform_multiplicative (prediction uniform over [(1-a)x, (1+a)x]).
// alpha = 0 degenerates to exact predictions (a point mass, g undefined).
class JointDensity {
  public:
    static JointDensity exp_exp();
    static JointDensity uniform_multiplicative(const ServiceDistribution& service, double alpha);

    double g(double x, double y) const;
    double fs(double x) const;
    double fp(double y) const;
    double work_below_service(double x) const;
    double work_below_predicted(double y) const;

    // Truncation points beyond which the marginals carry < 1e-8 mass.
    double x_upper() const { return x_upper_; }
    double y_upper() const { return y_upper_; }

    bool exact_predictions() const { return exact_; }
    const std::string& name() const { return name_; }
    const ServiceDistribution& service() const { return service_; }

    // Numerical mass of g over the truncated support (1 up to quadrature
    // and truncation error); used by the normalization self-check.
    double total_mass(double tol) const;

  private:
    JointDensity(std::string name, ServiceDistribution service, double alpha, bool exp_exp);

    std::string name_;
    ServiceDistribution service_;
    double alpha_;
    bool exp_exp_;
    bool exact_;
    double x_upper_;
    double y_upper_;
};

}  // namespace augur
