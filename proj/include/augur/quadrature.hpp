#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace augur {

// Adaptive Simpson quadrature with absolute-error control. The per-level
// tolerance halves down to a floor of abs_tol/256; without the floor, an
// integrand that is itself evaluated numerically (noise at some small
// epsilon) forces every interval to the depth cap once the halved tolerance
// drops below that noise. Integrable endpoint singularities should be
// handled by the caller via substitution or by nudging the endpoint.
template <class F>
double integrate(F&& f, double lo, double hi, double abs_tol, int max_depth = 32) {
    if (!(hi >= lo)) throw std::invalid_argument("integration bounds out of order");
    if (!(abs_tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

    struct Simpson {
        static double rule(const F& f, double a, double fa, double b, double fb, double& fm) {
            double m = 0.5 * (a + b);
            fm = f(m);
            return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        }
        static double refine(const F& f, double a, double fa, double b, double fb, double fm,
                             double whole, double tol, double tol_floor, int depth) {
            double m = 0.5 * (a + b);
            double flm, frm;
            double left = rule(f, a, fa, m, fm, flm);
            double right = rule(f, m, fm, b, fb, frm);
            double delta = left + right - whole;
            if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
                return left + right + delta / 15.0;
            double next_tol = std::max(0.5 * tol, tol_floor);
            return refine(f, a, fa, m, fm, flm, left, next_tol, tol_floor, depth - 1) +
                   refine(f, m, fm, b, fb, frm, right, next_tol, tol_floor, depth - 1);
        }
    };

    if (hi == lo) return 0.0;
    double fa = f(lo), fb = f(hi), fm;
    double whole = Simpson::rule(f, lo, fa, hi, fb, fm);
    return Simpson::refine(f, lo, fa, hi, fb, fm, whole, abs_tol, abs_tol / 256.0, max_depth);
}

}  // namespace augur
