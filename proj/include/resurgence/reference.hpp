#ifndef RESURGENCE_REFERENCE_HPP
#define RESURGENCE_REFERENCE_HPP

#include <functional>
#include <vector>

#include "resurgence/ode.hpp"

namespace resurgence {

/// Dense-output solution of the source ODE from adaptive embedded
/// Runge-Kutta integration in both directions from (x0, y0).
struct ODESolution {
    struct Knot {
        double x, y, dy;
    };
    std::vector<Knot> knots; // strictly increasing in x
    double tol = 1e-10;
    double x_min() const { return knots.front().x; }
    double x_max() const { return knots.back().x; }

    /// Cubic Hermite interpolation between accepted steps.
    double eval(double x) const;
};

/// Integrates y' = rhs(x, y) over [x_lo, x_hi] containing x0. Throws
/// numeric_error on step-size underflow with the last reached x.
ODESolution integrate_ode(const NormalFormODE& ode, double x0, double y0, double x_lo,
                          double x_hi, double tol = 1e-10);

struct ErrorRow {
    double x, ref, cand, abs_err, rel_err;
};

struct ErrorReport {
    double max_abs = 0, max_rel = 0;
    double x_at_max_abs = 0, x_at_max_rel = 0;
    /// max |err| / max |ref| over the sample set (figure-scale error)
    double scale_rel = 0;
    std::vector<ErrorRow> rows;
};

/// Pointwise comparison on the samples inside the solution's domain.
ErrorReport compare(const ODESolution& reference, const std::function<double(double)>& candidate,
                    const std::vector<double>& x_samples);

} // namespace resurgence

#endif
