#include "resurgence/reference.hpp"

#include <algorithm>
#include <cmath>

#include "resurgence/errors.hpp"

namespace resurgence {

namespace {

// Dormand-Prince 5(4) embedded pair.
struct Dopri5 {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    // embedded 4th-order weights
    static constexpr double e1 = 5179.0 / 57600, e3 = 7571.0 / 16695, e4 = 393.0 / 640,
                            e5 = -92097.0 / 339200, e6 = 187.0 / 2100, e7 = 1.0 / 40;
};

std::vector<ODESolution::Knot> integrate_branch(const NormalFormODE& ode, double x0, double y0,
                                                double x_end, double tol) {
    std::vector<ODESolution::Knot> knots;
    double x = x0, y = y0;
    double dir = (x_end > x0) ? 1.0 : -1.0;
    double span = std::max(1.0, std::abs(x_end - x0));
    double h = dir * std::min(0.1, std::abs(x_end - x0));
    double f1 = ode.rhs(x, y);
    knots.push_back({x, y, f1});

    const double h_min = 1e-13 * std::max(1.0, std::abs(x_end - x0));
    std::size_t steps = 0;
    while (dir * (x_end - x) > 0) {
        if (++steps > 2000000)
            throw numeric_error("reference integrator exceeded the step budget at x = " +
                                std::to_string(x));
        if (dir * (x + h - x_end) > 0)
            h = x_end - x;

        double k1 = f1;
        double k2 = ode.rhs(x + Dopri5::c2 * h, y + h * Dopri5::a21 * k1);
        double k3 = ode.rhs(x + Dopri5::c3 * h, y + h * (Dopri5::a31 * k1 + Dopri5::a32 * k2));
        double k4 = ode.rhs(x + Dopri5::c4 * h,
                            y + h * (Dopri5::a41 * k1 + Dopri5::a42 * k2 + Dopri5::a43 * k3));
        double k5 = ode.rhs(x + Dopri5::c5 * h,
                            y + h * (Dopri5::a51 * k1 + Dopri5::a52 * k2 + Dopri5::a53 * k3 +
                                     Dopri5::a54 * k4));
        double k6 =
            ode.rhs(x + h, y + h * (Dopri5::a61 * k1 + Dopri5::a62 * k2 + Dopri5::a63 * k3 +
                                    Dopri5::a64 * k4 + Dopri5::a65 * k5));
        double y5 = y + h * (Dopri5::b1 * k1 + Dopri5::b3 * k3 + Dopri5::b4 * k4 +
                             Dopri5::b5 * k5 + Dopri5::b6 * k6);
        double k7 = ode.rhs(x + h, y5);
        double y4 = y + h * (Dopri5::e1 * k1 + Dopri5::e3 * k3 + Dopri5::e4 * k4 +
                             Dopri5::e5 * k5 + Dopri5::e6 * k6 + Dopri5::e7 * k7);

        // error per unit step keeps the accumulated error at the tol scale
        double sc = tol * (1.0 + std::max(std::abs(y), std::abs(y5))) * std::abs(h) / span;
        double err = std::abs(y5 - y4) / sc;
        if (!std::isfinite(err))
            err = 1e10;

        if (err <= 1.0) {
            x += h;
            y = y5;
            f1 = k7; // FSAL
            knots.push_back({x, y, f1});
        }
        double factor = 0.9 * std::pow(std::max(err, 1e-10), -0.25);
        factor = std::clamp(factor, 0.2, 5.0);
        h *= factor;
        if (std::abs(h) < h_min)
            throw numeric_error("step-size underflow (stiffness or blow-up) at x = " +
                                std::to_string(x));
    }
    return knots;
}

} // namespace

double ODESolution::eval(double x) const {
    if (knots.empty() || x < x_min() - 1e-12 || x > x_max() + 1e-12)
        throw config_error("evaluation outside the integrated range");
    auto it = std::lower_bound(knots.begin(), knots.end(), x,
                               [](const Knot& k, double v) { return k.x < v; });
    if (it == knots.begin())
        ++it;
    if (it == knots.end())
        --it;
    const Knot& b = *it;
    const Knot& a = *(it - 1);
    double h = b.x - a.x;
    if (h <= 0)
        return a.y;
    double t = (x - a.x) / h;
    double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
    double h10 = t * (1 - t) * (1 - t);
    double h01 = t * t * (3 - 2 * t);
    double h11 = t * t * (t - 1);
    return h00 * a.y + h10 * h * a.dy + h01 * b.y + h11 * h * b.dy;
}

ODESolution integrate_ode(const NormalFormODE& ode, double x0, double y0, double x_lo,
                          double x_hi, double tol) {
    if (!(x_lo <= x0 && x0 <= x_hi))
        throw config_error("integration range must contain x0");
    if (tol <= 0)
        throw config_error("tolerance must be positive");
    if (x_lo <= 0)
        throw config_error("the normal-form ODE lives on x > 0");

    ODESolution sol;
    sol.tol = tol;
    std::vector<ODESolution::Knot> right, left;
    if (x_hi > x0)
        right = integrate_branch(ode, x0, y0, x_hi, tol);
    if (x_lo < x0)
        left = integrate_branch(ode, x0, y0, x_lo, tol);
    std::reverse(left.begin(), left.end());
    if (!left.empty()) {
        sol.knots = std::move(left);
        if (!right.empty())
            sol.knots.insert(sol.knots.end(), right.begin() + 1, right.end());
    } else if (!right.empty()) {
        sol.knots = std::move(right);
    } else {
        sol.knots.push_back({x0, y0, ode.rhs(x0, y0)});
    }
    return sol;
}

ErrorReport compare(const ODESolution& reference, const std::function<double(double)>& candidate,
                    const std::vector<double>& x_samples) {
    ErrorReport rep;
    double max_ref = 0;
    for (double x : x_samples) {
        if (x < reference.x_min() || x > reference.x_max())
            continue;
        double r = reference.eval(x);
        double c = candidate(x);
        double ae = std::abs(c - r);
        double re = ae / std::max(std::abs(r), 1e-300);
        rep.rows.push_back({x, r, c, ae, re});
        max_ref = std::max(max_ref, std::abs(r));
        if (ae > rep.max_abs) {
            rep.max_abs = ae;
            rep.x_at_max_abs = x;
        }
        if (re > rep.max_rel) {
            rep.max_rel = re;
            rep.x_at_max_rel = x;
        }
    }
    if (rep.rows.empty())
        throw config_error("no comparison samples inside the reference domain");
    rep.scale_rel = max_ref > 0 ? rep.max_abs / max_ref : rep.max_abs;
    return rep;
}

} // namespace resurgence
