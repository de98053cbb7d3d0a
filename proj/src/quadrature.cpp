#include "resurgence/quadrature.hpp"

#include <cmath>

#include "resurgence/errors.hpp"

namespace resurgence {

TanhSinh::TanhSinh(long digits) : digits_(digits), t_max_(digits) {
    // Endpoint distances shrink like exp(-pi sinh t); keep them at least
    // ~10^{-(digits-10)} so x = endpoint -+ distance stays representable at
    // the working precision. The discarded tail is then O(e^{-g_max}), far
    // below the tolerances used here.
    double g_max = 0.5 * (static_cast<double>(digits) - 10.0) * 2.302585092994046;
    double tm = std::asinh(std::max(6.0, 2.0 * g_max / 3.141592653589793));
    t_max_ = BigReal(tm, digits);
}

TanhSinh::Node TanhSinh::make_node(const BigReal& t) const {
    long d = digits_;
    BigReal pi_half = BigReal::pi(d) / 2;
    BigReal g = pi_half * sinh(t);
    // endpoint distance in (0, 1/2]: (1 - tanh g)/2 = e^{-2g}/(1 + e^{-2g})
    BigReal e2 = exp(BigReal(-2L, d) * g);
    BigReal dist = e2 / (BigReal(1L, d) + e2);
    BigReal w = pi_half * cosh(t) / (cosh(g) * cosh(g));
    return {dist, w};
}

const std::vector<TanhSinh::Node>& TanhSinh::level_nodes(int level) const {
    while (nodes_.size() <= static_cast<std::size_t>(level)) {
        int l = static_cast<int>(nodes_.size());
        std::vector<Node> ns;
        long d = digits_;
        if (l == 0) {
            for (long k = 1;; ++k) {
                BigReal t = BigReal(k, d);
                if (t > t_max_)
                    break;
                ns.push_back(make_node(t));
            }
        } else {
            BigReal h = pow_si(BigReal(2L, d), -l);
            for (long k = 1;; k += 2) {
                BigReal t = BigReal(k, d) * h;
                if (t > t_max_)
                    break;
                ns.push_back(make_node(t));
            }
        }
        nodes_.push_back(std::move(ns));
    }
    return nodes_[level];
}

BigReal TanhSinh::integrate(const Integrand& f, const BigReal& a, const BigReal& b,
                            const BigReal& abs_tol, int max_level) const {
    long d = digits_;
    BigReal scale = b - a;
    if (scale.is_zero())
        return BigReal(0L, d);

    auto eval_pair = [&](const Node& n) -> BigReal {
        BigReal da = scale * n.dist;          // node near a
        BigReal db = scale - da;
        BigReal left = f(a + da, da, db);
        BigReal right = f(b - da, db, da);    // symmetric node near b
        if (!left.is_finite() || !right.is_finite())
            throw quadrature_error("non-finite integrand value", 0.0);
        return (left + right) * n.weight;
    };

    // level 0: central node t = 0 has weight pi/2 and distance 1/2
    BigReal half = scale / 2;
    BigReal center = f(a + half, half, half) * (BigReal::pi(d) / 2);
    if (!center.is_finite())
        throw quadrature_error("non-finite integrand value at interval center", 0.0);
    BigReal total = center;
    for (const auto& n : level_nodes(0))
        total += eval_pair(n);

    BigReal h(1L, d);
    BigReal prev = total * half * h; // integral estimate at level 0
    BigReal err = abs(prev);
    for (int level = 1; level <= max_level; ++level) {
        for (const auto& n : level_nodes(level))
            total += eval_pair(n);
        h = h / 2;
        BigReal cur = total * half * h;
        err = abs(cur - prev);
        prev = cur;
        if (level >= 3 && err < abs_tol)
            return prev;
    }
    throw quadrature_error("tanh-sinh did not reach the requested tolerance; achieved " +
                               err.str(3),
                           err.to_double());
}

} // namespace resurgence
