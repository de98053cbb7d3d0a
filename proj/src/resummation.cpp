#include "resurgence/resummation.hpp"

#include <algorithm>

#include "resurgence/errors.hpp"
#include "resurgence/quadrature.hpp"
#include "resurgence/roots.hpp"

namespace resurgence {

namespace {

BigReal ladder_sum(const DiscontinuityLadder& ladder, unsigned k, const BigReal& x,
                   bool leading_only) {
    if (k < 1 || k > ladder.orders.size())
        throw config_error("ladder order out of range");
    long d = x.prec_digits();
    BigReal v(0L, d);
    BigReal L(ladder.lambda, d);
    for (const auto& t : ladder.orders[k - 1]) {
        if (leading_only && t.m != k)
            continue;
        BigReal term = t.kappa * exp(-BigReal(static_cast<long>(t.m), d) * L * x);
        if (t.x_pow != 0)
            term = term / pow(x, BigReal(t.x_pow, d));
        v += term;
    }
    return v;
}

} // namespace

BigReal DiscontinuityLadder::eval(unsigned k, const BigReal& x) const {
    return ladder_sum(*this, k, x, false);
}

BigReal DiscontinuityLadder::eval_leading(unsigned k, const BigReal& x) const {
    return ladder_sum(*this, k, x, true);
}

DiscontinuityLadder discontinuity_ladder(const ResurgentApproximant& ra, unsigned k_max) {
    if (k_max < 1 || k_max > 3)
        throw config_error("discontinuity_ladder supports k_max in 1..3");
    long d = ra.digits;
    DiscontinuityLadder ladder;
    ladder.kind = ra.kind;
    ladder.lambda = ra.lambda;
    ladder.orders.resize(k_max);

    if (ra.kind == LatticeKind::pole) {
        // delta' y0+ = 2 pi sum_m c_m e^{-m lambda x}; the residue constants
        // are holomorphic, so every higher order vanishes identically.
        BigReal two_pi = BigReal::pi(d) * 2;
        for (unsigned m = 1; m <= ra.Nprime; ++m) {
            BigReal c = ra.local_amplitude(m);
            if (c.is_zero())
                continue;
            ladder.orders[0].push_back({m, two_pi * c, Rational(0)});
        }
        ladder.all_higher_vanish = true;
        return ladder;
    }

    // branch kind: order 1 collects every lattice amplitude; orders k >= 2
    // are kept at their leading m = k sector with the combinatorial weight of
    // delta^k in alien-derivative powers (computed symbolically, = 1).
    BigReal two_sqrt_pi = sqrt(BigReal::pi(d)) * 2;
    for (unsigned m = 1; m <= ra.Nprime; ++m) {
        BigReal c = ra.local_amplitude(m);
        if (c.is_zero())
            continue;
        ladder.orders[0].push_back({m, two_sqrt_pi * c, Rational(1, 2)});
    }
    for (unsigned k = 2; k <= k_max; ++k) {
        if (k > ra.Nprime)
            break;
        Rational w = delta_in_alien_powers(k, k)[0];
        BigReal c = ra.local_amplitude(k);
        if (c.is_zero())
            continue;
        ladder.orders[k - 1].push_back({k, two_sqrt_pi * c * BigReal(w, d), Rational(1, 2)});
    }
    return ladder;
}

namespace {

// Crude magnitude scale of the integrand near the m-th lattice cell, used
// only for the early-exit bound.
BigReal cell_scale(const ResurgentApproximant& ra, unsigned m, const BigReal& x, long d) {
    BigReal L(ra.lambda, d);
    BigReal ml = BigReal(static_cast<long>(m), d) * L;
    BigReal amp = abs(ra.local_amplitude(m));
    BigReal near = abs(ra.realified(ml - L / 4)) + abs(ra.realified(ml + L / 4));
    return (amp * (x * 2 + 4 / L) + near) * L;
}

} // namespace

BigReal pv_laplace(const ResurgentApproximant& ra, const BigReal& x, double abs_tol) {
    if (x.sign() <= 0)
        throw config_error("pv_laplace needs x > 0");
    const long d = std::max(ra.digits, x.prec_digits());
    const long dq = d + 24; // guard digits: endpoint distances reach ~1e-50
    TanhSinh ts(dq);
    BigReal X = x.to_precision(dq);
    BigReal L(ra.lambda, dq);
    BigReal tol(abs_tol, dq);
    BigReal seg_tol = tol / (4 * (static_cast<long>(ra.Nprime) + 2));

    BigReal total(0L, dq);

    if (ra.kind == LatticeKind::pole) {
        auto plain = [&](const BigReal& z, const BigReal&, const BigReal&) {
            return exp(-X * z) * ra.realified(z);
        };
        total += ts.integrate(plain, BigReal(0L, dq), L / 2, seg_tol);

        // principal value around each pole by symmetric pairing z = mL +- u
        BigReal prev_mag(0L, dq);
        int decreasing = 0;
        for (unsigned m = 1; m <= ra.Nprime; ++m) {
            BigReal ml = BigReal(static_cast<long>(m), dq) * L;
            auto paired = [&](const BigReal& u, const BigReal&, const BigReal&) {
                return exp(-X * (ml + u)) * ra.realified(ml + u) +
                       exp(-X * (ml - u)) * ra.realified(ml - u);
            };
            BigReal contrib = ts.integrate(paired, BigReal(0L, dq), L / 2, seg_tol);
            total += contrib;
            BigReal mag = abs(contrib);
            decreasing = (m > 1 && mag < prev_mag) ? decreasing + 1 : 0;
            prev_mag = mag;
            if (decreasing >= 2 && mag < tol / 16 &&
                cell_scale(ra, m, X, dq) * exp(-X * ml) < tol / 16) {
                return total.to_precision(d);
            }
        }
        // exponential tail beyond the last pole
        BigReal z0 = BigReal(static_cast<long>(ra.Nprime), dq) * L + L / 2;
        BigReal W = (log(BigReal(1L, dq) / tol) + 12) / X;
        for (int chunk = 0; chunk < 8; ++chunk) {
            total += ts.integrate(plain, z0, z0 + W, seg_tol);
            z0 = z0 + W;
            BigReal rem = exp(-X * z0) * (abs(ra.realified(z0 + 1 / X)) + 1) / X;
            if (rem < tol / 8)
                break;
        }
        return total.to_precision(d);
    }

    // branch kind: integrable inverse-sqrt singularities at the lattice
    // points; plain segments between them, endpoint clustering handled by
    // the tanh-sinh nodes.
    auto realified_integrand = [&](const BigReal& z, const BigReal&, const BigReal&) {
        return exp(-X * z) * ra.realified(z);
    };
    BigReal prev_mag(0L, dq);
    int decreasing = 0;
    for (unsigned m = 0; m <= ra.Nprime; ++m) {
        BigReal a = BigReal(static_cast<long>(m), dq) * L;
        BigReal b = a + L;
        BigReal contrib = ts.integrate(realified_integrand, a, b, seg_tol);
        total += contrib;
        BigReal mag = abs(contrib);
        decreasing = (m > 0 && mag < prev_mag) ? decreasing + 1 : 0;
        prev_mag = mag;
        if (m >= 1 && m < ra.Nprime && decreasing >= 2 && mag < tol / 16 &&
            cell_scale(ra, m, X, dq) * exp(-X * a) < tol / 16) {
            return total.to_precision(d);
        }
    }
    BigReal z0 = BigReal(static_cast<long>(ra.Nprime) + 1, dq) * L;
    BigReal W = (log(BigReal(1L, dq) / tol) + 12) / X;
    for (int chunk = 0; chunk < 8; ++chunk) {
        total += ts.integrate(realified_integrand, z0, z0 + W, seg_tol);
        z0 = z0 + W;
        BigReal rem = exp(-X * z0) * (abs(ra.realified(z0 + 1 / X)) + 1) / X;
        if (rem < tol / 8)
            break;
    }
    return total.to_precision(d);
}

BigReal assemble_median(const ResurgentApproximant& ra, const DiscontinuityLadder& ladder,
                        const MedianCoefficientTable& table, const BigReal& C,
                        const BigReal& x, double quad_tol) {
    long d = std::max(ra.digits, x.prec_digits());
    BigReal y = pv_laplace(ra, x, quad_tol);
    BigReal X = x.to_precision(d);
    BigReal Cv = C.to_precision(d);
    for (const auto& e : table.entries) {
        if (e.delta_pow < 1 || e.delta_pow > ladder.orders.size())
            continue;
        BigReal D = ladder.eval_leading(e.delta_pow, X);
        if (D.is_zero())
            continue;
        y += BigReal(e.coeff, d) * pow_si(Cv, static_cast<long>(e.c_pow)) * D;
    }
    return y;
}

BigReal fit_transseries_constant(const ResurgentApproximant& ra,
                                 const DiscontinuityLadder& ladder,
                                 const MedianCoefficientTable& table, const BigReal& x0,
                                 const BigReal& y_target, double quad_tol) {
    if (x0.sign() <= 0)
        throw config_error("fit_transseries_constant needs x0 > 0");
    long d = std::max(ra.digits, x0.prec_digits());
    BigReal X = x0.to_precision(d);
    BigReal pv = pv_laplace(ra, X, quad_tol);

    // polynomial in C from the table rows
    unsigned max_q = 0;
    for (const auto& e : table.entries)
        max_q = std::max(max_q, e.c_pow);
    std::vector<BigReal> poly(max_q + 1, BigReal(0L, d));
    poly[0] = pv - y_target.to_precision(d);
    for (const auto& e : table.entries) {
        if (e.delta_pow < 1 || e.delta_pow > ladder.orders.size())
            continue;
        BigReal D = ladder.eval_leading(e.delta_pow, X);
        poly[e.c_pow] += BigReal(e.coeff, d) * D;
    }

    // strip vanishing leading coefficients (pole kind collapses to linear)
    while (poly.size() > 1 && abs(poly.back()) < BigReal(1e-40, d))
        poly.pop_back();

    if (poly.size() < 2)
        throw numeric_error("transseries fit is degenerate: no C dependence at x0");
    if (poly.size() == 2) {
        BigReal scale = abs(poly[0]) + BigReal(1L, d);
        if (abs(poly[1]) < scale * BigReal(1e-30, d))
            throw numeric_error("transseries fit is degenerate: |delta' y0+(x0)| ~ 0");
        return -poly[0] / poly[1];
    }

    auto roots = poly_roots(poly, d);
    std::optional<BigReal> best;
    for (const auto& r : roots) {
        if (abs(r.im) > (abs(r.re) + 1) * BigReal(1e-12, d))
            continue;
        if (!best || abs(r.re) < abs(*best))
            best = r.re;
    }
    if (!best)
        throw numeric_error("transseries fit: no real root for C");
    return *best;
}

} // namespace resurgence
