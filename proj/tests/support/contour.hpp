#ifndef RESURGENCE_TESTS_CONTOUR_HPP
#define RESURGENCE_TESTS_CONTOUR_HPP

// Test-only oracle: lateral Borel sum along a rectangle lifted into the upper
// half plane. Independent of the principal-value quadrature path it checks:
// Re(lateral) = PV and 2 Im(lateral) = full first discontinuity.

#include "resurgence/approximant.hpp"
#include "resurgence/quadrature.hpp"

namespace resurgence::testing {

inline BigComplex cexp(const BigComplex& z) {
    BigReal mag = exp(z.re);
    return {mag * cos(z.im), mag * sin(z.im)};
}

inline BigComplex lateral_sum_above(const ResurgentApproximant& ra, double xval,
                                    double eta_val, double zmax_val, long digits) {
    TanhSinh ts(digits);
    BigReal x(xval, digits), eta(eta_val, digits), zmax(zmax_val, digits);
    BigReal tol(1e-16, digits);

    auto integrate_complex = [&](auto zfun, auto dzfun, const BigReal& a, const BigReal& b) {
        auto part = [&](bool imag) {
            auto f = [&, imag](const BigReal& t, const BigReal&, const BigReal&) {
                BigComplex z = zfun(t);
                BigComplex v =
                    cexp(BigComplex(-(x * z.re), -(x * z.im))) * ra.evaluate(z) * dzfun(t);
                return imag ? v.im : v.re;
            };
            return ts.integrate(f, a, b, tol);
        };
        return BigComplex(part(false), part(true));
    };

    BigReal zero(0L, digits), one(1L, digits);
    auto leg1 = integrate_complex(
        [&](const BigReal& t) { return BigComplex(zero, eta * t); },
        [&](const BigReal&) { return BigComplex(zero, eta); }, zero, one);
    auto leg2 = integrate_complex(
        [&](const BigReal& t) { return BigComplex(t, eta); },
        [&](const BigReal&) { return BigComplex(one, zero); }, zero, zmax);
    auto leg3 = integrate_complex(
        [&](const BigReal& t) { return BigComplex(zmax, eta - eta * t); },
        [&](const BigReal&) { return BigComplex(zero, -eta); }, zero, one);
    auto tail_re = [&](const BigReal& z, const BigReal&, const BigReal&) {
        return exp(-(x * z)) * ra.realified(z);
    };
    BigReal tail = ts.integrate(tail_re, zmax, zmax + 40 / x, tol);
    return leg1 + leg2 + leg3 + BigComplex(tail, zero);
}

} // namespace resurgence::testing

#endif
