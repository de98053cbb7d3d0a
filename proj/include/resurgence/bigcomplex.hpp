#ifndef RESURGENCE_BIGCOMPLEX_HPP
#define RESURGENCE_BIGCOMPLEX_HPP

#include "resurgence/bigreal.hpp"

namespace resurgence {

/// Complex value built from two BigReals at a common precision.
struct BigComplex {
    BigReal re, im;

    BigComplex() = default;
    explicit BigComplex(long digits) : re(digits), im(digits) {}
    BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
    BigComplex(double r, double i, long digits) : re(r, digits), im(i, digits) {}

    long prec_digits() const { return std::max(re.prec_digits(), im.prec_digits()); }

    bool is_finite() const { return re.is_finite() && im.is_finite(); }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator*(const BigReal& s, const BigComplex& a) {
        return {s * a.re, s * a.im};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigReal d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    friend BigComplex operator/(const BigComplex& a, const BigReal& s) {
        return {a.re / s, a.im / s};
    }

    BigComplex& operator+=(const BigComplex& o) { return *this = *this + o; }
    BigComplex& operator-=(const BigComplex& o) { return *this = *this - o; }
    BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }

    friend BigReal abs(const BigComplex& a) { return hypot(a.re, a.im); }
    friend BigComplex conj(const BigComplex& a) { return {a.re, -a.im}; }

    /// Principal square root, arg in (-pi, pi].
    friend BigComplex sqrt(const BigComplex& a) {
        long d = a.prec_digits();
        if (a.im.is_zero()) {
            if (a.re.sign() >= 0)
                return {sqrt(a.re), BigReal(0L, d)};
            return {BigReal(0L, d), sqrt(-a.re)};
        }
        BigReal r = abs(a);
        BigReal u = sqrt((r + a.re) / 2);
        BigReal v = sqrt((r - a.re) / 2);
        if (a.im.sign() < 0)
            v = -v;
        return {u, v};
    }
};

} // namespace resurgence

#endif
